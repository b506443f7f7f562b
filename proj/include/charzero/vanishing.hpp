#pragma once

// Zero patterns of character tables and the element-level classifications
// derived from them (vanishing, non-vanishing and Camina classes, central-type
// characters, the prime-power-order zero check).

#include <string>
#include <vector>

#include "chartable.hpp"
#include "errors.hpp"
#include "json.hpp"

namespace charzero {

/// Rows are the nonlinear characters, columns all classes; zeros[r][c] iff chi_r(c) == 0.
struct ZeroPattern {
    std::string table_ref;
    std::vector<std::size_t> nonlinear_idx;
    std::vector<std::size_t> class_idx;
    std::vector<std::vector<bool>> zeros;

    std::size_t rows() const noexcept { return zeros.size(); }
    std::size_t cols() const noexcept { return class_idx.size(); }

    bool column_has_zero(std::size_t c) const {
        for (const auto& row : zeros)
            if (row[c]) return true;
        return false;
    }
    bool column_all_zero(std::size_t c) const {
        for (const auto& row : zeros)
            if (!row[c]) return false;
        return true;
    }
};

inline ZeroPattern zero_pattern(const CharacterTable& t) {
    ZeroPattern p;
    p.table_ref = t.group_name;
    p.nonlinear_idx = t.nonlinear_indices();
    for (std::size_t c = 0; c < t.num_classes(); ++c) p.class_idx.push_back(c);
    for (std::size_t chi : p.nonlinear_idx) {
        std::vector<bool> row(t.num_classes());
        for (std::size_t c = 0; c < t.num_classes(); ++c) row[c] = t.value(chi, c).is_zero();
        p.zeros.push_back(std::move(row));
    }
    return p;
}

inline std::vector<std::size_t> vanishing_classes(const ZeroPattern& p) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < p.cols(); ++c)
        if (p.column_has_zero(c)) out.push_back(p.class_idx[c]);
    return out;
}

struct CheckResult {
    bool ok = true;
    std::vector<std::size_t> violations; // character indices into the table
};

/// Every nonlinear character has a zero.
inline CheckResult burnside_check(const ZeroPattern& p) {
    CheckResult r;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        bool any = false;
        for (bool z : p.zeros[i]) any = any || z;
        if (!any) r.violations.push_back(p.nonlinear_idx[i]);
    }
    r.ok = r.violations.empty();
    return r;
}

inline bool is_prime_power(long long n) {
    if (n < 2) return false;
    long long p = 2;
    while (p * p <= n && n % p) ++p;
    if (n % p) return true; // n itself prime
    while (n % p == 0) n /= p;
    return n == 1;
}

/// Every nonlinear character vanishes on some class of prime-power element order.
inline CheckResult prime_power_check(const CharacterTable& t, const ZeroPattern& p) {
    CheckResult r;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        bool found = false;
        for (std::size_t c = 0; c < p.cols() && !found; ++c)
            found = p.zeros[i][c] && is_prime_power(t.classes[p.class_idx[c]].element_order);
        if (!found) r.violations.push_back(p.nonlinear_idx[i]);
    }
    r.ok = r.violations.empty();
    return r;
}

/// Classes on which every nonlinear character vanishes. The column test is
/// cross-checked against |C_G(g)| = |G:G'|, i.e. class size == |G'|; a
/// disagreement means the table data is inconsistent.
inline std::vector<std::size_t> camina_classes(const CharacterTable& t, const ZeroPattern& p) {
    std::vector<std::size_t> out;
    if (p.rows() == 0) return out;
    const BigInt derived = t.derived_order();
    for (std::size_t c = 0; c < p.cols(); ++c) {
        const bool by_column = p.column_all_zero(c);
        const bool by_size = t.classes[p.class_idx[c]].size == derived;
        if (by_column != by_size)
            throw DataIntegrityError(t.group_name + ": Camina tests disagree on class " + t.classes[p.class_idx[c]].name);
        if (by_column) out.push_back(p.class_idx[c]);
    }
    return out;
}

/// Size-based definition alone (|class| == |G'|), for cross-checking.
inline std::vector<std::size_t> camina_classes_by_size(const CharacterTable& t) {
    std::vector<std::size_t> out;
    if (t.nonlinear_indices().empty()) return out;
    const BigInt derived = t.derived_order();
    for (std::size_t c = 0; c < t.num_classes(); ++c)
        if (t.classes[c].size == derived) out.push_back(c);
    return out;
}

/// Nonlinear characters vanishing on every non-central class.
inline std::vector<std::size_t> central_type_characters(const CharacterTable& t, const ZeroPattern& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        bool all = true;
        for (std::size_t c = 0; c < p.cols() && all; ++c)
            if (!t.is_central(p.class_idx[c])) all = p.zeros[i][c];
        if (all) out.push_back(p.nonlinear_idx[i]);
    }
    return out;
}

/// Non-central classes on which no irreducible character vanishes.
inline std::vector<std::size_t> nonvanishing_classes(const CharacterTable& t, const ZeroPattern& p) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < p.cols(); ++c)
        if (!t.is_central(p.class_idx[c]) && !p.column_has_zero(c)) out.push_back(p.class_idx[c]);
    return out;
}

/// Report statistic: every nonlinear degree is divisible by p or by q.
inline bool degrees_divisible_by_either(const CharacterTable& t, long long p, long long q) {
    for (std::size_t chi : t.nonlinear_indices()) {
        const BigInt& d = t.characters[chi].degree;
        if (d % p != 0 && d % q != 0) return false;
    }
    return true;
}

inline nlohmann::json pattern_to_json(const CharacterTable& t, const ZeroPattern& p) {
    nlohmann::json rows = nlohmann::json::array(), cols = nlohmann::json::array(), zeros = nlohmann::json::array();
    for (std::size_t chi : p.nonlinear_idx) rows.push_back(t.characters[chi].name);
    for (std::size_t c : p.class_idx) cols.push_back(t.classes[c].name);
    for (const auto& row : p.zeros) {
        nlohmann::json r = nlohmann::json::array();
        for (bool z : row) r.push_back(z ? 1 : 0);
        zeros.push_back(std::move(r));
    }
    return {{"rows", std::move(rows)}, {"cols", std::move(cols)}, {"zeros", std::move(zeros)}};
}

} // namespace charzero
