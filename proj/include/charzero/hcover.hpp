#pragma once

// Minimum class covers: the smallest set of classes such that every nonlinear
// character vanishes on at least one of them (a minimum hitting set of the
// rows of the zero pattern), plus the corpus-level conjecture report.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "chartable.hpp"
#include "errors.hpp"
#include "json.hpp"
#include "vanishing.hpp"

namespace charzero {

struct CoverResult {
    std::size_t k_min = 0;
    std::vector<std::size_t> witness; // class indices, ascending
    std::uint64_t explored_nodes = 0;
    std::size_t proof_lb = 0; // disjoint-rows bound at the root; k_min above it was certified by exhaustion
};

namespace detail {

using Bits = boost::dynamic_bitset<>;

class HittingSetSolver {
public:
    explicit HittingSetSolver(const std::vector<std::vector<bool>>& rows) : nrows_(rows.size()) {
        ncols_ = rows.empty() ? 0 : rows.front().size();
        row_bits_.assign(nrows_, Bits(ncols_));
        col_bits_.assign(ncols_, Bits(nrows_));
        for (std::size_t r = 0; r < nrows_; ++r)
            for (std::size_t c = 0; c < ncols_; ++c)
                if (rows[r][c]) {
                    row_bits_[r].set(c);
                    col_bits_[c].set(r);
                }
    }

    CoverResult solve() {
        CoverResult res;
        if (nrows_ == 0) return res;
        for (std::size_t r = 0; r < nrows_; ++r)
            if (row_bits_[r].none()) throw NoCoverError("row " + std::to_string(r) + " has no zero");

        Bits uncovered(nrows_);
        uncovered.set();
        Bits allowed(ncols_);
        allowed.set();
        best_ = greedy(uncovered);
        res.proof_lb = disjoint_bound(uncovered, allowed);
        if (res.proof_lb < best_.size()) {
            std::vector<std::size_t> chosen;
            search(uncovered, allowed, chosen);
        }
        res.k_min = best_.size();
        res.witness = best_;
        std::sort(res.witness.begin(), res.witness.end());
        res.explored_nodes = nodes_;
        return res;
    }

private:
    std::vector<std::size_t> greedy(Bits uncovered) const {
        std::vector<std::size_t> pick;
        while (uncovered.any()) {
            std::size_t best_col = 0, best_gain = 0;
            for (std::size_t c = 0; c < ncols_; ++c) {
                const std::size_t gain = (col_bits_[c] & uncovered).count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best_col = c;
                }
            }
            pick.push_back(best_col);
            uncovered -= col_bits_[best_col];
        }
        return pick;
    }

    // Size of a maximal family of pairwise-disjoint uncovered rows (restricted to allowed columns).
    std::size_t disjoint_bound(const Bits& uncovered, const Bits& allowed) const {
        std::vector<std::pair<std::size_t, std::size_t>> order;
        for (auto r = uncovered.find_first(); r != Bits::npos; r = uncovered.find_next(r))
            order.emplace_back((row_bits_[r] & allowed).count(), r);
        std::sort(order.begin(), order.end());
        Bits used(ncols_);
        std::size_t count = 0;
        for (const auto& [size, r] : order) {
            const Bits cols = row_bits_[r] & allowed;
            if (size == 0) return nrows_ + 1; // row cannot be covered any more
            if (!cols.intersects(used)) {
                used |= cols;
                ++count;
            }
        }
        return count;
    }

    void search(const Bits& uncovered, const Bits& allowed, std::vector<std::size_t>& chosen) {
        ++nodes_;
        if (uncovered.none()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + disjoint_bound(uncovered, allowed) >= best_.size()) return;

        // Branch on the uncovered row with the fewest remaining options.
        std::size_t branch_row = Bits::npos, fewest = Bits::npos;
        for (auto r = uncovered.find_first(); r != Bits::npos; r = uncovered.find_next(r)) {
            const std::size_t k = (row_bits_[r] & allowed).count();
            if (k < fewest) {
                fewest = k;
                branch_row = r;
            }
        }
        const Bits options = row_bits_[branch_row] & allowed;
        std::vector<std::pair<std::size_t, std::size_t>> cands; // (coverage, column)
        for (auto c = options.find_first(); c != Bits::npos; c = options.find_next(c))
            cands.emplace_back((col_bits_[c] & uncovered).count(), c);
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });

        Bits remaining = allowed;
        for (const auto& [cov, c] : cands) {
            remaining.reset(c);
            chosen.push_back(c);
            search(uncovered - col_bits_[c], remaining, chosen);
            chosen.pop_back();
        }
    }

    std::size_t nrows_;
    std::size_t ncols_ = 0;
    std::vector<Bits> row_bits_;
    std::vector<Bits> col_bits_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Exact minimum hitting set of the rows of a boolean matrix (column indices returned).
inline CoverResult min_hitting_set(const std::vector<std::vector<bool>>& rows) {
    return detail::HittingSetSolver(rows).solve();
}

/// Exact minimum number of classes covering every nonlinear character.
inline CoverResult min_cover(const ZeroPattern& p) {
    if (const auto b = burnside_check(p); !b.ok)
        throw NoCoverError(p.table_ref + ": character " + std::to_string(b.violations.front()) + " has no zero");
    CoverResult r = min_hitting_set(p.zeros);
    for (auto& c : r.witness) c = p.class_idx[c];
    return r;
}

/// Does the class set hit every nonlinear row? Violations list uncovered characters.
inline CheckResult check_cover(const ZeroPattern& p, const std::vector<std::size_t>& classes) {
    CheckResult r;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        bool hit = false;
        for (std::size_t cls : classes) {
            for (std::size_t c = 0; c < p.cols() && !hit; ++c)
                hit = p.class_idx[c] == cls && p.zeros[i][c];
            if (hit) break;
        }
        if (!hit) r.violations.push_back(p.nonlinear_idx[i]);
    }
    r.ok = r.violations.empty();
    return r;
}

/// Pairs covers of A and B into classes (x_i, y_i) of direct_product(A, B).
/// The shorter list is padded with its last element; an empty list (abelian
/// factor) is padded with the identity class.
inline std::vector<std::size_t> pair_cover_product(std::vector<std::size_t> ca, std::vector<std::size_t> cb,
                                                   const CharacterTable& a, const CharacterTable& b) {
    if (ca.empty() && cb.empty()) {
        if (!a.nonlinear_indices().empty() || !b.nonlinear_indices().empty())
            throw std::invalid_argument("pair_cover_product: empty covers for a non-abelian product");
        return {};
    }
    const std::size_t k = std::max(ca.size(), cb.size());
    auto pad = [k](std::vector<std::size_t>& v) {
        const std::size_t fill = v.empty() ? 0 : v.back();
        v.resize(k, fill);
    };
    pad(ca);
    pad(cb);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(ca[i] * b.num_classes() + cb[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Symmetric-group witness sets

/// n when the class labels of t are exactly the cycle types of S_n.
inline std::optional<int> symmetric_degree(const CharacterTable& t) {
    if (t.classes.empty()) return std::nullopt;
    for (const auto& c : t.classes)
        if (!c.label) return std::nullopt;
    const int n = t.classes.front().label->n();
    std::vector<Partition> labels;
    for (const auto& c : t.classes) labels.push_back(*c.label);
    std::sort(labels.begin(), labels.end());
    auto all = partitions_of(n);
    std::sort(all.begin(), all.end());
    if (labels != all) return std::nullopt;
    return n;
}

inline std::optional<std::size_t> class_with_label(const CharacterTable& t, const Partition& mu) {
    for (std::size_t c = 0; c < t.num_classes(); ++c)
        if (t.classes[c].label == mu) return c;
    return std::nullopt;
}

/// Explicit cycle-type class sets known to cover every nonlinear character of S_n:
/// the n- and (n-1)-cycles for n >= 2; for even n >= 8 the triple
/// (n-1,1), (n-3,3), (n-4,2,1,1); for odd n >= 9 the triple (n), (n-4,2,2), (n-5,4,1).
inline std::vector<std::vector<Partition>> symmetric_witness_sets(int n) {
    std::vector<std::vector<Partition>> sets;
    if (n >= 2) sets.push_back({Partition{n}, n == 2 ? Partition{1, 1} : Partition{n - 1, 1}});
    if (n >= 8 && n % 2 == 0) sets.push_back({Partition{n - 1, 1}, Partition{n - 3, 3}, Partition{n - 4, 2, 1, 1}});
    if (n >= 9 && n % 2 == 1) sets.push_back({Partition{n}, Partition{n - 4, 2, 2}, Partition{n - 5, 4, 1}});
    return sets;
}

// ---------------------------------------------------------------------------
// Conjecture report

struct ReportRow {
    std::string group;
    BigInt order;
    std::size_t num_classes = 0;
    std::size_t num_nonlinear = 0;
    std::size_t k_min = 0;
    std::vector<std::string> witness_names;
    std::vector<std::string> flags;
};

namespace flag {
inline constexpr const char* kExceedsThree = "k_min>3";                  // every group H_3 (open)
inline constexpr const char* kSolvableExceedsTwo = "solvable_k_min>2";   // solvable groups H_2 (open)
inline constexpr const char* kExceedsRValue = "k_min>r_value";           // contradicts H_r(G) for solvable G
inline constexpr const char* kSimpleExceedsThree = "simple_k_min>3";     // contradicts H_3 for simple groups
} // namespace flag

inline ReportRow conjecture_row(const CharacterTable& t) {
    const ZeroPattern p = zero_pattern(t);
    const CoverResult cover = min_cover(p);
    ReportRow row{t.group_name, t.order, t.num_classes(), p.rows(), cover.k_min, {}, {}};
    for (std::size_t c : cover.witness) row.witness_names.push_back(t.classes[c].name);
    const auto& m = t.metadata;
    if (cover.k_min > 3) row.flags.emplace_back(flag::kExceedsThree);
    if (m.solvable == true && cover.k_min > 2) row.flags.emplace_back(flag::kSolvableExceedsTwo);
    if (m.r_value && static_cast<long long>(cover.k_min) > *m.r_value) row.flags.emplace_back(flag::kExceedsRValue);
    if (m.simple == true && p.rows() > 0 && cover.k_min > 3) row.flags.emplace_back(flag::kSimpleExceedsThree);
    return row;
}

/// One row per table. Reports absence of counterexamples only; it never asserts a conjecture.
inline std::vector<ReportRow> conjecture_report(const std::vector<CharacterTable>& corpus) {
    std::vector<ReportRow> rows;
    rows.reserve(corpus.size());
    for (const auto& t : corpus) rows.push_back(conjecture_row(t));
    return rows;
}

namespace detail {

inline std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

} // namespace detail

inline std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "group,order,#classes,#nonlinear,k_min,witness_names,flags\n";
    for (const auto& r : rows) {
        out << detail::csv_field(r.group) << ',' << r.order << ',' << r.num_classes << ',' << r.num_nonlinear << ','
            << r.k_min << ',' << detail::csv_field(detail::join(r.witness_names, ";")) << ','
            << detail::csv_field(detail::join(r.flags, ";")) << '\n';
    }
    return out.str();
}

inline nlohmann::json report_json(const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"group", r.group},
                       {"order", detail::bigint_json(r.order)},
                       {"classes", r.num_classes},
                       {"nonlinear", r.num_nonlinear},
                       {"k_min", r.k_min},
                       {"witness_names", r.witness_names},
                       {"flags", r.flags}});
    }
    return arr;
}

} // namespace charzero
