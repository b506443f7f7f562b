#pragma once

// Character table data model, exact constructors for a few families of
// groups, direct products, and the validation gate applied to ingested data.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "partitions.hpp"

namespace charzero {

struct ConjClass {
    std::string name;
    BigInt size = 1;
    long long element_order = 1;
    std::optional<Partition> label; // cycle type, for symmetric groups

    bool operator==(const ConjClass&) const = default;
};

struct Character {
    std::string name;
    std::vector<Cyclotomic> values;
    BigInt degree = 0; // value at the identity class; 0 when that value is not a positive integer

    Character() = default;
    Character(std::string n, std::vector<Cyclotomic> v) : name(std::move(n)), values(std::move(v)) { refresh_degree(); }

    void refresh_degree() {
        degree = 0;
        if (!values.empty() && values.front().is_integer()) {
            const Rational d = values.front().rational_value();
            if (d > 0) degree = boost::multiprecision::numerator(d);
        }
    }
    bool is_linear() const { return degree == 1; }

    bool operator==(const Character&) const = default;
};

struct TableMetadata {
    std::optional<bool> solvable;
    std::optional<bool> nilpotent;
    std::optional<bool> abelian_by_metanilpotent;
    std::optional<long long> fitting_height;
    std::optional<long long> r_value;
    std::optional<bool> simple;
    std::optional<std::string> notes;

    bool operator==(const TableMetadata&) const = default;
};

struct CharacterTable {
    std::string group_name;
    BigInt order = 1;
    std::vector<ConjClass> classes;
    std::vector<Character> characters;
    TableMetadata metadata;

    std::size_t num_classes() const noexcept { return classes.size(); }
    std::size_t num_characters() const noexcept { return characters.size(); }

    const Cyclotomic& value(std::size_t chi, std::size_t cls) const { return characters[chi].values[cls]; }

    std::vector<std::size_t> nonlinear_indices() const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < characters.size(); ++i)
            if (characters[i].degree > 1) idx.push_back(i);
        return idx;
    }

    std::size_t linear_count() const {
        return static_cast<std::size_t>(
            std::count_if(characters.begin(), characters.end(), [](const Character& c) { return c.is_linear(); }));
    }

    /// |G'| = |G| / #linear characters.
    BigInt derived_order() const { return order / BigInt(linear_count()); }

    bool is_central(std::size_t cls) const { return classes[cls].size == 1; }

    bool operator==(const CharacterTable&) const = default;
};

// ---------------------------------------------------------------------------
// Constructors

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace detail

inline CharacterTable build_symmetric(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("build_symmetric: n must be in [1, 14], got " + std::to_string(n));
    const auto lambdas = partitions_of(n);
    std::vector<Partition> mus(lambdas.rbegin(), lambdas.rend()); // identity (1^n) first

    CharacterTable t;
    t.group_name = "S" + std::to_string(n);
    t.order = factorial(n);
    for (const auto& mu : mus) t.classes.push_back({"g_" + mu.to_string(), class_size(mu), element_order(mu), mu});

    std::vector<std::vector<Cyclotomic>> rows(lambdas.size(), std::vector<Cyclotomic>(mus.size()));
    for (std::size_t c = 0; c < mus.size(); ++c) {
        MurnaghanNakayama column(mus[c]);
        for (std::size_t r = 0; r < lambdas.size(); ++r) rows[r][c] = Cyclotomic(Rational(column(lambdas[r])));
    }
    for (std::size_t r = 0; r < lambdas.size(); ++r)
        t.characters.emplace_back("chi_" + lambdas[r].to_string(), std::move(rows[r]));

    t.metadata.solvable = n <= 4;
    t.metadata.simple = false;
    return t;
}

/// Dihedral group of order 2m, m >= 3: rotations x (order m), reflection y.
inline CharacterTable build_dihedral(int m) {
    if (m < 3) throw std::invalid_argument("build_dihedral: m must be at least 3, got " + std::to_string(m));
    const bool even = m % 2 == 0;
    CharacterTable t;
    t.group_name = "D" + std::to_string(2 * m);
    t.order = 2 * m;

    auto rotation_order = [m](int j) { return static_cast<long long>(m / std::gcd(m, j)); };
    std::vector<int> rotation_reps{0};
    if (even) rotation_reps.push_back(m / 2);
    for (int j = 1; 2 * j < m; ++j) rotation_reps.push_back(j);
    for (int j : rotation_reps) {
        const bool fixed = j == 0 || 2 * j == m;
        t.classes.push_back({j == 0 ? "1" : "x^" + std::to_string(j), fixed ? 1 : 2, rotation_order(j), std::nullopt});
    }
    // Reflection classes: y x^k for k even (and k odd when m is even).
    if (even) {
        t.classes.push_back({"y", m / 2, 2, std::nullopt});
        t.classes.push_back({"xy", m / 2, 2, std::nullopt});
    } else {
        t.classes.push_back({"y", m, 2, std::nullopt});
    }

    const Cyclotomic one(1), minus_one(-1), zero(0);
    auto linear = [&](const std::string& name, bool flip_x, bool flip_y) {
        std::vector<Cyclotomic> v;
        for (int j : rotation_reps) v.push_back(flip_x && j % 2 ? minus_one : one);
        v.push_back(flip_y ? minus_one : one);
        if (even) v.push_back((flip_y != flip_x) ? minus_one : one); // y x: sign(y) * sign(x)
        t.characters.emplace_back(name, std::move(v));
    };
    linear("lin_1", false, false);
    linear("lin_y", false, true);
    if (even) {
        linear("lin_x", true, false);
        linear("lin_xy", true, true);
    }
    for (int i = 1; 2 * i < m; ++i) {
        std::vector<Cyclotomic> v;
        for (int j : rotation_reps) {
            const long long e = static_cast<long long>(i) * j;
            v.push_back(Cyclotomic::from_exponents(m, {{e, Rational(1)}, {-e, Rational(1)}}));
        }
        v.push_back(zero);
        if (even) v.push_back(zero);
        t.characters.emplace_back("chi_" + std::to_string(i), std::move(v));
    }

    const bool two_power = (m & (m - 1)) == 0;
    t.metadata.solvable = true;
    t.metadata.nilpotent = two_power;
    if (two_power) t.metadata.fitting_height = 1;
    return t;
}

inline CharacterTable build_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("build_cyclic: n must be positive, got " + std::to_string(n));
    CharacterTable t;
    t.group_name = "C" + std::to_string(n);
    t.order = n;
    for (int k = 0; k < n; ++k) t.classes.push_back({k == 0 ? "1" : "x^" + std::to_string(k), 1, n / std::gcd(n, k), std::nullopt});
    for (int j = 0; j < n; ++j) {
        std::vector<Cyclotomic> v;
        for (int k = 0; k < n; ++k) v.push_back(n == 1 ? Cyclotomic(1) : root_of_unity(n, static_cast<long long>(j) * k));
        t.characters.emplace_back("theta_" + std::to_string(j), std::move(v));
    }
    t.metadata.solvable = true;
    t.metadata.nilpotent = true;
    t.metadata.abelian_by_metanilpotent = true;
    t.metadata.simple = detail::is_prime(n);
    if (n > 1) {
        t.metadata.fitting_height = 1;
        t.metadata.r_value = 1;
    }
    return t;
}

namespace detail {

inline std::optional<bool> meta_and(const std::optional<bool>& a, const std::optional<bool>& b) {
    if ((a && !*a) || (b && !*b)) return false;
    if (a && b) return true;
    return std::nullopt;
}

inline TableMetadata product_metadata(const CharacterTable& a, const CharacterTable& b) {
    const TableMetadata& x = a.metadata;
    const TableMetadata& y = b.metadata;
    TableMetadata m;
    m.solvable = meta_and(x.solvable, y.solvable);
    m.nilpotent = meta_and(x.nilpotent, y.nilpotent);
    if (m.solvable != false) {
        m.abelian_by_metanilpotent = meta_and(x.abelian_by_metanilpotent, y.abelian_by_metanilpotent);
        if (x.fitting_height && y.fitting_height) m.fitting_height = std::max(*x.fitting_height, *y.fitting_height);
    }
    if (a.order > 1 && b.order > 1) m.simple = false;
    else m.simple = a.order > 1 ? x.simple : y.simple;
    return m;
}

} // namespace detail

/// Classes are pairs (a, b) in row-major order, characters are pairwise products mu x nu.
inline CharacterTable direct_product(const CharacterTable& a, const CharacterTable& b) {
    CharacterTable t;
    t.group_name = a.group_name + " x " + b.group_name;
    t.order = a.order * b.order;
    for (const auto& ca : a.classes)
        for (const auto& cb : b.classes)
            t.classes.push_back({"(" + ca.name + "," + cb.name + ")", ca.size * cb.size,
                                 std::lcm(ca.element_order, cb.element_order), std::nullopt});
    for (const auto& mu : a.characters) {
        for (const auto& nu : b.characters) {
            std::vector<Cyclotomic> v;
            v.reserve(t.classes.size());
            for (const auto& x : mu.values)
                for (const auto& y : nu.values) v.push_back(x * y);
            t.characters.emplace_back(mu.name + "*" + nu.name, std::move(v));
        }
    }
    t.metadata = detail::product_metadata(a, b);
    return t;
}

/// Direct product of cyclic groups with the given invariant factors.
inline CharacterTable build_abelian(const std::vector<int>& invariant_factors) {
    for (int f : invariant_factors)
        if (f < 2) throw std::invalid_argument("build_abelian: invariant factors must be at least 2");
    CharacterTable t = build_cyclic(1);
    for (int f : invariant_factors) t = direct_product(t, build_cyclic(f));
    if (!invariant_factors.empty()) {
        std::ostringstream name;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) name << (i ? " x C" : "C") << invariant_factors[i];
        t.group_name = name.str();
    }
    t.metadata.abelian_by_metanilpotent = true;
    t.metadata.simple = invariant_factors.size() == 1 && detail::is_prime(invariant_factors[0]);
    // Minimal generator count: the largest number of factors sharing a prime divisor.
    long long r = 0;
    const int largest = invariant_factors.empty() ? 0 : *std::max_element(invariant_factors.begin(), invariant_factors.end());
    for (int p = 2; p <= largest; ++p) {
        if (!detail::is_prime(p)) continue;
        r = std::max<long long>(r, std::count_if(invariant_factors.begin(), invariant_factors.end(), [p](int f) { return f % p == 0; }));
    }
    if (r > 0) {
        t.metadata.r_value = r;
        t.metadata.fitting_height = 1;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
    std::string summary() const {
        std::string s;
        for (const auto& f : failures) s += f + "\n";
        return s;
    }
};

namespace detail {

inline int table_conductor(const CharacterTable& t) {
    int l = 1;
    for (const auto& chi : t.characters)
        for (const auto& v : chi.values) l = checked_lcm(l, v.conductor());
    return l;
}

inline std::string metadata_problem(const TableMetadata& m) {
    if (m.fitting_height && *m.fitting_height < 1) return "fitting_height must be a positive integer";
    if (m.r_value && *m.r_value < 1) return "r_value must be a positive integer";
    if (m.nilpotent == true && m.fitting_height && *m.fitting_height != 1) return "nilpotent table with fitting_height != 1";
    if (m.solvable == false && (m.fitting_height || m.r_value || m.abelian_by_metanilpotent))
        return "non-solvable table carries solvable-only metadata";
    if (m.nilpotent == true && m.solvable == false) return "nilpotent but not solvable";
    return {};
}

} // namespace detail

/// Checks every table invariant; failures are reported, never thrown.
inline ValidationReport validate(const CharacterTable& t) {
    ValidationReport rep;
    auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
    const std::size_t nc = t.num_classes();

    if (t.order < 1) fail("order: must be positive");
    if (nc == 0) fail("classes: table has no classes");
    if (t.num_characters() != nc)
        fail("shape: " + std::to_string(t.num_characters()) + " characters but " + std::to_string(nc) + " classes");
    bool shape_ok = t.num_characters() == nc && nc > 0 && t.order >= 1;
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
        if (t.characters[i].values.size() != nc) {
            fail("shape: character " + std::to_string(i) + " has " + std::to_string(t.characters[i].values.size()) + " values");
            shape_ok = false;
        }
    }

    BigInt size_sum = 0;
    std::size_t identity_count = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& cl = t.classes[c];
        size_sum += cl.size;
        if (cl.size < 1 || (t.order >= 1 && t.order % cl.size != 0)) fail("class_size: class " + std::to_string(c) + " size does not divide order");
        if (cl.element_order < 1 || (t.order >= 1 && t.order % cl.element_order != 0))
            fail("element_order: class " + std::to_string(c) + " order does not divide group order");
        if (cl.element_order == 1) {
            ++identity_count;
            if (cl.size != 1) fail("identity: class " + std::to_string(c) + " has element order 1 but size != 1");
            if (c != 0) fail("identity: identity class at index " + std::to_string(c) + ", expected 0");
        }
    }
    if (identity_count != 1) fail("identity: " + std::to_string(identity_count) + " classes with element order 1");
    if (size_sum != t.order) fail("class_size_sum: sum of class sizes " + size_sum.str() + " != order " + t.order.str());

    BigInt degree_sq = 0;
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
        const auto& chi = t.characters[i];
        if (chi.degree < 1) {
            fail("degree: character " + std::to_string(i) + " value at identity is not a positive integer");
            shape_ok = false;
        }
        degree_sq += chi.degree * chi.degree;
    }
    if (degree_sq != t.order) fail("degree_sum: sum of squared degrees " + degree_sq.str() + " != order");
    const std::size_t lin = t.linear_count();
    if (lin == 0 || t.order % lin != 0) fail("linear_count: " + std::to_string(lin) + " linear characters do not divide order");

    if (auto problem = detail::metadata_problem(t.metadata); !problem.empty()) fail("metadata: " + problem);

    if (!shape_ok || identity_count != 1 || t.classes[0].element_order != 1) return rep;

    const int l = detail::table_conductor(t);
    std::vector<std::vector<PreparedValue>> val(t.num_characters()), cval(t.num_characters());
    for (std::size_t i = 0; i < t.num_characters(); ++i)
        for (const auto& v : t.characters[i].values) {
            val[i].emplace_back(v.embed(l));
            cval[i].emplace_back(val[i].back().value.conj());
        }

    // Rows: sum_c |c| chi(c) conj(psi(c)) = |G| delta.
    std::vector<Rational> sizes;
    for (const auto& cl : t.classes) sizes.emplace_back(cl.size);
    for (std::size_t i = 0; i < t.num_characters(); ++i) {
        for (std::size_t j = i; j < t.num_characters(); ++j) {
            std::vector<const PreparedValue*> a, b;
            for (std::size_t c = 0; c < nc; ++c) {
                a.push_back(&val[i][c]);
                b.push_back(&cval[j][c]);
            }
            const Cyclotomic s = weighted_inner_sum(l, a, b, sizes);
            const Cyclotomic expected(Rational(i == j ? t.order : BigInt(0)));
            if (!(s == expected))
                fail("row_orthogonality: characters " + std::to_string(i) + "," + std::to_string(j) + " give " + s.to_string());
        }
    }
    // Columns: sum_chi chi(c) conj(chi(d)) = delta |G|/|c|.
    const std::vector<Rational> ones(t.num_characters(), Rational(1));
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t d = c; d < nc; ++d) {
            std::vector<const PreparedValue*> a, b;
            for (std::size_t i = 0; i < t.num_characters(); ++i) {
                a.push_back(&val[i][c]);
                b.push_back(&cval[i][d]);
            }
            const Cyclotomic s = weighted_inner_sum(l, a, b, ones);
            const Rational centralizer = c == d ? Rational(t.order, t.classes[c].size) : Rational(0);
            if (!(s == Cyclotomic(centralizer)))
                fail("column_orthogonality: classes " + std::to_string(c) + "," + std::to_string(d) + " give " + s.to_string());
        }
    }
    return rep;
}

} // namespace charzero
