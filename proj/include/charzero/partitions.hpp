#pragma once

// Integer partitions, hooks, rim hooks and the Murnaghan-Nakayama rule for
// irreducible characters of the symmetric groups.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace charzero {

using BigInt = boost::multiprecision::cpp_int;

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into a partition.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

/// Ragged matrix of hook lengths arm + leg + 1, one row per part.
inline std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    const Partition cols = conjugate(lambda);
    std::vector<std::vector<int>> hooks;
    hooks.reserve(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        std::vector<int> row;
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            row.push_back(arm + leg + 1);
        }
        hooks.push_back(std::move(row));
    }
    return hooks;
}

inline bool has_hook(const Partition& lambda, int l) {
    for (const auto& row : hook_lengths(lambda))
        if (std::find(row.begin(), row.end(), l) != row.end()) return true;
    return false;
}

struct RimHookRemoval {
    Partition remainder;
    int leg_length = 0;
    bool operator==(const RimHookRemoval&) const = default;
};

/// Every way of removing a border strip of size l, found on the beta-set
/// (first-column hook lengths): removing an l-strip moves one bead down by l
/// to a free position, and the strip's leg length is the number of beads jumped.
/// Results are ordered by the row where the strip starts, top row first.
inline std::vector<RimHookRemoval> remove_rim_hooks(const Partition& lambda, int l) {
    if (l < 1) throw std::invalid_argument("remove_rim_hooks: strip size must be positive");
    const int r = static_cast<int>(lambda.length());
    std::vector<int> beta(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (r - 1 - i);
    const std::set<int> occupied(beta.begin(), beta.end());

    std::vector<RimHookRemoval> out;
    for (int i = 0; i < r; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - l;
        if (to < 0 || occupied.count(to)) continue;
        int jumped = 0;
        for (int b : beta)
            if (b > to && b < from) ++jumped;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts;
        for (int k = 0; k < r; ++k) {
            const int part = moved[static_cast<std::size_t>(k)] - (r - 1 - k);
            if (part > 0) parts.push_back(part);
        }
        out.push_back({Partition(std::move(parts)), jumped});
    }
    return out;
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

/// Hook length formula n! / prod(hooks).
inline BigInt degree(const Partition& lambda) {
    BigInt prod = 1;
    for (const auto& row : hook_lengths(lambda))
        for (int h : row) prod *= h;
    return factorial(lambda.n()) / prod;
}

/// Order of the centralizer of a permutation with cycle type mu: prod i^{m_i} m_i!.
inline BigInt centralizer_order(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    BigInt z = 1;
    for (const auto& [part, m] : mult) {
        for (int k = 0; k < m; ++k) z *= part;
        z *= factorial(m);
    }
    return z;
}

inline BigInt class_size(const Partition& mu) { return factorial(mu.n()) / centralizer_order(mu); }

inline int sign(const Partition& mu) { return ((mu.n() - static_cast<int>(mu.length())) % 2 == 0) ? 1 : -1; }

inline long long element_order(const Partition& mu) {
    long long l = 1;
    for (int p : mu.parts()) l = std::lcm(l, static_cast<long long>(p));
    return l;
}

/// Murnaghan-Nakayama evaluator for a fixed cycle type. The memo is keyed by
/// (remaining shape, position in mu) and is reused across all lambda, so
/// filling a whole column of the character table shares work.
class MurnaghanNakayama {
public:
    explicit MurnaghanNakayama(Partition mu) : mu_(std::move(mu)) {}

    BigInt operator()(const Partition& lambda) {
        if (lambda.n() != mu_.n())
            throw std::invalid_argument("mn_value: " + lambda.to_string() + " and " + mu_.to_string() +
                                        " partition different integers");
        return eval(lambda, 0);
    }

    const Partition& cycle_type() const noexcept { return mu_; }

private:
    BigInt eval(const Partition& lambda, std::size_t idx) {
        if (idx == mu_.length()) return lambda.empty() ? BigInt(1) : BigInt(0);
        auto key = std::make_pair(lambda, idx);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt total = 0;
        for (const auto& [rest, leg] : remove_rim_hooks(lambda, mu_[idx])) {
            const BigInt v = eval(rest, idx + 1);
            if (leg % 2) total -= v;
            else total += v;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    Partition mu_;
    std::map<std::pair<Partition, std::size_t>, BigInt> memo_;
};

/// chi^lambda evaluated on the class of cycle type mu.
inline BigInt mn_value(const Partition& lambda, const Partition& mu) { return MurnaghanNakayama(mu)(lambda); }

} // namespace charzero
