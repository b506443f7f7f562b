#pragma once

// Exact arithmetic in the cyclotomic rings Q(zeta_N).
//
// A value is stored at a conductor N as the coefficient vector of a
// polynomial in zeta_N of degree < phi(N), reduced modulo the N-th
// cyclotomic polynomial. For a fixed N this power-basis form is canonical,
// so equality and the zero test are exact comparisons of rationals. Values
// with different conductors are embedded into Q(zeta_lcm) before combining.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace charzero {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline int checked_lcm(int a, int b) {
    const std::int64_t l = std::lcm<std::int64_t>(a, b);
    if (l > (1 << 24)) throw std::overflow_error("cyclotomic conductor too large: " + std::to_string(l));
    return static_cast<int>(l);
}

// Exact division of integer polynomials (index = degree); divisor must be monic.
inline std::vector<BigInt> divide_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (num[i] != 0) throw std::logic_error("inexact polynomial division");
    }
    return quot;
}

// Sparse form of Phi_N used by the reducer: x^phi = -sum(lower terms).
struct ReductionRule {
    int phi = 1;
    std::vector<std::pair<int, std::int64_t>> lower; // nonzero (degree, coeff), degree < phi
};

class PolynomialCache {
public:
    static PolynomialCache& instance() {
        static PolynomialCache cache;
        return cache;
    }

    std::shared_ptr<const std::vector<BigInt>> polynomial(int n) {
        std::lock_guard lock(mutex_);
        return polynomial_locked(n);
    }

    std::shared_ptr<const ReductionRule> rule(int n) {
        std::lock_guard lock(mutex_);
        if (auto it = rules_.find(n); it != rules_.end()) return it->second;
        auto poly = polynomial_locked(n);
        auto r = std::make_shared<ReductionRule>();
        r->phi = static_cast<int>(poly->size()) - 1;
        for (int d = 0; d < r->phi; ++d) {
            const BigInt& c = (*poly)[d];
            if (c == 0) continue;
            if (c > BigInt(INT64_MAX) || c < BigInt(INT64_MIN))
                throw std::overflow_error("cyclotomic polynomial coefficient out of range");
            r->lower.emplace_back(d, static_cast<std::int64_t>(c));
        }
        rules_.emplace(n, r);
        return r;
    }

private:
    std::shared_ptr<const std::vector<BigInt>> polynomial_locked(int n) {
        if (auto it = polys_.find(n); it != polys_.end()) return it->second;
        std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
        p[0] = -1;
        p[static_cast<std::size_t>(n)] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d == 0) p = divide_monic(std::move(p), *polynomial_locked(d));
        }
        auto sp = std::make_shared<const std::vector<BigInt>>(std::move(p));
        polys_.emplace(n, sp);
        return sp;
    }

    std::mutex mutex_;
    std::map<int, std::shared_ptr<const std::vector<BigInt>>> polys_;
    std::map<int, std::shared_ptr<const ReductionRule>> rules_;
};

// Reduce a polynomial in zeta_N of degree < N modulo Phi_N, in place; result has phi(N) entries.
inline void reduce_in_place(int n, std::vector<Rational>& full) {
    const auto rule = PolynomialCache::instance().rule(n);
    const int phi = rule->phi;
    for (int d = static_cast<int>(full.size()) - 1; d >= phi; --d) {
        if (full[d] == 0) continue;
        const Rational c = full[d];
        full[d] = 0;
        for (const auto& [e, a] : rule->lower) {
            Rational& slot = full[d - phi + e];
            if (a == 1) slot -= c;
            else if (a == -1) slot += c;
            else slot -= c * a;
        }
    }
    full.resize(static_cast<std::size_t>(phi));
}

} // namespace detail

/// Returns Phi_N as integer coefficients indexed by degree (length phi(N)+1).
inline std::vector<BigInt> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    return *detail::PolynomialCache::instance().polynomial(n);
}

class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1) {}
    Cyclotomic(long long value) : conductor_(1), coeffs_{Rational(value)} {} // NOLINT: implicit by design of literals
    explicit Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} {}

    /// Takes an already reduced coefficient vector; its length must be phi(N).
    static Cyclotomic from_coeffs(int conductor, std::vector<Rational> coeffs) {
        if (conductor < 1) throw std::invalid_argument("conductor must be positive");
        if (static_cast<int>(coeffs.size()) != detail::euler_phi(conductor))
            throw std::invalid_argument("coefficient vector length must equal phi(" + std::to_string(conductor) + ")");
        Cyclotomic c;
        c.conductor_ = conductor;
        c.coeffs_ = std::move(coeffs);
        return c;
    }

    /// Reduces an arbitrary polynomial in zeta_N given by exponent -> coefficient.
    static Cyclotomic from_exponents(int conductor, const std::vector<std::pair<long long, Rational>>& terms) {
        if (conductor < 1) throw std::invalid_argument("conductor must be positive");
        std::vector<Rational> full(static_cast<std::size_t>(conductor));
        for (const auto& [k, c] : terms) {
            long long e = k % conductor;
            if (e < 0) e += conductor;
            full[static_cast<std::size_t>(e)] += c;
        }
        detail::reduce_in_place(conductor, full);
        return from_coeffs(conductor, std::move(full));
    }

    int conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// True when the value lies in Q (only the constant coefficient is nonzero).
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    bool is_integer() const { return is_rational() && boost::multiprecision::denominator(coeffs_[0]) == 1; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
        return coeffs_[0];
    }

    /// Re-express at a multiple of the current conductor.
    Cyclotomic embed(int target) const {
        if (target == conductor_) return *this;
        if (target % conductor_ != 0) throw std::invalid_argument("embed: target must be a multiple of the conductor");
        const int step = target / conductor_;
        std::vector<Rational> full(static_cast<std::size_t>(target));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) full[k * step] = coeffs_[k];
        detail::reduce_in_place(target, full);
        return from_coeffs(target, std::move(full));
    }

    Cyclotomic conj() const {
        std::vector<Rational> full(static_cast<std::size_t>(conductor_));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) full[(conductor_ - k) % conductor_] += coeffs_[k];
        detail::reduce_in_place(conductor_, full);
        return from_coeffs(conductor_, std::move(full));
    }

    std::complex<double> approx() const {
        std::complex<double> z{0.0, 0.0};
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
            z += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
        }
        return z;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) {
            Cyclotomic r = a;
            for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
            return r;
        }
        const int l = detail::checked_lcm(a.conductor_, b.conductor_);
        return a.embed(l) + b.embed(l);
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ != b.conductor_) {
            const int l = detail::checked_lcm(a.conductor_, b.conductor_);
            return a.embed(l) * b.embed(l);
        }
        const int n = a.conductor_;
        std::vector<Rational> full(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                full[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        detail::reduce_in_place(n, full);
        return from_coeffs(n, std::move(full));
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
        Cyclotomic r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    /// Mathematical equality; operands of different conductor are compared in the common field.
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
        const int l = detail::checked_lcm(a.conductor_, b.conductor_);
        return a.embed(l).coeffs_ == b.embed(l).coeffs_;
    }

    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            if (k == 0) {
                out << mag;
                continue;
            }
            if (mag != 1) out << mag << "*";
            out << "z" << conductor_;
            if (k > 1) out << "^" << k;
        }
        if (first) out << "0";
        return out.str();
    }

private:
    int conductor_;
    std::vector<Rational> coeffs_;
};

/// zeta_N^(k mod N), expressed at conductor N.
inline Cyclotomic root_of_unity(int n, long long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: N must be positive");
    return Cyclotomic::from_exponents(n, {{k, Rational(1)}});
}

inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }
inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
inline std::complex<double> approx_complex(const Cyclotomic& a) { return a.approx(); }

inline Cyclotomic pow(Cyclotomic base, unsigned long long e) {
    Cyclotomic result(1);
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

namespace detail {

// Copies integers below `limit` in magnitude into `out`; false if any entry is not one.
inline bool small_integers(const std::vector<Rational>& coeffs, std::vector<std::int64_t>& out,
                           std::int64_t limit = std::int64_t{1} << 20) {
    out.resize(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (boost::multiprecision::denominator(coeffs[i]) != 1) return false;
        const BigInt& n = boost::multiprecision::numerator(coeffs[i]);
        if (n >= limit || n <= -limit) return false;
        out[i] = static_cast<std::int64_t>(n);
    }
    return true;
}

// Integer counterpart of reduce_in_place; false (with `full` unspecified) on overflow.
inline bool reduce_integer_in_place(int n, std::vector<__int128>& full) {
    const auto rule = PolynomialCache::instance().rule(n);
    const int phi = rule->phi;
    for (int d = static_cast<int>(full.size()) - 1; d >= phi; --d) {
        const __int128 c = full[d];
        if (c == 0) continue;
        full[d] = 0;
        for (const auto& [e, a] : rule->lower) {
            __int128 term = 0;
            if (__builtin_mul_overflow(c, static_cast<__int128>(a), &term)) return false;
            if (__builtin_sub_overflow(full[d - phi + e], term, &full[d - phi + e])) return false;
        }
    }
    full.resize(static_cast<std::size_t>(phi));
    return true;
}

} // namespace detail

/// A cyclotomic operand for repeated inner sums, with its coefficients cached as
/// machine integers when they are small integers.
struct PreparedValue {
    Cyclotomic value;
    bool small = false;
    std::vector<std::int64_t> ints;

    explicit PreparedValue(Cyclotomic v) : value(std::move(v)) { small = detail::small_integers(value.coeffs(), ints); }
};

/// Sum over terms of a[i] * b[i] * scale[i], accumulated before a single reduction.
/// All operands must already share `conductor`.
inline Cyclotomic weighted_inner_sum(int conductor, const std::vector<const PreparedValue*>& a,
                                     const std::vector<const PreparedValue*>& b, const std::vector<Rational>& scale) {
    const auto len = static_cast<std::size_t>(conductor);

    // Integer path: each product is below 2^20 * 2^20 * 2^40, far inside __int128.
    std::vector<std::int64_t> si;
    bool integral = detail::small_integers(scale, si, std::int64_t{1} << 40);
    for (std::size_t t = 0; integral && t < a.size(); ++t) integral = a[t]->small && b[t]->small;
    if (integral) {
        std::vector<__int128> acc(len);
        for (std::size_t t = 0; t < a.size(); ++t) {
            const auto& ai = a[t]->ints;
            const auto& bi = b[t]->ints;
            for (std::size_t i = 0; i < ai.size(); ++i) {
                if (ai[i] == 0) continue;
                const __int128 left = static_cast<__int128>(ai[i]) * si[t];
                for (std::size_t j = 0; j < bi.size(); ++j)
                    if (bi[j] != 0) acc[(i + j) % len] += left * bi[j];
            }
        }
        std::vector<__int128> reduced = acc;
        const bool ok = detail::reduce_integer_in_place(conductor, reduced);
        const auto& src = ok ? reduced : acc;
        std::vector<Rational> full(src.size());
        for (std::size_t k = 0; k < src.size(); ++k)
            if (src[k] != 0) full[k] = Rational(BigInt(src[k]));
        if (!ok) detail::reduce_in_place(conductor, full);
        return Cyclotomic::from_coeffs(conductor, std::move(full));
    }

    std::vector<Rational> full(len);
    for (std::size_t t = 0; t < a.size(); ++t) {
        const auto& ac = a[t]->value.coeffs();
        const auto& bc = b[t]->value.coeffs();
        for (std::size_t i = 0; i < ac.size(); ++i) {
            if (ac[i] == 0) continue;
            const Rational left = ac[i] * scale[t];
            for (std::size_t j = 0; j < bc.size(); ++j) {
                if (bc[j] == 0) continue;
                full[(i + j) % len] += left * bc[j];
            }
        }
    }
    detail::reduce_in_place(conductor, full);
    return Cyclotomic::from_coeffs(conductor, std::move(full));
}

inline Cyclotomic weighted_inner_sum(int conductor, const std::vector<const Cyclotomic*>& a,
                                     const std::vector<const Cyclotomic*>& b, const std::vector<Rational>& scale) {
    std::vector<PreparedValue> pa, pb;
    pa.reserve(a.size());
    pb.reserve(b.size());
    std::vector<const PreparedValue*> ra, rb;
    for (const auto* v : a) ra.push_back(&pa.emplace_back(*v));
    for (const auto* v : b) rb.push_back(&pb.emplace_back(*v));
    return weighted_inner_sum(conductor, ra, rb, scale);
}

namespace detail {

inline nlohmann::json bigint_json(const BigInt& v) {
    if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return static_cast<std::int64_t>(v);
    return v.str();
}

inline BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

} // namespace detail

/// A bare integer for rational integers at conductor 1, otherwise {"conductor", "coeffs": [[num, den], ...]}.
inline void to_json(nlohmann::json& j, const Cyclotomic& c) {
    if (c.conductor() == 1 && c.is_integer()) {
        j = detail::bigint_json(boost::multiprecision::numerator(c.coeffs()[0]));
        return;
    }
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& q : c.coeffs())
        coeffs.push_back({detail::bigint_json(boost::multiprecision::numerator(q)),
                          detail::bigint_json(boost::multiprecision::denominator(q))});
    j = {{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

inline void from_json(const nlohmann::json& j, Cyclotomic& c) {
    if (j.is_number_integer() || j.is_string()) {
        c = Cyclotomic(Rational(detail::bigint_from_json(j)));
        return;
    }
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw std::invalid_argument("cyclotomic value needs 'conductor' and 'coeffs'");
    const int n = j.at("conductor").get<int>();
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || static_cast<int>(arr.size()) != detail::euler_phi(n))
        throw std::invalid_argument("'coeffs' must have phi(conductor) entries");
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("each coefficient is [num, den]");
        const BigInt den = detail::bigint_from_json(pair[1]);
        if (den == 0) throw std::invalid_argument("zero denominator");
        coeffs.emplace_back(detail::bigint_from_json(pair[0]), den);
    }
    c = Cyclotomic::from_coeffs(n, std::move(coeffs));
}

} // namespace charzero
