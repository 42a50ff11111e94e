#pragma once

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "chevalg/common.hpp"

namespace chevalg {

/// Laurent polynomial in one variable v with arbitrary-precision integer
/// coefficients: an element of Z[v, v^-1].
///
/// Invariant: no zero coefficient is ever stored, so equality is equality
/// of the underlying maps. Exponents are machine integers, coefficients
/// are unbounded.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(const Int& c) {  // NOLINT: implicit constant embedding
        if (c != 0) coeffs_[0] = c;
    }
    LaurentPoly(long c) : LaurentPoly(Int(c)) {}

    static LaurentPoly v_power(long e, const Int& c = 1) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }

    const std::map<long, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Int coeff(long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add_term(long e, const Int& c) {
        if (c == 0) return;
        Int& slot = coeffs_[e];
        slot += c;
        if (slot == 0) coeffs_.erase(e);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    /// Bar involution v -> v^-1 (a ring automorphism).
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    /// Sum of coefficients = value at v = 1.
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    long min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    long max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = abs(c);
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "v";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    std::map<long, Int> coeffs_;
};

/// q-integer [n] in v_i = v^d: (v_i^n - v_i^-n)/(v_i - v_i^-1).
inline LaurentPoly q_int(long n, long d = 1) {
    LaurentPoly r;
    if (n == 0) return r;
    long sign = 1;
    long m = n;
    if (m < 0) {
        m = -m;
        sign = -1;
    }
    for (long j = 0; j < m; ++j) r.add_term(d * (m - 1 - 2 * j), sign);
    return r;
}

/// [p]!_i = prod_{s=1}^p [s] in v_i = v^d.
inline LaurentPoly q_factorial(long p, long d = 1) {
    LaurentPoly r(1);
    for (long s = 1; s <= p; ++s) r *= q_int(s, d);
    return r;
}

namespace detail {
// Pascal-type recurrence keeps every intermediate value inside Z[v,v^-1]:
//   [n;t] = v^(n-t) [n-1;t-1] + v^(-t) [n-1;t]   (n >= 1)
// and the negative-n reduction [-a;t] = (-1)^t [a+t-1;t].
inline LaurentPoly q_binom_nonneg(long n, long t, long d) {
    if (t < 0 || t > n) return LaurentPoly();
    if (t == 0 || t == n) return LaurentPoly(1);
    thread_local std::map<std::tuple<long, long, long>, LaurentPoly> cache;
    auto key = std::make_tuple(n, t, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    LaurentPoly r = LaurentPoly::v_power(d * (n - t)) * q_binom_nonneg(n - 1, t - 1, d) +
                    LaurentPoly::v_power(-d * t) * q_binom_nonneg(n - 1, t, d);
    cache.emplace(key, r);
    return r;
}
}  // namespace detail

/// Gaussian binomial [n;t]_i in v_i = v^d, for any n in Z and t >= 0.
/// Specializing v = 1 gives the extended integer binomial.
inline LaurentPoly q_binom(long n, long t, long d = 1) {
    if (t < 0) return LaurentPoly();
    if (n >= 0) return detail::q_binom_nonneg(n, t, d);
    LaurentPoly r = detail::q_binom_nonneg(-n + t - 1, t, d);
    return (t % 2 == 0) ? r : -r;
}

}  // namespace chevalg
