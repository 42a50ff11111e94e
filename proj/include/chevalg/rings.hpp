#pragma once

#include <concepts>
#include <optional>
#include <sstream>
#include <string>

#include "chevalg/common.hpp"
#include "chevalg/laurent.hpp"

namespace chevalg {

/// Compile-time contract for a coefficient ring object. Elements are plain
/// values; all arithmetic goes through the ring so that rings with runtime
/// state (a modulus, a variable pool) need no per-element bookkeeping.
template <typename R>
concept CoeffRing = requires(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
    typename R::Elem;
    { r.zero() } -> std::convertible_to<typename R::Elem>;
    { r.one() } -> std::convertible_to<typename R::Elem>;
    { r.add(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.sub(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.mul(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.neg(a) } -> std::convertible_to<typename R::Elem>;
    { r.equal(a, b) } -> std::convertible_to<bool>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.from_int(Int(0)) } -> std::convertible_to<typename R::Elem>;
    { r.inv(a) } -> std::convertible_to<std::optional<typename R::Elem>>;
    { r.str(a) } -> std::convertible_to<std::string>;
};

/// The ground ring Z[v, v^-1].
struct LaurentRing {
    using Elem = LaurentPoly;
    Elem zero() const { return LaurentPoly(); }
    Elem one() const { return LaurentPoly(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem from_int(const Int& n) const { return LaurentPoly(n); }
    /// v maps to v.
    Elem from_laurent(const LaurentPoly& p) const { return p; }
    std::optional<Elem> inv(const Elem& a) const {
        // units of Z[v,v^-1] are +- v^k
        if (a.coeffs().size() != 1) return std::nullopt;
        auto [e, c] = *a.coeffs().begin();
        if (c != 1 && c != -1) return std::nullopt;
        return LaurentPoly::v_power(-e, c);
    }
    bool is_field() const { return false; }
    bool v_is_one() const { return false; }
    std::string str(const Elem& a) const { return a.str(); }
    std::string name() const { return "laurent"; }
};

/// The field Q, with v specialized to 1.
struct RatRing {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_int(const Int& n) const { return Rat(n); }
    Elem from_laurent(const LaurentPoly& p) const { return Rat(p.eval_at_one()); }
    std::optional<Elem> inv(const Elem& a) const {
        if (a == 0) return std::nullopt;
        return Rat(1) / a;
    }
    bool is_field() const { return true; }
    bool v_is_one() const { return true; }
    std::string str(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "q"; }
};

/// The ring Z, with v specialized to 1.
struct IntRing {
    using Elem = Int;
    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_int(const Int& n) const { return n; }
    Elem from_laurent(const LaurentPoly& p) const { return p.eval_at_one(); }
    std::optional<Elem> inv(const Elem& a) const {
        if (a == 1 || a == -1) return a;
        return std::nullopt;
    }
    bool is_field() const { return false; }
    bool v_is_one() const { return true; }
    std::string str(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "z"; }
};

/// Z/m for m >= 2 (a field when m is prime), with a configurable image of v.
struct ZmodRing {
    using Elem = std::uint64_t;

    explicit ZmodRing(std::uint64_t m, std::uint64_t v_image = 1, bool prime = false)
        : m_(m), v_(v_image % m), prime_(prime) {
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
        if (m >= (1ull << 31)) throw std::invalid_argument("modulus too large");
        if (!inv_raw(v_)) throw std::invalid_argument("v image must be invertible");
    }

    std::uint64_t modulus() const { return m_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % m_; }
    Elem add(Elem a, Elem b) const { return (a + b) % m_; }
    Elem sub(Elem a, Elem b) const { return (a + m_ - b) % m_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % m_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : m_ - a; }
    bool equal(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem from_int(const Int& n) const {
        Int r = n % Int(static_cast<unsigned long>(m_));
        if (r < 0) r += Int(static_cast<unsigned long>(m_));
        return r.get_ui();
    }
    Elem from_laurent(const LaurentPoly& p) const {
        Elem s = 0;
        for (const auto& [e, c] : p.coeffs()) s = add(s, mul(from_int(c), pow_v(e)));
        return s;
    }
    std::optional<Elem> inv(Elem a) const { return inv_raw(a); }
    bool is_field() const { return prime_; }
    bool v_is_one() const { return v_ == one(); }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string name() const {
        return (prime_ ? "fp:" : "zmod:") + std::to_string(m_) +
               (v_ == one() ? "" : ",v=" + std::to_string(v_));
    }

  private:
    Elem pow_v(long e) const {
        Elem base = v_;
        if (e < 0) {
            base = *inv_raw(v_);
            e = -e;
        }
        Elem r = one();
        for (long i = 0; i < e; ++i) r = mul(r, base);
        return r;
    }
    std::optional<Elem> inv_raw(Elem a) const {
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(m_), nr = static_cast<std::int64_t>(a % m_);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        if (r != 1) return std::nullopt;
        if (t < 0) t += static_cast<std::int64_t>(m_);
        return static_cast<Elem>(t);
    }

    std::uint64_t m_;
    std::uint64_t v_;
    bool prime_;
};

static_assert(CoeffRing<LaurentRing>);
static_assert(CoeffRing<RatRing>);
static_assert(CoeffRing<IntRing>);
static_assert(CoeffRing<ZmodRing>);

enum class RingKind { LaurentZ, RationalQ, IntegerZ, ModM, PrimeField };

/// Parsed form of a ring selection string:
///   laurent | q | z | zmod:<m> | fp:<p>[,v=<k>]
struct RingDescriptor {
    RingKind kind = RingKind::RationalQ;
    std::uint64_t modulus = 0;
    std::uint64_t v_image = 1;  // meaningful for ModM / PrimeField

    bool v_is_one() const {
        switch (kind) {
            case RingKind::LaurentZ: return false;
            case RingKind::RationalQ:
            case RingKind::IntegerZ: return true;
            default: return v_image % modulus == 1 % modulus;
        }
    }

    static RingDescriptor parse(const std::string& s) {
        RingDescriptor d;
        if (s == "laurent") {
            d.kind = RingKind::LaurentZ;
            return d;
        }
        if (s == "q") {
            d.kind = RingKind::RationalQ;
            return d;
        }
        if (s == "z") {
            d.kind = RingKind::IntegerZ;
            return d;
        }
        auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
        if (starts("zmod:") || starts("fp:")) {
            bool fp = starts("fp:");
            std::string rest = s.substr(fp ? 3 : 5);
            std::uint64_t v = 1;
            auto comma = rest.find(',');
            if (comma != std::string::npos) {
                std::string opt = rest.substr(comma + 1);
                rest = rest.substr(0, comma);
                if (opt.rfind("v=", 0) != 0) throw std::invalid_argument("bad ring option: " + opt);
                v = std::stoull(opt.substr(2));
            }
            std::uint64_t m = std::stoull(rest);
            if (m < 2) throw std::invalid_argument("modulus must be >= 2");
            if (fp) {
                for (std::uint64_t q = 2; q * q <= m; ++q)
                    if (m % q == 0) throw std::invalid_argument("fp: modulus is not prime");
            }
            d.kind = fp ? RingKind::PrimeField : RingKind::ModM;
            d.modulus = m;
            d.v_image = v % m;
            return d;
        }
        throw std::invalid_argument("unknown ring: " + s);
    }

    std::string str() const {
        switch (kind) {
            case RingKind::LaurentZ: return "laurent";
            case RingKind::RationalQ: return "q";
            case RingKind::IntegerZ: return "z";
            case RingKind::ModM:
                return "zmod:" + std::to_string(modulus) +
                       (v_image != 1 ? ",v=" + std::to_string(v_image) : "");
            case RingKind::PrimeField:
                return "fp:" + std::to_string(modulus) +
                       (v_image != 1 ? ",v=" + std::to_string(v_image) : "");
        }
        return "?";
    }
};

/// specialize(p, R) is the image of p in Z[v,v^-1] under the structure map.
template <CoeffRing R>
typename R::Elem specialize(const LaurentPoly& p, const R& ring) {
    return ring.from_laurent(p);
}

}  // namespace chevalg
