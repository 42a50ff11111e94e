#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chevalg {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a computation would exceed a configured size budget
/// (module dimension, closure size, polynomial support, ...).
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed root-datum configs or axiom violations at load time.
struct InvalidDatum : std::runtime_error {
    explicit InvalidDatum(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Extended integer binomial: binom(n, k) for any n in Z, k >= 0,
/// via the falling-factorial formula (Pascal-consistent for n < 0).
inline Int int_binom(const Int& n, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long s = 0; s < k; ++s) num *= n - s;
    Int den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    Int q = num / den;  // exact: product of k consecutive integers
    return q;
}

inline Int int_factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Deterministic splitmix64 generator. Used for all randomized suites so
/// that a fixed seed reproduces instances byte-for-byte across platforms
/// (std:: distributions are not portable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling keeps the distribution exact
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace chevalg
