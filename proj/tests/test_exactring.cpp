#include <gtest/gtest.h>

#include "chevalg/laurent.hpp"
#include "chevalg/matrix.hpp"
#include "chevalg/rings.hpp"

using namespace chevalg;

namespace {

LaurentPoly random_poly(Rng& rng) {
    LaurentPoly p;
    int terms = static_cast<int>(rng.below(4));
    for (int t = 0; t < terms; ++t)
        p.add_term(rng.range(-5, 5), Int(rng.range(-9, 9)));
    return p;
}

// Independent oracle for the Gaussian binomial: the product formula over
// Q(v) with denominators cleared, i.e. check N = [n;t] * D where
//   N = prod_{s=1}^t (v_i^(n-s+1) - v_i^-(n-s+1)),  D = prod_{s=1}^t (v_i^s - v_i^-s).
void check_q_binom_product_formula(long n, long t, long d) {
    LaurentPoly num(1), den(1);
    for (long s = 1; s <= t; ++s) {
        long e = n - s + 1;
        num *= LaurentPoly::v_power(d * e) - LaurentPoly::v_power(-d * e);
        den *= LaurentPoly::v_power(d * s) - LaurentPoly::v_power(-d * s);
    }
    EXPECT_EQ(num, q_binom(n, t, d) * den) << "n=" << n << " t=" << t << " d=" << d;
}

TEST(Laurent, RingAxiomsRandomized) {
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * LaurentPoly(1), a);
        EXPECT_EQ((a - a).is_zero(), true);
        EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
        EXPECT_EQ(a.bar().bar(), a);
    }
}

TEST(QCombinatorics, Factorial) {
    EXPECT_EQ(q_factorial(0, 1), LaurentPoly(1));
    EXPECT_EQ(q_factorial(1, 1), LaurentPoly(1));
    LaurentPoly expect2 = LaurentPoly::v_power(1) + LaurentPoly::v_power(-1);
    EXPECT_EQ(q_factorial(2, 1), expect2);
    // bar-invariance
    for (long p = 0; p <= 6; ++p)
        for (long d = 1; d <= 2; ++d) EXPECT_EQ(q_factorial(p, d).bar(), q_factorial(p, d));
}

TEST(QCombinatorics, BinomExamples) {
    EXPECT_EQ(q_binom(5, 0, 1), LaurentPoly(1));
    EXPECT_EQ(q_binom(-1, 2, 1), LaurentPoly(1));
    EXPECT_EQ(q_binom(2, 1, 1), LaurentPoly::v_power(1) + LaurentPoly::v_power(-1));
}

TEST(QCombinatorics, BinomProductFormulaOracle) {
    for (long n = -6; n <= 8; ++n)
        for (long t = 0; t <= 6; ++t)
            for (long d = 1; d <= 2; ++d) check_q_binom_product_formula(n, t, d);
}

TEST(QCombinatorics, BinomBarInvariant) {
    for (long n = -10; n <= 10; ++n)
        for (long t = 0; t <= 6; ++t) EXPECT_EQ(q_binom(n, t, 1).bar(), q_binom(n, t, 1));
}

TEST(QCombinatorics, BinomAtOneIsExtendedIntegerBinomial) {
    for (long n = -20; n <= 20; ++n)
        for (long t = 0; t <= 10; ++t)
            EXPECT_EQ(q_binom(n, t, 1).eval_at_one(), int_binom(Int(n), t)) << n << " " << t;
}

TEST(QCombinatorics, QVandermonde) {
    // [m+n;t] = sum_k v^((m-k)(t-k) - k(n-t+k)) [m;k][n;t-k]
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 4; ++n)
            for (long t = 0; t <= 5; ++t) {
                LaurentPoly sum;
                for (long k = 0; k <= t; ++k) {
                    long e = (m - k) * (t - k) - k * (n - t + k);
                    sum += LaurentPoly::v_power(e) * q_binom(m, k, 1) * q_binom(n, t - k, 1);
                }
                EXPECT_EQ(sum, q_binom(m + n, t, 1)) << m << " " << n << " " << t;
            }
}

TEST(Rings, SpecializeExamples) {
    LaurentPoly p = LaurentPoly::v_power(1) + LaurentPoly::v_power(-1);
    RatRing q;
    EXPECT_EQ(specialize(p, q), Rat(2));

    ZmodRing f5(5, 2, true);
    EXPECT_EQ(specialize(LaurentPoly::v_power(2), f5), 4u);

    IntRing z;
    EXPECT_EQ(specialize(q_binom(4, 2, 1), z), Int(6));
}

TEST(Rings, SpecializeIsRingHom) {
    Rng rng(11);
    ZmodRing f7(7, 3, true);
    for (int it = 0; it < 100; ++it) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ(specialize(a * b, f7), f7.mul(specialize(a, f7), specialize(b, f7)));
        EXPECT_EQ(specialize(a + b, f7), f7.add(specialize(a, f7), specialize(b, f7)));
    }
    EXPECT_EQ(specialize(LaurentPoly(1), f7), f7.one());
}

TEST(Rings, ParseGrammar) {
    EXPECT_EQ(RingDescriptor::parse("laurent").kind, RingKind::LaurentZ);
    EXPECT_EQ(RingDescriptor::parse("q").kind, RingKind::RationalQ);
    EXPECT_EQ(RingDescriptor::parse("z").kind, RingKind::IntegerZ);
    auto zm = RingDescriptor::parse("zmod:12");
    EXPECT_EQ(zm.kind, RingKind::ModM);
    EXPECT_EQ(zm.modulus, 12u);
    EXPECT_TRUE(zm.v_is_one());
    auto fp = RingDescriptor::parse("fp:5,v=2");
    EXPECT_EQ(fp.kind, RingKind::PrimeField);
    EXPECT_EQ(fp.v_image, 2u);
    EXPECT_FALSE(fp.v_is_one());
    EXPECT_THROW(RingDescriptor::parse("fp:6"), std::invalid_argument);
    EXPECT_THROW(RingDescriptor::parse("bogus"), std::invalid_argument);
}

TEST(Rings, ZmodArithmetic) {
    ZmodRing r(12);
    EXPECT_EQ(r.add(7, 8), 3u);
    EXPECT_EQ(r.neg(0), 0u);
    EXPECT_EQ(r.from_int(Int(-1)), 11u);
    EXPECT_FALSE(r.inv(4).has_value());
    EXPECT_EQ(*r.inv(5), 5u);
    ZmodRing f7(7, 1, true);
    for (std::uint64_t a = 1; a < 7; ++a) EXPECT_EQ(f7.mul(a, *f7.inv(a)), 1u);
    // random ring axioms
    Rng rng(3);
    for (int it = 0; it < 200; ++it) {
        auto a = rng.below(12), b = rng.below(12), c = rng.below(12);
        EXPECT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        EXPECT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
    }
}

TEST(MatrixOps, InverseAndRank) {
    RatRing q;
    Matrix<Rat> m(3, 3, Rat(0));
    m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(1, 1) = 3; m.at(2, 0) = 1; m.at(2, 2) = 5;
    auto inv = mat_inverse(q, m);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE(mat_is_identity(q, mat_mul(q, m, *inv)));
    EXPECT_EQ(mat_rank(q, m), 3u);
    Matrix<Rat> s(2, 3, Rat(0));
    s.at(0, 0) = 1; s.at(0, 2) = 2; s.at(1, 0) = 2; s.at(1, 2) = 4;
    EXPECT_EQ(mat_rank(q, s), 1u);
}

TEST(MatrixOps, SolveConsistentAndInconsistent) {
    RatRing q;
    Matrix<Rat> a(3, 2, Rat(0));
    a.at(0, 0) = 1; a.at(1, 1) = 2; a.at(2, 0) = 1; a.at(2, 1) = 2;
    std::vector<Rat> b{Rat(3), Rat(4), Rat(7)};
    auto x = mat_solve(q, a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0], Rat(3));
    EXPECT_EQ((*x)[1], Rat(2));
    b[2] = Rat(6);
    EXPECT_FALSE(mat_solve(q, a, b).has_value());
}

TEST(MatrixOps, HnfBasics) {
    Matrix<Int> a(3, 3, Int(0));
    a.at(0, 0) = 2; a.at(0, 1) = 4; a.at(0, 2) = 4;
    a.at(1, 0) = -6; a.at(1, 1) = 6; a.at(1, 2) = 12;
    a.at(2, 0) = 10; a.at(2, 1) = 4; a.at(2, 2) = 16;
    auto h = hnf_rows(a);
    // lattice membership is preserved
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Int> v(3);
        for (std::size_t j = 0; j < 3; ++j) v[j] = a.at(i, j);
        EXPECT_TRUE(hnf_contains(h, v));
    }
    EXPECT_FALSE(hnf_contains(h, {Int(1), Int(0), Int(0)}));
    // canonical: recomputing the HNF of the HNF is a fixed point
    EXPECT_EQ(hnf_rows(h), h);
    // scaled sublattice
    Matrix<Int> dbl(1, 3, Int(0));
    dbl.at(0, 0) = 2; dbl.at(0, 1) = 0; dbl.at(0, 2) = 0;
    auto h2 = hnf_rows(dbl);
    EXPECT_TRUE(hnf_contains(h2, {Int(4), Int(0), Int(0)}));
    EXPECT_FALSE(hnf_contains(h2, {Int(3), Int(0), Int(0)}));
}

}  // namespace
