#include "minpair/fields.hpp"
#include "minpair/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace minpair;

namespace {

using QPoly = Poly<Rational>;
using KA = QElem<Rational>;

QPoly qp(std::vector<long long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return QPoly(std::move(v), Rational(0));
}

std::shared_ptr<const QuotientRing<Rational>> ring_of(const QPoly& m) {
    return std::make_shared<const QuotientRing<Rational>>(QuotientRing<Rational>{m, "a"});
}

// Sylvester-matrix determinant by Gaussian elimination over Q.
Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
    const long m = f.degree(), n = g.degree();
    const long N = m + n;
    std::vector<std::vector<Rational>> M(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N), Rational(0)));
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) M[r][r + i] = f[static_cast<std::size_t>(m - i)];
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) M[n + r][r + i] = g[static_cast<std::size_t>(n - i)];
    Rational det = 1;
    for (long c = 0; c < N; ++c) {
        long piv = -1;
        for (long r = c; r < N; ++r)
            if (M[r][c] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) { std::swap(M[piv], M[c]); det = -det; }
        det *= M[c][c];
        for (long r = c + 1; r < N; ++r) {
            Rational k = M[r][c] / M[c][c];
            for (long j = c; j < N; ++j) M[r][j] -= k * M[c][j];
        }
    }
    return det;
}

QPoly random_poly(std::mt19937& rng, int maxdeg, int range = 9) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-range, range), den(1, 3);
    int d = deg(rng);
    std::vector<Rational> v;
    for (int i = 0; i <= d; ++i) v.push_back(Rational(coef(rng), den(rng)));
    if (v.back() == 0) v.back() = 1;
    return QPoly(std::move(v), Rational(0));
}

}  // namespace

TEST(TaylorShift, SqrtTwo) {
    auto ring = ring_of(qp({-2, 0, 1}));
    KA a = KA::generator(ring);
    auto c = taylor_shift(lift_to(qp({-2, 0, 1}), ring), a);
    ASSERT_EQ(c.degree(), 2);
    EXPECT_TRUE(is_zero(c[0]));
    EXPECT_EQ(c[1], from_int_like(a, 2) * a);
    EXPECT_EQ(c[2], one_like(a));
    // oracle: expand (Y + a)^2 - 2 with compose()
    auto Y_plus_a = Poly<KA>(std::vector<KA>{a, one_like(a)}, a);
    EXPECT_EQ(compose(lift_to(qp({-2, 0, 1}), ring), Y_plus_a), c);
}

TEST(TaylorShift, IdentityAndCubeRoot) {
    auto f = qp({0, 1});
    EXPECT_EQ(taylor_shift(f, Rational(0)), f);

    auto m = qp({1, 1, 1});
    auto ring = ring_of(m);
    KA a = KA::generator(ring);
    auto c = taylor_shift(lift_to(m, ring), a);
    EXPECT_TRUE(is_zero(c[0]));
    EXPECT_EQ(c[1], from_int_like(a, 2) * a + one_like(a));
    EXPECT_EQ(c[2], one_like(a));
}

TEST(TaylorShift, ReconstructsRandomPolynomials) {
    std::mt19937 rng(1);
    for (int i = 0; i < 50; ++i) {
        auto f = random_poly(rng, 12);
        Rational a(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
        auto c = taylor_shift(f, a);
        // sum c_i (X - a)^i == f
        EXPECT_EQ(compose(c, qp({0, 1}) - QPoly::constant(a)), f);
    }
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(qp({-2, 0, 1}), qp({0, 1})), -2);
    EXPECT_EQ(sylvester_resultant(qp({-2, 0, 1}), qp({0, 1})), -2);
    // linear case: g(c)
    auto g = qp({5, -1, 3, 2});
    EXPECT_EQ(resultant(qp({-4, 1}), g), g.eval(Rational(4)));
    EXPECT_EQ(resultant(qp({1, 1, 1}), qp({-1, 1})), 3);
    EXPECT_THROW((void)resultant(QPoly(Rational(0)), QPoly(Rational(0))), Error);
}

TEST(Resultant, AgreesWithSylvesterAndIsMultiplicative) {
    std::mt19937 rng(2);
    for (int i = 0; i < 150; ++i) {
        auto f = random_poly(rng, 5), g = random_poly(rng, 4), h = random_poly(rng, 3);
        if (f.degree() < 1) continue;
        EXPECT_EQ(resultant(f, g), sylvester_resultant(f, g)) << f << " | " << g;
        EXPECT_EQ(resultant(f, g) * resultant(f, h), resultant(f, g * h));
    }
}

TEST(Resultant, OverPolynomialRing) {
    // Res_Y(Y^2 - 2, (Y+Z)^2 - 2) = prod over roots = Z^2 (Z^2 - 8)
    using QZ = Poly<Rational>;
    auto Z = qp({0, 1});
    QZ one = QZ::constant(Rational(1));
    Poly<QZ> A(std::vector<QZ>{QZ::constant(Rational(-2)), QZ(Rational(0)), one}, one);
    Poly<QZ> B(std::vector<QZ>{Z * Z - QZ::constant(Rational(2)), QZ::constant(Rational(2)) * Z, one}, one);
    EXPECT_EQ(resultant(A, B), qp({0, 0, -8, 0, 1}));
}

TEST(ComposeMod, Examples) {
    EXPECT_EQ(compose_mod(qp({0, 0, 1}), qp({1, 1}), qp({0, 0, 0, 1})), qp({1, 2, 1}));
    EXPECT_TRUE(compose_mod(qp({-2, 0, 1}), qp({0, 1}), qp({-2, 0, 1})).is_zero());
    auto r = compose_mod(qp({0, 0, 0, 1}), qp({0, 0, 1}), qp({0, 0, 0, 0, 0, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(r, divmod(compose(qp({0, 0, 0, 1}), qp({0, 0, 1})), qp({0, 0, 0, 0, 0, 1})).rem);
}

TEST(FiniteField, IrreducibilityAndArithmetic) {
    EXPECT_TRUE(is_irreducible(fp_poly({1, 1, 1}, 2)));
    EXPECT_FALSE(is_irreducible(fp_poly({1, 0, 1}, 2)));
    EXPECT_TRUE(is_irreducible(fp_poly({1, 1, 0, 1}, 2)));
    EXPECT_FALSE(is_irreducible(fp_poly({1, 0, 0, 0, 1}, 3)));
    EXPECT_THROW((void)make_finite_field(fp_poly({0, 1, 1}, 2)), Error);
    auto F4 = make_finite_field(fp_poly({1, 1, 1}, 2));
    auto elems = enumerate_field(F4);
    ASSERT_EQ(elems.size(), 4u);
    for (const auto& x : elems) {
        if (is_zero(x)) continue;
        EXPECT_EQ(x * inverse(x), one_like(x));
        EXPECT_EQ(power(x, 3), one_like(x));  // |F4^*| = 3
    }
}

TEST(RationalFunction, ReducesAndInverts) {
    using RF = RationalFunction<Fp>;
    RF a(fp_poly({1, 0, 1}, 2), fp_poly({1, 1}, 2));  // (1+t^2)/(1+t) = 1+t in char 2
    EXPECT_EQ(a.num(), fp_poly({1, 1}, 2));
    EXPECT_EQ(a.den(), fp_poly({1}, 2));
    RF b(fp_poly({0, 1}, 2), fp_poly({1, 1, 1}, 2));
    EXPECT_EQ(b * inverse(b), one_like(b));
    EXPECT_EQ(b.degree(), 2);
    EXPECT_THROW(RF(fp_poly({1}, 2), FpPoly(Fp(0, 2))), Error);
}
