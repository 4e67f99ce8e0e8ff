#include <doctest.h>

#include "polar_jacobi/errors.hpp"
#include "polar_jacobi/polar.hpp"
#include "polar_jacobi/verify.hpp"
#include "polar_jacobi/zeros.hpp"
#include "support.hpp"

using namespace pj;
using pjt::near;

namespace {

const double kSqrt6 = std::sqrt(6.0);
const Complex kXiPlus = (1.0 + 2.0 * kSqrt6) / 5.0;
const Complex kDoubleRoot = (1.0 - kSqrt6) / 5.0;

Poly power(Complex root, int k) {
    Poly p{1.0};
    for (int i = 0; i < k; ++i) p = mul_linear(p, root);
    return p;
}

}  // namespace

TEST_CASE("polar recurrence coefficients") {
    for (int n = 0; n < 10; ++n) {
        const double a = 0.8;
        const PolarRecurrencePair r = polar_recurrence_coeffs({a, a}, n);
        CHECK(r.a == 0.0);
        CHECK(near(r.b, -(n + 1.0) * (2 * a + n - 1) / ((2 * a + 2 * n - 1) * (2 * a + 2 * n + 1)), 1e-15));
    }
    CHECK(polar_recurrence_coeffs({2.0, 0.0}, 0).a == 0.0);
    // b_0 in cancelled form; the printed one is 0/0 at alpha+beta = 1.
    CHECK(near(polar_recurrence_coeffs({0.0, 1.0}, 0).b, 0.0, 0.0));
    CHECK_THROWS_AS((void)polar_recurrence_coeffs({-4.0, 1.0}, 2), DegenerateParams);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        const Complex a = pjt::random_complex(rng, 3.0);
        const PolarRecurrencePair r = polar_recurrence_coeffs({a, a}, static_cast<int>(rng() % 30));
        CHECK(r.a == 0.0);
    }
}

TEST_CASE("polar polynomials by recurrence") {
    CHECK(polar_poly_recurrence({{Complex(0.2, 1), 3.0}, Complex(1, 1), 0}) == Poly{1.0});
    const Poly dbl = polar_poly_recurrence({{0.0, 1.0}, kXiPlus, 2});
    CHECK(relative_difference(dbl, power(kDoubleRoot, 2)) <= 1e-14);
    // P_5(z; -4, 1; 1) = (z-1)^4 (z + 5/7).
    const Poly fact = polar_poly_recurrence({{-4.0, 1.0}, 1.0, 5});
    CHECK(relative_difference(fact, mul(power(1.0, 4), Poly{5.0 / 7.0, 1.0})) <= 1e-14);
    CHECK(fact.leading() == 1.0);
}

TEST_CASE("polar polynomials by divided difference") {
    CHECK(polar_poly_divdiff({{0.5, 2.0}, 3.0, 0}) == Poly{1.0});
    const PolarSpec s{{0.0, 1.0}, 0.0, 1};
    CHECK(relative_difference(polar_poly_divdiff(s), polar_poly_recurrence(s)) <= 1e-16);
    const PolarSpec fig{{0.5, 2.0}, 3.0, 30};
    CHECK(relative_difference(polar_poly_divdiff(fig), polar_poly_recurrence(fig)) <= 1e-8);
    const Poly dbl = polar_poly_divdiff({{0.0, 1.0}, kXiPlus, 2});
    CHECK(relative_difference(dbl, power(kDoubleRoot, 2)) <= 1e-14);
    const Complex xi(0.4, -1.2);
    CHECK(relative_difference(divided_difference(jacobi_poly({-1.0, 0.0}, 3), xi),
                              polar_poly_recurrence({{0.0, 1.0}, xi, 2})) <= 1e-14);
}

TEST_CASE("polar value at a caption parameter set") {
    // 30-digit reference values.
    const Complex v = eval(polar_poly({{0.5, 2.0}, 3.0, 30}), Complex(0.7, 0.2));
    CHECK(pjt::rel_near(v, Complex(85658546863805.2290075039, 7448569292504.802791694003), 1e-9));
    const Complex w = eval(polar_poly({{Complex(-0.5, 1), Complex(-1.45, -0.5)}, 1.0, 3}), Complex(0.5, -2));
    CHECK(pjt::rel_near(w, Complex(-7.748125571838349775933303, 0.9456231501083847729830821), 1e-13));
}

TEST_CASE("property: dual construction") {
    std::mt19937_64 rng(43);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const PolarSpec s = sample_spec(rng, {4.0, 4.0, 0, 50, false});
        CHECK(degeneracy_margin(s) >= kNearDegenerate);
        worst = std::max(worst, relative_difference(polar_poly_recurrence(s), polar_poly_divdiff(s)));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("operator identity") {
    CHECK(operator_identity_residual({{0.5, 2.0}, 3.0, 0}) == 0.0);
    CHECK(operator_identity_residual({{0.0, 1.0}, kXiPlus, 2}) <= 1e-12);
    CHECK(operator_identity_residual({{std::sqrt(3.0), 3.14159265358979}, Complex(0, 3), 10}) <= 1e-10);
    std::mt19937_64 rng(47);
    for (int t = 0; t < 100; ++t) CHECK(operator_identity_residual(sample_spec(rng, {})) <= 1e-10);
}

TEST_CASE("Sobolev polynomial") {
    const Complex xi(0.3, -2);
    const JacobiParams p(0.5, 2.0);
    CHECK(sobolev_Q({p, xi, 1}) == Poly{-xi, 1.0});
    for (int n = 1; n < 12; ++n) {
        const Poly q = sobolev_Q({p, xi, n});
        CHECK(q.degree() == n);
        CHECK(q.leading() == 1.0);
        CHECK(std::abs(eval(q, xi)) <= 1e-12 * norm_inf(q));
        // Q_{n+1} is the primitive of (n+1) P_n^{(a,b)} vanishing at xi.
        CHECK(identity_residual({derivative(sobolev_Q({p, xi, n + 1})), scale(jacobi_poly(p, n), -(n + 1.0))}) <= 1e-12);
    }
    CHECK_THROWS_AS((void)sobolev_Q({p, xi, 0}), InvalidArgument);
}

TEST_CASE("structure expansion") {
    CHECK(structure_expansion_residual({{0.0, 0.0}, 0.0, 1}) <= 1e-14);
    CHECK(structure_expansion_residual({{0.5, 2.0}, 3.0, 12}) <= 1e-10);
    CHECK(structure_coeffs({1.1, 1.1}, 7).tilde_beta == 0.0);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) CHECK(structure_expansion_residual(sample_spec(rng, {4.0, 4.0, 1, 40})) <= 1e-10);
}

TEST_CASE("reflection") {
    const PolarSpec sym{{0.7, 0.7}, 0.0, 6};
    const Poly p = polar_poly(sym);
    Poly mirror = negate_argument(polar_poly({{0.7, 0.7}, 0.0, 6}));
    CHECK(p == mirror);
    CHECK(reflect_check({{0.0, 1.0}, Complex(0, 0.7), 5}) <= 1e-12);
    CHECK(reflect_check({{Complex(-0.5, 1), Complex(-1.45, -0.5)}, 1.0, 4}) <= 1e-11);
    std::mt19937_64 rng(59);
    for (int t = 0; t < 100; ++t) CHECK(reflect_check(sample_spec(rng, {})) <= 1e-11);
}

TEST_CASE("factorization") {
    const FactorizationReport r = factorization_check(4, 1.0, 1, FactorSide::Minus);
    CHECK(r.factorization <= 1e-14);
    CHECK(r.nested_form <= 1e-14);
    CHECK(r.a_shift <= 1e-14);
    CHECK(r.b_shift <= 1e-14);
    const FactorizationReport plus = factorization_check(1, 2.0, 0, FactorSide::Plus);
    CHECK(plus.factorization == 0.0);
    CHECK(plus.a_shift == 0.0);
    CHECK(relative_difference(polar_poly({{2.0, -1.0}, -1.0, 1}), Poly{1.0, 1.0}) == 0.0);
    const FactorizationReport shift = factorization_check(2, 0.5, 3, FactorSide::Minus);
    CHECK(shift.a_shift <= 1e-12);
    CHECK(shift.b_shift <= 1e-12);
    for (int k = 1; k <= 6; ++k)
        for (int n = 0; n + k <= 30; n += 3)
            for (FactorSide side : {FactorSide::Minus, FactorSide::Plus}) {
                const FactorizationReport f = factorization_check(k, Complex(0.3 * k, -0.4), n, side);
                CHECK(std::max({f.factorization, f.nested_form, f.a_shift, f.b_shift}) <= 1e-10);
            }
    CHECK_THROWS_AS((void)factorization_check(0, 1.0, 1, FactorSide::Minus), InvalidArgument);
}

TEST_CASE("degeneracy margin") {
    CHECK(degeneracy_margin({{0.0, 1.0}, kXiPlus, 2}) >= 1.0);
    CHECK(degeneracy_margin({{-4.0, 1.0}, 1.0, 5}) == 0.0);
    CHECK(degeneracy_margin({{-4.0 + 1e-9, 1.0}, 1.0, 5}) < kNearDegenerate);
}

TEST_CASE("property: operator identity at Jacobi zeros") {
    // At every zero of P_n^{(a,b)} the identity leaves P_n + (z - xi) P_n' = 0.
    std::mt19937_64 rng(61);
    for (int t = 0; t < 30; ++t) {
        const PolarSpec s = sample_spec(rng, {2.0, 3.0, 1, 20, true});
        const Poly p = polar_poly(s);
        const Poly dp = derivative(p);
        for (const Root& r : find_roots(jacobi_poly(s.params, s.degree)).roots) {
            const Complex a = eval(p, r.z);
            const Complex b = (r.z - s.pole) * eval(dp, r.z);
            CHECK(std::abs(a + b) <= 1e-8 * (std::abs(a) + std::abs(b)));
        }
    }
}
