#include <doctest.h>

#include <numbers>

#include "polar_jacobi/errors.hpp"
#include "polar_jacobi/moments.hpp"
#include "polar_jacobi/verify.hpp"
#include "support.hpp"

using namespace pj;
using pjt::near;
using pjt::rel_near;

TEST_CASE("moments") {
    const MomentTable leg = build_moments({0.0, 0.0}, 4);
    CHECK(leg.capacity() == 4);
    CHECK(near(leg[0], 2.0, 4e-15));
    CHECK(leg[1] == 0.0);
    CHECK(near(leg[2], 2.0 / 3.0, 4e-15));
    CHECK(near(leg[4], 2.0 / 5.0, 4e-15));
    CHECK(near(build_moments({1.0, 0.0}, 0)[0], 2.0, 4e-15));
    CHECK(near(build_moments({-0.5, -0.5}, 0)[0], std::numbers::pi, 1e-14));
    // 20-digit quadrature references.
    const MomentTable t = build_moments({0.5, 2.0}, 4);
    const double ref[] = {1.7239936760357730119, 0.57466455867859100396, 0.47018009346430173051,
                          0.2853229627005591698, 0.24513662992583252616};
    for (int k = 0; k <= 4; ++k) CHECK(rel_near(t[k], ref[k], 1e-13));
    const MomentTable c = build_moments({Complex(0.3, 0.4), Complex(-0.6, 0.1)}, 4);
    const Complex cref[] = {{3.4549407636899115586, -0.26383126249712555349},
                            {-1.8535447002384964136, 0.07514015132922807287},
                            {1.8575093119108807757, -0.26079579428789714828},
                            {-1.4546160875262211142, 0.15001399127227294727},
                            {1.4465049015889795619, -0.25622714883943841583}};
    for (int k = 0; k <= 4; ++k) CHECK(rel_near(c[k], cref[k], 1e-13));
    CHECK_THROWS_AS((void)t[5], CapacityExceeded);
}

TEST_CASE("moment invariants") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(-0.95, 4.0);
    for (int t = 0; t < 30; ++t) {
        const double a = u(rng);
        const double b = u(rng);
        const MomentTable m = build_moments({a, b}, 40);
        const Complex mu0 = std::pow(2.0, a + b + 1) * pj::gamma(a + 1) * pj::gamma(b + 1) / pj::gamma(a + b + 2);
        CHECK(rel_near(m[0], mu0, 1e-12));
        const MomentTable sym = build_moments({a, a}, 40);
        for (int k = 1; k <= 40; k += 2) CHECK(std::abs(sym[k]) <= 1e-12 * std::abs(sym[0]));
    }
}

TEST_CASE("regime and capacity errors") {
    CHECK_THROWS_AS((void)build_moments({-1.0, 0.0}, 4), RegimeError);
    CHECK_THROWS_AS((void)build_moments({Complex(-0.5, 1), Complex(-1.45, -0.5)}, 4), RegimeError);
    const MomentTable m = build_moments({0.0, 0.0}, 4);
    CHECK_THROWS_AS((void)inner_product(Poly{0.0, 0.0, 1.0}, Poly{0.0, 0.0, 0.0, 1.0}, m), CapacityExceeded);
}

TEST_CASE("inner products") {
    const MomentTable m = build_moments({0.0, 0.0}, 10);
    CHECK(near(inner_product(Poly{1.0}, Poly{1.0}, m), 2.0, 4e-15));
    CHECK(near(inner_product(Poly{0.0, 1.0}, Poly{0.0, 1.0}, m), squared_norm({0.0, 0.0}, 1), 1e-15));
    CHECK(inner_product(Poly{}, Poly{1.0}, m) == 0.0);
    // Bilinear: no conjugation of either argument.
    const Poly iz{0.0, Complex(0, 1)};
    CHECK(near(inner_product(iz, iz, m), -2.0 / 3.0, 1e-15));
    const JacobiParams p(0.5, 2.0);
    const MomentTable pm = build_moments(p, 10);
    const double scale = std::sqrt(std::abs(squared_norm(p, 3) * squared_norm(p, 1)));
    CHECK(std::abs(inner_product(jacobi_poly(p, 3), jacobi_poly(p, 1), pm)) <= 1e-10 * scale);
}

TEST_CASE("property: bilinearity") {
    std::mt19937_64 rng(71);
    const MomentTable m = build_moments({Complex(0.4, 0.3), 1.5}, 40);
    for (int t = 0; t < 50; ++t) {
        const Poly p = pjt::random_poly(rng, 12, 1.0);
        const Poly q = pjt::random_poly(rng, 12, 1.0);
        const Poly r = pjt::random_poly(rng, 12, 1.0);
        const Complex a = pjt::random_complex(rng, 2.0);
        const Complex b = pjt::random_complex(rng, 2.0);
        const Complex lhs = inner_product(add(scale(p, a), scale(q, b)), r, m);
        const Complex rhs = a * inner_product(p, r, m) + b * inner_product(q, r, m);
        const double size = std::abs(a * inner_product(p, r, m)) + std::abs(b * inner_product(q, r, m));
        CHECK(std::abs(lhs - rhs) <= 1e-13 * size);
        CHECK(rel_near(inner_product(p, q, m), inner_product(q, p, m), 1e-13));
    }
}

TEST_CASE("property: Hankel positivity") {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> u(-0.95, 4.0);
    for (int t = 0; t < 20; ++t) {
        const MomentTable m = build_moments({u(rng), u(rng)}, 10);
        // Leading minors of the Gram matrix of 1, z, ..., z^5 by Cholesky.
        double h[6][6];
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                h[i][j] = m[i + j].real();
                CHECK(std::abs(m[i + j].imag()) <= 1e-15);
            }
        for (int k = 0; k < 6; ++k) {
            for (int j = 0; j < k; ++j) h[k][k] -= h[k][j] * h[k][j];
            CHECK(h[k][k] > 1e-10 * std::abs(m[2 * k]));
            h[k][k] = std::sqrt(h[k][k]);
            for (int i = k + 1; i < 6; ++i) {
                for (int j = 0; j < k; ++j) h[i][k] -= h[i][j] * h[k][j];
                h[i][k] /= h[k][k];
            }
        }
    }
}

TEST_CASE("Theorem 1 cases") {
    const PolarSpec s{{0.5, 2.0}, 3.0, 5};
    const Theorem1Report r0 = verify_theorem1(s, 0);
    CHECK(r0.second_case == Theorem1Case::MZero);
    CHECK(r0.residual_first <= 1e-9);
    CHECK(r0.residual_second <= 1e-8);
    // -mu_0 P_6^{(-1/2,1)}(3) by 30-digit arithmetic.
    CHECK(rel_near(-squared_norm(s.params, 0) * jacobi_eval(s.params.shifted(-1, -1), 6, 3.0),
                   -840.0012685312183744123001, 1e-13));
    CHECK(verify_theorem1(s, 2).second_case == Theorem1Case::ZeroBand);
    CHECK(verify_theorem1(s, 4).second_case == Theorem1Case::Previous);
    CHECK(verify_theorem1(s, 5).second_case == Theorem1Case::Diagonal);
    CHECK(verify_theorem1(s, 6).second_case == Theorem1Case::Next);
    CHECK(verify_theorem1(s, 9).second_case == Theorem1Case::Beyond);
    CHECK(verify_theorem1({s.params, 3.0, 1}, 0).second_case == Theorem1Case::NotApplicable);
    CHECK_THROWS_AS((void)verify_theorem1({{-4.0, 1.0}, 1.0, 5}, 0), RegimeError);
}

TEST_CASE("property: Theorem 1") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 10; ++t) {
        const PolarSpec s = sample_spec(rng, {3.0, 4.0, 0, 15, true});
        for (int m = 0; m <= s.degree + 3; ++m) {
            const Theorem1Report r = verify_theorem1(s, m);
            CHECK(r.residual_first <= (m == s.degree ? 1e-8 : 1e-9));
            CHECK(r.residual_second <= 1e-8);
        }
    }
}
