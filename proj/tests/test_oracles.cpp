// Independent references: exact rational arithmetic for the recurrences,
// adaptive quadrature and beta-function sums for the moments.
#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "polar_jacobi/moments.hpp"
#include "polar_jacobi/polar.hpp"
#include "quadrature.hpp"
#include "support.hpp"

using namespace pj;
using Q = boost::rational<boost::multiprecision::cpp_int>;
using QPoly = std::vector<Q>;

namespace {

double to_double(const Q& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

Q gen_binom(Q x, int m) {
    Q r = 1;
    for (int i = 0; i < m; ++i) r = r * (x - i) / (i + 1);
    return r;
}

QPoly qmul(const QPoly& p, const QPoly& q) {
    QPoly r(p.size() + q.size() - 1, Q(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

// Monic Jacobi polynomial from the classical sum in powers of (z-1)/2.
QPoly jacobi_exact(Q a, Q b, int n) {
    QPoly out(n + 1, Q(0));
    QPoly basis{Q(1)};
    const QPoly half_shift{Q(-1, 2), Q(1, 2)};
    for (int j = 0; j <= n; ++j) {
        const Q c = gen_binom(Q(n) + a, n - j) * gen_binom(Q(n) + a + b + j, j);
        for (std::size_t i = 0; i < basis.size(); ++i) out[i] += c * basis[i];
        basis = qmul(basis, half_shift);
    }
    const Q lead = out.back();
    for (Q& c : out) c /= lead;
    return out;
}

Q qeval(const QPoly& p, Q z) {
    Q r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + *it;
    return r;
}

QPoly divided_difference_exact(const QPoly& p, Q xi) {
    QPoly q(p.size() - 1, Q(0));
    Q acc = 0;
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        acc = acc * xi + p[k + 1];
        q[k] = acc;
    }
    return q;
}

QPoly polar_exact(Q a, Q b, Q xi, int n) { return divided_difference_exact(jacobi_exact(a - 1, b - 1, n + 1), xi); }

double moment_beta_sum(double a, double b, int k) {
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) {
        const double c = boost::math::binomial_coefficient<double>(k, j) * std::ldexp(1.0, j) * ((k - j) % 2 ? -1.0 : 1.0);
        sum += c * boost::math::beta(b + j + 1.0, a + 1.0);
    }
    return std::pow(2.0, a + b + 1.0) * sum;
}

}  // namespace

TEST_CASE("oracle: Jacobi recurrence in exact arithmetic") {
    const Q a(1, 2);
    const Q b(2);
    for (int n = 1; n <= 6; ++n) {
        const QPoly prev = jacobi_exact(a, b, n - 1);
        const QPoly cur = jacobi_exact(a, b, n);
        const QPoly next = jacobi_exact(a, b, n + 1);
        // next = (z - beta_n) cur - gamma_n prev, read off z^n and z^{n-1}.
        const Q beta = cur[n - 1] - next[n];
        const Q below = n >= 2 ? cur[n - 2] : Q(0);
        const Q gamma = below - beta * cur[n - 1] - next[n - 1];
        const RecurrencePair r = recurrence_coeffs({0.5, 2.0}, n);
        CHECK(pjt::near(r.beta, to_double(beta), 1e-15));
        CHECK(pjt::rel_near(r.gamma, to_double(gamma), 1e-14));
        const Poly p = jacobi_poly({0.5, 2.0}, n + 1);
        for (int i = 0; i <= n + 1; ++i) CHECK(pjt::near(p[i], to_double(next[i]), 1e-13 * (1 + std::abs(p[i]))));
    }
}

TEST_CASE("oracle: polar recurrence coefficients in exact arithmetic") {
    const Q a(1, 2);
    const Q b(2);
    const int n = 3;
    Q first_a, first_b;
    for (Q xi : {Q(3), Q(-7, 5)}) {
        const QPoly prev = polar_exact(a, b, xi, n - 1);
        const QPoly cur = polar_exact(a, b, xi, n);
        QPoly rest = polar_exact(a, b, xi, n + 1);
        // rest = P_{n+1} - z P_n - R_{n+1}(xi) = a_n P_n + b_n P_{n-1}
        for (int i = 0; i <= n; ++i) rest[i + 1] -= cur[i];
        rest[0] -= qeval(jacobi_exact(a - 1, b - 1, n + 1), xi);
        const Q an = rest[n];
        const Q bn = rest[n - 1] - an * cur[n - 1];
        for (int i = 0; i <= n; ++i) CHECK(rest[i] == an * cur[i] + bn * (i < n ? prev[i] : Q(0)));
        if (xi == Q(3)) {
            first_a = an;
            first_b = bn;
        } else {
            CHECK(an == first_a);
            CHECK(bn == first_b);
        }
    }
    const PolarRecurrencePair r = polar_recurrence_coeffs({0.5, 2.0}, n);
    CHECK(pjt::rel_near(r.a, to_double(first_a), 1e-15));
    CHECK(pjt::rel_near(r.b, to_double(first_b), 1e-15));

    const QPoly p3 = polar_exact(a, b, Q(3), 3);
    const Poly p = polar_poly({{0.5, 2.0}, 3.0, 3});
    for (int i = 0; i <= 3; ++i) CHECK(pjt::rel_near(p[i], to_double(p3[i]), 1e-14));
}

TEST_CASE("oracle: moments by adaptive quadrature") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> re(-0.9, 3.0);
    std::uniform_real_distribution<double> im(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const Complex a(re(rng), im(rng));
        const Complex b(re(rng), im(rng));
        const MomentTable m = build_moments({a, b}, 10);
        for (int k = 0; k <= 10; ++k) {
            const Complex ref = pjt::moment_quadrature(a, b, k);
            worst = std::max(worst, std::abs(m[k] - ref) / std::abs(ref));
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("oracle: moments by beta-function sums") {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> u(-0.9, 3.0);
    for (int t = 0; t < 20; ++t) {
        const double a = u(rng);
        const double b = u(rng);
        const MomentTable m = build_moments({a, b}, 6);
        for (int k = 0; k <= 6; ++k) CHECK(pjt::rel_near(m[k], moment_beta_sum(a, b, k), 1e-11));
    }
}
