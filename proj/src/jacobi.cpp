#include "polar_jacobi/jacobi.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "polar_jacobi/errors.hpp"

namespace pj {
namespace {

std::string at(const char* factor, int n) {
    return std::string(factor) + " (n=" + std::to_string(n) + ")";
}

// Names the first vanishing denominator of recurrence_coeffs(params, n).
std::optional<std::string> degenerate_factor(const JacobiParams& params, int n) {
    const Complex s = params.alpha() + params.beta();
    const double dn = n;
    if (n == 0) {
        if (s + 2.0 == 0.0) return at("alpha+beta+2", n);
        return std::nullopt;
    }
    if (s + 2.0 * dn == 0.0) return at("alpha+beta+2n", n);
    if (s + 2.0 * dn + 2.0 == 0.0) return at("alpha+beta+2n+2", n);
    if (n == 1) {
        if (s + 3.0 == 0.0) return at("alpha+beta+3", n);
        return std::nullopt;
    }
    if (s + 2.0 * dn - 1.0 == 0.0) return at("alpha+beta+2n-1", n);
    if (s + 2.0 * dn + 1.0 == 0.0) return at("alpha+beta+2n+1", n);
    return std::nullopt;
}

void require_nonzero(Complex value, const char* factor, int n) {
    if (value == 0.0) throw DegenerateParams(at(factor, n));
}

}  // namespace

JacobiParams::JacobiParams(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
    require_finite(alpha, "alpha");
    require_finite(beta, "beta");
    regime_ = alpha.real() > -1.0 && beta.real() > -1.0 ? Regime::Standard : Regime::Nonstandard;
}

void require_degree(int n) {
    if (n < 0 || n > kMaxDegree) {
        throw InvalidArgument("degree " + std::to_string(n) + " outside [0, " +
                              std::to_string(kMaxDegree) + "]");
    }
}

RecurrencePair recurrence_coeffs(const JacobiParams& params, int n) {
    require_degree(n);
    if (auto factor = degenerate_factor(params, n)) throw DegenerateParams(*factor);
    const Complex a = params.alpha();
    const Complex b = params.beta();
    const Complex s = a + b;
    const double dn = n;
    if (n == 0) return {(b - a) / (s + 2.0), 0.0};

    const Complex beta = (b * b - a * a) / ((s + 2.0 * dn) * (s + 2.0 * dn + 2.0));
    if (n == 1) {
        // The factor alpha+beta+1 cancels between numerator and denominator.
        return {beta, 4.0 * (a + 1.0) * (b + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0))};
    }
    const Complex mid = s + 2.0 * dn;
    const Complex gamma = 4.0 * dn * (a + dn) * (b + dn) * (s + dn) /
                          ((s + 2.0 * dn - 1.0) * mid * mid * (s + 2.0 * dn + 1.0));
    return {beta, gamma};
}

StructurePairs structure_coeffs(const JacobiParams& params, int n) {
    require_degree(n);
    const Complex a = params.alpha();
    const Complex b = params.beta();
    const Complex s = a + b;
    const double dn = n;

    const Complex lo = s + 2.0 * dn;
    const Complex hi = s + 2.0 * dn + 2.0;
    require_nonzero(lo, "alpha+beta+2n", n);
    require_nonzero(hi, "alpha+beta+2n+2", n);

    StructurePairs out{};
    out.hat_beta = 2.0 * dn * (a - b) * (s + dn + 1.0) / (lo * hi);
    out.tilde_beta = (2.0 * dn + 2.0) * (a - b) / (lo * hi);
    if (n == 0) return out;

    const Complex below = s + 2.0 * dn - 1.0;
    const Complex above = s + 2.0 * dn + 1.0;
    require_nonzero(above, "alpha+beta+2n+1", n);
    if (n == 1) {
        out.hat_gamma = 4.0 * (a + 1.0) * (b + 1.0) / (lo * above);
    } else {
        require_nonzero(below, "alpha+beta+2n-1", n);
        out.hat_gamma = 4.0 * dn * (a + dn) * (b + dn) * (s + dn) * (s + dn + 1.0) /
                        (below * lo * lo * above);
    }
    require_nonzero(below, "alpha+beta+2n-1", n);
    out.tilde_gamma = -4.0 * dn * (dn + 1.0) * (a + dn) * (b + dn) / (below * lo * lo * above);
    return out;
}

bool recurrence_admissible(const JacobiParams& params, int n) {
    for (int k = 0; k < n; ++k)
        if (degenerate_factor(params, k)) return false;
    return true;
}

Poly jacobi_poly_explicit(const JacobiParams& params, int n) {
    require_degree(n);
    const Complex a = params.alpha();
    const Complex s = a + params.beta();
    const double dn = n;

    // Coefficients in powers of (z - 1); the ratio of Pochhammer symbols is
    // accumulated factor by factor to stay in range for large n. Shifting to
    // the monomial basis cancels up to seven digits for complex parameters,
    // hence the wide arithmetic.
    const WideComplex wa(a.real(), a.imag());
    const WideComplex ws(s.real(), s.imag());
    std::vector<WideComplex> c(n + 1);
    WideReal binom = 1;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) binom = binom * (dn - j + 1) / j;
        WideComplex ratio = 1;
        for (int i = 0; i < n - j; ++i) {
            const Complex den = dn + s + static_cast<double>(j + 1 + i);
            if (den == 0.0) throw DegenerateParams(at("alpha+beta+n+1+i (leading coefficient)", n));
            const WideReal shift = dn + j + 1 + i;
            ratio *= (wa + (shift - dn)) / (ws + shift);
        }
        c[j] = binom * static_cast<WideReal>(std::ldexp(1.0, n - j)) * ratio;
    }
    // Taylor shift by one: c_j (z-1)^j summed into powers of z.
    for (int k = 0; k < n; ++k)
        for (int j = n - 1; j >= k; --j) c[j] -= c[j + 1];
    std::vector<Complex> out(n + 1);
    for (int j = 0; j <= n; ++j) out[j] = Complex(static_cast<double>(c[j].real()), static_cast<double>(c[j].imag()));
    return Poly(std::move(out));
}

Poly jacobi_poly(const JacobiParams& params, int n) {
    require_degree(n);
    if (!recurrence_admissible(params, n)) return jacobi_poly_explicit(params, n);
    Poly prev;
    Poly cur{1.0};
    for (int k = 0; k < n; ++k) {
        const RecurrencePair rc = recurrence_coeffs(params, k);
        Poly next = sub(mul_linear(cur, rc.beta), scale(prev, rc.gamma));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Complex jacobi_eval(const JacobiParams& params, int n, Complex z) {
    require_degree(n);
    require_finite(z, "evaluation point");
    if (!recurrence_admissible(params, n)) return eval(jacobi_poly_explicit(params, n), z);
    Complex prev = 0.0;
    Complex cur = 1.0;
    for (int k = 0; k < n; ++k) {
        const RecurrencePair rc = recurrence_coeffs(params, k);
        const Complex next = (z - rc.beta) * cur - rc.gamma * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Complex squared_norm(const JacobiParams& params, int n) {
    require_degree(n);
    const Complex a = params.alpha();
    const Complex b = params.beta();
    const Complex s = a + b;
    const double dn = n;
    const double ln2 = std::log(2.0);
    if (n == 0) {
        // Gamma(a+b+1) / Gamma(a+b+1) cancelled: the total mass of the weight.
        return std::exp((s + 1.0) * ln2 + log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(s + 2.0));
    }
    const Complex log_norm = (2.0 * dn + s + 1.0) * ln2 + std::lgamma(dn + 1.0) + log_gamma(a + dn + 1.0) +
                             log_gamma(b + dn + 1.0) + log_gamma(s + dn + 1.0) -
                             log_gamma(s + 2.0 * dn + 1.0) - log_gamma(s + 2.0 * dn + 2.0);
    return std::exp(log_norm);
}

PhiValue phi(Complex z) {
    require_finite(z, "phi argument");
    const Complex root = std::sqrt(z * z - 1.0);
    const Complex plus = z + root;
    const Complex minus = z - root;
    const bool on_segment = std::abs(z.imag()) <= 1e-14 && std::abs(z.real()) <= 1.0 + 1e-14;
    return {std::abs(plus) >= std::abs(minus) ? plus : minus, on_segment};
}

double second_order_ode_residual(const JacobiParams& params, int n, Complex z) {
    const Poly p = jacobi_poly(params, n);
    const Poly d1 = derivative(p);
    const Poly d2 = derivative(d1);
    const Complex a = params.alpha();
    const Complex b = params.beta();
    const double dn = n;
    const Complex r = (1.0 - z * z) * eval(d2, z) + (b - a - z * (a + b + 2.0)) * eval(d1, z) +
                      dn * (a + b + dn + 1.0) * eval(p, z);
    return std::abs(r);
}

double forward_shift_check(const JacobiParams& params, int n) {
    if (n < 1) throw InvalidArgument("forward shift needs n >= 1");
    return identity_residual({derivative(jacobi_poly(params, n)),
                              scale(jacobi_poly(params.shifted(1, 1), n - 1), -static_cast<double>(n))});
}

double first_structure_residual(const JacobiParams& params, int n) {
    const StructurePairs sc = structure_coeffs(params, n);
    const Poly d = derivative(jacobi_poly(params, n));
    const Poly below = n > 0 ? jacobi_poly(params, n - 1) : Poly{};
    return identity_residual({d, scale(mul(Poly{0.0, 0.0, 1.0}, d), -1.0),
                              scale(jacobi_poly(params, n + 1), static_cast<double>(n)),
                              scale(jacobi_poly(params, n), -sc.hat_beta), scale(below, -sc.hat_gamma)});
}

double second_structure_residual(const JacobiParams& params, int n) {
    const StructurePairs sc = structure_coeffs(params, n);
    const Poly below = n > 0 ? jacobi_poly(params, n - 1) : Poly{};
    return identity_residual({jacobi_poly(params.shifted(-1, -1), n + 1),
                              scale(jacobi_poly(params, n + 1), -1.0),
                              scale(jacobi_poly(params, n), -sc.tilde_beta), scale(below, -sc.tilde_gamma)});
}

}  // namespace pj
