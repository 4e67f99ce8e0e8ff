#include "polar_jacobi/polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "polar_jacobi/errors.hpp"
#include "wide.hpp"

namespace pj {
namespace {

std::string at(const char* factor, int n) {
    return std::string(factor) + " (n=" + std::to_string(n) + ")";
}

void require_nonzero(Complex value, const char* factor, int n) {
    if (value == 0.0) throw DegenerateParams(at(factor, n));
}

void require_monic(const Poly& p) {
    if (std::abs(p.leading() - 1.0) > 1e-12) throw Error("polar construction lost monic normalization");
}

void require_spec(const PolarSpec& spec) {
    require_degree(spec.degree);
    require_finite(spec.pole, "pole");
}

Poly power_of_linear(Complex root, int k) {
    Poly p{1.0};
    for (int i = 0; i < k; ++i) p = mul_linear(p, root);
    return p;
}

// Negative integer parameter matching the pole, as in the factorization
// corollary: alpha = -k at xi = 1 or beta = -k at xi = -1.
struct Reduction {
    FactorSide side;
    int k;
};

std::optional<int> negative_integer(Complex v) {
    if (v.imag() != 0.0 || v.real() >= 0.0 || v.real() != std::round(v.real())) return std::nullopt;
    return static_cast<int>(-v.real());
}

std::optional<Reduction> reduction_for(const PolarSpec& spec) {
    if (spec.pole == 1.0) {
        if (auto k = negative_integer(spec.params.alpha())) return Reduction{FactorSide::Minus, *k};
    }
    if (spec.pole == -1.0) {
        if (auto k = negative_integer(spec.params.beta())) return Reduction{FactorSide::Plus, *k};
    }
    return std::nullopt;
}

// Near the factorization parameters (alpha or beta a negative integer with
// the pole at the matching endpoint) the recurrence cancels about six digits,
// so it runs in wide arithmetic. The double routines still validate every
// denominator.
std::vector<WideComplex> direct_recurrence(const PolarSpec& spec) {
    const JacobiParams shifted = spec.params.shifted(-1, -1);
    std::vector<WideComplex> prev;
    std::vector<WideComplex> cur{WideComplex(1)};
    for (int k = 0; k < spec.degree; ++k) {
        (void)polar_recurrence_coeffs(spec.params, k);
        const Complex inhom = jacobi_eval(shifted, k + 1, spec.pole);
        const wide::Pair rc = wide::polar_coeffs(spec.params, k);
        std::vector<WideComplex> next(cur.size() + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] += rc.first * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] += rc.second * prev[i];
        next[0] += recurrence_admissible(shifted, k + 1) ? wide::jacobi_value(shifted, k + 1, spec.pole) : wide::widen(inhom);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly factored_recurrence(const PolarSpec& spec, const Reduction& r) {
    const int n = spec.degree - r.k;
    if (n < 0) throw DegenerateParams(at("alpha+beta+2n-1", spec.degree));
    const Complex node = spec.pole;
    Poly inner{1.0};
    if (n > 0) {
        const bool minus = r.side == FactorSide::Minus;
        const JacobiParams outer = minus ? JacobiParams(r.k + 2.0, spec.params.beta())
                                         : JacobiParams(spec.params.alpha(), r.k + 2.0);
        const JacobiParams value = minus ? JacobiParams(r.k + 1.0, spec.params.beta() - 1.0)
                                         : JacobiParams(spec.params.alpha() - 1.0, r.k + 1.0);
        const Poly lower = polar_poly_recurrence({outer, node, n - 1});
        inner = add(mul_linear(lower, node), Poly::constant(jacobi_eval(value, n, node)));
    }
    return mul(power_of_linear(node, r.k), inner);
}

}  // namespace

PolarRecurrencePair polar_recurrence_coeffs(const JacobiParams& params, int n) {
    require_degree(n);
    const Complex a = params.alpha();
    const Complex b = params.beta();
    const Complex s = a + b;
    const double dn = n;

    if (a == b) {
        const Complex lo = 2.0 * a + 2.0 * dn - 1.0;
        const Complex hi = 2.0 * a + 2.0 * dn + 1.0;
        require_nonzero(lo, "2alpha+2n-1", n);
        require_nonzero(hi, "2alpha+2n+1", n);
        return {0.0, -(dn + 1.0) * (2.0 * a + dn - 1.0) / (lo * hi)};
    }

    const Complex lo = s + 2.0 * dn;
    const Complex hi = s + 2.0 * dn + 2.0;
    require_nonzero(lo, "alpha+beta+2n", n);
    require_nonzero(hi, "alpha+beta+2n+2", n);
    const Complex an = (s - 2.0) * (a - b) / (lo * hi);

    const Complex above = s + 2.0 * dn + 1.0;
    require_nonzero(above, "alpha+beta+2n+1", n);
    if (n == 0) {
        // alpha+beta-1 cancels against alpha+beta+2n-1.
        return {an, -4.0 * a * b / (s * s * above)};
    }
    const Complex below = s + 2.0 * dn - 1.0;
    require_nonzero(below, "alpha+beta+2n-1", n);
    const Complex bn = -4.0 * (dn + 1.0) * (a + dn) * (b + dn) * (s + dn - 1.0) / (below * lo * lo * above);
    return {an, bn};
}

Poly polar_poly_recurrence(const PolarSpec& spec) {
    require_spec(spec);
    Poly p;
    try {
        p = wide::narrow(direct_recurrence(spec));
    } catch (const DegenerateParams&) {
        const auto r = reduction_for(spec);
        if (!r) throw;
        p = factored_recurrence(spec, *r);
    }
    require_monic(p);
    return p;
}

Poly polar_poly_divdiff(const PolarSpec& spec) {
    require_spec(spec);
    const JacobiParams shifted = spec.params.shifted(-1, -1);
    Poly p;
    if (recurrence_admissible(shifted, spec.degree + 1)) {
        // Same wide arithmetic as the recurrence route, so the two agree to
        // rounding wherever both are well conditioned.
        const std::vector<WideComplex> outer = wide::jacobi_poly(shifted, spec.degree + 1);
        const WideComplex xi = wide::widen(spec.pole);
        std::vector<WideComplex> q(outer.size() - 1);
        WideComplex acc{};
        for (std::size_t k = q.size(); k-- > 0;) {
            acc = acc * xi + outer[k + 1];
            q[k] = acc;
        }
        p = wide::narrow(q);
    } else {
        p = divided_difference(jacobi_poly(shifted, spec.degree + 1), spec.pole);
    }
    require_monic(p);
    return p;
}

Poly polar_poly(const PolarSpec& spec) {
    try {
        return polar_poly_recurrence(spec);
    } catch (const DegenerateParams&) {
        return polar_poly_divdiff(spec);
    }
}

double degeneracy_margin(const PolarSpec& spec) {
    const Complex a = spec.params.alpha();
    const Complex s = a + spec.params.beta();
    const int n = spec.degree;
    double m = std::numeric_limits<double>::infinity();
    auto take = [&](Complex factor) { m = std::min(m, std::abs(factor)); };
    for (int k = 0; k < n; ++k) {
        const double dk = k;
        if (a == spec.params.beta()) {
            take(2.0 * a + 2.0 * dk - 1.0);
            take(2.0 * a + 2.0 * dk + 1.0);
            continue;
        }
        take(s + 2.0 * dk);
        take(s + 2.0 * dk + 2.0);
        take(s + 2.0 * dk + 1.0);
        if (k > 0) take(s + 2.0 * dk - 1.0);
    }
    // Recurrence of the shifted family (alpha+beta-2) through degree n+1.
    const Complex t = s - 2.0;
    for (int k = 0; k <= n; ++k) {
        const double dk = k;
        take(t + 2.0 * dk + 2.0);
        if (k == 0) continue;
        take(t + 2.0 * dk);
        take(t + 2.0 * dk + 1.0);
        if (k > 1) take(t + 2.0 * dk - 1.0);
    }
    return m;
}

double operator_identity_residual(const PolarSpec& spec) {
    const Poly p = polar_poly(spec);
    return identity_residual({p, mul_linear(derivative(p), spec.pole),
                              scale(jacobi_poly(spec.params, spec.degree), -(spec.degree + 1.0))});
}

Poly sobolev_Q(const PolarSpec& spec) {
    if (spec.degree < 1) throw InvalidArgument("Q_n needs n >= 1");
    return mul_linear(polar_poly({spec.params, spec.pole, spec.degree - 1}), spec.pole);
}

double structure_expansion_residual(const PolarSpec& spec) {
    const int n = spec.degree;
    if (n < 1) throw InvalidArgument("structure expansion needs n >= 1");
    const StructurePairs sc = structure_coeffs(spec.params, n);
    const Complex tail = jacobi_eval(spec.params.shifted(-1, -1), n + 1, spec.pole);
    return identity_residual({mul_linear(polar_poly(spec), spec.pole),
                              scale(jacobi_poly(spec.params, n + 1), -1.0),
                              scale(jacobi_poly(spec.params, n), -sc.tilde_beta),
                              scale(jacobi_poly(spec.params, n - 1), -sc.tilde_gamma), Poly::constant(tail)});
}

double reflect_check(const PolarSpec& spec) {
    const Poly lhs = polar_poly(spec);
    const Poly mirror = negate_argument(polar_poly({spec.params.swapped(), -spec.pole, spec.degree}));
    return relative_difference(lhs, spec.degree % 2 == 0 ? mirror : scale(mirror, -1.0));
}

FactorizationReport factorization_check(int k, Complex other, int n, FactorSide side) {
    if (k < 1) throw InvalidArgument("factorization needs k >= 1");
    require_degree(n + k);
    const bool minus = side == FactorSide::Minus;
    const double node = minus ? 1.0 : -1.0;
    const double dk = k;
    const JacobiParams lhs_params = minus ? JacobiParams(-dk, other) : JacobiParams(other, -dk);
    const JacobiParams jac_params = minus ? JacobiParams(dk + 1.0, other - 1.0) : JacobiParams(other - 1.0, dk + 1.0);
    const JacobiParams low_params = minus ? JacobiParams(dk + 2.0, other) : JacobiParams(other, dk + 2.0);

    const Poly lhs = polar_poly({lhs_params, node, n + k});
    const Poly power = power_of_linear(node, k);
    const Poly factored = mul(power, jacobi_poly(jac_params, n));

    Poly inner = Poly::constant(jacobi_eval(jac_params, n, node));
    if (n > 0) inner = add(mul_linear(polar_poly({low_params, node, n - 1}), node), inner);
    const Poly nested = mul(power, inner);

    FactorizationReport out{relative_difference(lhs, factored), relative_difference(lhs, nested), 0.0, 0.0};
    if (n > 0) {
        const PolarRecurrencePair hi = polar_recurrence_coeffs(lhs_params, n + k);
        const PolarRecurrencePair lo = polar_recurrence_coeffs(low_params, n - 1);
        auto rel = [](Complex x, Complex y) {
            const double s = std::max(std::abs(x), std::abs(y));
            return s == 0.0 ? 0.0 : std::abs(x - y) / s;
        };
        out.a_shift = rel(hi.a, lo.a);
        out.b_shift = rel(hi.b, lo.b);
    }
    return out;
}

namespace wide {

std::vector<WideComplex> polar_poly(const PolarSpec& spec) {
    require_spec(spec);
    try {
        return direct_recurrence(spec);
    } catch (const DegenerateParams&) {
        const Poly p = pj::polar_poly(spec);
        std::vector<WideComplex> out;
        for (const Complex& c : p.coeffs()) out.push_back(widen(c));
        return out;
    }
}

}  // namespace wide
}  // namespace pj
