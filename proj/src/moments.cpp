#include "polar_jacobi/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polar_jacobi/errors.hpp"
#include "wide.hpp"

namespace pj {
namespace {

using wide::narrow;
using wide::widen;

double norm_of(const JacobiParams& params, int n) { return std::sqrt(std::abs(squared_norm(params, n))); }

Complex wide_inner(const std::vector<WideComplex>& p, const std::vector<WideComplex>& q, const MomentTable& table) {
    const auto& mu = table.wide();
    WideComplex acc{};
    for (std::size_t i = 0; i < p.size(); ++i) {
        WideComplex row{};
        for (std::size_t j = 0; j < q.size(); ++j) row += q[j] * mu[i + j];
        acc += p[i] * row;
    }
    return narrow(acc);
}

double relative(Complex value, Complex expected) {
    return std::abs(value - expected) / std::abs(expected);
}

}  // namespace

Complex MomentTable::operator[](int k) const {
    if (k < 0 || k > capacity()) throw CapacityExceeded("moment index " + std::to_string(k) + " beyond capacity");
    return narrow(mu_[k]);
}

MomentTable build_moments(const JacobiParams& params, int capacity) {
    if (params.regime() != Regime::Standard) {
        throw RegimeError("moments need Re(alpha) > -1 and Re(beta) > -1");
    }
    if (capacity < 0) throw InvalidArgument("negative moment capacity");
    const WideComplex a = widen(params.alpha());
    const WideComplex b = widen(params.beta());
    std::vector<WideComplex> mu(capacity + 1);
    mu[0] = widen(squared_norm(params, 0));
    for (int k = 0; k < capacity; ++k) {
        const WideReal wk = k;
        const WideComplex prev = k > 0 ? mu[k - 1] : WideComplex{};
        mu[k + 1] = ((b - a) * mu[k] + wk * prev) / (a + b + (wk + 2));
    }
    return MomentTable(params, std::move(mu));
}

Complex inner_product(const Poly& p, const Poly& q, const MomentTable& table) {
    if (p.is_zero() || q.is_zero()) return 0.0;
    if (p.degree() + q.degree() > table.capacity()) {
        throw CapacityExceeded("inner product needs " + std::to_string(p.degree() + q.degree()) +
                               " moments, table holds " + std::to_string(table.capacity()));
    }
    const auto& mu = table.wide();
    WideComplex acc{};
    for (int i = 0; i <= p.degree(); ++i) {
        WideComplex row{};
        for (int j = 0; j <= q.degree(); ++j) row += widen(q[j]) * mu[i + j];
        acc += widen(p[i]) * row;
    }
    return narrow(acc);
}

const char* to_string(Theorem1Case c) {
    switch (c) {
        case Theorem1Case::MZero: return "m=0";
        case Theorem1Case::ZeroBand: return "0<m<n-1";
        case Theorem1Case::Previous: return "m=n-1";
        case Theorem1Case::Diagonal: return "m=n";
        case Theorem1Case::Next: return "m=n+1";
        case Theorem1Case::Beyond: return "m>n+1";
        case Theorem1Case::NotApplicable: return "n<=1";
    }
    return "?";
}

Theorem1Report verify_theorem1(const PolarSpec& spec, int m) {
    const int n = spec.degree;
    require_degree(m);
    const JacobiParams& params = spec.params;
    const MomentTable table = build_moments(params, std::max(2 * n + 4, n + m + 2));

    // Everything entering the Hankel sums stays wide: for |xi| > 1 the
    // coefficients of P_n are large and L_xi[P_n] is small by cancellation,
    // so double rounding of either side swamps the identity.
    const std::vector<WideComplex> p = wide::polar_poly(spec);
    const std::vector<WideComplex> pm = wide::jacobi_poly(params, m);
    const WideComplex xi = widen(spec.pole);

    Theorem1Report out{};
    std::vector<WideComplex> lp = p;
    for (std::size_t k = 1; k < p.size(); ++k) {
        const WideComplex d = static_cast<WideReal>(k) * p[k];
        lp[k] += d;
        lp[k - 1] -= xi * d;
    }
    const Complex first = wide_inner(lp, pm, table);
    if (m == n) {
        out.residual_first = relative(first, (n + 1.0) * squared_norm(params, n));
    } else {
        out.residual_first = std::abs(first) / ((n + 1.0) * norm_of(params, n) * norm_of(params, m));
    }

    if (n <= 1) {
        out.second_case = Theorem1Case::NotApplicable;
        return out;
    }

    const StructurePairs sc = structure_coeffs(params, n);
    const Complex tail = jacobi_eval(params.shifted(-1, -1), n + 1, spec.pole);
    std::vector<WideComplex> shifted_p(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
        shifted_p[k + 1] += p[k];
        shifted_p[k] -= xi * p[k];
    }
    const Complex second = wide_inner(shifted_p, pm, table);

    Complex expected = 0.0;
    if (m == 0) {
        out.second_case = Theorem1Case::MZero;
        expected = -squared_norm(params, 0) * tail;
    } else if (m < n - 1) {
        out.second_case = Theorem1Case::ZeroBand;
    } else if (m == n - 1) {
        out.second_case = Theorem1Case::Previous;
        expected = sc.tilde_gamma * squared_norm(params, n - 1);
    } else if (m == n) {
        out.second_case = Theorem1Case::Diagonal;
        expected = sc.tilde_beta * squared_norm(params, n);
    } else if (m == n + 1) {
        out.second_case = Theorem1Case::Next;
        expected = squared_norm(params, n + 1);
    } else {
        out.second_case = Theorem1Case::Beyond;
    }

    if (expected != 0.0) {
        out.residual_second = relative(second, expected);
    } else {
        const double size = norm_of(params, n + 1) + std::abs(sc.tilde_beta) * norm_of(params, n) +
                            std::abs(sc.tilde_gamma) * norm_of(params, n - 1) +
                            std::abs(tail) * norm_of(params, 0);
        out.residual_second = std::abs(second) / (norm_of(params, m) * size);
    }
    return out;
}

}  // namespace pj
