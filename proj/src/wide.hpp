#pragma once

// Extended-precision copies of the recurrence formulas. Callers validate
// admissibility through the double versions first.

#include <vector>

#include "polar_jacobi/jacobi.hpp"
#include "polar_jacobi/polar.hpp"
#include "polar_jacobi/poly.hpp"

namespace pj::wide {

inline WideComplex widen(Complex z) { return {static_cast<WideReal>(z.real()), static_cast<WideReal>(z.imag())}; }

inline Complex narrow(WideComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

inline Poly narrow(const std::vector<WideComplex>& c) {
    std::vector<Complex> out;
    out.reserve(c.size());
    for (const WideComplex& z : c) out.push_back(narrow(z));
    return Poly(std::move(out));
}

struct Pair {
    WideComplex first;
    WideComplex second;
};

// beta_k, gamma_k of the monic Jacobi recurrence, cancelled forms at k = 0, 1.
inline Pair jacobi_coeffs(WideComplex a, WideComplex b, int k) {
    const WideComplex s = a + b;
    const WideReal wk = k;
    if (k == 0) return {(b - a) / (s + WideReal(2)), WideComplex{}};
    const WideComplex beta = (b * b - a * a) / ((s + 2 * wk) * (s + 2 * wk + WideReal(2)));
    if (k == 1) {
        return {beta, WideReal(4) * (a + WideReal(1)) * (b + WideReal(1)) /
                          ((s + WideReal(2)) * (s + WideReal(2)) * (s + WideReal(3)))};
    }
    const WideComplex mid = s + 2 * wk;
    return {beta, WideReal(4) * wk * (a + wk) * (b + wk) * (s + wk) / ((mid - WideReal(1)) * mid * mid * (mid + WideReal(1)))};
}

inline std::vector<WideComplex> jacobi_poly(const JacobiParams& params, int n) {
    const WideComplex a = widen(params.alpha());
    const WideComplex b = widen(params.beta());
    std::vector<WideComplex> prev;
    std::vector<WideComplex> cur{WideComplex(1)};
    for (int k = 0; k < n; ++k) {
        const Pair c = jacobi_coeffs(a, b, k);
        std::vector<WideComplex> next(cur.size() + 1);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] -= c.first * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= c.second * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline WideComplex jacobi_value(const JacobiParams& params, int n, Complex z) {
    const WideComplex a = widen(params.alpha());
    const WideComplex b = widen(params.beta());
    const WideComplex wz = widen(z);
    WideComplex prev{};
    WideComplex cur(1);
    for (int k = 0; k < n; ++k) {
        const Pair c = jacobi_coeffs(a, b, k);
        const WideComplex next = (wz - c.first) * cur - c.second * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// a_n, b_n of the polar recurrence, with the same special forms as the
// double version.
inline Pair polar_coeffs(const JacobiParams& params, int n) {
    const WideComplex a = widen(params.alpha());
    const WideComplex b = widen(params.beta());
    const WideComplex s = a + b;
    const WideReal dn = n;
    if (params.alpha() == params.beta()) {
        return {WideComplex{}, -(dn + WideReal(1)) * (WideReal(2) * a + dn - WideReal(1)) /
                                   ((WideReal(2) * a + 2 * dn - WideReal(1)) * (WideReal(2) * a + 2 * dn + WideReal(1)))};
    }
    const WideComplex lo = s + 2 * dn;
    const WideComplex hi = lo + WideReal(2);
    const WideComplex an = (s - WideReal(2)) * (a - b) / (lo * hi);
    const WideComplex above = lo + WideReal(1);
    if (n == 0) return {an, WideReal(-4) * a * b / (s * s * above)};
    return {an, WideReal(-4) * (dn + WideReal(1)) * (a + dn) * (b + dn) * (s + dn - WideReal(1)) /
                    ((lo - WideReal(1)) * lo * lo * above)};
}

// Polar polynomial coefficients before rounding to double; defined with the
// double routines in polar.cpp.
std::vector<WideComplex> polar_poly(const PolarSpec& spec);

}  // namespace pj::wide
