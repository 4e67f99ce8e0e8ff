#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "polar_jacobi/poly.hpp"

namespace pjt {

using pj::Complex;

inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

inline bool rel_near(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

inline Complex random_complex(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    return {u(rng), u(rng)};
}

inline pj::Poly random_poly(std::mt19937_64& rng, int degree, double magnitude) {
    std::vector<Complex> c(degree + 1);
    for (auto& x : c) x = random_complex(rng, magnitude);
    if (c.back() == 0.0) c.back() = 1.0;
    return pj::Poly(std::move(c));
}

}  // namespace pjt
