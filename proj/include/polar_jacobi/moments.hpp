#pragma once

#include <complex>
#include <vector>

#include "polar_jacobi/jacobi.hpp"
#include "polar_jacobi/polar.hpp"
#include "polar_jacobi/poly.hpp"

namespace pj {

// Hankel sums against the moments cancel heavily (about ten digits at
// degree 12), so moments and the summation run in WideComplex.

/// mu_k = integral of z^k (1-z)^alpha (1+z)^beta over [-1, 1], k = 0..capacity.
class MomentTable {
public:
    const JacobiParams& params() const noexcept { return params_; }
    int capacity() const noexcept { return static_cast<int>(mu_.size()) - 1; }
    Complex operator[](int k) const;
    const std::vector<WideComplex>& wide() const noexcept { return mu_; }

private:
    friend MomentTable build_moments(const JacobiParams&, int);
    MomentTable(JacobiParams params, std::vector<WideComplex> mu) : params_(params), mu_(std::move(mu)) {}

    JacobiParams params_;
    std::vector<WideComplex> mu_;
};

/// Moments by mu_{k+1} = ((b - a) mu_k + k mu_{k-1}) / (a + b + k + 2).
/// Throws RegimeError outside the standard regime.
MomentTable build_moments(const JacobiParams& params, int capacity);

/// sum_{i,j} p_i q_j mu_{i+j}. Bilinear, not conjugate-symmetric.
/// Throws CapacityExceeded when deg p + deg q > capacity.
Complex inner_product(const Poly& p, const Poly& q, const MomentTable& table);

/// Which line of the second orthogonality table applies to (n, m).
enum class Theorem1Case {
    MZero,         ///< m = 0
    ZeroBand,      ///< 0 < m < n-1
    Previous,      ///< m = n-1
    Diagonal,      ///< m = n
    Next,          ///< m = n+1
    Beyond,        ///< m > n+1
    NotApplicable, ///< n <= 1
};

const char* to_string(Theorem1Case c);

struct Theorem1Report {
    double residual_first;
    Theorem1Case second_case;
    double residual_second;  ///< 0 when NotApplicable
};

/// Checks both orthogonality relations of the polar polynomial for one m.
///
/// Nonzero targets are compared relatively. Zero targets are scaled by the
/// norms of the participants: (n+1) ||P_n|| ||P_m|| for the first relation,
/// ||P_m|| times the summed size of the expansion of (z - xi) P_n for the
/// second. ||.|| is sqrt|squared_norm|.
Theorem1Report verify_theorem1(const PolarSpec& spec, int m);

}  // namespace pj
