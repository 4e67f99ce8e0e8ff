#pragma once

#include <vector>

#include "polar_jacobi/poly.hpp"

namespace pj {

/// Largest degree accepted by any construction.
inline constexpr int kMaxDegree = 200;

enum class Regime {
    Standard,     ///< Re(alpha) > -1 and Re(beta) > -1
    Nonstandard,
};

/// Jacobi parameters (alpha, beta) of the weight (1 - z)^alpha (1 + z)^beta.
class JacobiParams {
public:
    JacobiParams(Complex alpha, Complex beta);

    Complex alpha() const noexcept { return alpha_; }
    Complex beta() const noexcept { return beta_; }
    Regime regime() const noexcept { return regime_; }

    JacobiParams shifted(double dalpha, double dbeta) const {
        return {alpha_ + dalpha, beta_ + dbeta};
    }
    JacobiParams swapped() const { return {beta_, alpha_}; }

private:
    Complex alpha_;
    Complex beta_;
    Regime regime_;
};

/// Monic three-term recurrence P_{n+1} = (z - beta_n) P_n - gamma_n P_{n-1}.
struct RecurrencePair {
    Complex beta;
    Complex gamma;
};

struct StructurePairs {
    Complex hat_beta;
    Complex hat_gamma;
    Complex tilde_beta;
    Complex tilde_gamma;
};

/// Throws InvalidArgument unless 0 <= n <= kMaxDegree.
void require_degree(int n);

/// beta_0 and gamma_1 are evaluated in cancelled form, so alpha + beta = 0
/// (resp. -1) is admissible there. Throws DegenerateParams otherwise.
RecurrencePair recurrence_coeffs(const JacobiParams& params, int n);

/// Coefficients of the first structure relation
///   (1 - z^2) P_n' = -n P_{n+1} + hat_beta P_n + hat_gamma P_{n-1}
/// and the second structure relation
///   P_{n+1}^{(a-1,b-1)} = P_{n+1} + tilde_beta P_n + tilde_gamma P_{n-1}.
StructurePairs structure_coeffs(const JacobiParams& params, int n);

/// Monic Jacobi polynomial of degree n.
///
/// Built by the three-term recurrence from P_0 = 1. When some recurrence
/// denominator vanishes but the monic polynomial of exact degree n still
/// exists (negative integer parameters), the explicit form is used instead.
Poly jacobi_poly(const JacobiParams& params, int n);

/// Monic Jacobi polynomial from the terminating hypergeometric series,
///   P_n = sum_j 2^{n-j} C(n,j) (a+j+1)_{n-j} / (n+a+b+j+1)_{n-j} (z-1)^j.
/// Throws DegenerateParams when the classical leading coefficient vanishes.
Poly jacobi_poly_explicit(const JacobiParams& params, int n);

/// True when every recurrence coefficient up to degree n is finite.
bool recurrence_admissible(const JacobiParams& params, int n);

/// P_n(z) by the value-space recurrence (explicit form as fallback).
Complex jacobi_eval(const JacobiParams& params, int n, Complex z);

/// ||P_n||^2 against the weight on [-1, 1]. Throws GammaPole.
Complex squared_norm(const JacobiParams& params, int n);

/// Lanczos approximation (g = 607/128, 15 terms) with reflection.
Complex gamma(Complex z);

/// A logarithm of Gamma(z); only exp() of it is meaningful off the real axis.
Complex log_gamma(Complex z);

struct PhiValue {
    Complex value;
    bool branch_ambiguous;  ///< z on [-1, 1]: both branches have modulus 1
};

/// z + sqrt(z^2 - 1) on the branch of larger modulus.
PhiValue phi(Complex z);

/// |(1-z^2) P'' + (b - a - z(a+b+2)) P' + n(a+b+n+1) P| at z.
double second_order_ode_residual(const JacobiParams& params, int n, Complex z);

/// Coefficient residual of P_n' = n P_{n-1}^{(a+1,b+1)} (n >= 1).
double forward_shift_check(const JacobiParams& params, int n);

double first_structure_residual(const JacobiParams& params, int n);
double second_structure_residual(const JacobiParams& params, int n);

}  // namespace pj
