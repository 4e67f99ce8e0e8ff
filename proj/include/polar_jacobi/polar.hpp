#pragma once

#include "polar_jacobi/jacobi.hpp"
#include "polar_jacobi/poly.hpp"

namespace pj {

/// Identity of one polar Jacobi polynomial P_n(z; alpha, beta; xi).
struct PolarSpec {
    JacobiParams params;
    Complex pole;
    int degree;
};

/// P_{n+1} = (z + a_n) P_n + b_n P_{n-1} + P_{n+1}^{(a-1,b-1)}(xi).
struct PolarRecurrencePair {
    Complex a;
    Complex b;
};

/// For alpha == beta the ultraspherical forms are used (a_n = 0 and the
/// (alpha+n)^2 factor cancelled from b_n). b_0 is taken in cancelled form.
PolarRecurrencePair polar_recurrence_coeffs(const JacobiParams& params, int n);

/// Theorem-style recurrence from P_{-1} = 0, P_0 = 1, with the
/// inhomogeneous term evaluated by value recurrence.
///
/// If some coefficient is degenerate and the spec is alpha = -k at xi = 1
/// (or beta = -k at xi = -1) with degree >= k, the polynomial is assembled
/// from the factored form (z -+ 1)^k ((z -+ 1) P_{n-1}(z; k+2, ...) + c).
Poly polar_poly_recurrence(const PolarSpec& spec);

/// (P_{n+1}^{(a-1,b-1)}(z) - P_{n+1}^{(a-1,b-1)}(xi)) / (z - xi).
Poly polar_poly_divdiff(const PolarSpec& spec);

/// Recurrence route, falling back to the divided difference when the
/// recurrence is degenerate.
Poly polar_poly(const PolarSpec& spec);

/// Smallest modulus among the denominators the constructions divide by:
/// the polar coefficients below degree n and the shifted Jacobi recurrence
/// through degree n+1. Infinite when nothing is divided.
double degeneracy_margin(const PolarSpec& spec);

inline constexpr double kNearDegenerate = 1e-6;

/// P_n + (z - xi) P_n' - (n+1) P_n^{(a,b)}, normwise relative.
double operator_identity_residual(const PolarSpec& spec);

/// Q_n = (z - xi) P_{n-1}; spec.degree is n >= 1.
Poly sobolev_Q(const PolarSpec& spec);

/// (z - xi) P_n = P_{n+1}^{(a,b)} + tilde_beta_n P_n^{(a,b)} + tilde_gamma_n P_{n-1}^{(a,b)}
///               - P_{n+1}^{(a-1,b-1)}(xi), n >= 1.
double structure_expansion_residual(const PolarSpec& spec);

/// P_n(z; a, b; xi) against (-1)^n P_n(-z; b, a; -xi).
double reflect_check(const PolarSpec& spec);

enum class FactorSide {
    Minus,  ///< alpha = -k, xi = 1
    Plus,   ///< beta = -k, xi = -1
};

struct FactorizationReport {
    double factorization;  ///< P_{n+k} against (z -+ 1)^k P_n^{shifted}
    double nested_form;    ///< against the nested form with P_{n-1}(z; k+2, ...)
    double a_shift;        ///< |a_{n+k} - a_{n-1}| relative; 0 when n = 0
    double b_shift;
};

/// `other` is the free parameter (beta for Minus, alpha for Plus).
FactorizationReport factorization_check(int k, Complex other, int n, FactorSide side);

}  // namespace pj
