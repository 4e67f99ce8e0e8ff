#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace pj {

using Complex = std::complex<double>;

// Extended precision for sums that cancel heavily.
#if defined(__SIZEOF_FLOAT128__)
using WideReal = __float128;
#else
using WideReal = long double;
#endif
using WideComplex = std::complex<WideReal>;

/// Throws InvalidArgument when z has a NaN or infinite component.
void require_finite(Complex z, const char* what);

/// Dense polynomial with complex coefficients in the monomial basis.
///
/// Index k holds the coefficient of z^k. Trailing coefficients that are
/// exactly zero are dropped on construction; nothing is trimmed numerically.
/// The zero polynomial is the empty coefficient vector and has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs);
    Poly(std::initializer_list<Complex> coeffs);

    static Poly constant(Complex c);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^k; zero past the degree.
    Complex operator[](std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }

    Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

    bool operator==(const Poly&) const = default;

private:
    void trim();

    std::vector<Complex> coeffs_;
};

/// Horner evaluation from the leading coefficient.
Complex eval(const Poly& p, Complex z);

Poly derivative(const Poly& p);

/// (p(z) - p(xi)) / (z - xi) by synthetic division. Degree drops by one.
Poly divided_difference(const Poly& p, Complex xi);

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly scale(const Poly& p, Complex c);

/// (z - xi) * p(z).
Poly mul_linear(const Poly& p, Complex xi);

Poly mul(const Poly& p, const Poly& q);

/// p(-z).
Poly negate_argument(const Poly& p);

/// Monic polynomial with the given roots (repeated for multiplicity).
Poly from_roots(std::span<const Complex> roots);

double norm_inf(const Poly& p);

/// ||p - q||_inf / max(||p||_inf, ||q||_inf); zero when both vanish.
double relative_difference(const Poly& p, const Poly& q);

/// ||sum of terms||_inf / max_i ||term_i||_inf.
///
/// Measures how well an identity "sum of terms = 0" holds relative to the
/// size of its largest participant, which is the scale at which rounding
/// in the terms themselves shows up.
double identity_residual(std::initializer_list<Poly> terms);

}  // namespace pj
