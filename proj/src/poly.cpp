#include "polar_jacobi/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polar_jacobi/errors.hpp"

namespace pj {

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidArgument(std::string(what) + " is not finite");
    }
}

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    for (const Complex& c : coeffs_) require_finite(c, "polynomial coefficient");
    trim();
}

Poly::Poly(std::initializer_list<Complex> coeffs) : Poly(std::vector<Complex>(coeffs)) {}

Poly Poly::constant(Complex c) { return Poly({c}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex eval(const Poly& p, Complex z) {
    const auto c = p.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly derivative(const Poly& p) {
    const auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Complex> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
    return Poly(std::move(d));
}

Poly divided_difference(const Poly& p, Complex xi) {
    require_finite(xi, "divided difference node");
    const auto c = p.coeffs();
    if (c.size() <= 1) return {};
    // Synthetic division of p(z) - p(xi) by (z - xi): the remainder is dropped.
    std::vector<Complex> q(c.size() - 1);
    Complex acc{};
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
        acc = acc * xi + c[k];
        q[k - 1] = acc;
    }
    return Poly(std::move(q));
}

Poly add(const Poly& p, const Poly& q) {
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    std::vector<Complex> r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = p[k] + q[k];
    return Poly(std::move(r));
}

Poly sub(const Poly& p, const Poly& q) { return add(p, scale(q, -1.0)); }

Poly scale(const Poly& p, Complex c) {
    std::vector<Complex> r(p.coeffs().begin(), p.coeffs().end());
    for (Complex& x : r) x *= c;
    return Poly(std::move(r));
}

Poly mul_linear(const Poly& p, Complex xi) {
    require_finite(xi, "linear factor root");
    const auto c = p.coeffs();
    if (c.empty()) return {};
    std::vector<Complex> r(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        r[k + 1] += c[k];
        r[k] -= xi * c[k];
    }
    return Poly(std::move(r));
}

Poly mul(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto a = p.coeffs();
    const auto b = q.coeffs();
    std::vector<Complex> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return Poly(std::move(r));
}

Poly negate_argument(const Poly& p) {
    std::vector<Complex> r(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
    return Poly(std::move(r));
}

Poly from_roots(std::span<const Complex> roots) {
    Poly p{1.0};
    for (const Complex& r : roots) p = mul_linear(p, r);
    return p;
}

double norm_inf(const Poly& p) {
    double m = 0.0;
    for (const Complex& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

double relative_difference(const Poly& p, const Poly& q) {
    const double s = std::max(norm_inf(p), norm_inf(q));
    if (s == 0.0) return 0.0;
    return norm_inf(sub(p, q)) / s;
}

double identity_residual(std::initializer_list<Poly> terms) {
    Poly sum;
    double s = 0.0;
    for (const Poly& t : terms) {
        sum = add(sum, t);
        s = std::max(s, norm_inf(t));
    }
    if (s == 0.0) return 0.0;
    return norm_inf(sum) / s;
}

}  // namespace pj
