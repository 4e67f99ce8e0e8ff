#include "polar_jacobi/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pj {
namespace {

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

bool lex_less(Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

double segment_distance(Complex a, Complex b, Complex p) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

}  // namespace

std::vector<Complex> convex_hull(std::span<const Complex> points) {
    std::vector<Complex> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    // Andrew's monotone chain; only strict left turns survive.
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Complex& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0.0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

double hull_distance(std::span<const Complex> hull, Complex p) {
    if (hull.empty()) return std::numeric_limits<double>::infinity();
    if (hull.size() == 1) return std::abs(p - hull[0]);
    if (hull.size() == 2) return segment_distance(hull[0], hull[1], p);

    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Complex a = hull[i];
        const Complex b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0.0) inside = false;
        best = std::min(best, segment_distance(a, b, p));
    }
    return inside ? 0.0 : best;
}

bool hull_contains(std::span<const Complex> hull, Complex p, double eps) {
    return hull_distance(hull, p) <= eps;
}

}  // namespace pj
