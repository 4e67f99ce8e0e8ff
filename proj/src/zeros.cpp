#include "polar_jacobi/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "polar_jacobi/hull.hpp"
#include "polar_jacobi/jacobi.hpp"
#include "wide.hpp"

namespace pj {
namespace {

constexpr int kMaxSweeps = 200;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ValueAndSlope {
    Complex p;
    Complex dp;
    double bound;  ///< sum |a_k| |z|^k, the rounding scale of p(z)
};

ValueAndSlope horner(std::span<const Complex> a, Complex z) {
    ValueAndSlope r{};
    const double az = std::abs(z);
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        r.dp = r.dp * z + r.p;
        r.p = r.p * z + *it;
        r.bound = r.bound * az + std::abs(*it);
    }
    return r;
}

// Fujiwara's bound on the root moduli of a monic polynomial.
double fujiwara(std::span<const Complex> a) {
    const int n = static_cast<int>(a.size()) - 1;
    double m = 0.0;
    for (int k = 1; k <= n; ++k) {
        double c = std::abs(a[n - k]);
        if (k == n) c /= 2.0;
        m = std::max(m, std::pow(c, 1.0 / k));
    }
    return 2.0 * m;
}

struct WideValue {
    WideComplex p;
    WideComplex dp;
};

WideValue wide_horner(std::span<const Complex> a, Complex z) {
    const WideComplex wz = wide::widen(z);
    WideValue r{};
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        r.dp = r.dp * wz + r.p;
        r.p = r.p * wz + wide::widen(*it);
    }
    return r;
}

double wide_abs(WideComplex z) { return std::abs(wide::narrow(z)); }

// Newton with p evaluated in wide arithmetic: the stopping rule of the main
// iteration leaves simple roots up to ~4n times the rounding floor away.
Complex polish_simple(std::span<const Complex> a, Complex c) {
    double best = wide_abs(wide_horner(a, c).p);
    for (int it = 0; it < 4 && best > 0.0; ++it) {
        const WideValue v = wide_horner(a, c);
        if (v.dp == WideComplex{}) break;
        const Complex next = wide::narrow(wide::widen(c) - v.p / v.dp);
        const double val = wide_abs(wide_horner(a, next).p);
        if (!(val < best)) break;
        best = val;
        c = next;
    }
    return c;
}

int find(std::vector<int>& parent, int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
}

// A cluster of m iterates sits around a root of multiplicity m, which is a
// simple root of the (m-1)-th derivative; Newton there recovers the digits
// lost to the O(eps^{1/m}) splitting.
Complex polish(std::span<const Complex> a, Complex c, int m) {
    std::vector<Complex> d(a.begin(), a.end());
    for (int r = 1; r < m; ++r) {
        for (std::size_t k = 1; k < d.size(); ++k) d[k - 1] = static_cast<double>(k) * d[k];
        d.pop_back();
    }
    double best = std::abs(horner(d, c).p);
    for (int it = 0; it < 8 && best > 0.0; ++it) {
        const ValueAndSlope v = horner(d, c);
        if (v.dp == 0.0) break;
        const Complex next = c - v.p / v.dp;
        const double val = std::abs(horner(d, next).p);
        if (!(val < best)) break;
        best = val;
        c = next;
    }
    return c;
}

ZeroSet cluster(std::span<const Complex> a, const std::vector<Complex>& z, double tol) {
    const int n = static_cast<int>(z.size());
    std::vector<double> radius(n);
    for (int i = 0; i < n; ++i) {
        Complex prod = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != i) prod *= z[i] - z[j];
        const Complex p = horner(a, z[i]).p;
        const double weierstrass = prod == 0.0 ? 0.0 : std::abs(p / prod);
        radius[i] = std::max(10.0 * std::sqrt(tol) * std::max(1.0, std::abs(z[i])), n * weierstrass);
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= std::max(radius[i], radius[j])) parent[find(parent, i)] = find(parent, j);

    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[find(parent, i)].push_back(i);

    ZeroSet out;
    out.source_degree = n;
    for (const auto& g : groups) {
        if (g.empty()) continue;
        Complex c = 0.0;
        for (int i : g) c += z[i];
        c /= static_cast<double>(g.size());
        c = g.size() > 1 ? polish(a, c, static_cast<int>(g.size())) : polish_simple(a, c);
        const double res = wide_abs(wide_horner(a, c).p) / std::pow(1.0 + std::abs(c), n);
        out.roots.push_back({c, static_cast<int>(g.size()), res});
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const Root& x, const Root& y) {
        if (x.z.real() != y.z.real()) return x.z.real() < y.z.real();
        return x.z.imag() < y.z.imag();
    });
    return out;
}

double segment_distance(Complex w) {
    if (std::abs(w.real()) <= 1.0) return std::abs(w.imag());
    return std::min(std::abs(w - 1.0), std::abs(w + 1.0));
}

}  // namespace

std::vector<Complex> ZeroSet::expanded() const {
    std::vector<Complex> out;
    for (const Root& r : roots) out.insert(out.end(), r.multiplicity, r.z);
    return out;
}

ZeroSet find_roots(const Poly& p, double tol) {
    if (p.degree() < 1) throw DegreeZero("root finding needs degree >= 1");
    const int n = p.degree();
    std::vector<Complex> a(p.coeffs().begin(), p.coeffs().end());
    const Complex lead = a.back();
    for (Complex& c : a) c /= lead;

    const double r = 1.0 + std::max(1.0, fujiwara(a));
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) z[k] = std::polar(r, 2.0 * std::numbers::pi * k / n + std::numbers::sqrt2);

    std::vector<bool> done(n, false);
    int remaining = n;
    for (int sweep = 0; sweep < kMaxSweeps && remaining > 0; ++sweep) {
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            const ValueAndSlope v = horner(a, z[i]);
            if (std::abs(v.p) <= 4.0 * n * kEps * v.bound) {
                done[i] = true;
                --remaining;
                continue;
            }
            Complex sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            Complex w;
            if (v.dp == 0.0) {
                w = -std::polar(1e-3 * std::max(1.0, std::abs(z[i])), static_cast<double>(i));
            } else {
                const Complex ratio = v.p / v.dp;
                w = ratio / (1.0 - ratio * sum);
            }
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            z[i] -= w;
            if (std::abs(w) <= tol * std::max(1.0, std::abs(z[i]))) {
                done[i] = true;
                --remaining;
            }
        }
    }

    ZeroSet out = cluster(a, z, tol);
    if (remaining > 0) {
        throw NoConvergence("root finder did not converge in " + std::to_string(kMaxSweeps) + " sweeps",
                            std::move(out));
    }
    return out;
}

DiskBound disk_bound_check(const ZeroSet& zeros, Complex xi) {
    DiskBound out{2.0 + std::abs(xi), 0.0, true};
    for (const Root& r : zeros.roots) out.max_excess = std::max(out.max_excess, std::abs(r.z) - out.radius);
    out.pass = out.max_excess <= 1e-8 * (1.0 + out.radius);
    return out;
}

std::vector<double> level_curve_residuals(const ZeroSet& zeros, const PolarSpec& spec) {
    const JacobiParams shifted = spec.params.shifted(-1, -1);
    const int m = spec.degree + 1;
    const Complex at_pole = jacobi_eval(shifted, m, spec.pole);
    std::vector<double> out;
    out.reserve(zeros.roots.size());
    for (const Root& r : zeros.roots)
        out.push_back(std::abs(jacobi_eval(shifted, m, r.z) - at_pole) / (1.0 + std::abs(at_pole)));
    return out;
}

const char* to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::Pass: return "pass";
        case AuditStatus::Fail: return "fail";
        case AuditStatus::NotApplicable: return "not_applicable";
    }
    return "?";
}

MultiplicityAudit multiplicity_audit(const ZeroSet& zeros, const PolarSpec& spec) {
    MultiplicityAudit out{AuditStatus::Pass, {}, 0};
    for (const Root& r : zeros.roots) out.max_multiplicity = std::max(out.max_multiplicity, r.multiplicity);
    if (spec.params.regime() != Regime::Standard) {
        out.status = AuditStatus::NotApplicable;
        return out;
    }
    for (const Root& r : zeros.roots) {
        const bool on_segment = std::abs(r.z.imag()) <= 1e-6 && std::abs(r.z.real()) <= 1.0 + 1e-6;
        if (r.multiplicity > 2 || (r.multiplicity == 2 && !on_segment)) out.offenders.push_back(r);
    }
    if (!out.offenders.empty()) out.status = AuditStatus::Fail;
    return out;
}

SegmentDistances segment_distances(Complex xi) {
    return {std::max(std::abs(xi - 1.0), std::abs(xi + 1.0)), segment_distance(xi)};
}

bool ellipse_exclusion_check(const ZeroSet& zeros, Complex xi, double a) {
    const double delta = segment_distances(xi).inf;
    if (delta <= 1.0) throw PreconditionFailed("exclusion ellipse needs distance from pole to [-1,1] above 1");
    if (!(a > 1.0 && a < delta)) throw PreconditionFailed("ellipse parameter must lie in (1, delta_xi)");
    for (const Root& r : zeros.roots) {
        if (r.multiplicity != 1) return false;
        if (std::abs(r.z + 1.0) + std::abs(r.z - 1.0) < 2.0 * a - 1e-8) return false;
    }
    return true;
}

double distance_to_limit_set(Complex w, Complex xi) {
    const PhiValue f = phi(xi);
    if (f.branch_ambiguous) throw BranchAmbiguity("pole on [-1,1]: the limit ellipse degenerates");
    const double rho = std::log(std::abs(f.value));
    auto dist = [&](double theta) { return std::abs(std::cosh(Complex(rho, theta)) - w); };

    constexpr int kSamples = 256;
    const double step = 2.0 * std::numbers::pi / kSamples;
    int best = 0;
    for (int j = 1; j < kSamples; ++j)
        if (dist(j * step) < dist(best * step)) best = j;

    double lo = (best - 1) * step;
    double hi = (best + 1) * step;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = dist(x1);
    double f2 = dist(x2);
    while (hi - lo > 1e-13) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = dist(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = dist(x2);
        }
    }
    return std::min(segment_distance(w), std::min(f1, f2));
}

double asymptotic_ellipse_distance(const ZeroSet& zeros, Complex xi) {
    double m = 0.0;
    for (const Root& r : zeros.roots) m = std::max(m, distance_to_limit_set(r.z, xi));
    return m;
}

GaussLucas gauss_lucas_check(const Poly& p) {
    if (p.degree() < 2) throw InvalidArgument("Gauss-Lucas check needs degree >= 2");
    const std::vector<Complex> zs = find_roots(p).expanded();
    const std::vector<Complex> hull = convex_hull(zs);
    GaussLucas out{true, 0.0};
    for (const Root& c : find_roots(derivative(p)).roots)
        out.max_distance = std::max(out.max_distance, hull_distance(hull, c.z));
    out.pass = out.max_distance <= 1e-7;
    return out;
}

GeometryReport geometry_report(const Poly& p, const ZeroSet& zeros, const PolarSpec& spec) {
    const SegmentDistances sd = segment_distances(spec.pole);
    GeometryReport out{};
    out.disk_radius = 2.0 + std::abs(spec.pole);
    out.delta_xi = sd.inf;
    out.Delta_xi = sd.sup;
    out.ellipse_parameter = std::numeric_limits<double>::infinity();
    for (const Root& r : zeros.roots)
        out.ellipse_parameter = std::min(out.ellipse_parameter, (std::abs(r.z + 1.0) + std::abs(r.z - 1.0)) / 2.0);
    out.level_curve_residuals = level_curve_residuals(zeros, spec);
    out.hull_ok = p.degree() < 2 || gauss_lucas_check(p).pass;
    return out;
}

}  // namespace pj
