#pragma once

#include <vector>

#include "polar_jacobi/errors.hpp"
#include "polar_jacobi/polar.hpp"
#include "polar_jacobi/poly.hpp"

namespace pj {

struct Root {
    Complex z;
    int multiplicity;
    double residual;  ///< |p(z)| / (1 + |z|)^deg for the monic-normalized p
};

struct ZeroSet {
    std::vector<Root> roots;
    int source_degree = 0;

    /// Roots repeated by multiplicity.
    std::vector<Complex> expanded() const;
};

/// The solver ran out of sweeps; best() is the last iterate, clustered.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, ZeroSet best) : Error(what), best_(std::move(best)) {}
    const ZeroSet& best() const noexcept { return best_; }

private:
    ZeroSet best_;
};

inline constexpr double kRootTolerance = 1e-10;

/// Aberth-Ehrlich iteration on the monic-normalized polynomial.
///
/// A root is accepted once its correction is below tol * max(1, |z|) or its
/// value is at rounding level. Iterates that split a multiple root are
/// merged by single linkage and reported as their centroid.
/// Throws DegreeZero for constants, NoConvergence after 200 sweeps.
ZeroSet find_roots(const Poly& p, double tol = kRootTolerance);

struct DiskBound {
    double radius;      ///< 2 + |xi|
    double max_excess;  ///< max(|root| - radius, 0)
    bool pass;          ///< max_excess <= 1e-8 (1 + radius)
};

DiskBound disk_bound_check(const ZeroSet& zeros, Complex xi);

/// |R(z) - R(xi)| / (1 + |R(xi)|) per root, R = P_{n+1}^{(a-1,b-1)}.
std::vector<double> level_curve_residuals(const ZeroSet& zeros, const PolarSpec& spec);

enum class AuditStatus { Pass, Fail, NotApplicable };

const char* to_string(AuditStatus s);

struct MultiplicityAudit {
    AuditStatus status;
    std::vector<Root> offenders;
    int max_multiplicity;
};

/// Multiplicities at most 2, double roots on [-1, 1] within 1e-6.
/// NotApplicable outside the standard regime.
MultiplicityAudit multiplicity_audit(const ZeroSet& zeros, const PolarSpec& spec);

struct SegmentDistances {
    double sup;  ///< max |xi - z| over z in [-1, 1]
    double inf;  ///< min |xi - z| over z in [-1, 1]
};

SegmentDistances segment_distances(Complex xi);

/// Every root outside |z+1| + |z-1| = 2a (to 1e-8) and simple.
/// Throws PreconditionFailed unless 1 < a < inf-distance of xi.
bool ellipse_exclusion_check(const ZeroSet& zeros, Complex xi, double a);

/// Distance from w to the union of [-1, 1] and the ellipse |phi(z)| = |phi(xi)|.
/// Throws BranchAmbiguity when xi lies on [-1, 1].
double distance_to_limit_set(Complex w, Complex xi);

/// Max of distance_to_limit_set over the roots.
double asymptotic_ellipse_distance(const ZeroSet& zeros, Complex xi);

struct GaussLucas {
    bool pass;
    double max_distance;  ///< largest distance of a critical point from the hull
};

/// Roots of p' inside the hull of the roots of p, tolerance 1e-7. deg p >= 2.
GaussLucas gauss_lucas_check(const Poly& p);

struct GeometryReport {
    double disk_radius;
    double delta_xi;           ///< inf distance from xi to [-1, 1]
    double Delta_xi;           ///< sup distance
    double ellipse_parameter;  ///< min over roots of (|z+1| + |z-1|) / 2
    std::vector<double> level_curve_residuals;
    bool hull_ok;
};

GeometryReport geometry_report(const Poly& p, const ZeroSet& zeros, const PolarSpec& spec);

}  // namespace pj
