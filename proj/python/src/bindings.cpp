#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polar_jacobi/errors.hpp"
#include "polar_jacobi/moments.hpp"
#include "polar_jacobi/polar.hpp"
#include "polar_jacobi/verify.hpp"
#include "polar_jacobi/zeros.hpp"

namespace py = pybind11;
using pj::Complex;

namespace {

std::vector<Complex> coeffs(const pj::Poly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

pj::PolarSpec spec(Complex alpha, Complex beta, Complex xi, int n) { return {{alpha, beta}, xi, n}; }

py::dict zero_set(const pj::ZeroSet& z) {
    py::list roots;
    for (const pj::Root& r : z.roots)
        roots.append(py::dict(py::arg("z") = r.z, py::arg("mult") = r.multiplicity, py::arg("residual") = r.residual));
    return py::dict(py::arg("roots") = roots, py::arg("source_degree") = z.source_degree);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Jacobi and polar Jacobi polynomials";

    auto base = py::register_exception<pj::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<pj::InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<pj::DegenerateParams>(m, "DegenerateParams", base.ptr());
    py::register_exception<pj::GammaPole>(m, "GammaPole", base.ptr());
    py::register_exception<pj::RegimeError>(m, "RegimeError", base.ptr());
    py::register_exception<pj::CapacityExceeded>(m, "CapacityExceeded", base.ptr());
    py::register_exception<pj::DegreeZero>(m, "DegreeZero", base.ptr());
    py::register_exception<pj::PreconditionFailed>(m, "PreconditionFailed", base.ptr());
    py::register_exception<pj::BranchAmbiguity>(m, "BranchAmbiguity", base.ptr());
    py::register_exception<pj::NoConvergence>(m, "NoConvergence", base.ptr());

    m.def("jacobi_poly", [](Complex a, Complex b, int n) { return coeffs(pj::jacobi_poly({a, b}, n)); },
          py::arg("alpha"), py::arg("beta"), py::arg("n"),
          "Monic Jacobi polynomial, coefficients ascending by power.");
    m.def("jacobi_eval", [](Complex a, Complex b, int n, Complex z) { return pj::jacobi_eval({a, b}, n, z); },
          py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("z"));
    m.def("squared_norm", [](Complex a, Complex b, int n) { return pj::squared_norm({a, b}, n); },
          py::arg("alpha"), py::arg("beta"), py::arg("n"));
    m.def("moments", [](Complex a, Complex b, int capacity) {
              const pj::MomentTable t = pj::build_moments({a, b}, capacity);
              std::vector<Complex> out;
              for (int k = 0; k <= capacity; ++k) out.push_back(t[k]);
              return out;
          },
          py::arg("alpha"), py::arg("beta"), py::arg("capacity"));

    m.def("polar_recurrence_coeffs", [](Complex a, Complex b, int n) {
              const pj::PolarRecurrencePair r = pj::polar_recurrence_coeffs({a, b}, n);
              return std::pair{r.a, r.b};
          },
          py::arg("alpha"), py::arg("beta"), py::arg("n"));
    m.def("polar_poly",
          [](Complex a, Complex b, Complex xi, int n, const std::string& method) {
              const pj::PolarSpec s = spec(a, b, xi, n);
              if (method == "recurrence") return coeffs(pj::polar_poly_recurrence(s));
              if (method == "divdiff") return coeffs(pj::polar_poly_divdiff(s));
              if (method == "auto") return coeffs(pj::polar_poly(s));
              throw pj::InvalidArgument("method must be auto, recurrence or divdiff");
          },
          py::arg("alpha"), py::arg("beta"), py::arg("xi"), py::arg("n"), py::arg("method") = "auto",
          "Polar Jacobi polynomial P_n(z; alpha, beta; xi), coefficients ascending by power.");
    m.def("operator_identity_residual",
          [](Complex a, Complex b, Complex xi, int n) { return pj::operator_identity_residual(spec(a, b, xi, n)); },
          py::arg("alpha"), py::arg("beta"), py::arg("xi"), py::arg("n"));
    m.def("degeneracy_margin", [](Complex a, Complex b, Complex xi, int n) { return pj::degeneracy_margin(spec(a, b, xi, n)); },
          py::arg("alpha"), py::arg("beta"), py::arg("xi"), py::arg("n"));

    m.def("find_roots", [](const std::vector<Complex>& c, double tol) { return zero_set(pj::find_roots(pj::Poly(c), tol)); },
          py::arg("coeffs"), py::arg("tol") = pj::kRootTolerance,
          "Roots of the polynomial with ascending coefficients, clustered by multiplicity.");
    m.def("polar_roots",
          [](Complex a, Complex b, Complex xi, int n) {
              const pj::PolarSpec s = spec(a, b, xi, n);
              const pj::ZeroSet z = pj::find_roots(pj::polar_poly(s));
              py::dict out = zero_set(z);
              if (s.params.regime() == pj::Regime::Standard) {
                  const pj::DiskBound d = pj::disk_bound_check(z, xi);
                  out["disk_radius"] = d.radius;
                  out["max_excess"] = d.max_excess;
              }
              return out;
          },
          py::arg("alpha"), py::arg("beta"), py::arg("xi"), py::arg("n"));

    m.def("verify",
          [](std::optional<Complex> a, std::optional<Complex> b, std::optional<Complex> xi, std::optional<int> n,
             std::optional<double> tol, std::uint64_t seed) {
              pj::VerifyOptions o;
              o.tol = tol;
              o.seed = seed;
              if (a || b || xi || n) o.spec = spec(a.value_or(0.0), b.value_or(0.0), xi.value_or(1.0), n.value_or(5));
              py::dict out;
              for (const pj::SuiteResult& r : pj::run_verification(o)) {
                  out[py::str(r.name)] = py::dict(py::arg("status") = std::string(pj::to_string(r.status)),
                                                  py::arg("max_residual") = r.max_residual,
                                                  py::arg("threshold") = r.threshold, py::arg("cases") = r.cases);
              }
              return out;
          },
          py::arg("alpha") = py::none(), py::arg("beta") = py::none(), py::arg("xi") = py::none(),
          py::arg("n") = py::none(), py::arg("tol") = py::none(), py::arg("seed") = pj::VerifyOptions{}.seed,
          "Run the identity and zero-location suites; same defaults as the command line tool.");
}
