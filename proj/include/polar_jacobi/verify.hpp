#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polar_jacobi/polar.hpp"

namespace pj {

enum class SuiteStatus { Pass, Fail, NotApplicable };

const char* to_string(SuiteStatus s);

struct SuiteResult {
    std::string name;
    SuiteStatus status;
    double max_residual;
    double threshold;
    int cases;
};

struct VerifyOptions {
    /// When set, every suite runs on this spec instead of its default sweep.
    std::optional<PolarSpec> spec;
    /// Replaces every numeric threshold.
    std::optional<double> tol;
    std::uint64_t seed = 20240611;
};

/// Runs all suites in a fixed order. Deterministic for fixed options.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// True when no suite failed (not-applicable suites do not count).
bool all_passed(const std::vector<SuiteResult>& results);

struct SpecSampler {
    double max_param = 4.0;  ///< |Re|, |Im| of alpha and beta
    double max_pole = 4.0;   ///< |xi|
    int min_degree = 0;
    int max_degree = 40;
    bool standard = false;   ///< Re alpha, Re beta in (-1, max_param]
};

/// Random spec at least kNearDegenerate away from any degenerate denominator.
PolarSpec sample_spec(std::mt19937_64& rng, const SpecSampler& sampler);

/// Caption parameter sets of the zero plots: 1L, 1R, 3L, 3R.
struct FigureSet {
    std::string id;
    Complex alpha;
    Complex beta;
    double radius;
    int poles;
    std::vector<int> degrees;
};

std::optional<FigureSet> figure_set(const std::string& id);

/// xi_k = radius exp(2 pi i k / poles).
Complex sweep_pole(double radius, int k, int count);

}  // namespace pj
