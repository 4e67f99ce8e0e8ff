#include <array>
#include <cmath>
#include <numbers>

#include "polar_jacobi/errors.hpp"
#include "polar_jacobi/jacobi.hpp"

namespace pj {
namespace {

constexpr double kLanczosG = 607.0 / 128.0;

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

void require_off_pole(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) {
        throw GammaPole("Gamma has a pole at " + std::to_string(z.real()));
    }
}

}  // namespace

Complex log_gamma(Complex z) {
    require_finite(z, "Gamma argument");
    require_off_pole(z);
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    Complex x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

Complex gamma(Complex z) {
    require_finite(z, "Gamma argument");
    require_off_pole(z);
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
    return std::exp(log_gamma(z));
}

}  // namespace pj
