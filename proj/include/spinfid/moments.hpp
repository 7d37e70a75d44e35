#pragma once

#include <cmath>
#include <stdexcept>

#include "spinfid/kinematics.hpp"
#include "spinfid/quadrature.hpp"

namespace spinfid {

/// Width gamma = alpha/(mc) of the Gaussian momentum profile.
struct WaveletWidth {
    double gamma = 20.0;

    void validate() const {
        if (!(gamma > 0.0) || !std::isfinite(gamma)) {
            throw std::invalid_argument("WaveletWidth: gamma must be positive and finite");
        }
    }
};

/// The averaged powers of cos(Omega) that feed every closed-form fidelity.
struct WignerMoments {
    double m1 = 1.0;
    double m2 = 1.0;
    double m3 = 1.0;

    double get(int k) const {
        switch (k) {
            case 1: return m1;
            case 2: return m2;
            case 3: return m3;
        }
        throw std::invalid_argument("WignerMoments: moment order must be 1, 2 or 3");
    }
};

namespace detail {

inline void check_moment_order(int k) {
    if (k < 1 || k > 3) {
        throw std::invalid_argument("moment order must be 1, 2 or 3");
    }
}

inline double int_pow(double x, int k) {
    double r = x;
    for (int i = 1; i < k; ++i) r *= x;
    return r;
}

template <typename F>
double gaussian_average(F&& f, const WaveletWidth& width, const QuadratureSettings& settings) {
    const double g = width.gamma;
    const auto weighted = [&](double u) { return std::exp(-(u / g) * (u / g)) * f(u); };
    const auto estimate = integrate_adaptive(weighted, 0.0, settings.truncation_sigmas * g, settings);
    return estimate.value * 2.0 / (g * std::sqrt(M_PI));
}

}  // namespace detail

/// <cos^k Omega> over the Gaussian momentum profile, evaluated in the
/// variable u = sinh(xi) so the cosh(xi) Jacobian of the rapidity integral
/// is absorbed exactly:
///
///   (2 / (gamma sqrt(pi))) Int_0^inf e^{-u^2/gamma^2} cos^k(Omega(u)) du
///
/// truncated at truncation_sigmas * gamma (tail weight below double noise
/// for the default 6.5). The weight self-normalizes: a unit integrand gives
/// 1 up to quadrature error.
inline double wigner_moment(int k, const WaveletWidth& width, double eta, double theta,
                            const QuadratureSettings& settings = {}) {
    detail::check_moment_order(k);
    width.validate();
    if (!(eta >= 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("wigner_moment: eta must satisfy eta >= 0");
    }
    return detail::gaussian_average(
        [&](double u) { return detail::int_pow(wigner_cosine_u(u, eta, theta), k); },
        width, settings);
}

/// Large-boost limit of wigner_moment at theta = 0. There cos(Omega) tends
/// to 1/cosh(xi) = (1 + u^2)^{-1/2}, so the moment tends to
///
///   (2 / (gamma sqrt(pi))) Int_0^inf e^{-u^2/gamma^2} (1 + u^2)^{-k/2} du
///
/// which is strictly positive: the fidelity floor seen by ultrarelativistic
/// observers.
inline double asymptotic_moment(int k, const WaveletWidth& width,
                                const QuadratureSettings& settings = {}) {
    detail::check_moment_order(k);
    width.validate();
    return detail::gaussian_average(
        [&](double u) { return 1.0 / detail::int_pow(std::hypot(1.0, u), k); },
        width, settings);
}

/// All three moments for one (gamma, eta, theta); compute once and pass the
/// record around, every closed-form fidelity shares these integrals.
inline WignerMoments compute_moments(const WaveletWidth& width, double eta, double theta,
                                     const QuadratureSettings& settings = {}) {
    return {wigner_moment(1, width, eta, theta, settings),
            wigner_moment(2, width, eta, theta, settings),
            wigner_moment(3, width, eta, theta, settings)};
}

inline WignerMoments compute_asymptotic_moments(const WaveletWidth& width,
                                                const QuadratureSettings& settings = {}) {
    return {asymptotic_moment(1, width, settings),
            asymptotic_moment(2, width, settings),
            asymptotic_moment(3, width, settings)};
}

}  // namespace spinfid
