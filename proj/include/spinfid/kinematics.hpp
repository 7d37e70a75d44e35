#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

namespace spinfid {

/// Kinematic inputs to every Wigner-rotation formula: the particle rapidity
/// xi (sinh xi = p/mc), the observer boost rapidity eta (tanh eta = V/c) and
/// the boost polar angle theta, with boost direction (sin theta, 0, cos theta).
/// Particles move along +/- x, so the rotation axis is the y-axis throughout.
struct BoostGeometry {
    double xi = 0.0;
    double eta = 0.0;
    double theta = 0.0;

    void validate() const {
        if (!std::isfinite(xi)) {
            throw std::invalid_argument("BoostGeometry: particle rapidity must be finite");
        }
        if (!(eta >= 0.0) || !std::isfinite(eta)) {
            throw std::invalid_argument("BoostGeometry: boost rapidity must satisfy eta >= 0");
        }
        if (!(theta >= 0.0 && theta <= M_PI)) {
            throw std::invalid_argument("BoostGeometry: boost angle must lie in [0, pi]");
        }
    }
};

/// Wigner rotation angle stored as (cos, sin) pair, Omega in (-pi, pi].
struct WignerAngle {
    double cos_omega = 1.0;
    double sin_omega = 0.0;
};

/// Rapidity of a speed fraction beta = V/c. Throws std::domain_error for
/// superluminal input (|beta| >= 1).
inline double rapidity_from_beta(double beta) {
    if (!(std::abs(beta) < 1.0)) {
        throw std::domain_error("rapidity_from_beta: superluminal speed fraction, |beta| must be < 1");
    }
    return std::atanh(beta);
}

inline double beta_from_rapidity(double rapidity) {
    return std::tanh(rapidity);
}

/// cos(Omega) for a particle moving along the x-axis with u = sinh(xi)
/// (signed: u < 0 means motion along -x) seen under a boost of rapidity eta
/// at polar angle theta in the xz-plane:
///
///   cos(Omega) = 1 - cos^2(theta) * (cosh eta - 1)(cosh xi - 1)
///                    / (1 + cosh eta cosh xi + sin theta sinh eta u)
///
/// Evaluated with numerator and denominator scaled by sech(eta) so it stays
/// finite for arbitrarily large boosts, and with the cosh-minus-one factors
/// formed without cancellation. The denominator is strictly positive for all
/// eta >= 0, theta in [0, pi], so no special cases are needed; eta = 0 and
/// u = 0 give exactly 1.
inline double wigner_cosine_u(double u, double eta, double theta) {
    const double cosh_xi = std::hypot(1.0, u);
    const double cos_th = std::cos(theta);
    const double sin_th = std::sin(theta);

    // (cosh eta - 1) / cosh eta, cancellation-safe for small eta
    const double sech_eta = 1.0 / std::cosh(eta);
    double cosh_eta_m1_scaled;
    if (eta < 1.0) {
        const double sh = std::sinh(0.5 * eta);
        cosh_eta_m1_scaled = 2.0 * sh * sh * sech_eta;
    } else {
        cosh_eta_m1_scaled = 1.0 - sech_eta;
    }

    const double cosh_xi_m1 = u * u / (1.0 + cosh_xi);
    const double num = cosh_eta_m1_scaled * cosh_xi_m1;
    const double den = sech_eta + cosh_xi + sin_th * std::tanh(eta) * u;
    return 1.0 - cos_th * cos_th * num / den;
}

/// Full signed angle for signed u: sin(Omega) flips with the direction of
/// motion because the rotation axis e x p / |e x p| reverses with p.
inline WignerAngle wigner_angle_u(double u, double eta, double theta) {
    double c = wigner_cosine_u(u, eta, theta);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    const double s = std::sqrt(std::fmax(0.0, (1.0 - c) * (1.0 + c)));
    return {c, u >= 0.0 ? s : -s};
}

/// Wigner angle for a particle of rapidity geom.xi moving along
/// momentum_sign * x under the boost (geom.eta, geom.theta).
inline WignerAngle wigner_angle(const BoostGeometry& geom, int momentum_sign = 1) {
    geom.validate();
    if (momentum_sign != 1 && momentum_sign != -1) {
        throw std::invalid_argument("wigner_angle: momentum_sign must be +1 or -1");
    }
    const double u = momentum_sign * std::sinh(geom.xi);
    if (!std::isfinite(u)) {
        throw std::domain_error("wigner_angle: sinh(xi) overflows");
    }
    return wigner_angle_u(u, geom.eta, geom.theta);
}

/// Spin-1/2 representation of the rotation, about the y-axis:
///   [ cos(Omega/2)   sin(Omega/2) ]
///   [ -sin(Omega/2)  cos(Omega/2) ]
/// Half-angle values recovered from (cos Omega, sin Omega); cos(Omega/2) >= 0
/// since Omega is taken in (-pi, pi].
inline Eigen::Matrix2d wigner_rotation_matrix(const WignerAngle& angle) {
    const double ch = std::sqrt(0.5 * (1.0 + angle.cos_omega));
    const double sh = std::copysign(std::sqrt(0.5 * (1.0 - angle.cos_omega)), angle.sin_omega);
    Eigen::Matrix2d m;
    m << ch, sh,
        -sh, ch;
    return m;
}

}  // namespace spinfid
