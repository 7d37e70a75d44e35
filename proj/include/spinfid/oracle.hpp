#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spinfid/density_matrix.hpp"
#include "spinfid/fidelity.hpp"
#include "spinfid/kinematics.hpp"
#include "spinfid/moments.hpp"
#include "spinfid/quadrature.hpp"

namespace spinfid {

/// Support of the discretized momentum distribution. PositiveAxis samples
/// u = p/mc on (0, 6.5 gamma); SymmetricLine mirrors the same nodes about
/// zero. SymmetricLine is the reading under which the odd sin(Omega)
/// averages vanish at theta = 0.
enum class MomentumSupport { PositiveAxis, SymmetricLine };

inline const char* to_string(MomentumSupport s) {
    return s == MomentumSupport::PositiveAxis ? "positive" : "symmetric";
}

/// Discrete momentum distribution: nodes u_i with probabilities w_i.
struct MomentumGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    MomentumSupport support = MomentumSupport::SymmetricLine;
};

/// Gauss-Legendre discretization of the Gaussian momentum profile on
/// [0, 6.5 gamma] (PositiveAxis) or [-6.5 gamma, 6.5 gamma] (SymmetricLine).
/// The rule is placed in xi = asinh(u): the factors of the averaged
/// rotations are entire in xi, while in u they carry branch points at
/// u = +-i that throttle refinement on wide grids. Node positions still
/// span the stated u-intervals; weights carry the cosh(xi) Jacobian times
/// the Gaussian and are renormalized to total exactly 1, which makes the
/// discrete average trace-preserving to machine precision. For
/// SymmetricLine the positive half is mirrored, so the node set is exactly
/// symmetric (n is rounded up to even).
inline MomentumGrid build_momentum_grid(const WaveletWidth& width, int n, MomentumSupport support) {
    width.validate();
    if (n < 8) {
        throw std::invalid_argument("build_momentum_grid: need at least 8 nodes");
    }
    constexpr double kTruncationSigmas = 6.5;
    const double xi_max = std::asinh(kTruncationSigmas * width.gamma);

    const int half = support == MomentumSupport::PositiveAxis ? n : (n + 1) / 2;
    const GaussLegendreRule rule = gauss_legendre(half);

    std::vector<double> u(half), w(half);
    for (int i = 0; i < half; ++i) {
        const double xi = 0.5 * xi_max * (rule.nodes[i] + 1.0);
        u[i] = std::sinh(xi);
        w[i] = rule.weights[i] * std::cosh(xi) * std::exp(-(u[i] / width.gamma) * (u[i] / width.gamma));
    }

    MomentumGrid grid;
    grid.support = support;
    if (support == MomentumSupport::PositiveAxis) {
        grid.nodes = std::move(u);
        grid.weights = std::move(w);
    } else {
        grid.nodes.reserve(2 * half);
        grid.weights.reserve(2 * half);
        for (int i = half - 1; i >= 0; --i) {
            grid.nodes.push_back(-u[i]);
            grid.weights.push_back(w[i]);
        }
        for (int i = 0; i < half; ++i) {
            grid.nodes.push_back(u[i]);
            grid.weights.push_back(w[i]);
        }
    }

    double total = 0.0;
    for (double wi : grid.weights) total += wi;
    for (double& wi : grid.weights) wi /= total;
    return grid;
}

/// Grid-consistent moments: <cos^k Omega> under the grid's own weights.
/// For GHZ these make the closed forms identities of the discrete average.
inline WignerMoments grid_moments(const MomentumGrid& grid, double eta, double theta) {
    double m1 = 0.0, m2 = 0.0, m3 = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        const double x = wigner_cosine_u(grid.nodes[i], eta, theta);
        const double w = grid.weights[i];
        m1 += w * x;
        m2 += w * x * x;
        m3 += w * x * x * x;
    }
    return {m1, m2, m3};
}

namespace detail {

using Matrix8d = Eigen::Matrix<double, 8, 8>;

inline Matrix8d kron3(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b,
                      const Eigen::Matrix2d& c) {
    Matrix8d out;
    for (int i1 = 0; i1 < 2; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j2 = 0; j2 < 2; ++j2)
                    for (int i3 = 0; i3 < 2; ++i3)
                        for (int j3 = 0; j3 < 2; ++j3)
                            out(4 * i1 + 2 * i2 + i3, 4 * j1 + 2 * j2 + j3) =
                                a(i1, j1) * b(i2, j2) * c(i3, j3);
    return out;
}

/// Per-node spin rotations; the sign of each node sets the rotation sense.
inline std::vector<Eigen::Matrix2d> node_rotations(const MomentumGrid& grid, double eta,
                                                   double theta) {
    std::vector<Eigen::Matrix2d> out;
    out.reserve(grid.nodes.size());
    for (double u : grid.nodes) {
        out.push_back(wigner_rotation_matrix(wigner_angle_u(u, eta, theta)));
    }
    return out;
}

}  // namespace detail

/// Brute-force boosted reduced density matrix: the rest state conjugated by
/// per-particle rotations and averaged over the discrete momentum
/// distribution.
///
///   Product: independent momenta; the triple average factorizes into three
///            single-particle averaged maps applied per tensor slot, which
///            is identical to the n^3 triple sum at O(n) cost.
///   PairCorrelated: particles 2 and 3 share a grid index (the discrete
///            delta-function limit), particle 1 is averaged independently.
///   TripleCorrelated: all three share one index.
inline DensityMatrix8 boosted_density_oracle(SpinStateKind state, CorrelationMode corr,
                                             const MomentumGrid& grid, double eta, double theta) {
    if (!(eta >= 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("boosted_density_oracle: eta must satisfy eta >= 0");
    }
    if (!(theta >= 0.0 && theta <= M_PI)) {
        throw std::invalid_argument("boosted_density_oracle: theta must lie in [0, pi]");
    }
    const auto rotations = detail::node_rotations(grid, eta, theta);
    const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
    const std::size_t n = grid.nodes.size();

    detail::Matrix8d rho = rest_density(state).matrix().real();

    const auto average_over = [&](const detail::Matrix8d& input, auto&& embed) {
        detail::Matrix8d acc = detail::Matrix8d::Zero();
        for (std::size_t i = 0; i < n; ++i) {
            const detail::Matrix8d k = embed(rotations[i]);
            acc += grid.weights[i] * (k * input * k.transpose());
        }
        return acc;
    };

    detail::Matrix8d out;
    switch (corr) {
        case CorrelationMode::Product: {
            out = average_over(rho, [&](const Eigen::Matrix2d& d) { return detail::kron3(d, id, id); });
            out = average_over(out, [&](const Eigen::Matrix2d& d) { return detail::kron3(id, d, id); });
            out = average_over(out, [&](const Eigen::Matrix2d& d) { return detail::kron3(id, id, d); });
            break;
        }
        case CorrelationMode::PairCorrelated: {
            out = average_over(rho, [&](const Eigen::Matrix2d& d) { return detail::kron3(id, d, d); });
            out = average_over(out, [&](const Eigen::Matrix2d& d) { return detail::kron3(d, id, id); });
            break;
        }
        case CorrelationMode::TripleCorrelated: {
            out = average_over(rho, [&](const Eigen::Matrix2d& d) { return detail::kron3(d, d, d); });
            break;
        }
    }
    return DensityMatrix8(out.cast<std::complex<double>>());
}

/// Spin fidelity of the rest state against the brute-force boosted state.
/// The pure-state reduction Tr(rho rho_b) is used and cross-checked against
/// the full Uhlmann formula.
inline double oracle_fidelity(SpinStateKind state, CorrelationMode corr, const MomentumGrid& grid,
                              double eta, double theta) {
    const DensityMatrix8 rest = rest_density(state);
    const DensityMatrix8 boosted = boosted_density_oracle(state, corr, grid, eta, theta);
    const double fid = pure_fidelity_against(rest, boosted);
    const double uhlmann = uhlmann_fidelity(rest, boosted);
    if (!(std::abs(fid - uhlmann) <= 1e-10)) {
        throw InvalidStateError("oracle_fidelity: pure-state reduction and Uhlmann value disagree");
    }
    return fid;
}

}  // namespace spinfid
