#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinfid {

struct QuadratureSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 200;
    double truncation_sigmas = 6.5;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
            throw std::invalid_argument("QuadratureSettings: tolerances must be positive");
        }
        if (max_subdivisions < 1) {
            throw std::invalid_argument("QuadratureSettings: max_subdivisions must be >= 1");
        }
        if (!(truncation_sigmas >= 4.0)) {
            throw std::invalid_argument("QuadratureSettings: truncation_sigmas must be >= 4");
        }
    }
};

struct IntegralEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    int subdivisions = 0;
};

/// Thrown when adaptive subdivision fails to reach tolerance; carries the
/// best estimate obtained and its error bound.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, IntegralEstimate best)
        : std::runtime_error(what), best_(best) {}
    const IntegralEstimate& best() const noexcept { return best_; }

private:
    IntegralEstimate best_;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr double kGK15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGK15Weights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kGauss7Weights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct PanelResult {
    double gauss = 0.0;
    double kronrod = 0.0;
};

template <typename F>
PanelResult gauss_kronrod_panel(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double fc = f(mid);
    double kron = kGK15Weights[7] * fc;
    double gauss = kGauss7Weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGK15Nodes[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kron += kGK15Weights[i] * fsum;
        if (i % 2 == 1) {
            gauss += kGauss7Weights[i / 2] * fsum;
        }
    }
    return {gauss * half, kron * half};
}

struct Segment {
    double a, b, value, error;
};

struct SegmentWorse {
    bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. The interval is
/// seeded with four panels, then the panel with the largest |K15 - G7|
/// discrepancy is bisected until the summed bound drops below
/// max(abs_tol, rel_tol * |integral|). Throws QuadratureError once
/// settings.max_subdivisions bisections have been spent.
template <typename F>
IntegralEstimate integrate_adaptive(F&& f, double a, double b, const QuadratureSettings& settings) {
    settings.validate();
    std::priority_queue<detail::Segment, std::vector<detail::Segment>, detail::SegmentWorse> queue;

    auto push = [&](double lo, double hi) {
        const auto panel = detail::gauss_kronrod_panel(f, lo, hi);
        queue.push({lo, hi, panel.kronrod, std::abs(panel.kronrod - panel.gauss)});
    };

    constexpr int kSeedPanels = 4;
    for (int i = 0; i < kSeedPanels; ++i) {
        const double lo = a + (b - a) * i / kSeedPanels;
        const double hi = a + (b - a) * (i + 1) / kSeedPanels;
        push(lo, hi);
    }

    int subdivisions = 0;
    for (;;) {
        double total = 0.0;
        double err = 0.0;
        {
            auto copy = queue;
            while (!copy.empty()) {
                total += copy.top().value;
                err += copy.top().error;
                copy.pop();
            }
        }
        if (err <= std::fmax(settings.abs_tol, settings.rel_tol * std::abs(total))) {
            return {total, err, subdivisions};
        }
        if (subdivisions >= settings.max_subdivisions) {
            throw QuadratureError(
                "integrate_adaptive: tolerance not reached within max_subdivisions",
                {total, err, subdivisions});
        }
        const detail::Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
        ++subdivisions;
    }
}

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending on (-1, 1)
    std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], by
/// Newton iteration on P_n from the Chebyshev initial guess. Symmetric
/// pairs are mirrored exactly.
inline GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: n must be >= 1");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double step = p0 / dp;
            z -= step;
            if (std::abs(step) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace spinfid
