#pragma once

#include <stdexcept>
#include <string>

#include "spinfid/density_matrix.hpp"
#include "spinfid/moments.hpp"

namespace spinfid {

enum class SpinStateKind { GHZ, W };

enum class CorrelationMode { Product, PairCorrelated, TripleCorrelated };

inline const char* to_string(SpinStateKind s) {
    return s == SpinStateKind::GHZ ? "ghz" : "w";
}

inline const char* to_string(CorrelationMode c) {
    switch (c) {
        case CorrelationMode::Product: return "product";
        case CorrelationMode::PairCorrelated: return "pair";
        case CorrelationMode::TripleCorrelated: return "triple";
    }
    return "?";
}

/// Rest-frame reduced spin density matrix.
///   GHZ: (|uuu> + |ddd>)(<uuu| + <ddd|) / 2 -- corners at indices {0, 7}.
///   W:   uniform 3x3 block over {|udd>, |dud>, |ddu>} = indices {3, 5, 6}.
/// Both are pure.
inline DensityMatrix8 rest_density(SpinStateKind state) {
    Matrix8cd m = Matrix8cd::Zero();
    if (state == SpinStateKind::GHZ) {
        for (int i : {0, 7}) {
            for (int j : {0, 7}) {
                m(i, j) = 0.5;
            }
        }
    } else {
        for (int i : {3, 5, 6}) {
            for (int j : {3, 5, 6}) {
                m(i, j) = 1.0 / 3.0;
            }
        }
    }
    return DensityMatrix8(m);
}

/// Closed-form spin fidelity as a polynomial in the Wigner moments:
///
///   GHZ product:  (m1^3 + 3 m1^2 + 3 m1 + 1) / 8
///   GHZ pair:     (m1 m2 + 2 m1^2 + m2 + 3 m1 + 1) / 8
///   GHZ triple:   (m3 + 3 m2 + 3 m1 + 1) / 8
///   W   product:  (7 m1^3 + 5 m1^2 + 5 m1 + 7) / 24
///   W   pair:     (39 m1 m2 + 7 m2 + 10 m1^2 - 3 m1 + 19) / 72
///   W   triple:   (75 m3 + 25 m2 - 39 m1 + 11) / 72
///
/// Every coefficient set sums to its denominator, so unit moments give
/// exactly 1. A result outside [0, 1] signals inconsistent moments and
/// throws InvalidStateError.
inline double closed_form_fidelity(SpinStateKind state, CorrelationMode corr,
                                   const WignerMoments& moments) {
    const double m1 = moments.m1;
    const double m2 = moments.m2;
    const double m3 = moments.m3;
    for (int k = 1; k <= 3; ++k) {
        if (!(std::abs(moments.get(k)) <= 1.0 + 1e-12)) {
            throw std::invalid_argument("closed_form_fidelity: moment m" + std::to_string(k) +
                                        " outside [-1, 1]");
        }
    }

    double f = 0.0;
    if (state == SpinStateKind::GHZ) {
        switch (corr) {
            case CorrelationMode::Product:
                f = (m1 * m1 * m1 + 3.0 * m1 * m1 + 3.0 * m1 + 1.0) / 8.0;
                break;
            case CorrelationMode::PairCorrelated:
                f = (m1 * m2 + 2.0 * m1 * m1 + m2 + 3.0 * m1 + 1.0) / 8.0;
                break;
            case CorrelationMode::TripleCorrelated:
                f = (m3 + 3.0 * m2 + 3.0 * m1 + 1.0) / 8.0;
                break;
        }
    } else {
        switch (corr) {
            case CorrelationMode::Product:
                f = (7.0 * m1 * m1 * m1 + 5.0 * m1 * m1 + 5.0 * m1 + 7.0) / 24.0;
                break;
            case CorrelationMode::PairCorrelated:
                f = (39.0 * m1 * m2 + 7.0 * m2 + 10.0 * m1 * m1 - 3.0 * m1 + 19.0) / 72.0;
                break;
            case CorrelationMode::TripleCorrelated:
                f = (75.0 * m3 + 25.0 * m2 - 39.0 * m1 + 11.0) / 72.0;
                break;
        }
    }
    if (!(f >= 0.0 && f <= 1.0 + 1e-12)) {
        throw InvalidStateError("closed_form_fidelity: value " + std::to_string(f) +
                                " outside [0, 1]; moments are inconsistent");
    }
    return f;
}

}  // namespace spinfid
