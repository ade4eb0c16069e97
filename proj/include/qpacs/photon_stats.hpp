#pragma once

#include <cmath>
#include <string>

#include "qpacs/moments.hpp"

namespace qpacs {

enum class Classification { SubPoissonian, Poissonian, SuperPoissonian };

inline std::string to_string(Classification c) {
    switch (c) {
        case Classification::SubPoissonian: return "sub_poissonian";
        case Classification::Poissonian: return "poissonian";
        case Classification::SuperPoissonian: return "super_poissonian";
    }
    return "?";
}

inline constexpr double kClassificationTol = 1e-9;

struct StatisticsReport {
    std::int64_t order;     // N
    double g;               // g^{(N)}(0); NaN when undefined
    double Q;               // Q_N
    double mean_M;          // <A†A>
    double central_moment;  // <(ΔM)^N>
    Classification classification;
};

/// N-th central moment of the deformed number operator M = A†A:
/// <(ΔM)^N> = Σ_k C(N,k) (-1)^k <(A†A)^{N-k}> <A†A>^k.
inline double central_moment_M(MomentEvaluator& ev, std::int64_t N) {
    if (N < 1) throw Error("central_moment_M: N must be >= 1");
    if (N == 1) return 0.0;
    // a Fock state is a number eigenstate: ΔM vanishes identically
    if (ev.alpha() == Complex(0.0)) return 0.0;
    const double mean = ev.number_power(1).value.real();
    double acc = 0.0;
    double binom = 1.0;
    double sign = 1.0;
    double mean_pow = 1.0;
    for (std::int64_t k = 0; k <= N; ++k) {
        acc += binom * sign * ev.number_power(N - k).value.real() * mean_pow;
        binom = binom * static_cast<double>(N - k) / static_cast<double>(k + 1);
        sign = -sign;
        mean_pow *= mean;
    }
    return acc;
}

inline double central_moment_M(std::int64_t N, Complex alpha, std::int64_t m,
                               const DeformationParam& dp, double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return central_moment_M(ev, N);
}

namespace stats_detail {

inline StatisticsReport build_report(MomentEvaluator& ev, std::int64_t N) {
    if (N < 2) throw Error("photon statistics require order N >= 2");
    const double mean = ev.number_power(1).value.real();
    if (!(mean > 0.0))
        throw ZeroMeanError("photon statistics undefined on the vacuum (<M> = 0)");
    const double cm = central_moment_M(ev, N);
    StatisticsReport r;
    r.order = N;
    r.mean_M = mean;
    r.central_moment = cm;
    r.Q = cm / mean - 1.0;
    r.g = (cm - mean) / std::pow(mean, static_cast<double>(N)) + 1.0;
    r.classification = std::abs(r.Q) <= kClassificationTol ? Classification::Poissonian
                       : r.Q < 0.0                         ? Classification::SubPoissonian
                                                           : Classification::SuperPoissonian;
    return r;
}

}  // namespace stats_detail

/// Higher-order correlation function g^{(N)}(0) = (<(ΔM)^N> - <M>)/<M>^N + 1.
inline StatisticsReport correlation(MomentEvaluator& ev, std::int64_t N) {
    return stats_detail::build_report(ev, N);
}

inline StatisticsReport correlation(std::int64_t N, Complex alpha, std::int64_t m,
                                    const DeformationParam& dp,
                                    double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return correlation(ev, N);
}

/// Higher-order Mandel parameter Q_N = <(ΔM)^N>/<M> - 1.
inline StatisticsReport mandel(MomentEvaluator& ev, std::int64_t N) {
    return stats_detail::build_report(ev, N);
}

inline StatisticsReport mandel(std::int64_t N, Complex alpha, std::int64_t m,
                               const DeformationParam& dp, double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return mandel(ev, N);
}

}  // namespace qpacs
