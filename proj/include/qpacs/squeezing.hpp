#pragma once

#include <cmath>

#include "qpacs/moments.hpp"

namespace qpacs {

enum class SqueezingKind { Hillery, HongMandel };

struct SqueezingReport {
    SqueezingKind kind;
    std::int64_t order;  // N
    double phi;
    double value;  // S_H or S_HM
    double numerator;
    double denominator;
    bool squeezed;  // value < 0
};

inline constexpr double kDenominatorFloor = 1e-12;

/// Hillery-type squeezing coefficient S_H for the quadrature
/// Y_N(φ) = ½(A^N e^{-iNφ} + A†^N e^{iNφ}).
inline SqueezingReport hillery(MomentEvaluator& ev, std::int64_t N, double phi) {
    if (N < 1) throw Error("hillery: N must be >= 1");
    const Complex a_N = std::conj(ev.normal(N, 0).value);    // <A^N>
    const Complex a_2N = std::conj(ev.normal(2 * N, 0).value);  // <A^{2N}>
    const double nrm = ev.normal(N, N).value.real();      // <A†^N A^N>
    const double anti = ev.antinormal(N, N).value.real();  // <A^N A†^N>

    const Complex phase = std::polar(1.0, -2.0 * static_cast<double>(N) * phi);
    const double numerator =
        2.0 * (((a_2N - a_N * a_N) * phase).real() - std::norm(a_N) + nrm);
    const double denominator = anti - nrm;
    if (std::abs(denominator) < kDenominatorFloor)
        throw DegenerateDenominatorError("hillery: degenerate denominator", numerator,
                                         denominator);
    const double value = numerator / denominator;
    return {SqueezingKind::Hillery, N, phi, value, numerator, denominator, value < 0.0};
}

inline SqueezingReport hillery(Complex alpha, std::int64_t m, const DeformationParam& dp,
                               std::int64_t N, double phi, double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return hillery(ev, N, phi);
}

/// Hong--Mandel-type squeezing coefficient S_HM of order 2N for the quadrature
/// Y(φ). Every <Y^j> comes from the rewriter expansion, not the printed
/// order-6 formulas; the commutator power is taken as a state expectation.
inline SqueezingReport hong_mandel(MomentEvaluator& ev, std::int64_t N, double phi) {
    if (N < 1) throw Error("hong_mandel: N must be >= 1");
    if (2 * N > kMaxQuadratureOrder)
        throw ResourceError("hong_mandel: order 2N exceeds quadrature cap");

    const double y_mean = ev.quadrature_moment(quadrature_power(1), phi).value.real();
    std::vector<double> y_pow(static_cast<std::size_t>(2 * N + 1), 1.0);
    for (std::int64_t j = 1; j <= 2 * N; ++j)
        y_pow[static_cast<std::size_t>(j)] =
            ev.quadrature_moment(quadrature_power(static_cast<int>(j)), phi).value.real();

    // <(ΔY)^{2N}> = Σ_k C(2N,k) (-1)^k <Y^{2N-k}> <Y>^k
    double central = 0.0;
    double binom = 1.0;
    double sign = 1.0;
    double mean_pow = 1.0;
    for (std::int64_t k = 0; k <= 2 * N; ++k) {
        central += binom * sign * y_pow[static_cast<std::size_t>(2 * N - k)] * mean_pow;
        binom = binom * static_cast<double>(2 * N - k) / static_cast<double>(k + 1);
        sign = -sign;
        mean_pow *= y_mean;
    }

    const double dfac = static_cast<double>(double_factorial_odd(static_cast<int>(N)));
    const double comm = ev.commutator_power(N).value.real();
    const double numerator = std::ldexp(central, static_cast<int>(2 * N)) - dfac * comm;
    const double denominator = dfac * comm;
    if (std::abs(denominator) < kDenominatorFloor)
        throw DegenerateDenominatorError("hong_mandel: degenerate denominator", numerator,
                                         denominator);
    const double value = numerator / denominator;
    return {SqueezingKind::HongMandel, N, phi, value, numerator, denominator, value < 0.0};
}

inline SqueezingReport hong_mandel(Complex alpha, std::int64_t m, const DeformationParam& dp,
                                   std::int64_t N, double phi,
                                   double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return hong_mandel(ev, N, phi);
}

}  // namespace qpacs
