#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qpacs/qalgebra.hpp"

namespace qpacs {

using Complex = std::complex<double>;

inline constexpr double kDiskMargin = 0.98;
inline constexpr std::int64_t kStateCap = 4096;
inline constexpr std::int64_t kTruncationBlock = 64;
inline constexpr double kDefaultStateTol = 1e-12;

inline void check_disk(const Complex& alpha, const DeformationParam& dp) {
    if (dp.is_limit()) return;  // series entire in the classical limit
    if (std::abs(alpha) >= kDiskMargin * dp.radius())
        throw DivergenceError("alpha with |alpha| = " + std::to_string(std::abs(alpha)) +
                              " outside the enforced disk 0.98 * " + std::to_string(dp.radius()));
}

/// ln of the two normalisation constants of the photon-added coherent state.
struct NormalizationPair {
    double ln_N_coh;   // ln N(alpha, q)
    double ln_N_pacs;  // ln N(alpha, m, q)
    double ln_N_hat;   // ln N-hat = ln_N_coh + ln_N_pacs
};

namespace state_detail {

/// Streaming log-sum-exp accumulator for positive series given as ln-terms.
class LogSum {
public:
    void add(double ln_term) {
        if (ln_term == -std::numeric_limits<double>::infinity()) return;
        if (empty_) {
            max_ = ln_term;
            sum_ = 1.0;
            empty_ = false;
            return;
        }
        if (ln_term > max_) {
            sum_ = sum_ * std::exp(max_ - ln_term) + 1.0;
            max_ = ln_term;
        } else {
            sum_ += std::exp(ln_term - max_);
        }
    }

    bool empty() const { return empty_; }
    double ln_value() const { return empty_ ? -std::numeric_limits<double>::infinity() : max_ + std::log(sum_); }

private:
    bool empty_ = true;
    double max_ = 0.0;
    double sum_ = 0.0;
};

}  // namespace state_detail

/// ln N-hat² = ln Σ |α|^{2n} [n+m]_q! / ([n]_q!)², summed until the geometric
/// tail estimate drops below tol. Also used for the coherent normalisation
/// (m = 0 gives ln N²(α, q)).
inline double ln_norm_hat_squared(const Complex& alpha, std::int64_t m, const QFactorials& qf,
                                  double tol = kDefaultStateTol,
                                  std::int64_t cap = kStateCap) {
    const double ln_a2 = 2.0 * std::log(std::abs(alpha));
    state_detail::LogSum acc;
    double prev_ln = 0.0;
    for (std::int64_t n = 0; n <= cap; ++n) {
        const double ln_t = n == 0 ? qf.ln_factorial(m)
                            : alpha == Complex(0.0)
                                ? -std::numeric_limits<double>::infinity()
                                : static_cast<double>(n) * ln_a2 + qf.ln_factorial(n + m) -
                                      2.0 * qf.ln_factorial(n);
        acc.add(ln_t);
        if (n > 0) {
            const double r = std::exp(ln_t - prev_ln);
            if (r < 1.0 && std::exp(ln_t - acc.ln_value()) * r / (1.0 - r) < tol) break;
        }
        if (alpha == Complex(0.0)) break;
        prev_ln = ln_t;
        if (n == cap)
            throw TruncationError("normalisation series did not reach tolerance within cap");
    }
    return acc.ln_value();
}

inline NormalizationPair ln_normalizations(const Complex& alpha, std::int64_t m,
                                           const DeformationParam& dp,
                                           std::int64_t /*n_max*/ = kStateCap) {
    check_disk(alpha, dp);
    QFactorials qf(dp);
    const double ln_coh2 = ln_norm_hat_squared(alpha, 0, qf);
    const double ln_hat2 = m == 0 ? ln_coh2 : ln_norm_hat_squared(alpha, m, qf);
    NormalizationPair p;
    p.ln_N_coh = 0.5 * ln_coh2;
    p.ln_N_hat = 0.5 * ln_hat2;
    p.ln_N_pacs = p.ln_N_hat - p.ln_N_coh;
    return p;
}

/// Truncated Fock-basis representation of a q-PACS (m = 0: q-coherent state;
/// alpha = 0: the Fock state |m>). Immutable after construction.
struct ModeState {
    Complex alpha;
    std::int64_t m = 0;
    DeformationParam dp = DeformationParam::classical_limit();
    std::vector<Complex> coeffs;  // indexed by Fock level 0..n_max
    std::int64_t n_max = 0;
    double tail_bound = 0.0;
};

/// PACS coefficients: coeffs[n+m] ∝ (α^n / [n]_q!) √([n+m]_q!), normalised.
/// n_max grows in blocks until the last block and the geometric tail estimate
/// both fall below tol.
inline ModeState pacs_state(const Complex& alpha, std::int64_t m, const DeformationParam& dp,
                            double tol = kDefaultStateTol) {
    if (m < 0) throw Error("pacs_state: m must be nonnegative");
    if (!(tol > 0.0)) throw Error("pacs_state: tol must be positive");
    check_disk(alpha, dp);
    QFactorials qf(dp);

    if (alpha == Complex(0.0)) {
        ModeState st;
        st.alpha = alpha;
        st.m = m;
        st.dp = dp;
        st.n_max = m;
        st.coeffs.assign(static_cast<std::size_t>(m + 1), Complex(0.0));
        st.coeffs.back() = 1.0;
        st.tail_bound = 0.0;
        return st;
    }

    const double ln_a = std::log(std::abs(alpha));
    const double arg_a = std::arg(alpha);

    // ln |c~_{n+m}|² for the unnormalised coefficients
    auto ln_w = [&](std::int64_t n) {
        return 2.0 * static_cast<double>(n) * ln_a + qf.ln_factorial(n + m) -
               2.0 * qf.ln_factorial(n);
    };

    state_detail::LogSum total;
    std::int64_t n_terms = 0;
    double tail = 0.0;
    for (;;) {
        state_detail::LogSum block;
        for (std::int64_t n = n_terms; n < n_terms + kTruncationBlock; ++n) {
            const double w = ln_w(n);
            total.add(w);
            block.add(w);
        }
        n_terms += kTruncationBlock;
        const double block_frac = std::exp(block.ln_value() - total.ln_value());
        const double r = std::exp(ln_w(n_terms) - ln_w(n_terms - 1));
        tail = r < 1.0 ? std::exp(ln_w(n_terms - 1) - total.ln_value()) * r / (1.0 - r)
                       : std::numeric_limits<double>::infinity();
        if (block_frac < tol && tail < tol) break;
        if (n_terms >= kStateCap)
            throw TruncationError("pacs_state: truncation cap reached before tolerance");
    }

    ModeState st;
    st.alpha = alpha;
    st.m = m;
    st.dp = dp;
    st.n_max = n_terms - 1 + m;
    st.tail_bound = tail;
    st.coeffs.assign(static_cast<std::size_t>(st.n_max + 1), Complex(0.0));
    const double ln_total = total.ln_value();
    for (std::int64_t n = 0; n < n_terms; ++n) {
        const double mag = std::exp(0.5 * (ln_w(n) - ln_total));
        const double ph = static_cast<double>(n) * arg_a;
        st.coeffs[static_cast<std::size_t>(n + m)] = std::polar(mag, ph);
    }
    return st;
}

inline ModeState coherent_state(const Complex& alpha, const DeformationParam& dp,
                                double tol = kDefaultStateTol) {
    return pacs_state(alpha, 0, dp, tol);
}

}  // namespace qpacs
