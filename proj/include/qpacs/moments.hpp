#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>

#include "qpacs/operator_words.hpp"
#include "qpacs/states.hpp"

namespace qpacs {

inline constexpr double kDefaultMomentTol = 1e-10;
inline constexpr std::int64_t kMomentTermCap = 8192;

enum class Ordering { Normal, Antinormal, NumberPower };

struct MomentQuery {
    std::int64_t daggers = 0;
    std::int64_t lowerings = 0;
    Ordering ordering = Ordering::Normal;
};

struct MomentValue {
    Complex value;
    double tail_estimate = 0.0;
    std::int64_t terms_used = 0;
};

/// Closed-form series evaluator for expectation values in a fixed q-PACS
/// |alpha, m>_q. Memoises per-(N, L) results; one instance per thread.
class MomentEvaluator {
public:
    MomentEvaluator(Complex alpha, std::int64_t m, DeformationParam dp,
                    double tol = kDefaultMomentTol)
        : alpha_(alpha), m_(m), dp_(dp), tol_(tol), qf_(dp) {
        if (m < 0) throw Error("MomentEvaluator: m must be nonnegative");
        check_disk(alpha, dp);
        ln_hat2_ = ln_norm_hat_squared(alpha_, m_, qf_, tol_ * 1e-2, kMomentTermCap);
    }

    Complex alpha() const { return alpha_; }
    std::int64_t m() const { return m_; }
    const DeformationParam& dp() const { return dp_; }
    double tol() const { return tol_; }

    /// <A†^N A^L>
    MomentValue normal(std::int64_t N, std::int64_t L) {
        return memoised(0, N, L, [&] { return normal_uncached(N, L); });
    }

    /// <A^N A†^L>
    MomentValue antinormal(std::int64_t N, std::int64_t L) {
        return memoised(1, N, L, [&] { return antinormal_uncached(N, L); });
    }

    /// <(A†A)^N>
    MomentValue number_power(std::int64_t N) {
        return memoised(2, N, N, [&] { return number_power_uncached(N); });
    }

    /// <[A, A†]^N> = Σ_k C(N,k) (q²-1)^k <(A†A)^k>
    MomentValue commutator_power(std::int64_t N) {
        if (N < 1) throw Error("commutator_power: N must be >= 1");
        const double c = dp_.is_limit() ? 0.0 : dp_.q_squared() - 1.0;
        double acc = 0.0;
        double tail = 0.0;
        std::int64_t terms = 0;
        double binom = 1.0;
        double cpow = 1.0;
        for (std::int64_t k = 0; k <= N; ++k) {
            const MomentValue np = number_power(k);
            acc += binom * cpow * np.value.real();
            tail += std::abs(binom * cpow) * np.tail_estimate;
            terms += np.terms_used;
            binom = binom * static_cast<double>(N - k) / static_cast<double>(k + 1);
            cpow *= c;
        }
        return {Complex(acc, 0.0), tail, terms};
    }

    /// Σ P_{d,l}(q) <A†^d A^l> over a normal form.
    MomentValue normal_form(const NormalForm& nf) {
        Complex acc = 0.0;
        double tail = 0.0;
        std::int64_t terms = 0;
        for (const auto& [k, p] : nf.terms()) {
            const double w = p.evaluate(dp_);
            const MomentValue mv = normal(k.first, k.second);
            acc += w * mv.value;
            tail += std::abs(w) * mv.tail_estimate;
            terms += mv.terms_used;
        }
        return {acc, tail, terms};
    }

    /// 2^{pref} Σ_w e^{iφw} Σ P_{d,l}(q) <A†^d A^l> at a fixed phase angle.
    MomentValue quadrature_moment(const QuadratureExpansion& exp, double phi) {
        Complex acc = 0.0;
        double tail = 0.0;
        std::int64_t terms = 0;
        for (const auto& [w, nf] : exp.phase_terms) {
            const MomentValue mv = normal_form(nf);
            acc += std::polar(1.0, phi * static_cast<double>(w)) * mv.value;
            tail += mv.tail_estimate;
            terms += mv.terms_used;
        }
        const double pref = std::ldexp(1.0, exp.prefactor_log2);
        return {pref * acc, pref * tail, terms};
    }

private:
    template <typename Fn>
    MomentValue memoised(int kind, std::int64_t N, std::int64_t L, Fn fn) {
        const auto key = std::make_tuple(kind, N, L);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        MomentValue v = fn();
        memo_.emplace(key, v);
        return v;
    }

    // Σ_{n >= n0} exp(ln_term(n) - ln N-hat²), positive terms, geometric tail stop.
    MomentValue series(std::int64_t n0, const std::function<double(std::int64_t)>& ln_term) {
        if (alpha_ == Complex(0.0)) {
            // only the n = 0 term can survive
            if (n0 > 0) return {Complex(0.0), 0.0, 0};
            return {Complex(std::exp(ln_term(0) - ln_hat2_), 0.0), 0.0, 1};
        }
        double acc = 0.0;
        double prev_ln = 0.0;
        std::int64_t terms = 0;
        for (std::int64_t n = n0;; ++n) {
            const double ln_t = ln_term(n);
            const double t = std::exp(ln_t - ln_hat2_);
            acc += t;
            ++terms;
            if (n > n0) {
                const double r = std::exp(ln_t - prev_ln);
                if (r < 1.0) {
                    const double tail = t * r / (1.0 - r);
                    if (tail < tol_ * std::max(acc, 1e-300))
                        return {Complex(acc, 0.0), tail, terms};
                }
            }
            prev_ln = ln_t;
            if (terms >= kMomentTermCap)
                throw ToleranceError("moment series: term cap reached before tolerance");
        }
    }

    double lnF(std::int64_t n) const { return qf_.ln_factorial(n); }

    // zero alpha keeps only the n = 0 series term, so the |alpha| factor is 1
    double ln_alpha_sq() const {
        return alpha_ == Complex(0.0) ? 0.0 : 2.0 * std::log(std::abs(alpha_));
    }

    MomentValue normal_uncached(std::int64_t N, std::int64_t L) {
        if (N < 0 || L < 0) throw Error("moment orders must be nonnegative");
        if (N == 0 && L == 0) return {Complex(1.0), 0.0, 0};
        const double ln_a2 = ln_alpha_sq();
        if (N == L) {
            // terms with n + m - N < 0 vanish (annihilation below the vacuum)
            const std::int64_t n0 = std::max<std::int64_t>(0, N - m_);
            return series(n0, [&](std::int64_t n) {
                return static_cast<double>(n) * ln_a2 + 2.0 * lnF(n + m_) - 2.0 * lnF(n) -
                       lnF(n + m_ - N);
            });
        }
        if (N > L) {
            const std::int64_t d = N - L;
            const std::int64_t n0 = std::max<std::int64_t>(0, L - m_);
            MomentValue mv = series(n0, [&](std::int64_t n) {
                return static_cast<double>(n) * ln_a2 + lnF(n + m_) + lnF(n + m_ + d) -
                       lnF(n) - lnF(n + d) - lnF(n + m_ - L);
            });
            mv.value *= std::pow(std::conj(alpha_), static_cast<double>(d));
            mv.tail_estimate *= std::pow(std::abs(alpha_), static_cast<double>(d));
            return mv;
        }
        const std::int64_t d = L - N;
        const std::int64_t n0 = std::max<std::int64_t>(0, N - m_);
        MomentValue mv = series(n0, [&](std::int64_t n) {
            return static_cast<double>(n) * ln_a2 + lnF(n + m_) + lnF(n + m_ + d) - lnF(n) -
                   lnF(n + d) - lnF(n + m_ - N);
        });
        mv.value *= std::pow(alpha_, static_cast<double>(d));
        mv.tail_estimate *= std::pow(std::abs(alpha_), static_cast<double>(d));
        return mv;
    }

    MomentValue antinormal_uncached(std::int64_t N, std::int64_t L) {
        if (N < 0 || L < 0) throw Error("moment orders must be nonnegative");
        if (N == 0 && L == 0) return {Complex(1.0), 0.0, 0};
        const double ln_a2 = ln_alpha_sq();
        if (N == L) {
            return series(0, [&](std::int64_t n) {
                return static_cast<double>(n) * ln_a2 + lnF(n + m_ + N) - 2.0 * lnF(n);
            });
        }
        const std::int64_t d = std::abs(N - L);
        const std::int64_t hi = std::max(N, L);
        MomentValue mv = series(0, [&](std::int64_t n) {
            return static_cast<double>(n) * ln_a2 + lnF(n + m_ + hi) - lnF(n) - lnF(n + d);
        });
        const Complex pref = N > L ? std::pow(alpha_, static_cast<double>(d))
                                   : std::pow(std::conj(alpha_), static_cast<double>(d));
        mv.value *= pref;
        mv.tail_estimate *= std::abs(pref);
        return mv;
    }

    MomentValue number_power_uncached(std::int64_t N) {
        if (N < 0) throw Error("number_power: N must be nonnegative");
        if (N == 0) return {Complex(1.0), 0.0, 0};
        const double ln_a2 = ln_alpha_sq();
        // the n + m = 0 term carries [0]^N = 0
        const std::int64_t n0 = m_ == 0 ? 1 : 0;
        if (alpha_ == Complex(0.0) && m_ == 0) return {Complex(0.0), 0.0, 0};
        return series(n0, [&](std::int64_t n) {
            return static_cast<double>(n) * ln_a2 + lnF(n + m_) - 2.0 * lnF(n) +
                   static_cast<double>(N) * q_ln_int(n + m_, dp_);
        });
    }

    Complex alpha_;
    std::int64_t m_;
    DeformationParam dp_;
    double tol_;
    QFactorials qf_;
    double ln_hat2_;
    std::map<std::tuple<int, std::int64_t, std::int64_t>, MomentValue> memo_;
};

inline MomentValue expval_normal(std::int64_t N, std::int64_t L, Complex alpha, std::int64_t m,
                                 const DeformationParam& dp, double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return ev.normal(N, L);
}

inline MomentValue expval_antinormal(std::int64_t N, std::int64_t L, Complex alpha,
                                     std::int64_t m, const DeformationParam& dp,
                                     double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return ev.antinormal(N, L);
}

inline MomentValue expval_number_power(std::int64_t N, Complex alpha, std::int64_t m,
                                       const DeformationParam& dp,
                                       double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return ev.number_power(N);
}

inline MomentValue expval_commutator_power(std::int64_t N, Complex alpha, std::int64_t m,
                                           const DeformationParam& dp,
                                           double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return ev.commutator_power(N);
}

inline MomentValue expval_normal_form(const NormalForm& nf, Complex alpha, std::int64_t m,
                                      const DeformationParam& dp,
                                      double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return ev.normal_form(nf);
}

inline MomentValue expval_quadrature(const QuadratureExpansion& exp, double phi, Complex alpha,
                                     std::int64_t m, const DeformationParam& dp,
                                     double tol = kDefaultMomentTol) {
    MomentEvaluator ev(alpha, m, dp, tol);
    return ev.quadrature_moment(exp, phi);
}

}  // namespace qpacs
