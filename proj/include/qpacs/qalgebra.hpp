#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <vector>

#include "qpacs/errors.hpp"

namespace qpacs {

/// Deformation parameter q of the oscillator algebra A A† - q² A† A = 1,
/// restricted to q ∈ (0,1) plus a dedicated classical-limit path for q → 1.
class DeformationParam {
public:
    static constexpr double kLimitWindow = 1e-9;

    static DeformationParam deformed(double q) {
        if (!(q > 0.0))
            throw Error("q must be positive; negative and zero q are not supported");
        if (std::abs(1.0 - q) < kLimitWindow) return classical_limit();
        if (q > 1.0) throw Error("q > 1 regime is not supported");
        return DeformationParam(q, false);
    }

    static DeformationParam classical_limit() { return DeformationParam(1.0, true); }

    /// Accepts any q in (0,1]; q within 1e-9 of 1 routes to the limit path.
    static DeformationParam from_value(double q) { return deformed(q); }

    double q() const { return q_; }
    double q_squared() const { return q_ * q_; }
    bool is_limit() const { return limit_; }

    /// Convergence radius 1/sqrt(1-q²) of the coherent-state series
    /// (+inf on the limit path, where the series is entire).
    double radius() const {
        if (limit_) return std::numeric_limits<double>::infinity();
        return 1.0 / std::sqrt(1.0 - q_ * q_);
    }

    bool operator==(const DeformationParam& o) const {
        return limit_ == o.limit_ && q_ == o.q_;
    }

private:
    DeformationParam(double q, bool limit) : q_(q), limit_(limit) {}
    double q_;
    bool limit_;
};

/// q-deformed integer [n]_q = (1-q^{2n})/(1-q²); equals n on the limit path.
inline double q_int(std::int64_t n, const DeformationParam& dp) {
    if (n < 0) throw Error("q_int: n must be nonnegative");
    if (n == 0) return 0.0;
    if (dp.is_limit()) return static_cast<double>(n);
    const double q2 = dp.q_squared();
    // expm1-based form keeps precision for q close to 1
    return std::expm1(static_cast<double>(n) * std::log(q2)) / (q2 - 1.0);
}

/// [n]_q together with its logarithm.
struct QInteger {
    std::int64_t n;
    double value;
    double log_value;

    static QInteger make(std::int64_t n, const DeformationParam& dp) {
        const double v = q_int(n, dp);
        return {n, v, n == 0 ? -std::numeric_limits<double>::infinity() : std::log(v)};
    }
};

inline double q_ln_int(std::int64_t n, const DeformationParam& dp) {
    if (n <= 0) throw Error("q_ln_int: n must be positive");
    return std::log(q_int(n, dp));
}

inline double convergence_radius(const DeformationParam& dp) { return dp.radius(); }

/// Incremental cache of ln [n]_q!; evaluating n = 0..n_max costs O(n_max) total.
/// Safe to share across threads.
class QFactorials {
public:
    explicit QFactorials(const DeformationParam& dp) : dp_(dp), ln_fact_{0.0, 0.0} {}

    /// ln [n]_q!
    double ln_factorial(std::int64_t n) const {
        if (n < 0) throw Error("ln_factorial: n must be nonnegative");
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<std::int64_t>(ln_fact_.size()) <= n) {
            const auto k = static_cast<std::int64_t>(ln_fact_.size());
            ln_fact_.push_back(ln_fact_.back() + q_ln_int(k, dp_));
        }
        return ln_fact_[static_cast<std::size_t>(n)];
    }

    const DeformationParam& dp() const { return dp_; }

private:
    DeformationParam dp_;
    mutable std::mutex mu_;
    mutable std::vector<double> ln_fact_;
};

inline double q_ln_factorial(std::int64_t n, const DeformationParam& dp) {
    QFactorials table(dp);
    return table.ln_factorial(n);
}

/// (2N-1)!! as an exact integer; throws OverflowError instead of wrapping.
inline std::int64_t double_factorial_odd(int N) {
    if (N < 1) throw Error("double_factorial_odd: N must be >= 1");
    std::int64_t acc = 1;
    for (std::int64_t k = 3; k <= 2 * static_cast<std::int64_t>(N) - 1; k += 2) {
        if (__builtin_mul_overflow(acc, k, &acc))
            throw OverflowError("double_factorial_odd: overflow at N=" + std::to_string(N));
    }
    return acc;
}

}  // namespace qpacs
