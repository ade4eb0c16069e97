#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "qpacs/photon_stats.hpp"
#include "qpacs/squeezing.hpp"

namespace qpacs {

enum class Quantity { Hillery, HongMandel, Correlation, Mandel, Moment };
enum class Axis { Phi, AlphaAbs, Q };

inline std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::Hillery: return "hillery";
        case Quantity::HongMandel: return "hong_mandel";
        case Quantity::Correlation: return "correlation";
        case Quantity::Mandel: return "mandel";
        case Quantity::Moment: return "moment";
    }
    return "?";
}

inline std::string to_string(Axis a) {
    switch (a) {
        case Axis::Phi: return "phi";
        case Axis::AlphaAbs: return "alpha_abs";
        case Axis::Q: return "q";
    }
    return "?";
}

inline std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Normal: return "normal";
        case Ordering::Antinormal: return "antinormal";
        case Ordering::NumberPower: return "number_power";
    }
    return "?";
}

/// Fixed parameters of a sweep; the axis variable overrides the matching field.
struct SweepFixed {
    double q = 0.9;
    bool q_limit = false;  // classical-limit path (reported as q = 1)
    Complex alpha{0.0, 0.0};
    std::int64_t m = 0;
    std::int64_t order = 1;   // N
    std::int64_t lowerings = 0;  // L, moment queries only
    Ordering ordering = Ordering::Normal;
    double phi = 0.0;

    DeformationParam deformation() const {
        return q_limit ? DeformationParam::classical_limit() : DeformationParam::deformed(q);
    }
};

struct SweepSpec {
    Quantity quantity = Quantity::Mandel;
    SweepFixed fixed;
    Axis axis = Axis::AlphaAbs;
    double start = 0.0;
    double stop = 1.0;
    std::int64_t count = 2;
    double tol = kDefaultMomentTol;

    void validate() const {
        if (count < 2) throw Error("sweep: count must be >= 2");
        if (!(stop > start)) throw Error("sweep: stop must exceed start");
        if (axis == Axis::Q) {
            if (!(start > 0.0) || stop > 1.0 + DeformationParam::kLimitWindow)
                throw Error("sweep: q axis must lie in (0, 1]");
        }
        if (axis == Axis::AlphaAbs && !fixed.q_limit) {
            const double cap = kDiskMargin * DeformationParam::deformed(fixed.q).radius();
            if (stop >= cap)
                throw Error("sweep: |alpha| axis must stay below the convergence disk (" +
                            std::to_string(cap) + ")");
        }
        if ((quantity == Quantity::Correlation || quantity == Quantity::Mandel) &&
            fixed.order < 2)
            throw Error("sweep: photon statistics require order >= 2");
        if (quantity != Quantity::Moment && fixed.order < 1)
            throw Error("sweep: order must be >= 1");
    }
};

namespace sweep_detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17e", v);
    return buf;
}

inline std::string fmt_int(std::int64_t v) { return std::to_string(v); }

struct Point {
    double q;
    bool q_limit;
    Complex alpha;
    double phi;
};

inline Point point_at(const SweepSpec& spec, std::int64_t i) {
    const double x = spec.start + (spec.stop - spec.start) * static_cast<double>(i) /
                                      static_cast<double>(spec.count - 1);
    Point p{spec.fixed.q, spec.fixed.q_limit, spec.fixed.alpha, spec.fixed.phi};
    switch (spec.axis) {
        case Axis::Phi:
            p.phi = x;
            break;
        case Axis::AlphaAbs:
            p.alpha = std::polar(x, std::arg(spec.fixed.alpha));
            break;
        case Axis::Q:
            p.q = x;
            p.q_limit = std::abs(1.0 - x) < DeformationParam::kLimitWindow;
            break;
    }
    return p;
}

}  // namespace sweep_detail

inline std::vector<std::string> sweep_header(Quantity q) {
    switch (q) {
        case Quantity::Hillery:
        case Quantity::HongMandel:
            return {"q", "alpha_re", "alpha_im", "m",     "N",
                    "phi", "numerator", "denominator", "value", "squeezed", "error"};
        case Quantity::Correlation:
        case Quantity::Mandel:
            return {"q", "alpha_re", "alpha_im", "m", "N", "mean_M",
                    "central_moment", "g", "Q", "classification", "error"};
        case Quantity::Moment:
            return {"q", "alpha_re", "alpha_im", "m", "N", "L", "ordering",
                    "value_re", "value_im", "tail_estimate", "terms_used", "error"};
    }
    return {};
}

/// Evaluate a sweep; rows come back in axis order regardless of thread count.
inline std::vector<std::vector<std::string>> evaluate_sweep(const SweepSpec& spec,
                                                            int threads = 1) {
    using sweep_detail::fmt;
    using sweep_detail::fmt_int;
    spec.validate();
    std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(spec.count));

    auto eval_point = [&](std::int64_t i, std::optional<MomentEvaluator>& cached) {
        const auto p = sweep_detail::point_at(spec, i);
        const double q_col = p.q_limit ? 1.0 : p.q;
        std::vector<std::string> row{fmt(q_col), fmt(p.alpha.real()), fmt(p.alpha.imag()),
                                     fmt_int(spec.fixed.m), fmt_int(spec.fixed.order)};
        if (spec.quantity == Quantity::Hillery || spec.quantity == Quantity::HongMandel)
            row.push_back(fmt(p.phi));
        try {
            const DeformationParam dp =
                p.q_limit ? DeformationParam::classical_limit() : DeformationParam::deformed(p.q);
            // along a phi axis the state is fixed; reuse one evaluator per thread
            MomentEvaluator* ev;
            std::optional<MomentEvaluator> local;
            if (spec.axis == Axis::Phi) {
                if (!cached) cached.emplace(p.alpha, spec.fixed.m, dp, spec.tol);
                ev = &*cached;
            } else {
                local.emplace(p.alpha, spec.fixed.m, dp, spec.tol);
                ev = &*local;
            }
            switch (spec.quantity) {
                case Quantity::Hillery:
                case Quantity::HongMandel: {
                    const SqueezingReport r = spec.quantity == Quantity::Hillery
                                                  ? hillery(*ev, spec.fixed.order, p.phi)
                                                  : hong_mandel(*ev, spec.fixed.order, p.phi);
                    row.push_back(fmt(r.numerator));
                    row.push_back(fmt(r.denominator));
                    row.push_back(fmt(r.value));
                    row.push_back(r.squeezed ? "1" : "0");
                    row.push_back("");
                    break;
                }
                case Quantity::Correlation:
                case Quantity::Mandel: {
                    const StatisticsReport r = stats_detail::build_report(*ev, spec.fixed.order);
                    row.push_back(fmt(r.mean_M));
                    row.push_back(fmt(r.central_moment));
                    row.push_back(fmt(r.g));
                    row.push_back(fmt(r.Q));
                    row.push_back(to_string(r.classification));
                    row.push_back("");
                    break;
                }
                case Quantity::Moment: {
                    MomentValue mv;
                    switch (spec.fixed.ordering) {
                        case Ordering::Normal:
                            mv = ev->normal(spec.fixed.order, spec.fixed.lowerings);
                            break;
                        case Ordering::Antinormal:
                            mv = ev->antinormal(spec.fixed.order, spec.fixed.lowerings);
                            break;
                        case Ordering::NumberPower:
                            mv = ev->number_power(spec.fixed.order);
                            break;
                    }
                    row.push_back(fmt_int(spec.fixed.lowerings));
                    row.push_back(to_string(spec.fixed.ordering));
                    row.push_back(fmt(mv.value.real()));
                    row.push_back(fmt(mv.value.imag()));
                    row.push_back(fmt(mv.tail_estimate));
                    row.push_back(fmt_int(mv.terms_used));
                    row.push_back("");
                    break;
                }
            }
        } catch (const Error& e) {
            const auto header = sweep_header(spec.quantity);
            while (row.size() + 1 < header.size()) row.push_back("");
            row.push_back(e.what());
        }
        rows[static_cast<std::size_t>(i)] = std::move(row);
    };

    threads = std::max(1, threads);
    if (threads == 1) {
        std::optional<MomentEvaluator> cached;
        for (std::int64_t i = 0; i < spec.count; ++i) eval_point(i, cached);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                std::optional<MomentEvaluator> cached;
                for (std::int64_t i = t; i < spec.count; i += threads) eval_point(i, cached);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

inline int run_sweep(const SweepSpec& spec, std::ostream& out, int threads = 1) {
    const auto header = sweep_header(spec.quantity);
    const auto rows = evaluate_sweep(spec, threads);
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    emit(header);
    for (const auto& r : rows) emit(r);
    return 0;
}

}  // namespace qpacs
