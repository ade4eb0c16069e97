#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpacs/sweep.hpp"

namespace qpacs {

/// Named collection of sweep curves reproducing one published panel.
struct FigurePreset {
    std::string id;
    std::vector<std::pair<std::string, SweepSpec>> series;  // curve name -> spec
    std::vector<std::string> notes;                         // implementer-chosen ranges etc.
};

namespace figure_detail {

inline constexpr double kFigureQ = 0.9;
inline const double kAlphaCap = 0.95 / std::sqrt(1.0 - kFigureQ * kFigureQ);
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline SweepSpec base_spec(Quantity qty, bool classical) {
    SweepSpec s;
    s.quantity = qty;
    s.fixed.q = kFigureQ;
    s.fixed.q_limit = classical;
    return s;
}

inline std::string curve_name(bool classical, const std::string& tag) {
    return (classical ? std::string("classical_") : std::string("q0.9_")) + tag;
}

}  // namespace figure_detail

inline std::vector<std::string> figure_ids() {
    return {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig5"};
}

inline FigurePreset figure_preset(const std::string& id) {
    using namespace figure_detail;
    FigurePreset p;
    p.id = id;

    auto add_both = [&](Quantity qty, const std::string& tag,
                        const std::function<void(SweepSpec&)>& fill) {
        for (bool classical : {false, true}) {
            SweepSpec s = base_spec(qty, classical);
            fill(s);
            p.series.emplace_back(curve_name(classical, tag), s);
        }
    };

    auto alpha_axis = [&](SweepSpec& s, std::int64_t count) {
        s.axis = Axis::AlphaAbs;
        s.start = 0.05;
        s.stop = kAlphaCap;
        s.count = count;
    };

    if (id == "fig1a") {
        for (std::int64_t m : {1, 2, 3})
            add_both(Quantity::Hillery, "m" + std::to_string(m), [&](SweepSpec& s) {
                s.fixed.alpha = 2.1;
                s.fixed.m = m;
                s.fixed.order = 1;
                s.axis = Axis::Phi;
                s.start = 0.0;
                s.stop = kTwoPi;
                s.count = 721;
            });
    } else if (id == "fig1b") {
        for (std::int64_t N : {2, 3, 4})
            add_both(Quantity::Hillery, "N" + std::to_string(N), [&](SweepSpec& s) {
                s.fixed.m = 1;
                s.fixed.order = N;
                s.fixed.phi = 0.1;
                alpha_axis(s, 200);
            });
        p.notes.push_back("|alpha| range [0.05, 0.95*radius(0.9)] chosen by the implementers; "
                          "the published panel does not state its axis range");
    } else if (id == "fig2a") {
        for (std::int64_t m : {1, 2, 3})
            add_both(Quantity::HongMandel, "m" + std::to_string(m), [&](SweepSpec& s) {
                s.fixed.alpha = Complex(1.0, 1.2);
                s.fixed.m = m;
                s.fixed.order = 4;
                s.axis = Axis::Phi;
                s.start = 0.0;
                s.stop = kTwoPi;
                s.count = 721;
            });
    } else if (id == "fig2b") {
        for (std::int64_t N : {2, 3, 4})
            add_both(Quantity::HongMandel, "N" + std::to_string(N), [&](SweepSpec& s) {
                s.fixed.m = 3;
                s.fixed.order = N;
                s.fixed.phi = 0.1;
                alpha_axis(s, 150);
            });
        p.notes.push_back("curve label N is the half-order: the squeezing order is 2N; the "
                          "published panel's 'different values of N' may mean either reading");
        p.notes.push_back("|alpha| range [0.05, 0.95*radius(0.9)] chosen by the implementers");
    } else if (id == "fig3a" || id == "fig4a") {
        const Quantity qty = id == "fig3a" ? Quantity::Correlation : Quantity::Mandel;
        for (std::int64_t m : {1, 2, 3})
            add_both(qty, "m" + std::to_string(m), [&](SweepSpec& s) {
                s.fixed.m = m;
                s.fixed.order = 2;
                alpha_axis(s, 200);
            });
        p.notes.push_back("|alpha| range [0.05, 0.95*radius(0.9)] chosen by the implementers");
    } else if (id == "fig3b" || id == "fig4b") {
        const Quantity qty = id == "fig3b" ? Quantity::Correlation : Quantity::Mandel;
        for (std::int64_t N : {2, 4, 6})
            add_both(qty, "N" + std::to_string(N), [&](SweepSpec& s) {
                s.fixed.m = 1;
                s.fixed.order = N;
                alpha_axis(s, 200);
            });
        p.notes.push_back("|alpha| range [0.05, 0.95*radius(0.9)] chosen by the implementers");
    } else if (id == "fig5") {
        for (double a : {1.0, 1.5, 2.0}) {
            SweepSpec s = base_spec(Quantity::Mandel, false);
            s.fixed.alpha = a;
            s.fixed.m = 1;
            s.fixed.order = 2;
            s.axis = Axis::Q;
            s.start = 0.5;
            s.stop = 0.999;
            s.count = 200;
            char tag[32];
            std::snprintf(tag, sizeof tag, "alpha%.1f", a);
            p.series.emplace_back(tag, s);
        }
        p.notes.push_back("alpha values {1.0, 1.5, 2.0} chosen by the implementers; the "
                          "published caption only says 'different values of alpha'");
        p.notes.push_back("rows where |alpha| falls outside the convergence disk for small q "
                          "carry an error marker instead of a value");
    } else {
        throw Error("unknown figure preset '" + id + "'");
    }
    return p;
}

/// Write one CSV per curve plus a JSON manifest into out_dir.
inline int run_figure(const std::string& id, const std::filesystem::path& out_dir,
                      int threads = 1) {
    const FigurePreset preset = figure_preset(id);
    std::filesystem::create_directories(out_dir);

    nlohmann::json manifest;
    manifest["figure"] = preset.id;
    manifest["notes"] = preset.notes;
    manifest["curves"] = nlohmann::json::array();

    for (const auto& [name, spec] : preset.series) {
        const std::string fname = preset.id + "_" + name + ".csv";
        std::ofstream out(out_dir / fname);
        if (!out) throw Error("cannot open output file " + (out_dir / fname).string());
        run_sweep(spec, out, threads);

        nlohmann::json c;
        c["name"] = name;
        c["file"] = fname;
        c["quantity"] = to_string(spec.quantity);
        c["axis"] = to_string(spec.axis);
        c["start"] = spec.start;
        c["stop"] = spec.stop;
        c["count"] = spec.count;
        c["q"] = spec.fixed.q_limit ? 1.0 : spec.fixed.q;
        c["classical_limit"] = spec.fixed.q_limit;
        c["alpha_re"] = spec.fixed.alpha.real();
        c["alpha_im"] = spec.fixed.alpha.imag();
        c["m"] = spec.fixed.m;
        c["N"] = spec.fixed.order;
        c["phi"] = spec.fixed.phi;
        manifest["curves"].push_back(std::move(c));
    }

    std::ofstream mf(out_dir / (preset.id + "_manifest.json"));
    mf << manifest.dump(2) << "\n";
    return 0;
}

}  // namespace qpacs
