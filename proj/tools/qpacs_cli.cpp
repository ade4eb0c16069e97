// Command-line front end: single-point evaluations, parameter sweeps, and
// figure presets emitting CSV.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qpacs/qpacs.hpp"

namespace {

struct CommonOpts {
    double q = 0.9;
    double alpha_re = 1.0;
    double alpha_im = 0.0;
    std::int64_t m = 0;
    std::int64_t order = 2;
    double phi = 0.0;
    std::string phi_sweep;
    std::string alpha_sweep;
    std::string q_sweep;
};

struct GlobalOpts {
    double tol = qpacs::kDefaultMomentTol;
    int threads = 1;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_phi) {
    cmd->add_option("--q", o.q, "deformation parameter in (0,1]; 1 selects the classical limit");
    cmd->add_option("--alpha-re", o.alpha_re, "Re(alpha)");
    cmd->add_option("--alpha-im", o.alpha_im, "Im(alpha)");
    cmd->add_option("--m", o.m, "added-photon count")->check(CLI::NonNegativeNumber);
    cmd->add_option("--order,-N", o.order, "order N");
    if (with_phi) {
        cmd->add_option("--phi", o.phi, "quadrature angle (radians)");
        cmd->add_option("--phi-sweep", o.phi_sweep, "sweep phi, format start:stop:count");
    }
    cmd->add_option("--alpha-sweep", o.alpha_sweep, "sweep |alpha|, format start:stop:count");
    cmd->add_option("--q-sweep", o.q_sweep, "sweep q, format start:stop:count");
}

void parse_range(const std::string& s, qpacs::SweepSpec& spec) {
    double start, stop;
    long long count;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lld", &start, &stop, &count) != 3)
        throw CLI::ValidationError("sweep range must be start:stop:count, got '" + s + "'");
    spec.start = start;
    spec.stop = stop;
    spec.count = count;
}

qpacs::SweepFixed make_fixed(const CommonOpts& o) {
    qpacs::SweepFixed f;
    f.q = o.q;
    f.q_limit = std::abs(1.0 - o.q) < qpacs::DeformationParam::kLimitWindow;
    f.alpha = {o.alpha_re, o.alpha_im};
    f.m = o.m;
    f.order = o.order;
    f.phi = o.phi;
    return f;
}

std::ostream& open_out(const GlobalOpts& g, std::optional<std::ofstream>& file) {
    if (g.out.empty()) return std::cout;
    file.emplace(g.out);
    if (!*file) throw qpacs::Error("cannot open output file " + g.out);
    return *file;
}

// Single point or sweep, depending on which sweep flag is set.
int run_quantity(qpacs::Quantity qty, const CommonOpts& o, const GlobalOpts& g) {
    qpacs::SweepSpec spec;
    spec.quantity = qty;
    spec.fixed = make_fixed(o);
    spec.tol = g.tol;

    std::optional<std::ofstream> file;
    std::ostream& out = open_out(g, file);

    int sweeps = 0;
    if (!o.phi_sweep.empty()) {
        spec.axis = qpacs::Axis::Phi;
        parse_range(o.phi_sweep, spec);
        ++sweeps;
    }
    if (!o.alpha_sweep.empty()) {
        spec.axis = qpacs::Axis::AlphaAbs;
        parse_range(o.alpha_sweep, spec);
        ++sweeps;
    }
    if (!o.q_sweep.empty()) {
        spec.axis = qpacs::Axis::Q;
        parse_range(o.q_sweep, spec);
        ++sweeps;
    }
    if (sweeps > 1) throw CLI::ValidationError("at most one sweep axis may be given");

    if (sweeps == 1) return qpacs::run_sweep(spec, out, g.threads);

    // single point: emit a one-row CSV
    spec.axis = qpacs::Axis::Phi;
    spec.start = o.phi;
    spec.stop = o.phi + 1.0;
    spec.count = 2;
    const auto header = qpacs::sweep_header(qty);
    const auto rows = qpacs::evaluate_sweep(spec, 1);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    const auto& row = rows.front();
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
    if (!row.empty() && !row.back().empty()) {
        std::cerr << "error: " << row.back() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed photon-added coherent states: squeezing and photon statistics"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tol", g.tol, "series tolerance");
    app.add_option("--threads", g.threads, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "output file (default stdout)");

    // moment
    auto* cmd_moment = app.add_subcommand("moment", "expectation value <A†^N A^L> and friends");
    CommonOpts mo;
    std::int64_t mo_L = 0;
    std::string mo_ordering = "normal";
    add_common(cmd_moment, mo, false);
    cmd_moment->add_option("-L,--lowerings", mo_L, "L")->check(CLI::NonNegativeNumber);
    cmd_moment->add_option("--ordering", mo_ordering, "normal | antinormal | number-power")
        ->check(CLI::IsMember({"normal", "antinormal", "number-power"}));

    // normal-order
    auto* cmd_no = app.add_subcommand("normal-order", "normal-order an operator word");
    std::string word_str;
    cmd_no->add_option("word", word_str, "word over {a = A, d = A†}, leftmost acts last")
        ->required();

    CommonOpts hi, hm, co, ma;
    auto* cmd_hi = app.add_subcommand("hillery", "Hillery-type squeezing coefficient S_H");
    add_common(cmd_hi, hi, true);
    hi.order = 1;
    auto* cmd_hm = app.add_subcommand("hong-mandel", "Hong-Mandel squeezing coefficient S_HM");
    add_common(cmd_hm, hm, true);
    hm.order = 1;
    auto* cmd_co = app.add_subcommand("correlation", "correlation function g^(N)(0)");
    add_common(cmd_co, co, false);
    auto* cmd_ma = app.add_subcommand("mandel", "Mandel parameter Q_N");
    add_common(cmd_ma, ma, false);

    // sweep (generic)
    auto* cmd_sw = app.add_subcommand("sweep", "generic parameter sweep to CSV");
    CommonOpts sw;
    std::string sw_quantity = "mandel";
    std::string sw_axis = "alpha_abs";
    std::string sw_range = "0.1:1.0:10";
    std::int64_t sw_L = 0;
    std::string sw_ordering = "normal";
    add_common(cmd_sw, sw, true);
    cmd_sw->add_option("--quantity", sw_quantity, "hillery|hong-mandel|correlation|mandel|moment")
        ->check(CLI::IsMember({"hillery", "hong-mandel", "correlation", "mandel", "moment"}));
    cmd_sw->add_option("--axis", sw_axis, "phi | alpha_abs | q")
        ->check(CLI::IsMember({"phi", "alpha_abs", "q"}));
    cmd_sw->add_option("--range", sw_range, "start:stop:count")->required();
    cmd_sw->add_option("-L,--lowerings", sw_L, "L (moment only)");
    cmd_sw->add_option("--ordering", sw_ordering, "moment ordering")
        ->check(CLI::IsMember({"normal", "antinormal", "number-power"}));

    // figure
    auto* cmd_fig = app.add_subcommand("figure", "write a figure preset as CSV files");
    std::string fig_id;
    std::string fig_dir = ".";
    cmd_fig->add_option("id", fig_id, "fig1a fig1b fig2a fig2b fig3a fig3b fig4a fig4b fig5")
        ->required()
        ->check(CLI::IsMember(qpacs::figure_ids()));
    cmd_fig->add_option("--out-dir", fig_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto ordering_from = [](const std::string& s) {
        if (s == "normal") return qpacs::Ordering::Normal;
        if (s == "antinormal") return qpacs::Ordering::Antinormal;
        return qpacs::Ordering::NumberPower;
    };

    try {
        if (cmd_moment->parsed()) {
            qpacs::SweepSpec spec;
            spec.quantity = qpacs::Quantity::Moment;
            spec.fixed = make_fixed(mo);
            spec.fixed.lowerings = mo_L;
            spec.fixed.ordering = ordering_from(mo_ordering);
            spec.tol = g.tol;
            spec.axis = qpacs::Axis::Phi;
            spec.start = 0.0;
            spec.stop = 1.0;
            spec.count = 2;
            std::optional<std::ofstream> file;
            std::ostream& out = open_out(g, file);
            const auto dp = spec.fixed.deformation();
            qpacs::MomentEvaluator ev(spec.fixed.alpha, spec.fixed.m, dp, g.tol);
            qpacs::MomentValue mv;
            switch (spec.fixed.ordering) {
                case qpacs::Ordering::Normal: mv = ev.normal(mo.order, mo_L); break;
                case qpacs::Ordering::Antinormal: mv = ev.antinormal(mo.order, mo_L); break;
                case qpacs::Ordering::NumberPower: mv = ev.number_power(mo.order); break;
            }
            char buf[160];
            std::snprintf(buf, sizeof buf, "value = %.15g%+.15gi\ntail_estimate = %.3e\nterms_used = %lld\n",
                          mv.value.real(), mv.value.imag(), mv.tail_estimate,
                          static_cast<long long>(mv.terms_used));
            out << buf;
            return 0;
        }
        if (cmd_no->parsed()) {
            std::optional<std::ofstream> file;
            std::ostream& out = open_out(g, file);
            out << qpacs::normal_order(qpacs::parse_word(word_str)).to_string();
            return 0;
        }
        if (cmd_hi->parsed()) return run_quantity(qpacs::Quantity::Hillery, hi, g);
        if (cmd_hm->parsed()) return run_quantity(qpacs::Quantity::HongMandel, hm, g);
        if (cmd_co->parsed()) return run_quantity(qpacs::Quantity::Correlation, co, g);
        if (cmd_ma->parsed()) return run_quantity(qpacs::Quantity::Mandel, ma, g);
        if (cmd_sw->parsed()) {
            qpacs::SweepSpec spec;
            if (sw_quantity == "hillery") spec.quantity = qpacs::Quantity::Hillery;
            else if (sw_quantity == "hong-mandel") spec.quantity = qpacs::Quantity::HongMandel;
            else if (sw_quantity == "correlation") spec.quantity = qpacs::Quantity::Correlation;
            else if (sw_quantity == "mandel") spec.quantity = qpacs::Quantity::Mandel;
            else spec.quantity = qpacs::Quantity::Moment;
            spec.fixed = make_fixed(sw);
            spec.fixed.lowerings = sw_L;
            spec.fixed.ordering = ordering_from(sw_ordering);
            spec.tol = g.tol;
            spec.axis = sw_axis == "phi"         ? qpacs::Axis::Phi
                        : sw_axis == "alpha_abs" ? qpacs::Axis::AlphaAbs
                                                 : qpacs::Axis::Q;
            parse_range(sw_range, spec);
            std::optional<std::ofstream> file;
            std::ostream& out = open_out(g, file);
            return qpacs::run_sweep(spec, out, g.threads);
        }
        if (cmd_fig->parsed()) return qpacs::run_figure(fig_id, fig_dir, g.threads);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qpacs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
