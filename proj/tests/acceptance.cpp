// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "classical_reference.hpp"
#include "matrix_helpers.hpp"
#include "qpacs/figures.hpp"
#include "qpacs/golden.hpp"
#include "qpacs/oracle.hpp"
#include "qpacs/photon_stats.hpp"
#include "qpacs/qpacs.hpp"

using namespace qpacs;

namespace {

struct Criterion {
    std::string label;
    bool pass = true;
    std::vector<std::string> failures;
    double seconds = 0.0;
    std::string summary;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 12) failures.push_back(what);
    }

    void require(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

Word normal_word(std::int64_t N, std::int64_t L) {
    Word w;
    w.insert(w.end(), static_cast<std::size_t>(N), Letter::Raise);
    w.insert(w.end(), static_cast<std::size_t>(L), Letter::Lower);
    return w;
}

Word antinormal_word(std::int64_t N, std::int64_t L) {
    Word w;
    w.insert(w.end(), static_cast<std::size_t>(N), Letter::Lower);
    w.insert(w.end(), static_cast<std::size_t>(L), Letter::Raise);
    return w;
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

std::string tag(double q, std::int64_t m, Complex a, std::int64_t N, std::int64_t L) {
    std::ostringstream os;
    os << "q=" << q << " m=" << m << " alpha=" << a.real() << "+" << a.imag() << "i N=" << N
       << " L=" << L;
    return os.str();
}

// ---- criterion 1: closed-form series vs band-matrix oracle -----------------

void criterion_oracle(Criterion& c) {
    long comparisons = 0;
    for (double q : {0.5, 0.9}) {
        const auto dp = DeformationParam::deformed(q);
        for (std::int64_t m : {0, 1, 3}) {
            for (Complex a : {Complex(0.3, 0.0), Complex(1.0, 0.0), Complex(1.0, 1.2)}) {
                if (std::abs(a) >= kDiskMargin * dp.radius()) {
                    bool threw = false;
                    try {
                        MomentEvaluator bad(a, m, dp);
                    } catch (const DivergenceError&) {
                        threw = true;
                    }
                    c.require(threw, "missing DivergenceError at " + tag(q, m, a, 0, 0));
                    continue;
                }
                MomentEvaluator ev(a, m, dp);
                const auto st = pacs_state(a, m, dp, 1e-14);
                for (std::int64_t N = 0; N <= 8; ++N) {
                    for (std::int64_t L = 0; N + L <= 8; ++L) {
                        if (N == 0 && L == 0) continue;
                        const Complex so = oracle_expectation(normal_word(N, L), st);
                        const Complex ao = oracle_expectation(antinormal_word(N, L), st);
                        c.require(rel_err(ev.normal(N, L).value, so) < 1e-8,
                                  "normal moment mismatch at " + tag(q, m, a, N, L));
                        c.require(rel_err(ev.antinormal(N, L).value, ao) < 1e-8,
                                  "antinormal moment mismatch at " + tag(q, m, a, N, L));
                        comparisons += 2;
                    }
                }
                for (std::int64_t N = 1; N <= 6; ++N) {
                    double direct = 0.0;
                    for (std::size_t k = 0; k < st.coeffs.size(); ++k)
                        direct += std::norm(st.coeffs[k]) *
                                  std::pow(q_int(static_cast<std::int64_t>(k), dp),
                                           static_cast<double>(N));
                    c.require(rel_err(ev.number_power(N).value, direct) < 1e-8,
                              "number power mismatch at " + tag(q, m, a, N, 0));
                    ++comparisons;
                }
            }
        }
    }
    std::ostringstream os;
    os << comparisons << " comparisons";
    c.summary = os.str();
}

// ---- criterion 2: rewriter matrix identity and q=1 oracle ------------------

void criterion_rewriter(Criterion& c) {
    const auto dp = DeformationParam::deformed(0.9);
    long words = 0;
    for (int len = 1; len <= 6; ++len) {
        for (const auto& w : testref::all_words(len)) {
            const auto lhs = testref::word_matrix(w, dp, 41);
            const auto rhs = testref::normal_form_matrix(normal_order(w), dp, 41);
            const double diff = testref::block_diff(lhs, rhs, 20);
            if (diff >= 1e-10) {
                std::ostringstream os;
                os << "matrix identity off by " << diff << " for a length-" << len << " word";
                c.fail(os.str());
            }
            ++words;
        }
    }
    for (int len = 1; len <= 8; ++len) {
        for (const auto& w : testref::all_words(len)) {
            const auto nf = normal_order(w);
            const auto ref = testref::classical_normal_order(w);
            bool ok = nf.terms().size() == ref.size();
            if (ok)
                for (const auto& [k, p] : nf.terms())
                    ok = ok && ref.count({k.first, k.second}) &&
                         p.evaluate_at_one() == ref.at({k.first, k.second});
            if (!ok) c.fail("q=1 disagreement for a length-" + std::to_string(len) + " word");
            ++words;
        }
    }
    c.summary = std::to_string(words) + " words";
}

// ---- criterion 3: golden quadrature expansions -----------------------------

void criterion_golden(Criterion& c) {
    const auto report = golden_check();
    c.require(report.coefficient_matches(2, 1, 1), "j=2 coefficient (1+q^2) does not match");
    c.require(report.coefficient_matches(4, 1, 1),
              "j=4 coefficient (3+5q^2+3q^4+q^6) does not match");
    c.require(report.coefficient_matches(6, 1, 1), "j=6 coefficient does not match");
    int mismatches = 0;
    for (const auto& e : report.entries)
        if (!e.match) ++mismatches;
    std::ostringstream os;
    os << report.entries.size() << " published coefficients, " << mismatches << " discrepancies";
    c.summary = os.str();
    c.require(mismatches == 0, "published expansions disagree with the rewriter");
}

// ---- criterion 4: analytic identities --------------------------------------

void criterion_identities(Criterion& c) {
    for (double q : {0.5, 0.9}) {
        const auto dp = DeformationParam::deformed(q);
        for (Complex a : {Complex(0.6, 0.0), Complex(0.5, 0.6)}) {
            MomentEvaluator ev(a, 0, dp);
            for (int i = 0; i < 24; ++i) {
                const double phi = 2.0 * std::numbers::pi * i / 24.0;
                if (std::abs(hillery(ev, 1, phi).value) > 1e-9)
                    c.fail("S_H nonzero on a coherent state at q=" + std::to_string(q));
                if (std::abs(hong_mandel(ev, 1, phi).value) > 1e-9)
                    c.fail("S_HM nonzero on a coherent state at q=" + std::to_string(q));
            }
            const double expect = (dp.q_squared() - 1.0) * std::norm(a);
            if (std::abs(mandel(2, a, 0, dp).Q - expect) > 1e-8)
                c.fail("coherent-state Q2 off at q=" + std::to_string(q));
        }
        for (std::int64_t m : {1, 2, 3}) {
            for (std::int64_t N : {2, 3, 4}) {
                if (central_moment_M(N, 0.0, m, dp) != 0.0)
                    c.fail("Fock central moment not exactly zero");
                if (mandel(N, 0.0, m, dp).Q != -1.0) c.fail("Fock Q_N not exactly -1");
            }
        }
    }
    c.summary = "phi grid x {q} x {alpha} plus Fock states";
}

// ---- criterion 5: qualitative figure shapes --------------------------------

struct Curve {
    std::vector<double> axis;
    std::vector<double> value;
    std::vector<bool> valid;
};

Curve run_curve(const SweepSpec& spec, std::size_t value_col) {
    Curve out;
    const auto rows = evaluate_sweep(spec, 8);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.axis.push_back(spec.start + (spec.stop - spec.start) * static_cast<double>(i) /
                                            static_cast<double>(spec.count - 1));
        const bool ok = rows[i].back().empty();
        out.valid.push_back(ok);
        out.value.push_back(ok ? std::stod(rows[i][value_col]) : 0.0);
    }
    return out;
}

const SweepSpec& find_series(const FigurePreset& p, const std::string& name) {
    for (const auto& [n, s] : p.series)
        if (n == name) return s;
    throw Error("missing series " + name);
}

void criterion_figures(Criterion& c) {
    using clock = std::chrono::steady_clock;
    auto timed = [&](const char* id, auto&& body) {
        const auto t0 = clock::now();
        body();
        const double dt = std::chrono::duration<double>(clock::now() - t0).count();
        if (dt >= 300.0) c.fail(std::string(id) + " exceeded the 5 min budget");
    };

    timed("fig1a", [&] {
        const auto p = figure_preset("fig1a");
        Curve m1 = run_curve(find_series(p, "q0.9_m1"), 8);
        Curve m2 = run_curve(find_series(p, "q0.9_m2"), 8);
        Curve m3 = run_curve(find_series(p, "q0.9_m3"), 8);
        Curve c1 = run_curve(find_series(p, "classical_m1"), 8);
        // 721 points over [0, 2pi]: half a period is 360 steps
        for (std::size_t i = 0; i + 360 < m1.value.size(); ++i)
            if (std::abs(m1.value[i] - m1.value[i + 360]) > 1e-9) {
                c.fail("fig1a: S_H not pi-periodic");
                break;
            }
        auto min_of = [](const Curve& cu) {
            double best = 1e300;
            std::size_t at = 0;
            for (std::size_t i = 0; i < cu.value.size(); ++i)
                if (cu.value[i] < best) {
                    best = cu.value[i];
                    at = i;
                }
            return std::pair{best, at};
        };
        // the curves cross near the edges of the squeezing window, so the
        // ordering claims are checked at the squeezing maxima
        const auto [v1, i1] = min_of(m1);
        const auto [v2, i2] = min_of(m2);
        const auto [v3, i3] = min_of(m3);
        const auto [vc, ic] = min_of(c1);
        c.require(v1 < 0.0, "fig1a: no squeezed region found");
        c.require(v3 < v2 && v2 < v1, "fig1a: peak S_H does not deepen with m");
        c.require(m3.value[i1] < m2.value[i1] && m2.value[i1] < m1.value[i1],
                  "fig1a: S_H not ordered in m at the m=1 squeezing maximum");
        c.require(v1 < vc, "fig1a: deformed S_H not below the classical depth");
    });

    timed("fig1b", [&] {
        const auto p = figure_preset("fig1b");
        double prev_min = -1e300;
        for (std::int64_t N : {2, 3, 4}) {
            const std::string t = "N" + std::to_string(N);
            Curve d = run_curve(find_series(p, "q0.9_" + t), 8);
            Curve u = run_curve(find_series(p, "classical_" + t), 8);
            double dmin = 0.0, umin = 0.0;
            for (std::size_t i = 0; i < d.value.size(); ++i) {
                if (d.axis[i] < 0.8 && d.value[i] < -1e-6)
                    c.fail("fig1b: squeezing before the |alpha| ~ 1 onset at N=" +
                           std::to_string(N));
                dmin = std::min(dmin, d.value[i]);
                umin = std::min(umin, u.value[i]);
            }
            c.require(dmin < -1e-3, "fig1b: no squeezing beyond the onset at N=" +
                                        std::to_string(N));
            c.require(dmin > prev_min, "fig1b: depth does not shrink with N");
            // the curves only separate cleanly past the onset; compare depths
            // and the large-|alpha| end of the range
            c.require(dmin < umin, "fig1b: deformed depth not below the classical one at N=" +
                                       std::to_string(N));
            c.require(d.value.back() < u.value.back(),
                      "fig1b: deformed curve not below the classical one at large |alpha|, N=" +
                          std::to_string(N));
            prev_min = dmin;
        }
    });

    timed("fig3b", [&] {
        const auto p = figure_preset("fig3b");
        Curve g6 = run_curve(find_series(p, "q0.9_N6"), 7);
        double peak = 0.0;
        for (std::size_t i = 0; i < g6.value.size(); ++i)
            if (g6.valid[i]) peak = std::max(peak, g6.value[i]);
        c.require(peak > 1.0, "fig3b: g(6) never exceeds 1");
    });

    timed("fig4a", [&] {
        const auto p = figure_preset("fig4a");
        for (std::int64_t m : {1, 2, 3}) {
            const std::string t = "m" + std::to_string(m);
            Curve d = run_curve(find_series(p, "q0.9_" + t), 8);
            Curve u = run_curve(find_series(p, "classical_" + t), 8);
            for (std::size_t i = 0; i < d.value.size(); ++i)
                if (std::abs(d.value[i] - u.value[i]) > 1e-9 && d.value[i] >= u.value[i]) {
                    c.fail("fig4a: deformed Q not below the classical value at m=" +
                           std::to_string(m));
                    break;
                }
        }
    });

    timed("fig5", [&] {
        const auto p = figure_preset("fig5");
        for (const auto& [name, spec] : p.series) {
            Curve q = run_curve(spec, 8);
            bool monotone = true, prev_ok = false;
            double prev = 0.0;
            int valid = 0;
            for (std::size_t i = 0; i < q.value.size(); ++i) {
                if (!q.valid[i]) {
                    prev_ok = false;
                    continue;
                }
                ++valid;
                if (prev_ok && q.value[i] <= prev) monotone = false;
                prev = q.value[i];
                prev_ok = true;
            }
            c.require(valid > 10, "fig5: too few in-disk points on " + name);
            c.require(monotone, "fig5: Q2 not increasing in q on " + name);
        }
    });

    c.summary = "fig1a fig1b fig3b fig4a fig5 at 8 threads";
}

// ---- criterion 6: q -> 1 regression ----------------------------------------

void criterion_limit(Criterion& c) {
    const auto lim = DeformationParam::classical_limit();
    const double tol = 1e-6;
    long comparisons = 0;
    for (std::int64_t m : {0, 1, 2, 3}) {
        for (Complex a : {Complex(0.7, 0.0), Complex(1.0, 1.2), Complex(2.0, 0.0)}) {
            MomentEvaluator ev(a, m, lim, 1e-13);
            const auto ref = testref::ClassicalPacs::make(a, m);
            for (std::int64_t N = 0; N <= 4; ++N) {
                for (std::int64_t L = 0; N + L <= 4; ++L) {
                    if (N == 0 && L == 0) continue;
                    c.require(rel_err(ev.normal(N, L).value,
                                      ref.moment_normal(static_cast<int>(N),
                                                        static_cast<int>(L))) < tol,
                              "limit normal moment off at " + tag(1.0, m, a, N, L));
                    c.require(rel_err(ev.antinormal(N, L).value,
                                      ref.moment_antinormal(static_cast<int>(N),
                                                            static_cast<int>(L))) < tol,
                              "limit antinormal moment off at " + tag(1.0, m, a, N, L));
                    comparisons += 2;
                }
            }
            for (std::int64_t N = 1; N <= 4; ++N) {
                c.require(rel_err(ev.number_power(N).value,
                                  ref.number_moment(static_cast<int>(N))) < tol,
                          "limit number power off at " + tag(1.0, m, a, N, 0));
                ++comparisons;
            }
            for (std::int64_t N = 1; N <= 4; ++N) {
                for (double phi : {0.0, 0.9}) {
                    c.require(std::abs(hillery(ev, N, phi).value -
                                       ref.hillery(static_cast<int>(N), phi)) < tol,
                              "limit Hillery off at " + tag(1.0, m, a, N, 0));
                    c.require(std::abs(hong_mandel(ev, N, phi).value -
                                       ref.hong_mandel(static_cast<int>(N), phi)) < tol,
                              "limit Hong-Mandel off at " + tag(1.0, m, a, N, 0));
                    comparisons += 2;
                }
            }
            for (std::int64_t N = 2; N <= 4; ++N) {
                const auto r = stats_detail::build_report(ev, N);
                c.require(std::abs(r.Q - ref.mandel_Q(static_cast<int>(N))) < tol,
                          "limit Mandel Q off at " + tag(1.0, m, a, N, 0));
                c.require(std::abs(r.g - ref.correlation_g(static_cast<int>(N))) < tol,
                          "limit correlation off at " + tag(1.0, m, a, N, 0));
                comparisons += 2;
            }
        }
    }
    c.summary = std::to_string(comparisons) + " comparisons";
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, void (*)(Criterion&)>> checks = {
        {"1 oracle equivalence", criterion_oracle},
        {"2 rewriter identity", criterion_rewriter},
        {"3 golden expansions", criterion_golden},
        {"4 analytic identities", criterion_identities},
        {"5 figure qualitative shapes", criterion_figures},
        {"6 classical-limit regression", criterion_limit},
    };

    int failed = 0;
    for (auto& [label, fn] : checks) {
        Criterion c;
        c.label = label;
        const double t0 = now_seconds();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.fail(std::string("unexpected exception: ") + e.what());
        }
        c.seconds = now_seconds() - t0;
        // re-run the budget checks that depend on the measured time
        if (label[0] == '1' && c.seconds >= 60.0) c.fail("exceeded the 60 s budget");
        if (label[0] == '2' && c.seconds >= 30.0) c.fail("exceeded the 30 s budget");
        std::printf("criterion %s: %s (%.1f s%s%s)\n", label.c_str(),
                    c.pass ? "PASS" : "FAIL", c.seconds, c.summary.empty() ? "" : ", ",
                    c.summary.c_str());
        for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
        if (!c.pass) ++failed;
    }
    std::printf("acceptance: %d/6 criteria pass\n", 6 - failed);
    return failed == 0 ? 0 : 1;
}
