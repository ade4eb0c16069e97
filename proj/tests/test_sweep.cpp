#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "qpacs/figures.hpp"
#include "qpacs/sweep.hpp"

using namespace qpacs;

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    return cells;
}

}  // namespace

TEST_CASE("mandel sweep reproduces the coherent-state identity") {
    SweepSpec spec;
    spec.quantity = Quantity::Mandel;
    spec.fixed.q = 0.9;
    spec.fixed.m = 0;
    spec.fixed.order = 2;
    spec.axis = Axis::AlphaAbs;
    spec.start = 0.1;
    spec.stop = 2.0;
    spec.count = 20;
    const auto rows = evaluate_sweep(spec);
    REQUIRE(rows.size() == 20);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double a = 0.1 + (2.0 - 0.1) * static_cast<double>(i) / 19.0;
        const double Q = std::stod(rows[i][8]);
        CHECK_THAT(Q, Catch::Matchers::WithinAbs(-0.19 * a * a, 1e-8));
        CHECK(rows[i].back().empty());
    }
}

TEST_CASE("hillery sweep on a coherent state is flat zero") {
    SweepSpec spec;
    spec.quantity = Quantity::Hillery;
    spec.fixed.q = 0.9;
    spec.fixed.alpha = 1.1;
    spec.fixed.m = 0;
    spec.fixed.order = 1;
    spec.axis = Axis::Phi;
    spec.start = 0.0;
    spec.stop = 2.0 * std::numbers::pi;
    spec.count = 100;
    const auto rows = evaluate_sweep(spec);
    for (const auto& row : rows) CHECK_THAT(std::stod(row[8]), Catch::Matchers::WithinAbs(0.0, 1e-9));
}

TEST_CASE("out-of-disk points carry error markers") {
    SweepSpec spec;
    spec.quantity = Quantity::Mandel;
    spec.fixed.alpha = 1.5;
    spec.fixed.m = 1;
    spec.fixed.order = 2;
    spec.axis = Axis::Q;
    spec.start = 0.5;
    spec.stop = 0.99;
    spec.count = 25;
    const auto rows = evaluate_sweep(spec);
    const auto header = sweep_header(spec.quantity);
    bool saw_error = false, saw_value = false;
    for (const auto& row : rows) {
        REQUIRE(row.size() == header.size());
        if (row.back().empty()) saw_value = true;
        else saw_error = true;
    }
    CHECK(saw_error);
    CHECK(saw_value);
}

TEST_CASE("invalid sweep specs are rejected") {
    SweepSpec spec;
    spec.quantity = Quantity::Mandel;
    spec.fixed.order = 2;
    spec.axis = Axis::AlphaAbs;
    spec.start = 0.1;
    spec.stop = 5.0;  // beyond the disk for q = 0.9
    spec.count = 10;
    CHECK_THROWS_AS(spec.validate(), Error);

    spec.stop = 1.0;
    spec.count = 1;
    CHECK_THROWS_AS(spec.validate(), Error);

    spec.count = 10;
    spec.fixed.order = 1;
    CHECK_THROWS_AS(spec.validate(), Error);  // statistics need order >= 2
}

TEST_CASE("sweeps are deterministic across thread counts") {
    SweepSpec spec;
    spec.quantity = Quantity::HongMandel;
    spec.fixed.q = 0.9;
    spec.fixed.alpha = Complex(1.0, 1.2);
    spec.fixed.m = 1;
    spec.fixed.order = 2;
    spec.axis = Axis::Phi;
    spec.start = 0.0;
    spec.stop = 3.0;
    spec.count = 40;
    std::ostringstream a, b, c;
    run_sweep(spec, a, 1);
    run_sweep(spec, b, 4);
    run_sweep(spec, c, 1);
    CHECK(a.str() == b.str());
    CHECK(a.str() == c.str());
}

TEST_CASE("figure presets exist and validate") {
    for (const auto& id : figure_ids()) {
        const auto preset = figure_preset(id);
        CHECK(!preset.series.empty());
        for (const auto& [name, spec] : preset.series) CHECK_NOTHROW(spec.validate());
    }
    CHECK_THROWS_AS(figure_preset("fig9z"), Error);
}

TEST_CASE("figure output files are written") {
    const auto dir = std::filesystem::temp_directory_path() / "qpacs_fig_test";
    std::filesystem::remove_all(dir);
    // a small preset: fig5 has three curves
    run_figure("fig5", dir, 2);
    CHECK(std::filesystem::exists(dir / "fig5_manifest.json"));
    int csvs = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".csv") ++csvs;
    CHECK(csvs == 3);
    // header row present
    std::ifstream in(dir / "fig5_alpha1.0.csv");
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(split(line).front() == "q");
    std::filesystem::remove_all(dir);
}
