// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "builders.hpp"
#include "doctest.h"
#include "zonoset/analyzer.hpp"
#include "zonoset/error.hpp"
#include "zonoset/parser.hpp"
#include "zonoset/report.hpp"
#include "zonoset/svg.hpp"

using namespace zonoset;
using namespace zonoset::testing;

namespace {

Report branch_report() {
    std::ifstream in(std::string(ZONOSET_SAMPLES_DIR) + "/branch_join.zs");
    std::ostringstream os;
    os << in.rdbuf();
    return analyze(parse(os.str()));
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_SUITE("report") {

TEST_CASE("text") {
    const std::string text = emit_report(branch_report(), ReportFormat::Text);
    CHECK(contains(text, "ret ∈ [-1, 1]"));
    CHECK(contains(text, "[return]"));
}

TEST_CASE("empty report is header only") {
    Report empty;
    const std::string text = emit_report(empty, ReportFormat::Text);
    CHECK(contains(text, "zonoset report"));
    CHECK_FALSE(contains(text, "["));
    const std::string csv = emit_report(empty, ReportFormat::Csv);
    CHECK(csv == "point,var,lo,hi\n");
}

TEST_CASE("csv") {
    const std::string csv = emit_report(branch_report(), ReportFormat::Csv);
    CHECK(contains(csv, "point,var,lo,hi\n"));
    CHECK(contains(csv, "return,ret,-1,1\n"));
}

TEST_CASE("json round trip") {
    for (const char* name : {"branch_join.zs", "square_root.zs", "halving.zs"}) {
        std::ifstream in(std::string(ZONOSET_SAMPLES_DIR) + "/" + name);
        std::ostringstream os;
        os << in.rdbuf();
        const Report r = analyze(parse(os.str()));
        const Report back = parse_report_json(emit_report(r, ReportFormat::Json));
        REQUIRE(back.points.size() == r.points.size());
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            CHECK(back.points[i].label == r.points[i].label);
            REQUIRE(back.points[i].vars.size() == r.points[i].vars.size());
            for (std::size_t k = 0; k < r.points[i].vars.size(); ++k) {
                const auto& a = r.points[i].vars[k];
                const auto& b = back.points[i].vars[k];
                CHECK(a.name == b.name);
                CHECK(a.interval == b.interval);
                CHECK(a.center == b.center);
                CHECK(a.central == b.central);
                CHECK(a.perturbation == b.perturbation);
            }
        }
        CHECK(back.status.stabilized == r.status.stabilized);
        CHECK(back.inputs == r.inputs);
    }
    CHECK_THROWS(parse_report_json("{not json"));
}

TEST_CASE("formats by name") {
    CHECK(parse_report_format("text") == ReportFormat::Text);
    CHECK(parse_report_format("json") == ReportFormat::Json);
    CHECK(parse_report_format("csv") == ReportFormat::Csv);
    CHECK_THROWS(parse_report_format("xml"));
}

TEST_CASE("svg") {
    const std::string z1 = render_svg(z1_set(), 0, 1);
    CHECK(contains(z1, "<polygon"));
    for (const char* v : {"vertex -1 -2", "vertex 1 0", "vertex 1 2", "vertex -1 0"}) {
        CHECK(contains(z1, v));
    }
    const std::string point = render_svg(xy(form(1, {}), form(2, {})), 0, 1);
    CHECK(contains(point, "width=\"1\" height=\"1\""));
    CHECK_FALSE(contains(point, "<polygon"));

    const std::string oct = render_svg(fig1_set(), 0, 1);
    std::size_t n = 0;
    for (std::size_t pos = oct.find("vertex "); pos != std::string::npos; pos = oct.find("vertex ", pos + 1)) {
        ++n;
    }
    CHECK(n == 8);
    CHECK(contains(oct, "vertex 29 10"));
    CHECK(contains(oct, "vertex 11 8"));

    const auto path = std::filesystem::temp_directory_path() / "zonoset_test.svg";
    emit_svg(z1_set(), 0, 1, path.string());
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(os.str() == z1);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(emit_svg(z1_set(), 0, 1, "/nonexistent-dir/x.svg"), Error);
}

}
