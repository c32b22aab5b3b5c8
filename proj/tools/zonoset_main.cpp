// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zonoset/analyzer.hpp"
#include "zonoset/error.hpp"
#include "zonoset/parser.hpp"
#include "zonoset/report.hpp"
#include "zonoset/svg.hpp"

namespace {

constexpr int kExitStable = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTop = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw zonoset::Error("cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zonoset: zonotopic static analyzer for a small imperative language"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "analyze a program and print per-point ranges");
    std::string file;
    std::string join = "nabla";
    std::string format = "text";
    std::size_t max_iter = 100;
    std::vector<std::string> box;
    std::size_t unfold_init = 0;
    std::size_t unfold_cyclic = 1;
    std::size_t order_cap = 12;
    std::vector<std::string> svg;
    analyze->add_option("file", file, "source file")->required();
    analyze->add_option("--join", join, "join operator: mub or nabla")->check(CLI::IsMember({"mub", "nabla"}));
    analyze->add_option("--max-iter", max_iter, "Kleene iteration cap")->check(CLI::PositiveNumber);
    analyze->add_option("--box", box, "bounding box LO HI")->expected(2);
    analyze->add_option("--unfold-init", unfold_init, "initially peeled loop iterations");
    analyze->add_option("--unfold-cyclic", unfold_cyclic, "loop body copies")->check(CLI::PositiveNumber);
    analyze->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    analyze->add_option("--svg", svg, "VAR1 VAR2 OUT.svg: plot the return point")->expected(3);
    analyze->add_option("--order-cap", order_cap, "symbol cap of the exact order check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        zonoset::AnalysisConfig config;
        config.join_mode = zonoset::parse_join_mode(join);
        config.max_iterations = max_iter;
        config.initial_unfold = unfold_init;
        config.cyclic_unfold = unfold_cyclic;
        config.order_cap = order_cap;
        if (!box.empty()) {
            config.box = zonoset::Interval(zonoset::Scalar::parse(box[0]), zonoset::Scalar::parse(box[1]));
        }
        const auto program = zonoset::parse(slurp(file));
        const auto report = zonoset::analyze(program, config);
        std::cout << zonoset::emit_report(report, zonoset::parse_report_format(format));

        if (!svg.empty()) {
            const auto* point = report.find("return");
            const auto& value = point->value;
            const auto k1 = value.index_of(svg[0]);
            const auto k2 = value.index_of(svg[1]);
            if (!k1 || !k2) {
                throw zonoset::Error("--svg: unknown variable at the return point");
            }
            if (value.is_special()) {
                throw zonoset::Error("--svg: the return point is not a bounded value");
            }
            zonoset::emit_svg(value, *k1, *k2, svg[2]);
        }
        return report.status.top ? kExitTop : kExitStable;
    } catch (const zonoset::Error& e) {
        std::cerr << "zonoset: " << e.what() << '\n';
        return kExitUsage;
    }
}
