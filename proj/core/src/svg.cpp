// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/svg.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "zonoset/error.hpp"
#include "zonoset/zonotope2d.hpp"

namespace zonoset {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 30.0;

} // namespace

std::string render_svg(const PerturbedAffineSet& x, std::size_t k1, std::size_t k2) {
    const Zonotope2D z = project_2d(x, k1, k2);
    const auto poly = vertices(z);

    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;
    for (const auto& v : poly) {
        xmin = std::min(xmin, v.x.to_double());
        xmax = std::max(xmax, v.x.to_double());
        ymin = std::min(ymin, v.y.to_double());
        ymax = std::max(ymax, v.y.to_double());
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double scale = (kSize - 2 * kMargin) / span;
    auto px = [&](double v) { return kMargin + (v - xmin) * scale; };
    auto py = [&](double v) { return kSize - kMargin - (v - ymin) * scale; };

    std::ostringstream os;
    os << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    os << "  <title>" << x.vars()[k1] << " / " << x.vars()[k2] << "</title>\n";
    os << "  <line class=\"axis\" x1=\"" << px(xmin) << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmin + span)
       << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
    os << "  <line class=\"axis\" x1=\"" << px(0) << "\" y1=\"" << py(ymin) << "\" x2=\"" << px(0) << "\" y2=\""
       << py(ymin + span) << "\" stroke=\"black\"/>\n";
    if (poly.size() == 1) {
        os << "  <rect class=\"zonotope\" x=\"" << px(poly[0].x.to_double()) << "\" y=\"" << py(poly[0].y.to_double())
           << "\" width=\"1\" height=\"1\" fill=\"red\"/>\n";
    } else {
        os << "  <polygon class=\"zonotope\" points=\"";
        for (std::size_t i = 0; i < poly.size(); ++i) {
            os << (i == 0 ? "" : " ") << px(poly[i].x.to_double()) << ',' << py(poly[i].y.to_double());
        }
        os << "\" fill=\"red\" fill-opacity=\"0.3\" stroke=\"red\"/>\n";
        for (const auto& v : poly) {
            os << "  <!-- vertex " << v.x.str() << ' ' << v.y.str() << " -->\n";
        }
    }
    os << "  <circle class=\"center\" cx=\"" << px(z.center.x.to_double()) << "\" cy=\""
       << py(z.center.y.to_double()) << "\" r=\"3\" fill=\"blue\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void emit_svg(const PerturbedAffineSet& x, std::size_t k1, std::size_t k2, const std::string& path) {
    const std::string svg = render_svg(x, k1, k2);
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << svg;
    if (!out) {
        throw Error("failed writing '" + path + "'");
    }
}

} // namespace zonoset
