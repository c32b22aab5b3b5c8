// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/report.hpp"

#include <sstream>

#include <json.hpp>

#include "zonoset/error.hpp"

namespace zonoset {

namespace {

using Json = nlohmann::ordered_json;

std::string fraction(const Scalar& r) { return r.numerator_str() + "/" + r.denominator_str(); }

Json coefficients(const CoeffMap& m, char prefix) {
    Json out = Json::object();
    for (const auto& [i, c] : m) {
        out[prefix + std::to_string(i)] = fraction(c);
    }
    return out;
}

CoeffMap read_coefficients(const Json& j, char prefix) {
    CoeffMap m;
    for (const auto& [key, value] : j.items()) {
        if (key.empty() || key[0] != prefix) {
            throw Error("bad symbol name '" + key + "' in report");
        }
        const Scalar c = Scalar::parse(value.get<std::string>());
        if (!c.is_zero()) {
            m[static_cast<std::uint32_t>(std::stoul(key.substr(1)))] = c;
        }
    }
    return m;
}

std::string status_line(const AnalysisStatus& s) {
    std::ostringstream os;
    os << "status: " << (s.top ? "top" : (s.stabilized ? "stabilized" : "not stabilized")) << ", loops " << s.loops
       << ", iterations " << s.iterations << ", post-fixpoint checks " << s.postfix_verified << " verified / "
       << s.postfix_unknown << " unknown / " << s.postfix_failed << " failed";
    return os.str();
}

std::string emit_text(const Report& r) {
    std::ostringstream os;
    os << "zonoset report\n" << status_line(r.status) << '\n';
    for (const auto& p : r.points) {
        os << "\n[" << p.label << "]\n";
        if (p.bottom) {
            os << "unreachable\n";
            continue;
        }
        for (const auto& v : p.vars) {
            os << v.name << " ∈ " << v.interval.str() << (v.unbounded ? " (unbounded)" : "") << '\n';
            if (!v.unbounded) {
                AffineForm f{v.center, v.central, v.perturbation};
                os << "  " << v.name << " = " << f.str() << '\n';
            }
        }
    }
    for (const auto& s : r.sensitivity) {
        os << "\nsensitivity of " << s.var << " at " << s.label << ':';
        for (const auto& [i, c] : s.ranking) {
            os << " e" << i;
            if (const auto in = r.inputs.find(i); in != r.inputs.end()) {
                os << '(' << in->second << ')';
            }
            os << '=' << c.str();
        }
        os << '\n';
    }
    return os.str();
}

Json to_json(const Report& r) {
    Json points = Json::array();
    for (const auto& p : r.points) {
        Json vars = Json::object();
        for (const auto& v : p.vars) {
            vars[v.name] = Json{
                {"interval", {fraction(v.interval.lo()), fraction(v.interval.hi())}},
                {"decimal", {v.interval.lo().to_double(), v.interval.hi().to_double()}},
                {"unbounded", v.unbounded},
                {"center", fraction(v.center)},
                {"central", coefficients(v.central, 'e')},
                {"perturbation", coefficients(v.perturbation, 'n')},
            };
        }
        points.push_back(Json{{"label", p.label}, {"bottom", p.bottom}, {"top", p.top}, {"vars", std::move(vars)}});
    }
    Json sensitivity = Json::array();
    for (const auto& s : r.sensitivity) {
        Json ranking = Json::array();
        for (const auto& [i, c] : s.ranking) {
            ranking.push_back(
                Json{{"symbol", "e" + std::to_string(i)}, {"coefficient", fraction(c)}, {"decimal", c.to_double()}});
        }
        sensitivity.push_back(Json{{"label", s.label}, {"var", s.var}, {"ranking", std::move(ranking)}});
    }
    Json inputs = Json::object();
    for (const auto& [i, name] : r.inputs) {
        inputs["e" + std::to_string(i)] = name;
    }
    const auto& s = r.status;
    Json status{{"stabilized", s.stabilized},           {"top", s.top},
                {"loops", s.loops},                     {"iterations", s.iterations},
                {"postfix_verified", s.postfix_verified}, {"postfix_unknown", s.postfix_unknown},
                {"postfix_failed", s.postfix_failed}};
    return Json{{"points", std::move(points)},
                {"sensitivity", std::move(sensitivity)},
                {"inputs", std::move(inputs)},
                {"status", std::move(status)}};
}

std::string emit_csv(const Report& r) {
    std::ostringstream os;
    os << "point,var,lo,hi\n";
    for (const auto& p : r.points) {
        for (const auto& v : p.vars) {
            os << p.label << ',' << v.name << ',' << v.interval.lo().str() << ',' << v.interval.hi().str() << '\n';
        }
    }
    return os.str();
}

} // namespace

ReportFormat parse_report_format(std::string_view text) {
    if (text == "text") {
        return ReportFormat::Text;
    }
    if (text == "json") {
        return ReportFormat::Json;
    }
    if (text == "csv") {
        return ReportFormat::Csv;
    }
    throw Error("unknown report format '" + std::string(text) + "' (expected text, json or csv)");
}

std::string emit_report(const Report& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::Text:
        return emit_text(report);
    case ReportFormat::Json:
        return to_json(report).dump(2) + "\n";
    case ReportFormat::Csv:
        return emit_csv(report);
    }
    throw Error("unknown report format");
}

Report parse_report_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
    Report r;
    try {
        for (const auto& p : j.at("points")) {
            PointReport point;
            point.label = p.at("label").get<std::string>();
            point.bottom = p.at("bottom").get<bool>();
            point.top = p.at("top").get<bool>();
            std::vector<std::string> names;
            std::vector<AffineForm> forms;
            for (const auto& [name, v] : p.at("vars").items()) {
                VarReport var;
                var.name = name;
                const auto& iv = v.at("interval");
                var.interval = Interval(Scalar::parse(iv.at(0).get<std::string>()),
                                        Scalar::parse(iv.at(1).get<std::string>()));
                var.unbounded = v.at("unbounded").get<bool>();
                var.center = Scalar::parse(v.at("center").get<std::string>());
                var.central = read_coefficients(v.at("central"), 'e');
                var.perturbation = read_coefficients(v.at("perturbation"), 'n');
                names.push_back(name);
                forms.push_back(AffineForm{var.center, var.central, var.perturbation});
                point.vars.push_back(std::move(var));
            }
            if (point.bottom) {
                point.value = PerturbedAffineSet::bottom(names);
            } else if (point.top) {
                point.value = PerturbedAffineSet::top(names);
            } else {
                point.value = PerturbedAffineSet(names, std::move(forms));
            }
            r.points.push_back(std::move(point));
        }
        for (const auto& s : j.at("sensitivity")) {
            Sensitivity sens{s.at("label").get<std::string>(), s.at("var").get<std::string>(), {}};
            for (const auto& e : s.at("ranking")) {
                const auto sym = e.at("symbol").get<std::string>();
                sens.ranking.emplace_back(static_cast<std::uint32_t>(std::stoul(sym.substr(1))),
                                          Scalar::parse(e.at("coefficient").get<std::string>()));
            }
            r.sensitivity.push_back(std::move(sens));
        }
        for (const auto& [key, name] : j.at("inputs").items()) {
            r.inputs[static_cast<std::uint32_t>(std::stoul(key.substr(1)))] = name.get<std::string>();
        }
        const auto& s = j.at("status");
        r.status.stabilized = s.at("stabilized").get<bool>();
        r.status.top = s.at("top").get<bool>();
        r.status.loops = s.at("loops").get<std::size_t>();
        r.status.iterations = s.at("iterations").get<std::size_t>();
        r.status.postfix_verified = s.at("postfix_verified").get<std::size_t>();
        r.status.postfix_unknown = s.at("postfix_unknown").get<std::size_t>();
        r.status.postfix_failed = s.at("postfix_failed").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
    return r;
}

} // namespace zonoset
