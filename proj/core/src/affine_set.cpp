// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/affine_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zonoset/error.hpp"

namespace zonoset {

namespace {

CoeffMap& map_for(AffineForm& f, SymbolKind kind) {
    return kind == SymbolKind::Central ? f.central : f.perturbation;
}

const CoeffMap& map_for(const AffineForm& f, SymbolKind kind) {
    return kind == SymbolKind::Central ? f.central : f.perturbation;
}

Scalar abs_sum(const CoeffMap& m) {
    Scalar s;
    for (const auto& [_, c] : m) {
        s += c.abs();
    }
    return s;
}

void accumulate(CoeffMap& into, const CoeffMap& from, const Scalar& factor) {
    for (const auto& [sym, c] : from) {
        auto [it, inserted] = into.try_emplace(sym, c * factor);
        if (!inserted) {
            it->second += c * factor;
            if (it->second.is_zero()) {
                into.erase(it);
            }
        }
    }
}

void append_term(std::ostringstream& os, bool first, const Scalar& c, const std::string& symbol) {
    const Scalar mag = c.abs();
    if (first) {
        os << (c.sign() < 0 ? "-" : "");
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mag != Scalar(1) || symbol.empty()) {
        os << mag.str();
        if (!symbol.empty()) {
            os << ' ';
        }
    }
    os << symbol;
}

} // namespace

Scalar AffineForm::coeff(SymbolId s) const {
    const auto& m = map_for(*this, s.kind);
    const auto it = m.find(s.index);
    return it == m.end() ? Scalar() : it->second;
}

void AffineForm::set(SymbolId s, const Scalar& value) {
    auto& m = map_for(*this, s.kind);
    if (value.is_zero()) {
        m.erase(s.index);
    } else {
        m[s.index] = value;
    }
}

void AffineForm::add(SymbolId s, const Scalar& value) { set(s, coeff(s) + value); }

Scalar AffineForm::central_radius() const { return abs_sum(central); }

Scalar AffineForm::perturbation_radius() const { return abs_sum(perturbation); }

Interval AffineForm::interval() const {
    const Scalar r = radius();
    return {center - r, center + r};
}

Scalar AffineForm::evaluate(const std::function<Scalar(SymbolId)>& value_of) const {
    Scalar v = center;
    for (const auto& [i, c] : central) {
        v += c * value_of({SymbolKind::Central, i});
    }
    for (const auto& [j, c] : perturbation) {
        v += c * value_of({SymbolKind::Perturbation, j});
    }
    return v;
}

AffineForm AffineForm::scaled(const Scalar& lambda) const {
    if (lambda.is_zero()) {
        return AffineForm{};
    }
    AffineForm out;
    out.center = center * lambda;
    for (const auto& [i, c] : central) {
        out.central.emplace(i, c * lambda);
    }
    for (const auto& [j, c] : perturbation) {
        out.perturbation.emplace(j, c * lambda);
    }
    return out;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
    center += o.center;
    accumulate(central, o.central, Scalar(1));
    accumulate(perturbation, o.perturbation, Scalar(1));
    return *this;
}

std::string AffineForm::str() const {
    std::ostringstream os;
    bool first = true;
    if (!center.is_zero() || is_constant()) {
        append_term(os, true, center, "");
        first = false;
    }
    for (const auto& [i, c] : central) {
        append_term(os, first, c, "e" + std::to_string(i));
        first = false;
    }
    for (const auto& [j, c] : perturbation) {
        append_term(os, first, c, "n" + std::to_string(j));
        first = false;
    }
    return os.str();
}

PerturbedAffineSet::PerturbedAffineSet(std::vector<std::string> vars, std::vector<AffineForm> columns)
    : vars_(std::move(vars)), columns_(std::move(columns)) {
    if (vars_.size() != columns_.size()) {
        throw DimensionError("affine set with " + std::to_string(vars_.size()) + " names but " +
                             std::to_string(columns_.size()) + " columns");
    }
    for (const auto& col : columns_) {
        for (const auto* m : {&col.central, &col.perturbation}) {
            for (const auto& [_, c] : *m) {
                if (c.is_zero()) {
                    throw DomainError("explicit zero coefficient in affine form");
                }
            }
        }
    }
}

PerturbedAffineSet PerturbedAffineSet::bottom(std::vector<std::string> vars) {
    PerturbedAffineSet x;
    x.vars_ = std::move(vars);
    x.special_ = Special::Bottom;
    return x;
}

PerturbedAffineSet PerturbedAffineSet::top(std::vector<std::string> vars) {
    PerturbedAffineSet x;
    x.vars_ = std::move(vars);
    x.special_ = Special::Top;
    return x;
}

std::optional<std::size_t> PerturbedAffineSet::index_of(std::string_view name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - vars_.begin());
}

void PerturbedAffineSet::check_index(std::size_t k) const {
    if (k >= vars_.size()) {
        throw DimensionError("variable index " + std::to_string(k) + " out of range (dimension " +
                             std::to_string(vars_.size()) + ")");
    }
}

const AffineForm& PerturbedAffineSet::column(std::size_t k) const {
    check_index(k);
    if (is_special()) {
        throw DomainError(std::string("no affine form for variable of ") + (is_bottom() ? "bottom" : "top"));
    }
    return columns_[k];
}

std::vector<std::uint32_t> PerturbedAffineSet::central_symbols() const {
    std::set<std::uint32_t> s;
    for (const auto& col : columns_) {
        for (const auto& [i, _] : col.central) {
            s.insert(i);
        }
    }
    return {s.begin(), s.end()};
}

std::vector<std::uint32_t> PerturbedAffineSet::perturbation_symbols() const {
    std::set<std::uint32_t> s;
    for (const auto& col : columns_) {
        for (const auto& [j, _] : col.perturbation) {
            s.insert(j);
        }
    }
    return {s.begin(), s.end()};
}

PerturbedAffineSet PerturbedAffineSet::with_column(std::string name, AffineForm form) const {
    PerturbedAffineSet out = *this;
    out.vars_.push_back(std::move(name));
    if (!is_special()) {
        out.columns_.push_back(std::move(form));
    }
    return out;
}

PerturbedAffineSet PerturbedAffineSet::select(std::span<const std::size_t> keep) const {
    PerturbedAffineSet out;
    out.special_ = special_;
    for (const auto k : keep) {
        check_index(k);
        out.vars_.push_back(vars_[k]);
        if (!is_special()) {
            out.columns_.push_back(columns_[k]);
        }
    }
    return out;
}

PerturbedAffineSet PerturbedAffineSet::renamed(std::size_t k, std::string name) const {
    check_index(k);
    PerturbedAffineSet out = *this;
    out.vars_[k] = std::move(name);
    return out;
}

PerturbedAffineSet PerturbedAffineSet::with_replaced(std::size_t k, AffineForm form) const {
    check_index(k);
    PerturbedAffineSet out = *this;
    if (!is_special()) {
        out.columns_[k] = std::move(form);
    }
    return out;
}

std::string PerturbedAffineSet::str() const {
    if (is_bottom()) {
        return "bottom";
    }
    if (is_top()) {
        return "top";
    }
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        os << (k == 0 ? "" : ", ") << vars_[k] << " = " << columns_[k].str();
    }
    os << ')';
    return os.str();
}

DenseForm materialize(const PerturbedAffineSet& x, std::span<const std::uint32_t> central_symbols,
                      std::span<const std::uint32_t> perturbation_symbols) {
    if (x.is_special()) {
        throw DomainError("cannot materialize bottom/top as matrices");
    }
    const std::size_t p = x.dim();
    DenseForm d{Matrix(central_symbols.size() + 1, p), Matrix(perturbation_symbols.size(), p),
                {central_symbols.begin(), central_symbols.end()},
                {perturbation_symbols.begin(), perturbation_symbols.end()}};
    for (std::size_t k = 0; k < p; ++k) {
        const auto& col = x.columns()[k];
        d.central(0, k) = col.center;
        for (std::size_t r = 0; r < central_symbols.size(); ++r) {
            if (const auto it = col.central.find(central_symbols[r]); it != col.central.end()) {
                d.central(r + 1, k) = it->second;
            }
        }
        for (std::size_t r = 0; r < perturbation_symbols.size(); ++r) {
            if (const auto it = col.perturbation.find(perturbation_symbols[r]); it != col.perturbation.end()) {
                d.perturbation(r, k) = it->second;
            }
        }
    }
    for (const auto& col : x.columns()) {
        for (const auto& [i, _] : col.central) {
            if (!std::binary_search(d.central_symbols.begin(), d.central_symbols.end(), i)) {
                throw DimensionError("materialize: central symbol e" + std::to_string(i) + " not in ordering");
            }
        }
        for (const auto& [j, _] : col.perturbation) {
            if (!std::binary_search(d.perturbation_symbols.begin(), d.perturbation_symbols.end(), j)) {
                throw DimensionError("materialize: perturbation symbol n" + std::to_string(j) + " not in ordering");
            }
        }
    }
    return d;
}

DenseForm materialize(const PerturbedAffineSet& x) {
    const auto cs = x.central_symbols();
    const auto ps = x.perturbation_symbols();
    return materialize(x, cs, ps);
}

Matrix central_deviation(const DenseForm& d) {
    Matrix out(0, d.central.cols());
    for (std::size_t r = 1; r < d.central.rows(); ++r) {
        out.append_row(d.central.row(r));
    }
    return out;
}

Interval gamma_interval(const PerturbedAffineSet& x, std::size_t k) { return x.column(k).interval(); }

AxisRange axis_range(const PerturbedAffineSet& x, std::size_t k, const Interval& top_box) {
    if (k >= x.dim()) {
        throw DimensionError("axis_range: variable index out of range");
    }
    if (x.is_bottom()) {
        return {AxisRange::Kind::Empty, Interval()};
    }
    if (x.is_top()) {
        return {AxisRange::Kind::Unbounded, top_box};
    }
    return {AxisRange::Kind::Bounded, gamma_interval(x, k)};
}

Interval support(const PerturbedAffineSet& x, std::span<const Scalar> t) {
    if (t.size() != x.dim()) {
        throw DimensionError("support: direction has " + std::to_string(t.size()) + " entries for " +
                             std::to_string(x.dim()) + " variables");
    }
    if (x.is_special()) {
        throw DomainError("support of bottom/top");
    }
    Scalar center;
    std::map<std::uint32_t, Scalar> central_row;
    std::map<std::uint32_t, Scalar> perturbation_row;
    for (std::size_t k = 0; k < x.dim(); ++k) {
        if (t[k].is_zero()) {
            continue;
        }
        const auto& col = x.columns()[k];
        center += col.center * t[k];
        for (const auto& [i, c] : col.central) {
            central_row[i] += c * t[k];
        }
        for (const auto& [j, c] : col.perturbation) {
            perturbation_row[j] += c * t[k];
        }
    }
    Scalar r;
    for (const auto& [_, v] : central_row) {
        r += v.abs();
    }
    for (const auto& [_, v] : perturbation_row) {
        r += v.abs();
    }
    return {center - r, center + r};
}

} // namespace zonoset
