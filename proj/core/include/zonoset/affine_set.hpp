// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zonoset/interval.hpp"
#include "zonoset/matrix.hpp"
#include "zonoset/rational.hpp"
#include "zonoset/symbols.hpp"

namespace zonoset {

/// Symbol index -> coefficient. Never stores zero coefficients.
using CoeffMap = std::map<std::uint32_t, Scalar>;

/// One perturbed affine form: center + sum of central terms + sum of perturbation terms.
/// This is the k-th column of a perturbed affine set.
struct AffineForm {
    Scalar center;
    CoeffMap central;
    CoeffMap perturbation;

    static AffineForm constant(Scalar c) { return AffineForm{std::move(c), {}, {}}; }

    [[nodiscard]] Scalar coeff(SymbolId s) const;
    /// Sets a coefficient; a zero value erases the entry.
    void set(SymbolId s, const Scalar& value);
    void add(SymbolId s, const Scalar& value);

    /// Sum of |central coefficients|, not counting the center.
    [[nodiscard]] Scalar central_radius() const;
    [[nodiscard]] Scalar perturbation_radius() const;
    [[nodiscard]] Scalar radius() const { return central_radius() + perturbation_radius(); }
    [[nodiscard]] Interval interval() const;

    [[nodiscard]] bool is_constant() const { return central.empty() && perturbation.empty(); }

    /// Value of the form once every noise symbol is fixed by `value_of`.
    [[nodiscard]] Scalar evaluate(const std::function<Scalar(SymbolId)>& value_of) const;

    [[nodiscard]] AffineForm scaled(const Scalar& lambda) const;
    AffineForm& operator+=(const AffineForm& o);
    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(const AffineForm& a, const AffineForm& b) { return a + b.scaled(Scalar(-1)); }

    /// "3/2 + 1/2 e1 - n2" style rendering.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Dense view of a perturbed affine set: central matrix (row 0 holds the centers) and the
/// perturbation matrix, over an explicit symbol ordering.
struct DenseForm {
    Matrix central;
    Matrix perturbation;
    std::vector<std::uint32_t> central_symbols;
    std::vector<std::uint32_t> perturbation_symbols;
};

/// Abstract value for p program variables: p perturbed affine forms over a shared registry of
/// noise symbols, or one of the two special elements bottom / top.
///
/// Values are immutable once built; all transfer functions return new values.
class PerturbedAffineSet {
  public:
    PerturbedAffineSet() = default;
    PerturbedAffineSet(std::vector<std::string> vars, std::vector<AffineForm> columns);

    static PerturbedAffineSet bottom(std::vector<std::string> vars);
    static PerturbedAffineSet top(std::vector<std::string> vars);

    [[nodiscard]] bool is_bottom() const { return special_ == Special::Bottom; }
    [[nodiscard]] bool is_top() const { return special_ == Special::Top; }
    [[nodiscard]] bool is_special() const { return special_ != Special::None; }

    [[nodiscard]] std::size_t dim() const { return vars_.size(); }
    [[nodiscard]] const std::vector<std::string>& vars() const { return vars_; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;

    /// Throws DomainError on bottom/top and DimensionError when k is out of range.
    [[nodiscard]] const AffineForm& column(std::size_t k) const;
    [[nodiscard]] const std::vector<AffineForm>& columns() const { return columns_; }

    /// Sorted union of symbol indices used by any column.
    [[nodiscard]] std::vector<std::uint32_t> central_symbols() const;
    [[nodiscard]] std::vector<std::uint32_t> perturbation_symbols() const;

    /// Appends a new variable; bottom and top absorb the column.
    [[nodiscard]] PerturbedAffineSet with_column(std::string name, AffineForm form) const;
    /// Keeps the listed columns, in the listed order.
    [[nodiscard]] PerturbedAffineSet select(std::span<const std::size_t> keep) const;
    [[nodiscard]] PerturbedAffineSet renamed(std::size_t k, std::string name) const;
    [[nodiscard]] PerturbedAffineSet with_replaced(std::size_t k, AffineForm form) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const PerturbedAffineSet&, const PerturbedAffineSet&) = default;

  private:
    enum class Special : std::uint8_t { None, Bottom, Top };

    void check_index(std::size_t k) const;

    std::vector<std::string> vars_;
    std::vector<AffineForm> columns_;
    Special special_ = Special::None;
};

/// Dense materialization over the given symbol orderings (symbols absent from X give zero rows).
DenseForm materialize(const PerturbedAffineSet& x, std::span<const std::uint32_t> central_symbols,
                      std::span<const std::uint32_t> perturbation_symbols);
DenseForm materialize(const PerturbedAffineSet& x);

/// Central matrix without its center row.
Matrix central_deviation(const DenseForm& d);

/// Per-axis concretization: center +- (sum of |coefficients|). Throws DomainError on bottom/top.
Interval gamma_interval(const PerturbedAffineSet& x, std::size_t k);

struct AxisRange {
    enum class Kind : std::uint8_t { Empty, Bounded, Unbounded };
    Kind kind = Kind::Empty;
    Interval range;
};

/// gamma_interval extended to the special elements: bottom is Empty, top is the given box flagged
/// Unbounded.
AxisRange axis_range(const PerturbedAffineSet& x, std::size_t k, const Interval& top_box);

/// Range of <t, x> over the concretization: <center, t> +- (|C't|_1 + |Pt|_1).
Interval support(const PerturbedAffineSet& x, std::span<const Scalar> t);

} // namespace zonoset
