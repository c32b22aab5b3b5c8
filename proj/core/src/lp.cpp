// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/lp.hpp"

#include <limits>

#include "zonoset/error.hpp"

namespace zonoset {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Dense tableau. Column `width` holds the right-hand side; `cost` is the reduced-cost row whose
/// last entry is minus the current objective value.
class Tableau {
  public:
    Tableau(std::size_t rows, std::size_t width) : width_(width), a_(rows, std::vector<Scalar>(width + 1)), basis_(rows) {}

    std::vector<Scalar>& row(std::size_t i) { return a_[i]; }
    std::size_t& basis(std::size_t i) { return basis_[i]; }
    [[nodiscard]] std::size_t rows() const { return a_.size(); }
    [[nodiscard]] std::size_t width() const { return width_; }
    [[nodiscard]] const Scalar& rhs(std::size_t i) const { return a_[i][width_]; }

    void price(const std::vector<Scalar>& costs) {
        cost_.assign(width_ + 1, Scalar());
        for (std::size_t j = 0; j < width_; ++j) {
            cost_[j] = costs[j];
        }
        for (std::size_t i = 0; i < rows(); ++i) {
            const Scalar& cb = costs[basis_[i]];
            if (cb.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j <= width_; ++j) {
                if (!a_[i][j].is_zero()) {
                    cost_[j] -= cb * a_[i][j];
                }
            }
        }
    }

    [[nodiscard]] Scalar objective() const { return -cost_[width_]; }

    void pivot(std::size_t pr, std::size_t pc) {
        auto& prow = a_[pr];
        const Scalar inv = Scalar(1) / prow[pc];
        for (auto& v : prow) {
            if (!v.is_zero()) {
                v *= inv;
            }
        }
        auto eliminate = [&](std::vector<Scalar>& r) {
            if (r[pc].is_zero()) {
                return;
            }
            const Scalar f = r[pc];
            for (std::size_t j = 0; j <= width_; ++j) {
                if (!prow[j].is_zero()) {
                    r[j] -= f * prow[j];
                }
            }
        };
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i != pr) {
                eliminate(a_[i]);
            }
        }
        eliminate(cost_);
        basis_[pr] = pc;
        ++pivots_;
    }

    /// Bland's rule: lowest-index improving column among `allowed`; lowest basis index on ratio ties.
    /// Returns false at optimality; sets `unbounded` when the entering column has no positive entry.
    bool step(const std::vector<bool>& allowed, bool& unbounded) {
        std::size_t pc = npos;
        for (std::size_t j = 0; j < width_; ++j) {
            if (allowed[j] && cost_[j].sign() > 0) {
                pc = j;
                break;
            }
        }
        if (pc == npos) {
            return false;
        }
        std::size_t pr = npos;
        Scalar best_ratio;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (a_[i][pc].sign() <= 0) {
                continue;
            }
            Scalar ratio = a_[i][width_] / a_[i][pc];
            if (pr == npos || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[pr])) {
                pr = i;
                best_ratio = std::move(ratio);
            }
        }
        if (pr == npos) {
            unbounded = true;
            return false;
        }
        pivot(pr, pc);
        return true;
    }

    void drop_row(std::size_t i) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
    }

    [[nodiscard]] std::size_t pivots() const { return pivots_; }

  private:
    std::size_t width_;
    std::vector<std::vector<Scalar>> a_;
    std::vector<std::size_t> basis_;
    std::vector<Scalar> cost_;
    std::size_t pivots_ = 0;
};

} // namespace

LpSolution solve_lp(const LpProblem& problem, const LpOptions& options) {
    const std::size_t nvars = problem.objective.size();
    if (!problem.nonnegative.empty() && problem.nonnegative.size() != nvars) {
        throw DimensionError("LP: nonnegativity flags do not match the variable count");
    }
    for (const auto& c : problem.constraints) {
        if (c.coeffs.size() != nvars) {
            throw DimensionError("LP: constraint width does not match the variable count");
        }
    }

    // Structural columns: x_k (or x_k+ , x_k- for free variables), then slack/surplus, then artificials.
    std::vector<std::size_t> plus_col(nvars);
    std::vector<std::size_t> minus_col(nvars, npos);
    std::size_t width = 0;
    for (std::size_t k = 0; k < nvars; ++k) {
        plus_col[k] = width++;
        const bool nonneg = !problem.nonnegative.empty() && problem.nonnegative[k];
        if (!nonneg) {
            minus_col[k] = width++;
        }
    }
    const std::size_t structural = width;

    const std::size_t m = problem.constraints.size();
    std::vector<int> flip(m, 1);
    std::vector<Relation> rel(m);
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = problem.constraints[i];
        rel[i] = c.relation;
        if (c.bound.sign() < 0) {
            flip[i] = -1;
            if (rel[i] == Relation::LessEqual) {
                rel[i] = Relation::GreaterEqual;
            } else if (rel[i] == Relation::GreaterEqual) {
                rel[i] = Relation::LessEqual;
            }
        }
        if (rel[i] != Relation::Equal) {
            ++slack_count;
        }
        if (rel[i] != Relation::LessEqual) {
            ++artificial_count;
        }
    }
    const std::size_t first_artificial = structural + slack_count;
    width = first_artificial + artificial_count;

    Tableau t(m, width);
    std::size_t next_slack = structural;
    std::size_t next_art = first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = problem.constraints[i];
        auto& r = t.row(i);
        const Scalar sgn(flip[i]);
        for (std::size_t k = 0; k < nvars; ++k) {
            if (c.coeffs[k].is_zero()) {
                continue;
            }
            r[plus_col[k]] = c.coeffs[k] * sgn;
            if (minus_col[k] != npos) {
                r[minus_col[k]] = -(c.coeffs[k] * sgn);
            }
        }
        r[width] = c.bound * sgn;
        if (rel[i] == Relation::LessEqual) {
            r[next_slack] = Scalar(1);
            t.basis(i) = next_slack++;
        } else if (rel[i] == Relation::GreaterEqual) {
            r[next_slack++] = Scalar(-1);
            r[next_art] = Scalar(1);
            t.basis(i) = next_art++;
        } else {
            r[next_art] = Scalar(1);
            t.basis(i) = next_art++;
        }
    }

    LpSolution sol;
    std::vector<bool> allowed(width, true);

    if (artificial_count > 0) {
        std::vector<Scalar> phase1(width);
        for (std::size_t j = first_artificial; j < width; ++j) {
            phase1[j] = Scalar(-1);
        }
        t.price(phase1);
        bool unbounded = false;
        while (t.step(allowed, unbounded)) {
        }
        if (t.objective().sign() < 0) {
            sol.status = LpStatus::Infeasible;
            sol.pivots = t.pivots();
            return sol;
        }
        // Drive remaining (zero-valued) artificials out of the basis, or drop redundant rows.
        for (std::size_t i = 0; i < t.rows();) {
            if (t.basis(i) < first_artificial) {
                ++i;
                continue;
            }
            std::size_t pc = npos;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (!t.row(i)[j].is_zero()) {
                    pc = j;
                    break;
                }
            }
            if (pc == npos) {
                t.drop_row(i);
            } else {
                t.pivot(i, pc);
                ++i;
            }
        }
        for (std::size_t j = first_artificial; j < width; ++j) {
            allowed[j] = false;
        }
    }

    std::vector<Scalar> costs(width);
    for (std::size_t k = 0; k < nvars; ++k) {
        costs[plus_col[k]] = problem.objective[k];
        if (minus_col[k] != npos) {
            costs[minus_col[k]] = -problem.objective[k];
        }
    }
    t.price(costs);

    auto extract = [&]() {
        std::vector<Scalar> value(width);
        for (std::size_t i = 0; i < t.rows(); ++i) {
            value[t.basis(i)] = t.rhs(i);
        }
        sol.x.assign(nvars, Scalar());
        for (std::size_t k = 0; k < nvars; ++k) {
            sol.x[k] = value[plus_col[k]];
            if (minus_col[k] != npos) {
                sol.x[k] -= value[minus_col[k]];
            }
        }
        sol.objective = t.objective();
        sol.pivots = t.pivots();
    };

    bool unbounded = false;
    while (true) {
        if (options.target && t.objective() > *options.target) {
            extract();
            sol.status = LpStatus::TargetReached;
            return sol;
        }
        if (!t.step(allowed, unbounded)) {
            break;
        }
    }
    extract();
    sol.status = unbounded ? LpStatus::Unbounded : LpStatus::Optimal;
    return sol;
}

} // namespace zonoset
