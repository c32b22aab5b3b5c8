// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/matrix.hpp"

#include <algorithm>
#include <map>

#include "zonoset/error.hpp"

namespace zonoset {

Matrix::Matrix(std::size_t cols, std::vector<std::vector<Scalar>> rows) : rows_(0), cols_(cols) {
    for (const auto& r : rows) {
        append_row(r);
    }
}

void Matrix::append_row(std::span<const Scalar> values) {
    if (values.size() != cols_) {
        throw DimensionError("row of length " + std::to_string(values.size()) + " appended to matrix with " +
                             std::to_string(cols_) + " columns");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0) {
        throw DimensionError("stacking matrices with different column counts");
    }
    Matrix out = rows_ == 0 ? Matrix(0, below.cols_) : *this;
    for (std::size_t r = 0; r < below.rows_; ++r) {
        out.append_row(below.row(r));
    }
    return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) {
        throw DimensionError("dot product of vectors of length " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    }
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            s += a[i] * b[i];
        }
    }
    return s;
}

Scalar linear_norm(const Matrix& m, std::span<const Scalar> t) {
    if (m.cols() != t.size()) {
        throw DimensionError("linear_norm: matrix has " + std::to_string(m.cols()) + " columns, direction has " +
                             std::to_string(t.size()) + " entries");
    }
    Scalar total;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        total += dot(m.row(r), t).abs();
    }
    return total;
}

Matrix canonical_generators(const Matrix& m) {
    // direction (first nonzero entry == 1) -> accumulated positive magnitude
    std::map<std::vector<Scalar>, Scalar> merged;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        const auto lead = std::find_if(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (lead == row.end()) {
            continue;
        }
        const Scalar scale = *lead;
        std::vector<Scalar> direction;
        direction.reserve(row.size());
        for (const auto& v : row) {
            direction.push_back(v / scale);
        }
        merged[std::move(direction)] += scale.abs();
    }

    std::vector<std::vector<Scalar>> rows;
    rows.reserve(merged.size());
    for (const auto& [direction, magnitude] : merged) {
        std::vector<Scalar> row;
        row.reserve(direction.size());
        for (const auto& d : direction) {
            row.push_back(d * magnitude);
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return Matrix(m.cols(), std::move(rows));
}

} // namespace zonoset
