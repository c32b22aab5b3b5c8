// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zonoset/rational.hpp"

namespace zonoset {

/// Dense row-major matrix of exact scalars. Rows index noise symbols, columns index variables.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t cols, std::vector<std::vector<Scalar>> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    void append_row(std::span<const Scalar> values);

    /// Vertical concatenation; column counts must agree.
    [[nodiscard]] Matrix stacked(const Matrix& below) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

/// Sum over rows of |<row, t>|: the support value of the centered zonotope generated by the rows.
Scalar linear_norm(const Matrix& m, std::span<const Scalar> t);

/// Canonical generator set of the centered zonotope spanned by the rows of `m`: zero rows removed,
/// each row scaled so its first nonzero entry is positive, parallel rows merged, rows sorted.
/// Two matrices generate the same centered zonotope iff their canonical forms are equal.
Matrix canonical_generators(const Matrix& m);

} // namespace zonoset
