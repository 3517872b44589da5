// Copyright 2026 The xPIPG Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xpipg/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace xpipg {

SparseMatrix::SparseMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("SparseMatrix: negative dimension");
  }
  by_row_.outer.assign(static_cast<std::size_t>(rows) + 1, 0);
  transposed_.outer.assign(static_cast<std::size_t>(cols) + 1, 0);
}

SparseMatrix::Compressed SparseMatrix::compress(Index outer_dim,
                                                std::vector<Triplet> entries,
                                                bool by_row) {
  auto key = [by_row](const Triplet& t) {
    return by_row ? std::pair{t.row, t.col} : std::pair{t.col, t.row};
  };
  std::sort(entries.begin(), entries.end(),
            [&](const Triplet& a, const Triplet& b) { return key(a) < key(b); });
  Compressed c;
  c.outer.assign(static_cast<std::size_t>(outer_dim) + 1, 0);
  c.inner.reserve(entries.size());
  c.values.reserve(entries.size());
  for (const Triplet& t : entries) {
    const auto [outer, inner] = key(t);
    ++c.outer[static_cast<std::size_t>(outer) + 1];
    c.inner.push_back(inner);
    c.values.push_back(t.value);
  }
  for (std::size_t i = 1; i < c.outer.size(); ++i) c.outer[i] += c.outer[i - 1];
  return c;
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols,
                                         std::vector<Triplet> entries) {
  SparseMatrix a(rows, cols);
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw std::invalid_argument(
          "SparseMatrix: entry (" + std::to_string(t.row) + ", " +
          std::to_string(t.col) + ") out of range for " +
          std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  Compressed by_row = compress(rows, entries, /*by_row=*/true);
  for (Index r = 0; r < rows; ++r) {
    for (Index k = by_row.outer[r] + 1; k < by_row.outer[r + 1]; ++k) {
      if (by_row.inner[k] == by_row.inner[k - 1]) {
        throw std::invalid_argument("SparseMatrix: duplicate entry (" +
                                    std::to_string(r) + ", " +
                                    std::to_string(by_row.inner[k]) + ")");
      }
    }
  }
  a.by_row_ = std::move(by_row);
  a.transposed_ = compress(cols, std::move(entries), /*by_row=*/false);
  return a;
}

SparseMatrix SparseMatrix::identity(Index n) {
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) entries.push_back({i, i, 1.0});
  return from_triplets(n, n, std::move(entries));
}

SparseMatrix SparseMatrix::from_dense(const Eigen::MatrixXd& dense) {
  std::vector<Triplet> entries;
  for (Index r = 0; r < dense.rows(); ++r) {
    for (Index c = 0; c < dense.cols(); ++c) {
      if (dense(r, c) != 0.0) entries.push_back({r, c, dense(r, c)});
    }
  }
  return from_triplets(dense.rows(), dense.cols(), std::move(entries));
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(by_row_.values.size());
  for (Index r = 0; r < rows_; ++r) {
    for (Index k = by_row_.outer[r]; k < by_row_.outer[r + 1]; ++k) {
      out.push_back({r, by_row_.inner[k], by_row_.values[k]});
    }
  }
  return out;
}

double SparseMatrix::coeff(Index row, Index col) const {
  const auto begin = by_row_.inner.begin() + by_row_.outer[row];
  const auto end = by_row_.inner.begin() + by_row_.outer[row + 1];
  const auto it = std::lower_bound(begin, end, col);
  if (it == end || *it != col) return 0.0;
  return by_row_.values[static_cast<std::size_t>(it - by_row_.inner.begin())];
}

bool SparseMatrix::contains(Index row, Index col) const {
  const auto begin = by_row_.inner.begin() + by_row_.outer[row];
  const auto end = by_row_.inner.begin() + by_row_.outer[row + 1];
  return std::binary_search(begin, end, col);
}

void SparseMatrix::gather(const Compressed& c, Index outer_dim,
                          const Vector& x, Vector& out) {
  out.resize(outer_dim);
  for (Index i = 0; i < outer_dim; ++i) {
    double sum = 0.0;
    for (Index k = c.outer[i]; k < c.outer[i + 1]; ++k) {
      sum += c.values[k] * x[c.inner[k]];
    }
    out[i] = sum;
  }
}

void SparseMatrix::multiply(const Vector& x, Vector& out) const {
  gather(by_row_, rows_, x, out);
}

void SparseMatrix::multiply_transposed(const Vector& y, Vector& out) const {
  gather(transposed_, cols_, y, out);
}

Vector SparseMatrix::operator*(const Vector& x) const {
  Vector out;
  multiply(x, out);
  return out;
}

Vector SparseMatrix::transpose_times(const Vector& y) const {
  Vector out;
  multiply_transposed(y, out);
  return out;
}

Eigen::MatrixXd SparseMatrix::to_dense() const {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(rows_, cols_);
  for (Index r = 0; r < rows_; ++r) {
    for (Index k = by_row_.outer[r]; k < by_row_.outer[r + 1]; ++k) {
      dense(r, by_row_.inner[k]) = by_row_.values[k];
    }
  }
  return dense;
}

}  // namespace xpipg
