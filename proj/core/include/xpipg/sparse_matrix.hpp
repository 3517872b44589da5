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

#ifndef XPIPG_SPARSE_MATRIX_HPP
#define XPIPG_SPARSE_MATRIX_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace xpipg {

using Index = std::int64_t;
using Vector = Eigen::VectorXd;

struct Triplet {
  Index row = 0;
  Index col = 0;
  double value = 0.0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Compressed sparse matrix holding both a row-major copy and a row-major copy
// of the transpose. A*x and A^T*y are both gather-style loops with a
// fixed reduction order. Explicit zeros are kept; duplicate coordinates are
// rejected at construction.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols);

  // Throws std::invalid_argument on out-of-range indices, negative dimensions
  // or duplicate coordinates.
  static SparseMatrix from_triplets(Index rows, Index cols,
                                    std::vector<Triplet> entries);
  static SparseMatrix identity(Index n);
  static SparseMatrix from_dense(const Eigen::MatrixXd& dense);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index nnz() const { return static_cast<Index>(by_row_.values.size()); }

  // Entries in row-major order, columns ascending within each row.
  std::vector<Triplet> triplets() const;

  // Stored value at (row, col), or 0 when the coordinate is not stored.
  double coeff(Index row, Index col) const;
  bool contains(Index row, Index col) const;

  // out = A * x. `out` is resized.
  void multiply(const Vector& x, Vector& out) const;
  // out = A^T * y. `out` is resized.
  void multiply_transposed(const Vector& y, Vector& out) const;

  Vector operator*(const Vector& x) const;
  Vector transpose_times(const Vector& y) const;

  Eigen::MatrixXd to_dense() const;

 private:
  struct Compressed {
    std::vector<Index> outer;  // size outer_dim + 1
    std::vector<Index> inner;
    std::vector<double> values;
  };
  static Compressed compress(Index outer_dim, std::vector<Triplet> entries,
                             bool by_row);
  static void gather(const Compressed& c, Index outer_dim, const Vector& x,
                     Vector& out);

  Index rows_ = 0;
  Index cols_ = 0;
  Compressed by_row_{{0}, {}, {}};
  Compressed transposed_{{0}, {}, {}};
};

}  // namespace xpipg

#endif  // XPIPG_SPARSE_MATRIX_HPP
