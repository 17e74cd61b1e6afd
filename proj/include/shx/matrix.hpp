#ifndef SHX_MATRIX_HPP
#define SHX_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace shx {

// Row-major dense matrix of 64-bit reals. All kernels in this module use a
// fixed ascending-index summation order so repeated runs are bit-identical.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  const std::vector<double>& values() const { return v_; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> v_;
};

// Diagonal with non-negative entries (degree and weight matrices).
class DiagonalMatrix {
 public:
  DiagonalMatrix() = default;
  explicit DiagonalMatrix(std::vector<double> diag);

  std::size_t size() const { return diag_.size(); }
  double at(std::size_t i) const { return diag_[i]; }
  const std::vector<double>& diag() const { return diag_; }

 private:
  std::vector<double> diag_;
};

// Compressed sparse row matrix. Column indices are strictly increasing
// within a row and explicit zeros are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
  };

  // raw CSR arrays; offsets must be monotone and column indices strictly
  // increasing within each row
  SparseMatrix(std::size_t rows, std::size_t cols,
               std::vector<std::size_t> row_ptr,
               std::vector<std::size_t> col_idx, std::vector<double> values);

  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets);

  // Column-major input, one (row, value) list per column; duplicate rows
  // within a column are not allowed. Linear-time counting construction.
  static SparseMatrix from_columns(
      std::size_t rows,
      const std::vector<std::vector<std::pair<std::size_t, double>>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::size_t>& col_idx() const { return col_idx_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

  SparseMatrix transposed() const;

  // Coordinate-triplet debug dump, one "row,col,value" line per entry.
  std::vector<Triplet> triplets() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
};

// exact products, deterministic ascending-index accumulation
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_transpose_a(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix spmm(const SparseMatrix& a, const DenseMatrix& b);
DenseMatrix spmm_transpose_a(const SparseMatrix& a, const DenseMatrix& b);

DenseMatrix scale_rows(const DenseMatrix& m, const DiagonalMatrix& d);
DenseMatrix scale_cols(const DenseMatrix& m, const DiagonalMatrix& d);
SparseMatrix scale_rows(const SparseMatrix& m, const DiagonalMatrix& d);
SparseMatrix scale_cols(const SparseMatrix& m, const DiagonalMatrix& d);

enum class ActivationKind { relu, leaky_relu, identity };

struct Activation {
  ActivationKind kind = ActivationKind::relu;
  double slope = 0.01;  // leaky_relu only
};

DenseMatrix relu(const DenseMatrix& m);
DenseMatrix leaky_relu(const DenseMatrix& m, double slope);
DenseMatrix apply_activation(const DenseMatrix& m, const Activation& act);
double activation_derivative(double pre, const Activation& act);

// Row softmax with max subtraction; every row sums to 1.
DenseMatrix softmax_rows(const DenseMatrix& m);

}  // namespace shx

#endif  // SHX_MATRIX_HPP
