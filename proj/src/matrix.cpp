#include "shx/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shx/error.hpp"

namespace shx {

namespace {

void require_shape(bool ok, const std::string& what) {
  if (!ok) fail(errc::shape_mismatch, what);
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> values)
    : rows_(rows), cols_(cols), v_(std::move(values)) {
  require_shape(v_.size() == rows * cols, "dense matrix value count mismatch");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

bool DenseMatrix::all_finite() const {
  for (double x : v_)
    if (!std::isfinite(x)) return false;
  return true;
}

DiagonalMatrix::DiagonalMatrix(std::vector<double> diag)
    : diag_(std::move(diag)) {
  for (double x : diag_)
    if (x < 0.0) fail(errc::domain, "diagonal matrix entry is negative");
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  SparseMatrix m(rows, cols);
  m.col_idx_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    const Triplet& t = triplets[i];
    require_shape(t.row < rows && t.col < cols, "sparse triplet out of range");
    if (i > 0 && t.row == triplets[i - 1].row && t.col == triplets[i - 1].col)
      fail(errc::domain, "duplicate sparse triplet");
    if (t.value == 0.0) continue;
    m.col_idx_.push_back(t.col);
    m.values_.push_back(t.value);
    m.row_ptr_[t.row + 1]++;
  }
  for (std::size_t r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols,
                           std::vector<std::size_t> row_ptr,
                           std::vector<std::size_t> col_idx,
                           std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      row_ptr_(std::move(row_ptr)),
      col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
  require_shape(row_ptr_.size() == rows + 1 && row_ptr_.front() == 0 &&
                    row_ptr_.back() == col_idx_.size() &&
                    col_idx_.size() == values_.size(),
                "malformed CSR arrays");
  for (std::size_t r = 0; r < rows_; ++r) {
    require_shape(row_ptr_[r] <= row_ptr_[r + 1], "CSR offsets not monotone");
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      require_shape(col_idx_[k] < cols_, "CSR column out of range");
      if (k > row_ptr_[r])
        require_shape(col_idx_[k - 1] < col_idx_[k],
                      "CSR columns not increasing");
    }
  }
}

SparseMatrix SparseMatrix::from_columns(
    std::size_t rows,
    const std::vector<std::vector<std::pair<std::size_t, double>>>& columns) {
  SparseMatrix m(rows, columns.size());
  std::size_t nnz = 0;
  for (const auto& column : columns)
    for (const auto& [row, value] : column) {
      require_shape(row < rows, "sparse column entry out of range");
      if (value != 0.0) {
        m.row_ptr_[row + 1]++;
        ++nnz;
      }
    }
  for (std::size_t r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  m.col_idx_.resize(nnz);
  m.values_.resize(nnz);
  std::vector<std::size_t> cursor(m.row_ptr_.begin(), m.row_ptr_.end() - 1);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [row, value] : columns[j]) {
      if (value == 0.0) continue;
      m.col_idx_[cursor[row]] = j;
      m.values_[cursor[row]] = value;
      cursor[row]++;
    }
  return m;
}

SparseMatrix SparseMatrix::transposed() const {
  // counting transpose; rows of the result come out sorted because the
  // source rows are scanned in ascending order
  SparseMatrix t(cols_, rows_);
  for (std::size_t k = 0; k < col_idx_.size(); ++k)
    t.row_ptr_[col_idx_[k] + 1]++;
  for (std::size_t r = 0; r < cols_; ++r) t.row_ptr_[r + 1] += t.row_ptr_[r];
  t.col_idx_.resize(nnz());
  t.values_.resize(nnz());
  std::vector<std::size_t> cursor(t.row_ptr_.begin(), t.row_ptr_.end() - 1);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t pos = cursor[col_idx_[k]]++;
      t.col_idx_[pos] = r;
      t.values_[pos] = values_[k];
    }
  return t;
}

std::vector<SparseMatrix::Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> ts;
  ts.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      ts.push_back({r, col_idx_[k], values_[k]});
  return ts;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  require_shape(a.cols() == b.rows(), "matmul shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc += a.at(i, k) * b.at(k, j);
      c.at(i, j) = acc;
    }
  return c;
}

DenseMatrix matmul_transpose_a(const DenseMatrix& a, const DenseMatrix& b) {
  require_shape(a.rows() == b.rows(), "matmul_transpose_a shape mismatch");
  DenseMatrix c(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.rows(); ++k)
        acc += a.at(k, i) * b.at(k, j);
      c.at(i, j) = acc;
    }
  return c;
}

DenseMatrix spmm(const SparseMatrix& a, const DenseMatrix& b) {
  require_shape(a.cols() == b.rows(), "spmm shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  const auto& rp = a.row_ptr();
  const auto& ci = a.col_idx();
  const auto& av = a.values();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
      const double aik = av[k];
      const std::size_t col = ci[k];
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += aik * b.at(col, j);
    }
  return c;
}

DenseMatrix spmm_transpose_a(const SparseMatrix& a, const DenseMatrix& b) {
  require_shape(a.rows() == b.rows(), "spmm_transpose_a shape mismatch");
  DenseMatrix c(a.cols(), b.cols());
  const auto& rp = a.row_ptr();
  const auto& ci = a.col_idx();
  const auto& av = a.values();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
      const double aik = av[k];
      const std::size_t row = ci[k];
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(row, j) += aik * b.at(i, j);
    }
  return c;
}

DenseMatrix scale_rows(const DenseMatrix& m, const DiagonalMatrix& d) {
  require_shape(d.size() == m.rows(), "scale_rows dimension mismatch");
  DenseMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      c.at(i, j) = d.at(i) * m.at(i, j);
  return c;
}

DenseMatrix scale_cols(const DenseMatrix& m, const DiagonalMatrix& d) {
  require_shape(d.size() == m.cols(), "scale_cols dimension mismatch");
  DenseMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      c.at(i, j) = m.at(i, j) * d.at(j);
  return c;
}

SparseMatrix scale_rows(const SparseMatrix& m, const DiagonalMatrix& d) {
  require_shape(d.size() == m.rows(), "scale_rows dimension mismatch");
  SparseMatrix c = m;
  auto& vals = c.mutable_values();
  const auto& rp = c.row_ptr();
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) vals[k] *= d.at(i);
  return c;
}

SparseMatrix scale_cols(const SparseMatrix& m, const DiagonalMatrix& d) {
  require_shape(d.size() == m.cols(), "scale_cols dimension mismatch");
  SparseMatrix c = m;
  auto& vals = c.mutable_values();
  const auto& ci = c.col_idx();
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] *= d.at(ci[k]);
  return c;
}

DenseMatrix relu(const DenseMatrix& m) {
  DenseMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      c.at(i, j) = m.at(i, j) > 0.0 ? m.at(i, j) : 0.0;
  return c;
}

DenseMatrix leaky_relu(const DenseMatrix& m, double slope) {
  DenseMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double x = m.at(i, j);
      c.at(i, j) = x > 0.0 ? x : slope * x;
    }
  return c;
}

DenseMatrix apply_activation(const DenseMatrix& m, const Activation& act) {
  switch (act.kind) {
    case ActivationKind::relu:
      return relu(m);
    case ActivationKind::leaky_relu:
      return leaky_relu(m, act.slope);
    case ActivationKind::identity:
      return m;
  }
  fail(errc::usage, "unknown activation");
}

double activation_derivative(double pre, const Activation& act) {
  switch (act.kind) {
    case ActivationKind::relu:
      return pre > 0.0 ? 1.0 : 0.0;
    case ActivationKind::leaky_relu:
      return pre > 0.0 ? 1.0 : act.slope;
    case ActivationKind::identity:
      return 1.0;
  }
  fail(errc::usage, "unknown activation");
}

DenseMatrix softmax_rows(const DenseMatrix& m) {
  DenseMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double mx = -HUGE_VAL;
    for (std::size_t j = 0; j < m.cols(); ++j) mx = std::max(mx, m.at(i, j));
    double sum = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double e = std::exp(m.at(i, j) - mx);
      c.at(i, j) = e;
      sum += e;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) c.at(i, j) /= sum;
  }
  return c;
}

}  // namespace shx
