#include "shx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shx/error.hpp"

namespace shx {

double pseudo_inverse(double x) { return x > 0.0 ? 1.0 / x : 0.0; }
double pseudo_inverse_sqrt(double x) {
  return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0;
}

SparseMatrix incidence_matrix(const Hypergraph& h) {
  // columns within a row come out ascending because edges are scanned in
  // order, so the CSR arrays fill in O(nnz) with no intermediate buffers
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> row_ptr(n + 1, 0);
  std::size_t nnz = 0;
  for (const auto& e : h.edges()) {
    nnz += e.members.size();
    for (std::size_t i : e.members) row_ptr[i + 1]++;
  }
  for (std::size_t r = 0; r < n; ++r) row_ptr[r + 1] += row_ptr[r];
  std::vector<std::size_t> col_idx(nnz);
  std::vector<double> values(nnz, 1.0);
  std::vector<std::size_t> cursor(row_ptr.begin(), row_ptr.end() - 1);
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    for (std::size_t i : h.edge(j).members) col_idx[cursor[i]++] = j;
  return SparseMatrix(n, h.edge_count(), std::move(row_ptr),
                      std::move(col_idx), std::move(values));
}

std::vector<double> edge_weights_of(const Hypergraph& h) {
  std::vector<double> w;
  w.reserve(h.edge_count());
  for (const auto& e : h.edges()) w.push_back(e.weight);
  return w;
}

std::pair<DiagonalMatrix, DiagonalMatrix> degrees_of(
    const SparseMatrix& incidence, const std::vector<double>& edge_weights) {
  if (edge_weights.size() != incidence.cols())
    fail(errc::shape_mismatch, "edge weight count mismatch");
  std::vector<double> dv(incidence.rows(), 0.0);
  std::vector<double> de(incidence.cols(), 0.0);
  const auto& rp = incidence.row_ptr();
  const auto& ci = incidence.col_idx();
  const auto& vals = incidence.values();
  for (std::size_t i = 0; i < incidence.rows(); ++i)
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
      dv[i] += vals[k] * edge_weights[ci[k]];
      de[ci[k]] += vals[k];
    }
  return {DiagonalMatrix(std::move(dv)), DiagonalMatrix(std::move(de))};
}

std::pair<DiagonalMatrix, DiagonalMatrix> degrees(const Hypergraph& h) {
  return degrees_of(incidence_matrix(h), edge_weights_of(h));
}

namespace {

// S = D_V^-1/2 H (W D_E^-1)^1/2; the propagator is S S^T which keeps the
// materialized matrix exactly symmetric and PSD.
SparseMatrix scaled_incidence(const SparseMatrix& incidence,
                              const std::vector<double>& edge_weights) {
  auto [dv, de] = degrees_of(incidence, edge_weights);
  SparseMatrix s = incidence;
  auto& vals = s.mutable_values();
  const auto& rp = s.row_ptr();
  const auto& ci = s.col_idx();
  for (std::size_t i = 0; i < s.rows(); ++i) {
    const double ri = pseudo_inverse_sqrt(dv.at(i));
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
      const std::size_t j = ci[k];
      const double cj =
          std::sqrt(edge_weights[j] * pseudo_inverse(de.at(j)));
      vals[k] *= ri * cj;
    }
  }
  return s;
}

}  // namespace

DenseMatrix normalized_propagator_of(const SparseMatrix& incidence,
                                     const std::vector<double>& edge_weights,
                                     std::size_t dense_cap) {
  const std::size_t n = incidence.rows();
  if (n > dense_cap)
    fail(errc::limit, "dense materialization cap exceeded: " +
                          std::to_string(n) + " > " +
                          std::to_string(dense_cap));
  const SparseMatrix s = scaled_incidence(incidence, edge_weights);

  DenseMatrix p(n, n);
  const auto& rp = s.row_ptr();
  const auto& ci = s.col_idx();
  const auto& vals = s.values();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      std::size_t a = rp[i], b = rp[j];
      while (a < rp[i + 1] && b < rp[j + 1]) {
        if (ci[a] == ci[b]) {
          acc += vals[a] * vals[b];
          ++a;
          ++b;
        } else if (ci[a] < ci[b]) {
          ++a;
        } else {
          ++b;
        }
      }
      p.at(i, j) = acc;
      p.at(j, i) = acc;
    }
  }
  return p;
}

DenseMatrix normalized_laplacian_of(const SparseMatrix& incidence,
                                    const std::vector<double>& edge_weights,
                                    std::size_t dense_cap) {
  DenseMatrix lap = normalized_propagator_of(incidence, edge_weights, dense_cap);
  for (std::size_t i = 0; i < lap.rows(); ++i)
    for (std::size_t j = 0; j < lap.cols(); ++j)
      lap.at(i, j) = (i == j ? 1.0 : 0.0) - lap.at(i, j);
  return lap;
}

DenseMatrix apply_propagator(const SparseMatrix& incidence,
                             const std::vector<double>& edge_weights,
                             const DenseMatrix& x) {
  if (x.rows() != incidence.rows())
    fail(errc::shape_mismatch, "feature row count mismatch");
  auto [dv, de] = degrees_of(incidence, edge_weights);
  std::vector<double> dv_inv_sqrt(dv.size());
  for (std::size_t i = 0; i < dv.size(); ++i)
    dv_inv_sqrt[i] = pseudo_inverse_sqrt(dv.at(i));
  std::vector<double> col_scale(de.size());
  for (std::size_t j = 0; j < de.size(); ++j)
    col_scale[j] = edge_weights[j] * pseudo_inverse(de.at(j));

  // One edge-major sweep: per hyperedge gather H^T (D_V^-1/2 X), scale by
  // w / delta, scatter straight back. Keeps the working set at two n x d
  // blocks instead of materializing the m x d intermediate.
  const DenseMatrix x1 = scale_rows(x, DiagonalMatrix(dv_inv_sqrt));
  const SparseMatrix edge_major = incidence.transposed();
  const std::size_t d = x.cols();
  DenseMatrix m(incidence.rows(), d);
  std::vector<double> gathered(d);
  const auto& rp = edge_major.row_ptr();
  const auto& ci = edge_major.col_idx();
  const auto& vals = edge_major.values();
  for (std::size_t j = 0; j < edge_major.rows(); ++j) {
    std::fill(gathered.begin(), gathered.end(), 0.0);
    for (std::size_t k = rp[j]; k < rp[j + 1]; ++k)
      for (std::size_t c = 0; c < d; ++c)
        gathered[c] += vals[k] * x1.at(ci[k], c);
    for (double& g : gathered) g *= col_scale[j];
    for (std::size_t k = rp[j]; k < rp[j + 1]; ++k)
      for (std::size_t c = 0; c < d; ++c)
        m.at(ci[k], c) += vals[k] * gathered[c];
  }
  return scale_rows(m, DiagonalMatrix(dv_inv_sqrt));
}

DenseMatrix normalized_laplacian(const Hypergraph& h) {
  return normalized_laplacian_of(incidence_matrix(h), edge_weights_of(h));
}

DenseMatrix normalized_propagator(const Hypergraph& h) {
  return normalized_propagator_of(incidence_matrix(h), edge_weights_of(h));
}

EigenDecomposition symmetric_eigen(const DenseMatrix& m) {
  if (m.rows() != m.cols()) fail(errc::shape_mismatch, "matrix not square");
  const std::size_t n = m.rows();
  DenseMatrix a = m;
  DenseMatrix v = DenseMatrix::identity(n);

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
    if (off < 1e-26) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a.at(k, p);
          const double akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a.at(p, k);
          const double aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v.at(k, p);
          const double vkq = v.at(k, q);
          v.at(k, p) = c * vkp - s * vkq;
          v.at(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (a.at(x, x) != a.at(y, y)) return a.at(x, x) < a.at(y, y);
    return x < y;
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.values[c] = a.at(src, src);
    // sign convention: first component above threshold made positive
    double sign = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::abs(v.at(k, src)) > 1e-12) {
        sign = v.at(k, src) > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    for (std::size_t k = 0; k < n; ++k)
      out.vectors.at(k, c) = sign * v.at(k, src);
  }
  return out;
}

}  // namespace shx
