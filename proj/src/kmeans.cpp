#include "shx/kmeans.hpp"

#include <cmath>
#include <limits>

#include "shx/error.hpp"

namespace shx {

namespace {

double sq_dist(const DenseMatrix& a, std::size_t i, const DenseMatrix& b,
               std::size_t j) {
  double acc = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const double d = a.at(i, c) - b.at(j, c);
    acc += d * d;
  }
  return acc;
}

}  // namespace

KMeansResult kmeans(const DenseMatrix& points, int k, int max_iters,
                    Rng& rng) {
  const std::size_t n = points.rows();
  const std::size_t d = points.cols();
  if (k < 1 || static_cast<std::size_t>(k) > n)
    fail(errc::domain, "k-means cluster count out of range");
  if (max_iters < 1) fail(errc::domain, "k-means iteration cap must be >= 1");

  // k-means++ seeding
  DenseMatrix centers(k, d);
  std::vector<std::size_t> chosen;
  const std::size_t first = rng.next_below(n);
  chosen.push_back(first);
  for (std::size_t c = 0; c < d; ++c) centers.at(0, c) = points.at(first, c);
  std::vector<double> dist2(n);
  for (int ci = 1; ci < k; ++ci) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int pc = 0; pc < ci; ++pc)
        best = std::min(best, sq_dist(points, i, centers, pc));
      dist2[i] = best;
      total += best;
    }
    std::size_t pick = 0;
    if (total > 0.0) {
      const double r = rng.next_double() * total;
      double cum = 0.0;
      pick = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        cum += dist2[i];
        if (cum > r) {
          pick = i;
          break;
        }
      }
    } else {
      pick = rng.next_below(n);
    }
    for (std::size_t c = 0; c < d; ++c)
      centers.at(ci, c) = points.at(pick, c);
    chosen.push_back(pick);
  }

  std::vector<int> assignment(n, 0);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = sq_dist(points, i, centers, 0);
      for (int ci = 1; ci < k; ++ci) {
        const double dd = sq_dist(points, i, centers, ci);
        if (dd < best_d) {
          best_d = dd;
          best = ci;
        }
      }
      if (assignment[i] != best) {
        assignment[i] = best;
        changed = true;
      }
    }

    // empty-cluster repair: farthest point from its center moves over
    std::vector<int> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) counts[assignment[i]]++;
    for (int ci = 0; ci < k; ++ci) {
      if (counts[ci] > 0) continue;
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[assignment[i]] <= 1) continue;
        const double dd = sq_dist(points, i, centers, assignment[i]);
        if (dd > far_d) {
          far_d = dd;
          far = i;
        }
      }
      counts[assignment[far]]--;
      assignment[far] = ci;
      counts[ci] = 1;
      changed = true;
    }

    // recompute centroids
    DenseMatrix next(k, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < d; ++c)
        next.at(assignment[i], c) += points.at(i, c);
    for (int ci = 0; ci < k; ++ci)
      for (std::size_t c = 0; c < d; ++c) next.at(ci, c) /= counts[ci];
    centers = next;

    if (!changed) break;
  }

  return {std::move(assignment), std::move(centers)};
}

}  // namespace shx
