#ifndef SHX_KMEANS_HPP
#define SHX_KMEANS_HPP

#include <cstdint>
#include <vector>

#include "shx/matrix.hpp"
#include "shx/rng.hpp"

namespace shx {

// Seeded Lloyd iterations with k-means++ initialization. Fixed choices for
// reproducibility: assignment ties go to the lowest center index, empty
// clusters are re-seeded to the point farthest from its current center
// (ties to the lowest point index), iterations stop at the cap or when the
// assignment is stable.
struct KMeansResult {
  std::vector<int> assignment;  // point -> cluster in [0, k)
  DenseMatrix centroids;        // k x d
};

KMeansResult kmeans(const DenseMatrix& points, int k, int max_iters, Rng& rng);

}  // namespace shx

#endif  // SHX_KMEANS_HPP
