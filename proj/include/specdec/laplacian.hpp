#pragma once

#include "specdec/graph.hpp"

namespace specdec {

/// Probabilistic Laplacian of a graph: identity minus neighbor averaging,
/// i.e. 1 on the diagonal and -1/deg(i) at (i,j) for each edge.
template <class Scalar>
DenseMatrix<Scalar> laplacian_matrix(const TreeGraph& g) {
  const int dim = g.vertex_count();
  DenseMatrix<Scalar> M = DenseMatrix<Scalar>::Zero(dim, dim);
  for (int v = 0; v < dim; ++v) {
    M(v, v) = Scalar(1);
    const Scalar w = Scalar(-1) / Scalar(static_cast<int>(g.adjacency[v].size()));
    for (int u : g.adjacency[v]) M(v, u) = w;
  }
  return M;
}

/// Exact-rational Laplacian with its provenance. Rows sum to zero exactly and
/// deg(i)*M(i,j) == deg(j)*M(j,i), so the spectrum is real.
struct ProbLaplacian {
  int m = 0;
  int n = 0;
  int boundary_count = 0;
  std::vector<int> degrees;
  RatMatrix entries;
  int dim() const { return static_cast<int>(entries.rows()); }
};

ProbLaplacian assemble(const TreeGraph& g, std::size_t entry_budget = 32u << 20);

/// Depth-1 block partition [[A,B],[C,D]] with the m boundary rows first.
/// A is the m x m identity; D is (m-1)^2 square.
struct BlockPartition {
  int m = 0;
  RatMatrix A, B, C, D;
};

BlockPartition block_partition(const ProbLaplacian& M);

/// Similarity transform sqrt(deg(i)/deg(j)) * M(i,j); symmetric with the same
/// spectrum as M.
Eigen::MatrixXd symmetrize(const ProbLaplacian& M);
Eigen::MatrixXd symmetrize_with_degrees(const Eigen::MatrixXd& M,
                                        const std::vector<int>& degrees);

}  // namespace specdec
