#include "specdec/laplacian.hpp"

#include <cmath>

namespace specdec {

ProbLaplacian assemble(const TreeGraph& g, std::size_t entry_budget) {
  const long long dim = g.vertex_count();
  if (static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) > entry_budget)
    throw resource_error("assemble: dense rational matrix over entry budget");

  ProbLaplacian M;
  M.m = g.m;
  M.n = g.n;
  M.boundary_count = g.m;
  M.degrees.reserve(dim);
  for (int v = 0; v < dim; ++v) M.degrees.push_back(g.degree(v));
  M.entries = laplacian_matrix<Rational>(g);
  return M;
}

BlockPartition block_partition(const ProbLaplacian& M) {
  if (M.n != 1)
    throw std::domain_error("block_partition: defined for depth-1 Laplacians only");
  const int m = M.boundary_count;
  const int interior = M.dim() - m;
  BlockPartition blocks;
  blocks.m = m;
  blocks.A = M.entries.topLeftCorner(m, m);
  blocks.B = M.entries.topRightCorner(m, interior);
  blocks.C = M.entries.bottomLeftCorner(interior, m);
  blocks.D = M.entries.bottomRightCorner(interior, interior);
  return blocks;
}

Eigen::MatrixXd symmetrize_with_degrees(const Eigen::MatrixXd& M,
                                        const std::vector<int>& degrees) {
  const Eigen::Index dim = M.rows();
  Eigen::MatrixXd S(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      S(i, j) = std::sqrt(static_cast<double>(degrees[i]) / degrees[j]) * M(i, j);
  return S;
}

Eigen::MatrixXd symmetrize(const ProbLaplacian& M) {
  Eigen::MatrixXd Md(M.dim(), M.dim());
  for (int i = 0; i < M.dim(); ++i)
    for (int j = 0; j < M.dim(); ++j) Md(i, j) = to_double(M.entries(i, j));
  return symmetrize_with_degrees(Md, M.degrees);
}

}  // namespace specdec
