#include "specdec/schur.hpp"

#include <random>

namespace specdec {

ProjectorSet projectors(int m) {
  if (m < 3) throw std::domain_error("projectors: need m >= 3");
  const int dim = (m - 1) * (m - 1);
  const int center = dim - 1;

  ProjectorSet ps;
  ps.m = m;
  ps.eigenvalues = {Rational(1, m - 1), Rational(m, m - 1), Rational(2, m - 1)};

  // rank-one projector onto the constant vector; every row is
  // (1, ..., 1, m) / (m(m-1))
  ps.p1 = RatMatrix::Zero(dim, dim);
  const Rational scale1 = Rational(1) / (Rational(m) * (m - 1));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < center; ++j) ps.p1(i, j) = scale1;
    ps.p1(i, center) = Rational(m) * scale1;
  }

  // J blocks between the rings, zero on the center row/column; J has m-1 on
  // the diagonal and -1 elsewhere
  ps.p3 = RatMatrix::Zero(dim, dim);
  const Rational scale3 = Rational(1) / (Rational(m) * (m - 2));
  for (int r = 0; r < m - 2; ++r)
    for (int s = 0; s < m - 2; ++s)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          ps.p3(r * m + i, s * m + j) = (i == j ? Rational(m - 1) : Rational(-1)) * scale3;

  ps.p2 = RatMatrix::Identity(dim, dim) - ps.p1 - ps.p3;
  return ps;
}

std::vector<std::pair<Rational, std::int64_t>> sigma_d(int m) {
  if (m < 3) throw std::domain_error("sigma_d: need m >= 3");
  return {{Rational(m, m - 1), static_cast<std::int64_t>(m) * m - 3 * m + 1},
          {Rational(2, m - 1), m - 1},
          {Rational(1, m - 1), 1}};
}

bool SchurCheckSummary::passed() const {
  return max_residual < tolerance && projectors_idempotent &&
         projectors_orthogonal && projectors_resolve_identity &&
         projectors_rebuild_d;
}

SchurCheckSummary schur_check(int m, int samples, std::uint64_t seed,
                              double tolerance) {
  if (samples <= 0) throw std::domain_error("schur_check: need samples > 0");
  SchurCheckSummary summary;
  summary.m = m;
  summary.samples = samples;
  summary.seed = seed;
  summary.tolerance = tolerance;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 2.0);
  const auto exceptional = exceptional_set(m);
  while (static_cast<int>(summary.z_values.size()) < samples) {
    const double z = dist(rng);
    bool near = false;
    for (const Rational& lambda : exceptional)
      near = near || std::abs(z - to_double(lambda)) < 1e-9;
    if (near) continue;
    const auto eval = schur_complement(m, Real(z));
    summary.z_values.push_back(z);
    summary.residuals.push_back(to_double(eval.residual));
    summary.max_residual = std::max(summary.max_residual, summary.residuals.back());
  }

  const ProjectorSet ps = projectors(m);
  const int dim = (m - 1) * (m - 1);
  const RatMatrix identity = RatMatrix::Identity(dim, dim);
  const auto is_zero = [](const RatMatrix& M) {
    return M.cwiseAbs().maxCoeff() == 0;
  };
  summary.projectors_idempotent = is_zero(ps.p1 * ps.p1 - ps.p1) &&
                                  is_zero(ps.p2 * ps.p2 - ps.p2) &&
                                  is_zero(ps.p3 * ps.p3 - ps.p3);
  summary.projectors_orthogonal = is_zero(ps.p1 * ps.p2) && is_zero(ps.p2 * ps.p1) &&
                                  is_zero(ps.p1 * ps.p3) && is_zero(ps.p3 * ps.p1) &&
                                  is_zero(ps.p2 * ps.p3) && is_zero(ps.p3 * ps.p2);
  summary.projectors_resolve_identity = is_zero(ps.p1 + ps.p2 + ps.p3 - identity);
  const RatMatrix D = block_partition(assemble(build_graph(m, 1))).D;
  summary.projectors_rebuild_d =
      is_zero(ps.eigenvalues[0] * ps.p1 + ps.eigenvalues[1] * ps.p2 +
              ps.eigenvalues[2] * ps.p3 - D);
  return summary;
}

}  // namespace specdec
