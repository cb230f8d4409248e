#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "specdec/decimation.hpp"
#include "specdec/laplacian.hpp"

namespace specdec {

template <class Scalar>
struct SchurEval {
  int m = 0;
  Scalar z{};
  DenseMatrix<Scalar> value;  // m x m, symmetric with constant diagonal
  Scalar phi_value{};
  Scalar r_value{};
  Scalar residual{};  // max-norm of value - phi(z) * (M_0 - R(z) I)
};

namespace detail {

template <class Scalar>
Scalar from_rational(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return q;
  else if constexpr (std::is_same_v<Scalar, Real>)
    return to_real(q);
  else
    return static_cast<Scalar>(to_double(q));
}

template <class Scalar>
DenseMatrix<Scalar> solve_linear(const DenseMatrix<Scalar>& A,
                                 const DenseMatrix<Scalar>& B) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return Eigen::FullPivLU<DenseMatrix<Scalar>>(A).solve(B);
  else
    return Eigen::PartialPivLU<DenseMatrix<Scalar>>(A).solve(B);
}

/// Depth-1 blocks cast to the requested scalar.
template <class Scalar>
struct DepthOneBlocks {
  DenseMatrix<Scalar> A, B, C, D;
};

template <class Scalar>
DepthOneBlocks<Scalar> depth_one_blocks(int m) {
  const BlockPartition blocks = block_partition(assemble(build_graph(m, 1)));
  return {blocks.A.template cast<Scalar>(), blocks.B.template cast<Scalar>(),
          blocks.C.template cast<Scalar>(), blocks.D.template cast<Scalar>()};
}

template <class Scalar>
void require_off_sigma_d(int m, const Scalar& z) {
  for (const Rational& lambda : exceptional_set(m)) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      if (z == lambda)
        throw std::domain_error("schur_complement: z in sigma(D)");
    } else {
      using std::abs;
      if (abs(z - from_rational<Scalar>(lambda)) < Scalar(1e-9))
        throw std::domain_error("schur_complement: z within 1e-9 of sigma(D)");
    }
  }
}

}  // namespace detail

/// S(z) = (A - z) - B (D - z)^{-1} C for the depth-1 block partition,
/// computed by direct linear solves. Exact when Scalar is Rational.
template <class Scalar>
SchurEval<Scalar> schur_complement(int m, const Scalar& z) {
  if (m < 3) throw std::domain_error("schur_complement: need m >= 3");
  detail::require_off_sigma_d(m, z);

  const auto blocks = detail::depth_one_blocks<Scalar>(m);
  const int interior = static_cast<int>(blocks.D.rows());
  const DenseMatrix<Scalar> shifted =
      blocks.D - z * DenseMatrix<Scalar>::Identity(interior, interior);
  const DenseMatrix<Scalar> X = detail::solve_linear<Scalar>(shifted, blocks.C);

  SchurEval<Scalar> eval;
  eval.m = m;
  eval.z = z;
  eval.value = blocks.A - z * DenseMatrix<Scalar>::Identity(m, m) - blocks.B * X;
  eval.phi_value = phi(m, z);
  eval.r_value = R(m, z);

  const DenseMatrix<Scalar> m0 =
      laplacian_matrix<Scalar>(build_graph(m, 0)) -
      eval.r_value * DenseMatrix<Scalar>::Identity(m, m);
  eval.residual = (eval.value - eval.phi_value * m0).cwiseAbs().maxCoeff();
  return eval;
}

/// Closed forms of the two Schur entries everything else is derived from:
/// S11 = (1-z) - (m - z(m-1)^2) / (m(1-z(m-1))(2-z(m-1)))
/// S12 = -(m - z(m-1)) / (m(m-1)(1-z(m-1))(2-z(m-1)))
template <class Scalar>
std::pair<Scalar, Scalar> closed_form_entries(int m, const Scalar& z) {
  if (m < 3) throw std::domain_error("closed_form_entries: need m >= 3");
  const Scalar d1 = Scalar(1) - z * Scalar(m - 1);
  const Scalar d2 = Scalar(2) - z * Scalar(m - 1);
  if (d1 == 0 || d2 == 0) throw std::domain_error("closed_form_entries: pole");
  const Scalar s11 = (Scalar(1) - z) -
                     (Scalar(m) - z * Scalar(m - 1) * Scalar(m - 1)) /
                         (Scalar(m) * d1 * d2);
  const Scalar s12 =
      -(Scalar(m) - z * Scalar(m - 1)) / (Scalar(m) * Scalar(m - 1) * d1 * d2);
  return {s11, s12};
}

/// Oblique spectral projectors of the depth-1 interior block D, exact in
/// rational arithmetic: D = sum_i eigenvalues[i] * P_i, P_i^2 = P_i,
/// P_i P_j = 0, sum P_i = I.
struct ProjectorSet {
  int m = 0;
  std::array<Rational, 3> eigenvalues;  // 1/(m-1), m/(m-1), 2/(m-1)
  RatMatrix p1, p2, p3;
};

ProjectorSet projectors(int m);

/// sigma(D) with multiplicities:
/// {m/(m-1): m^2-3m+1, 2/(m-1): m-1, 1/(m-1): 1}.
std::vector<std::pair<Rational, std::int64_t>> sigma_d(int m);

/// (D - z)^{-1} through the spectral resolution, as an independent second
/// route to the resolvent.
template <class Scalar>
DenseMatrix<Scalar> resolvent_via_projectors(int m, const Scalar& z) {
  const ProjectorSet ps = projectors(m);
  detail::require_off_sigma_d(m, z);
  return ps.p1.template cast<Scalar>() /
             (detail::from_rational<Scalar>(ps.eigenvalues[0]) - z) +
         ps.p2.template cast<Scalar>() /
             (detail::from_rational<Scalar>(ps.eigenvalues[1]) - z) +
         ps.p3.template cast<Scalar>() /
             (detail::from_rational<Scalar>(ps.eigenvalues[2]) - z);
}

/// Sampled verification of S(z) = phi(z)(M_0 - R(z)) plus the exact
/// projector identities; backs the schur-check CLI subcommand.
struct SchurCheckSummary {
  int m = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  std::vector<double> z_values;
  std::vector<double> residuals;
  double max_residual = 0;
  bool projectors_idempotent = false;
  bool projectors_orthogonal = false;
  bool projectors_resolve_identity = false;
  bool projectors_rebuild_d = false;
  bool passed() const;
};

SchurCheckSummary schur_check(int m, int samples, std::uint64_t seed,
                              double tolerance = 1e-10);

}  // namespace specdec
