#include "specdec/oracle.hpp"

#include <cmath>

namespace specdec {

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_symmetrized(
    const ProbLaplacian& M, bool with_vectors) {
  if (M.dim() > kOracleDimCap)
    throw resource_error("dense_spectrum: dimension over the oracle cap");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      symmetrize(M),
      with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_spectrum: eigensolver failed to converge");
  return solver;
}

}  // namespace

std::vector<double> dense_spectrum(const ProbLaplacian& M) {
  const auto solver = solve_symmetrized(M, false);
  return {solver.eigenvalues().data(),
          solver.eigenvalues().data() + solver.eigenvalues().size()};
}

EigenPairs dense_eigenpairs(const ProbLaplacian& M) {
  const auto solver = solve_symmetrized(M, true);
  EigenPairs out;
  out.values = solver.eigenvalues();
  out.vectors_sym = solver.eigenvectors();
  out.vectors = out.vectors_sym;
  // undo the similarity scaling: v = deg^{-1/2} v_sym
  for (int i = 0; i < M.dim(); ++i)
    out.vectors.row(i) /= std::sqrt(static_cast<double>(M.degrees[i]));
  return out;
}

std::vector<std::pair<double, int>> cluster(const std::vector<double>& sorted_values,
                                            double tol) {
  if (tol <= 0) throw std::domain_error("cluster: need tol > 0");
  std::vector<std::pair<double, int>> out;
  double prev = 0;
  for (double v : sorted_values) {
    if (!out.empty() && v - prev <= tol) {
      auto& [mean, count] = out.back();
      mean += (v - mean) / (count + 1);
      count++;
    } else {
      out.emplace_back(v, 1);
    }
    prev = v;
  }
  return out;
}

SpectrumDiff compare(const SpectrumReport& report,
                     const std::vector<std::pair<double, int>>& observed,
                     double tol) {
  SpectrumDiff diff;
  diff.expected_total = report.total;
  for (const auto& [value, count] : observed) {
    (void)value;
    diff.observed_total += count;
  }

  std::size_t i = 0, j = 0;
  while (i < report.atoms.size() || j < observed.size()) {
    if (i < report.atoms.size() && j < observed.size()) {
      const double expected = to_double(report.atoms[i].value);
      const double got = observed[j].first;
      if (std::abs(expected - got) <= tol) {
        if (report.atoms[i].multiplicity != observed[j].second)
          diff.entries.push_back({report.atoms[i].node.exact_or_word(), expected,
                                  report.atoms[i].multiplicity, observed[j].second,
                                  std::abs(expected - got)});
        ++i, ++j;
        continue;
      }
      if (got < expected) {
        diff.entries.push_back({"(unexpected)", got, 0, observed[j].second, 0});
        ++j;
      } else {
        diff.entries.push_back({report.atoms[i].node.exact_or_word(), expected,
                                report.atoms[i].multiplicity, 0, 0});
        ++i;
      }
    } else if (i < report.atoms.size()) {
      diff.entries.push_back({report.atoms[i].node.exact_or_word(),
                              to_double(report.atoms[i].value),
                              report.atoms[i].multiplicity, 0, 0});
      ++i;
    } else {
      diff.entries.push_back({"(unexpected)", observed[j].first, 0,
                              observed[j].second, 0});
      ++j;
    }
  }
  return diff;
}

double effective_resistance(const TreeGraph& g, int u, int v) {
  const int dim = g.vertex_count();
  if (u < 0 || u >= dim || v < 0 || v >= dim)
    throw std::out_of_range("effective_resistance: bad vertex index");
  if (u == v) throw std::domain_error("effective_resistance: need u != v");

  // combinatorial Laplacian, regularized on the constants
  Eigen::MatrixXd L = Eigen::MatrixXd::Constant(dim, dim, 1.0 / dim);
  for (int a = 0; a < dim; ++a) {
    L(a, a) += static_cast<double>(g.adjacency[a].size());
    for (int b : g.adjacency[a]) L(a, b) -= 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
  rhs(u) = 1.0;
  rhs(v) = -1.0;
  const Eigen::VectorXd x = L.ldlt().solve(rhs);
  return x(u) - x(v);
}

}  // namespace specdec
