#pragma once

#include <string>
#include <vector>

#include "specdec/decimation.hpp"
#include "specdec/laplacian.hpp"

namespace specdec {

inline constexpr int kOracleDimCap = 4000;

/// Eigenvalues of symmetrize(M), ascending. Ground truth for everything the
/// decimation engine claims.
std::vector<double> dense_spectrum(const ProbLaplacian& M);

struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors_sym;  // eigenvectors of the symmetrized operator
  Eigen::MatrixXd vectors;      // rescaled to eigenvectors of M itself
};

EigenPairs dense_eigenpairs(const ProbLaplacian& M);

/// Greedy gap clustering of a sorted list: a new cluster starts when
/// successive values differ by more than tol; cluster value is the mean.
std::vector<std::pair<double, int>> cluster(const std::vector<double>& sorted_values,
                                            double tol);

struct SpectrumDiff {
  struct Entry {
    std::string node;
    double expected_value = 0;
    std::int64_t expected_mult = 0;
    std::int64_t observed_mult = 0;
    double value_error = 0;
  };
  std::vector<Entry> entries;
  std::int64_t expected_total = 0;
  std::int64_t observed_total = 0;
  bool empty() const { return entries.empty() && expected_total == observed_total; }
};

/// Empty diff iff the decimated report and the clustered oracle multiset
/// agree within tol in value and exactly in count.
SpectrumDiff compare(const SpectrumReport& report,
                     const std::vector<std::pair<double, int>>& observed,
                     double tol);

/// Effective resistance between two vertices with unit resistors on the
/// edges, via the pseudoinverse quadratic form of the combinatorial
/// Laplacian.
double effective_resistance(const TreeGraph& g, int u, int v);

}  // namespace specdec
