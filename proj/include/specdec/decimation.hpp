#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specdec/numeric.hpp"

namespace specdec {

/// Scale factor tying the depth-1 Schur complement to the depth-0 Laplacian:
/// S(z) = phi(z) * (M_0 - R(z)).  Poles at 1/(m-1) and 2/(m-1), zero at
/// m/(m-1).
template <class Scalar>
Scalar phi(int m, const Scalar& z) {
  if (m < 3) throw std::domain_error("phi: need m >= 3");
  const Scalar d1 = Scalar(2) - Scalar(m - 1) * z;
  const Scalar d2 = Scalar(1) - Scalar(m - 1) * z;
  if (d1 == 0 || d2 == 0) throw std::domain_error("phi: pole");
  return (Scalar(m) - Scalar(m - 1) * z) / (Scalar(m) * d1 * d2);
}

/// Eigenvalue projection map: R(z) = 2mz - m(m-1)z^2 sends a depth-n
/// eigenvalue to a depth-(n-1) eigenvalue. A downward parabola with zeros
/// {0, 2/(m-1)} and vertex (1/(m-1), m/(m-1)).
template <class Scalar>
Scalar R(int m, const Scalar& z) {
  if (m < 3) throw std::domain_error("R: need m >= 3");
  return Scalar(m) * z * (Scalar(2) - Scalar(m - 1) * z);
}

/// The two preimages of w under R, lo <= 1/(m-1) <= hi. Requires
/// w <= m/(m-1). Floating-point scalars only; see r_inverse_exact for the
/// rational corner cases.
template <class Scalar>
std::pair<Scalar, Scalar> r_inverse(int m, const Scalar& w) {
  if (m < 3) throw std::domain_error("r_inverse: need m >= 3");
  const Scalar disc = Scalar(m) * Scalar(m) - Scalar(m) * Scalar(m - 1) * w;
  if (disc < 0)
    throw std::domain_error("r_inverse: no real preimages above m/(m-1)");
  using std::sqrt;
  const Scalar root = sqrt(disc);
  const Scalar denom = Scalar(m) * Scalar(m - 1);
  return {(Scalar(m) - root) / denom, (Scalar(m) + root) / denom};
}

/// Exact preimages when the discriminant is a perfect square (w = 0 and the
/// vertex value m/(m-1) are the cases that matter); nullopt otherwise.
std::optional<std::pair<Rational, Rational>> r_inverse_exact(int m,
                                                             const Rational& w);

/// Values where the generic decimation step breaks:
/// {m/(m-1), 2/(m-1), 1/(m-1)} = sigma(D) = sigma(D) U {zeros of phi}.
std::array<Rational, 3> exceptional_set(int m);

/// Exact quadratic surd (p + sign*sqrt(s)) / r.
struct QuadSurd {
  Rational p;
  int sign = 1;
  long long s = 0;
  Rational r;
  Real value() const;
  std::string str() const;
};

enum class NodeKind { Zero, Top, Preimage };

/// An eigenvalue as a node of the preimage tree of R. Generation 0 is the
/// top value m/(m-1); generation 1 its unique preimage 1/(m-1) (double
/// root); generation k >= 2 carries a branch word of length k-1, one lo/hi
/// letter per inverse step below 1/(m-1). Node identity is structural:
/// (kind, generation, word), never the floating value.
struct EigNode {
  NodeKind kind = NodeKind::Zero;
  int m = 0;
  int generation = 0;
  std::vector<std::uint8_t> branch;  // 0 = lo, 1 = hi

  static EigNode zero(int m) { return {NodeKind::Zero, m, 0, {}}; }
  static EigNode top(int m) { return {NodeKind::Top, m, 0, {}}; }
  static EigNode vertex(int m) { return {NodeKind::Preimage, m, 1, {}}; }
  EigNode child(bool hi) const;
  EigNode parent() const;  // zero -> zero, vertex -> top

  Real value() const;
  double value_d() const { return to_double(value()); }
  std::optional<Rational> exact() const;      // generations 0 and 1
  std::optional<QuadSurd> exact_surd() const; // generation 2
  std::string word_string() const;            // "lhh..." letters
  std::string exact_or_word() const;

  friend bool operator==(const EigNode& a, const EigNode& b) {
    return a.kind == b.kind && a.m == b.m && a.generation == b.generation &&
           a.branch == b.branch;
  }
};

/// Evidence record for the exceptional-value case analysis. Orders are
/// computed exactly from the closed forms of phi and R; phi_R_pole refers to
/// the reduced product phi(z)*R(z) = z(m-(m-1)z)/(1-(m-1)z).
struct CaseEvidence {
  int case_id = 0;
  bool z_rational = false;
  Rational z;
  bool in_sigma_d = false;
  long long mult_d = 0;
  int phi_order = 0;       // >0 zero, <0 pole, 0 regular nonzero
  bool phi_r_pole = false;
  bool r_pole = false;     // R is a polynomial here, so always false
  bool r_removable = false;
  bool r_critical = false; // R'(z) == 0
  Rational r_value;        // R(z), when z is rational
};

CaseEvidence classify(int m, const Rational& z);
CaseEvidence classify(int m, const EigNode& node);

/// Multiplicity of the eigenvalue at depth n, via the case-dispatch
/// recursion down to the explicitly diagonalized level-0 base data.
/// Returns 0 for values that are not eigenvalues.
std::int64_t multiplicity(int m, int n, const EigNode& node);
std::int64_t multiplicity(int m, int n, const Rational& value);

struct SpectrumAtom {
  EigNode node;
  Real value;
  std::int64_t multiplicity = 0;
  int case_id = 0;  // 0 = explicit base level, otherwise the case that fired
};

struct SpectrumReport {
  int m = 0;
  int n = 0;
  std::vector<SpectrumAtom> atoms;  // ascending by value
  std::int64_t total = 0;
  const SpectrumAtom* find(const EigNode& node) const;
};

/// Full spectrum of the depth-n Laplacian by the multiplicity recursion.
SpectrumReport spectrum(int m, int n);

/// Same report from the closed-form multiplicities (no recursion):
/// 1 at 0, 1+(m-2)m^n at the top, 1+(m-2)m^{n-k} at generation k.
SpectrumReport spectrum_closed_form(int m, int n);

}  // namespace specdec
