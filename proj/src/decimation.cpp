#include "specdec/decimation.hpp"

#include <algorithm>
#include <functional>

namespace specdec {

std::optional<std::pair<Rational, Rational>> r_inverse_exact(int m,
                                                             const Rational& w) {
  if (m < 3) throw std::domain_error("r_inverse_exact: need m >= 3");
  // roots of m(m-1)z^2 - 2mz + w
  const Rational disc = Rational(m) * m - Rational(m) * (m - 1) * w;
  if (disc < 0)
    throw std::domain_error("r_inverse_exact: no real preimages above m/(m-1)");
  const Integer num = numerator(disc);
  const Integer den = denominator(disc);
  const Integer sqrt_num = sqrt(num);
  const Integer sqrt_den = sqrt(den);
  if (sqrt_num * sqrt_num != num || sqrt_den * sqrt_den != den)
    return std::nullopt;
  const Rational root(sqrt_num, sqrt_den);
  const Rational denom = Rational(m) * (m - 1);
  return std::make_pair((Rational(m) - root) / denom,
                        (Rational(m) + root) / denom);
}

std::array<Rational, 3> exceptional_set(int m) {
  if (m < 3) throw std::domain_error("exceptional_set: need m >= 3");
  return {Rational(m, m - 1), Rational(2, m - 1), Rational(1, m - 1)};
}

Real QuadSurd::value() const {
  using std::sqrt;
  return (to_real(p) + sign * sqrt(Real(s))) / to_real(r);
}

std::string QuadSurd::str() const {
  std::string out = "(" + p.str();
  out += sign >= 0 ? "+" : "-";
  out += "sqrt(" + std::to_string(s) + "))/" + r.str();
  return out;
}

EigNode EigNode::child(bool hi) const {
  if (kind != NodeKind::Preimage)
    throw std::domain_error("EigNode::child: only preimage nodes branch");
  EigNode c = *this;
  c.generation++;
  c.branch.push_back(hi ? 1 : 0);
  return c;
}

EigNode EigNode::parent() const {
  switch (kind) {
    case NodeKind::Zero:
      return *this;  // R(0) = 0
    case NodeKind::Top:
      throw std::domain_error("EigNode::parent: top has no ancestor in the tree");
    case NodeKind::Preimage:
      if (generation == 1) return top(m);
      EigNode p = *this;
      p.generation--;
      p.branch.pop_back();
      return p;
  }
  throw std::logic_error("EigNode::parent: bad kind");
}

Real EigNode::value() const {
  switch (kind) {
    case NodeKind::Zero:
      return Real(0);
    case NodeKind::Top:
      return Real(m) / (m - 1);
    case NodeKind::Preimage: {
      Real v = Real(1) / (m - 1);
      for (std::uint8_t letter : branch) {
        const auto [lo, hi] = r_inverse(m, v);
        v = letter ? hi : lo;
      }
      return v;
    }
  }
  throw std::logic_error("EigNode::value: bad kind");
}

std::optional<Rational> EigNode::exact() const {
  switch (kind) {
    case NodeKind::Zero:
      return Rational(0);
    case NodeKind::Top:
      return Rational(m, m - 1);
    case NodeKind::Preimage:
      if (generation == 1) return Rational(1, m - 1);
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<QuadSurd> EigNode::exact_surd() const {
  if (kind != NodeKind::Preimage || generation != 2) return std::nullopt;
  QuadSurd s;
  s.p = m;
  s.sign = branch[0] ? 1 : -1;
  s.s = static_cast<long long>(m) * m - m;
  s.r = Rational(m) * (m - 1);
  return s;
}

std::string EigNode::word_string() const {
  std::string out;
  for (std::uint8_t letter : branch) out += letter ? 'h' : 'l';
  return out;
}

std::string EigNode::exact_or_word() const {
  if (auto q = exact()) return q->str();
  if (auto s = exact_surd()) return s->str();
  return "w:" + word_string();
}

CaseEvidence classify(int m, const Rational& z) {
  if (m < 3) throw std::domain_error("classify: need m >= 3");
  CaseEvidence ev;
  ev.z_rational = true;
  ev.z = z;

  const Rational top(m, m - 1), edge(2, m - 1), vertex(1, m - 1);
  if (z == top) {
    ev.in_sigma_d = true;
    ev.mult_d = static_cast<std::int64_t>(m) * m - 3 * m + 1;
  } else if (z == edge) {
    ev.in_sigma_d = true;
    ev.mult_d = m - 1;
  } else if (z == vertex) {
    ev.in_sigma_d = true;
    ev.mult_d = 1;
  }

  if (z == top) ev.phi_order = 1;                    // zero of the numerator
  else if (z == edge || z == vertex) ev.phi_order = -1;  // denominator zeros
  ev.phi_r_pole = (z == vertex);  // reduced product z(m-(m-1)z)/(1-(m-1)z)
  ev.r_pole = false;
  ev.r_removable = (z == edge || z == vertex);
  ev.r_critical = (z == vertex);  // R'(z) = 2m - 2m(m-1)z
  ev.r_value = R(m, z);

  if (!ev.in_sigma_d) {
    if (ev.phi_order > 0)
      ev.case_id = ev.r_pole ? 7 : 2;
    else
      ev.case_id = 1;
  } else if (ev.phi_order < 0) {
    ev.case_id = ev.r_critical ? 6 : 3;
  } else if (ev.phi_order > 0) {
    ev.case_id = ev.r_pole ? 8 : 5;
  } else {
    ev.case_id = 4;
  }
  return ev;
}

CaseEvidence classify(int m, const EigNode& node) {
  if (auto q = node.exact()) return classify(m, *q);
  // generation >= 2 values are irrational (the generation-2 surds are, and
  // R maps rationals to rationals), so they avoid the rational exceptional
  // set entirely
  CaseEvidence ev;
  ev.case_id = 1;
  return ev;
}

namespace {

std::int64_t mult_rational(int m, int n, const Rational& z) {
  if (n == 0) {
    if (z == 0) return 1;
    if (z == Rational(m, m - 1)) return m - 1;
    return 0;
  }
  const CaseEvidence ev = classify(m, z);
  const std::int64_t scale = checked_pow(m, n - 1);
  const std::int64_t dim_prev = graph_dimension(m, n - 1);
  const auto recurse = [&] { return mult_rational(m, n - 1, ev.r_value); };
  switch (ev.case_id) {
    case 1:
      return recurse();
    case 2:
      return dim_prev;
    case 3:
      return scale * ev.mult_d - dim_prev + recurse();
    case 4:
      return scale * ev.mult_d + recurse();
    case 5:
      return scale * ev.mult_d + recurse() + dim_prev;
    case 6:
      return scale * ev.mult_d - dim_prev + 2 * recurse();
    case 7:
      return 0;
    case 8:
      return scale * ev.mult_d;
  }
  throw std::logic_error("multiplicity: bad case id");
}

}  // namespace

std::int64_t multiplicity(int m, int n, const Rational& value) {
  if (m < 3) throw std::domain_error("multiplicity: need m >= 3");
  if (n < 0) throw std::domain_error("multiplicity: need n >= 0");
  return mult_rational(m, n, value);
}

std::int64_t multiplicity(int m, int n, const EigNode& node) {
  if (m < 3) throw std::domain_error("multiplicity: need m >= 3");
  if (n < 0) throw std::domain_error("multiplicity: need n >= 0");
  if (auto q = node.exact()) return mult_rational(m, n, *q);
  // non-exceptional preimage node: mult_n(z) = mult_{n-1}(R(z))
  if (n == 0) return 0;
  return multiplicity(m, n - 1, node.parent());
}

const SpectrumAtom* SpectrumReport::find(const EigNode& node) const {
  for (const auto& atom : atoms)
    if (atom.node == node) return &atom;
  return nullptr;
}

namespace {

SpectrumReport build_report(
    int m, int n,
    const std::function<std::int64_t(const EigNode&)>& mult_of) {
  SpectrumReport rep;
  rep.m = m;
  rep.n = n;

  std::vector<EigNode> nodes;
  nodes.push_back(EigNode::zero(m));
  nodes.push_back(EigNode::top(m));
  std::vector<EigNode> gen = {EigNode::vertex(m)};
  for (int k = 1; k <= n; ++k) {
    nodes.insert(nodes.end(), gen.begin(), gen.end());
    if (k == n) break;
    std::vector<EigNode> next;
    next.reserve(gen.size() * 2);
    for (const auto& node : gen) {
      next.push_back(node.child(false));
      next.push_back(node.child(true));
    }
    gen = std::move(next);
  }

  for (const auto& node : nodes) {
    const std::int64_t mult = mult_of(node);
    if (mult <= 0) continue;
    SpectrumAtom atom;
    atom.node = node;
    atom.value = node.value();
    atom.multiplicity = mult;
    atom.case_id = n == 0 ? 0 : classify(m, node).case_id;
    rep.atoms.push_back(std::move(atom));
    rep.total += mult;
  }
  std::sort(rep.atoms.begin(), rep.atoms.end(),
            [](const SpectrumAtom& a, const SpectrumAtom& b) {
              return a.value < b.value;
            });
  return rep;
}

}  // namespace

SpectrumReport spectrum(int m, int n) {
  if (m < 3) throw std::domain_error("spectrum: need m >= 3");
  if (n < 0) throw std::domain_error("spectrum: need n >= 0");
  return build_report(
      m, n, [&](const EigNode& node) { return multiplicity(m, n, node); });
}

SpectrumReport spectrum_closed_form(int m, int n) {
  if (m < 3) throw std::domain_error("spectrum_closed_form: need m >= 3");
  if (n < 0) throw std::domain_error("spectrum_closed_form: need n >= 0");
  return build_report(m, n, [&](const EigNode& node) -> std::int64_t {
    switch (node.kind) {
      case NodeKind::Zero:
        return 1;
      case NodeKind::Top:
        return 1 + (m - 2) * checked_pow(m, n);
      case NodeKind::Preimage:
        if (node.generation > n) return 0;
        return 1 + (m - 2) * checked_pow(m, n - node.generation);
    }
    return 0;
  });
}

}  // namespace specdec
