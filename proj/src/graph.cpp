#include "specdec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace specdec {

std::string Address::label() const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && word[i - 1] >= 10) out += '-';
    out += std::to_string(static_cast<int>(word[i]));
  }
  out += ':';
  out += slot < 0 ? "c" : std::to_string(slot);
  return out;
}

long long TreeGraph::edge_count() const {
  long long twice = 0;
  for (const auto& nb : adjacency) twice += static_cast<long long>(nb.size());
  return twice / 2;
}

int TreeGraph::degree(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("TreeGraph::degree: bad vertex index");
  return static_cast<int>(adjacency[v].size());
}

std::vector<int> TreeGraph::leaf_cell_counts() const {
  std::vector<int> counts(vertex_count(), 0);
  for (const auto& cell : cells())
    for (int v : cell) counts[v]++;
  return counts;
}

namespace {

// Slots of child cell b not taken by the inherited corner (slot b) or the
// shared epicenter (slot (b+1) mod m), ascending.
std::vector<int> fresh_slots(int m, int b) {
  std::vector<int> out;
  out.reserve(m - 2);
  for (int s = 0; s < m; ++s)
    if (s != b && s != (b + 1) % m) out.push_back(s);
  return out;
}

}  // namespace

TreeGraph build_graph(int m, int n, const BuildOptions& opts) {
  if (m < 3) throw std::domain_error("build_graph: need m >= 3");
  if (n < 0) throw std::domain_error("build_graph: need n >= 0");

  const long long dim = graph_dimension(m, n);
  if (dim > static_cast<long long>(opts.vertex_cap))
    throw resource_error("build_graph: vertex count " + std::to_string(dim) +
                         " exceeds cap " + std::to_string(opts.vertex_cap));

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (!opts.branch_order.empty()) {
    if (opts.branch_order.size() != static_cast<std::size_t>(m))
      throw std::domain_error("build_graph: branch_order must have m entries");
    std::vector<bool> seen(m, false);
    for (int b : opts.branch_order) {
      if (b < 0 || b >= m || seen[b])
        throw std::domain_error("build_graph: branch_order is not a permutation");
      seen[b] = true;
    }
    order = opts.branch_order;
  }

  TreeGraph g;
  g.m = m;
  g.n = n;
  g.addresses.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < m; ++i) {
    g.addresses.push_back(Address{{}, i});
    g.boundary.push_back(i);
  }

  std::vector<int> root(m);
  std::iota(root.begin(), root.end(), 0);
  g.level_cells.push_back({root});
  std::vector<std::vector<std::uint8_t>> words = {{}};

  for (int level = 1; level <= n; ++level) {
    const auto& parents = g.level_cells[level - 1];
    std::vector<std::vector<int>> children;
    std::vector<std::vector<std::uint8_t>> child_words;
    children.reserve(parents.size() * m);
    child_words.reserve(parents.size() * m);

    for (std::size_t pc = 0; pc < parents.size(); ++pc) {
      const auto& tuple = parents[pc];
      const auto& word = words[pc];
      const int base = static_cast<int>(g.addresses.size());

      // rings of fresh vertices, one per child, then the epicenter
      for (int r = 0; r < m - 2; ++r) {
        for (int i = 0; i < m; ++i) {
          const int b = order[i];
          auto w = word;
          w.push_back(static_cast<std::uint8_t>(b));
          g.addresses.push_back(Address{std::move(w), fresh_slots(m, b)[r]});
        }
      }
      const int center = static_cast<int>(g.addresses.size());
      g.addresses.push_back(Address{word, -1});

      for (int i = 0; i < m; ++i) {
        const int b = order[i];
        std::vector<int> child(m, -1);
        child[b] = tuple[b];
        child[(b + 1) % m] = center;
        const auto slots = fresh_slots(m, b);
        for (int r = 0; r < m - 2; ++r) child[slots[r]] = base + r * m + i;
        children.push_back(std::move(child));
        auto w = word;
        w.push_back(static_cast<std::uint8_t>(b));
        child_words.push_back(std::move(w));
      }
    }
    g.level_cells.push_back(std::move(children));
    words = std::move(child_words);
  }

  g.adjacency.resize(g.addresses.size());
  for (const auto& cell : g.cells())
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        g.adjacency[cell[a]].push_back(cell[b]);
        g.adjacency[cell[b]].push_back(cell[a]);
      }
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());

  return g;
}

std::string export_graph(const TreeGraph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::Csv) {
    out << "u,v\n";
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v : g.adjacency[u])
        if (u < v) out << u << ',' << v << '\n';
    return out.str();
  }
  out << "graph mtree_" << g.m << '_' << g.n << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << g.addresses[v].label() << "\"];\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.adjacency[u])
      if (u < v) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace specdec
