#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specdec/numeric.hpp"

namespace specdec {

/// Address of a vertex: the word of the cell it was created in plus a
/// within-cell slot. slot == -1 marks the epicenter created when the cell
/// `word` was subdivided (shared by all m child cells).
struct Address {
  std::vector<std::uint8_t> word;
  int slot = 0;
  std::string label() const;
};

struct BuildOptions {
  std::size_t vertex_cap = 1'000'000;
  /// Enumeration order of the branches during subdivision; empty = 0..m-1.
  /// Any permutation yields an isomorphic graph.
  std::vector<int> branch_order;
};

/// Level-n approximation of the m-branch tree: m^n complete-graph cells
/// arranged in a tree, glued at branch epicenters.
///
/// Vertex ordering: the m boundary vertices first, then the vertices created
/// by each subdivision level. Within one subdivided cell the new vertices
/// come in (m-2) rings of m (one fresh vertex per child cell) followed by the
/// epicenter, so the depth-1 matrix layout has the center last.
struct TreeGraph {
  int m = 0;
  int n = 0;
  std::vector<Address> addresses;
  std::vector<std::vector<int>> adjacency;
  std::vector<int> boundary;
  /// level_cells[k] lists the m^k cells of the level-k sub-approximation,
  /// each as an ordered m-tuple of vertex indices.
  std::vector<std::vector<std::vector<int>>> level_cells;

  int vertex_count() const { return static_cast<int>(adjacency.size()); }
  long long edge_count() const;
  const std::vector<std::vector<int>>& cells() const { return level_cells[n]; }
  int degree(int v) const;
  /// Number of leaf cells containing each vertex (1 or m).
  std::vector<int> leaf_cell_counts() const;
};

TreeGraph build_graph(int m, int n, const BuildOptions& opts = {});

enum class GraphFormat { Dot, Csv };
std::string export_graph(const TreeGraph& g, GraphFormat format);

}  // namespace specdec
