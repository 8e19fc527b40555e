#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidmat/matrix.hpp"

namespace braidmat {

// A graph on the grid alignment of a pair mask. One vertex V(i,j) per set
// bit. Each vertex may have one outgoing horizontal edge to a vertex V(i,k)
// with k < j, and one outgoing vertical edge to a vertex V(l,j) with l > i.
struct GridGraph {
  int n = 1;
  std::vector<std::pair<int, int>> vertices;  // sorted (i,j) pairs
  // Parallel to vertices: index into vertices of the chosen partner, or -1.
  std::vector<int> left;  // horizontal partner V(i,k), k<j
  std::vector<int> down;  // vertical partner V(l,j), l>i

  int vertex_index(int i, int j) const;  // -1 when absent
};

GridGraph empty_graph(const UpperMask& mask);

// Lengths of the maximal horizontal (left-going) and vertical (down-going)
// paths from vertex (i,j). Throws VertexNotFound.
std::pair<int, int> paths(const GridGraph& g, int i, int j);

// The three structural conditions:
//   C1: hlen + vlen = j - i - 1 at every vertex.
//   C2: a horizontal edge V(i,k)-V(i,j) with vertical edges down from both
//       endpoints forces equal drop and the closing horizontal edge.
//   C3: a vertical edge V(i,j)-V(l,j) with horizontal edges left from both
//       endpoints forces equal reach and the closing vertical edge.
struct TStructureReport {
  bool c1 = true, c2 = true, c3 = true;
  std::string witness;  // first offending vertex/edge, empty when all pass

  bool ok() const { return c1 && c2 && c3; }
};

TStructureReport check_t_structure(const GridGraph& g);

// Exhaustive backtracking over edge assignments; returns a graph satisfying
// all three conditions, or nothing.
std::optional<GridGraph> find_t_structure(const UpperMask& mask);

}  // namespace braidmat
