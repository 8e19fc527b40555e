#include "braidmat/tstructure.hpp"

#include <algorithm>

namespace braidmat {

namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Throws when an edge breaks the grid shape; the structural conditions are
// only meaningful on a well-formed graph.
void validate_shape(const GridGraph& g) {
  const size_t v = g.vertices.size();
  if (g.left.size() != v || g.down.size() != v)
    throw Error(ErrorCode::InvalidParameters,
                "edge arrays do not match the vertex count");
  for (size_t t = 0; t < v; ++t) {
    auto [i, j] = g.vertices[t];
    if (!(1 <= i && i < j && j <= g.n))
      throw Error(ErrorCode::InvalidParameters, "vertex " + cell(i, j) +
                                                    " is out of range");
    if (t > 0 && !(g.vertices[t - 1] < g.vertices[t]))
      throw Error(ErrorCode::InvalidParameters, "vertices are not sorted");
    if (g.left[t] >= 0) {
      if (g.left[t] >= static_cast<int>(v))
        throw Error(ErrorCode::InvalidParameters, "dangling horizontal edge");
      auto [a, b] = g.vertices[g.left[t]];
      if (a != i || b >= j)
        throw Error(ErrorCode::InvalidParameters,
                    "horizontal edge from " + cell(i, j) + " to " + cell(a, b));
    }
    if (g.down[t] >= 0) {
      if (g.down[t] >= static_cast<int>(v))
        throw Error(ErrorCode::InvalidParameters, "dangling vertical edge");
      auto [a, b] = g.vertices[g.down[t]];
      if (b != j || a <= i)
        throw Error(ErrorCode::InvalidParameters,
                    "vertical edge from " + cell(i, j) + " to " + cell(a, b));
    }
  }
}

int chain_length(const std::vector<int>& next, int start) {
  int len = 0;
  for (int cur = next[start]; cur >= 0; cur = next[cur]) ++len;
  return len;
}

}  // namespace

int GridGraph::vertex_index(int i, int j) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(),
                             std::make_pair(i, j));
  if (it == vertices.end() || *it != std::make_pair(i, j)) return -1;
  return static_cast<int>(it - vertices.begin());
}

GridGraph empty_graph(const UpperMask& mask) {
  GridGraph g;
  g.n = mask.n();
  g.vertices = mask.pairs();
  g.left.assign(g.vertices.size(), -1);
  g.down.assign(g.vertices.size(), -1);
  return g;
}

std::pair<int, int> paths(const GridGraph& g, int i, int j) {
  int idx = g.vertex_index(i, j);
  if (idx < 0)
    throw Error(ErrorCode::VertexNotFound, "no vertex at " + cell(i, j));
  return {chain_length(g.left, idx), chain_length(g.down, idx)};
}

TStructureReport check_t_structure(const GridGraph& g) {
  validate_shape(g);
  TStructureReport rep;
  auto note = [&rep](bool& flag, const std::string& w) {
    flag = false;
    if (rep.witness.empty()) rep.witness = w;
  };
  for (size_t t = 0; t < g.vertices.size(); ++t) {
    auto [i, j] = g.vertices[t];
    int h = chain_length(g.left, t);
    int v = chain_length(g.down, t);
    if (h + v != j - i - 1)
      note(rep.c1, "C1 at " + cell(i, j) + ": " + std::to_string(h) + "+" +
                       std::to_string(v) + " != " + std::to_string(j - i - 1));
  }
  for (size_t t = 0; t < g.vertices.size(); ++t) {
    int a = g.left[t], b = g.down[t];
    if (a < 0 || b < 0) continue;
    auto [i, j] = g.vertices[t];
    int c2 = g.down[a];
    if (c2 >= 0 &&
        (g.vertices[c2].first != g.vertices[b].first || g.left[b] != c2))
      note(rep.c2, "C2 at " + cell(i, j));
    int c3 = g.left[b];
    if (c3 >= 0 &&
        (g.vertices[c3].second != g.vertices[a].second || g.down[a] != c3))
      note(rep.c3, "C3 at " + cell(i, j));
  }
  return rep;
}

namespace {

struct Solver {
  GridGraph& g;
  std::vector<int> order;                  // i descending, then j ascending
  std::vector<int> hlen, vlen;             // known once a vertex is assigned
  std::vector<std::vector<int>> lc, dc;    // candidate partner indices

  explicit Solver(GridGraph& graph) : g(graph) {
    const size_t v = g.vertices.size();
    hlen.assign(v, 0);
    vlen.assign(v, 0);
    lc.resize(v);
    dc.resize(v);
    for (size_t t = 0; t < v; ++t) order.push_back(static_cast<int>(t));
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      if (g.vertices[x].first != g.vertices[y].first)
        return g.vertices[x].first > g.vertices[y].first;
      return g.vertices[x].second < g.vertices[y].second;
    });
    for (size_t t = 0; t < v; ++t) {
      auto [i, j] = g.vertices[t];
      for (int k = j - 1; k > i; --k) {
        int idx = g.vertex_index(i, k);
        if (idx >= 0) lc[t].push_back(idx);
      }
      for (int l = i + 1; l < j; ++l) {
        int idx = g.vertex_index(l, j);
        if (idx >= 0) dc[t].push_back(idx);
      }
    }
  }

  // Assignment in this order means every partner, and everything reachable
  // from it, is already fixed: the path lengths and the square conditions at
  // the current vertex are exact, not lower bounds.
  bool solve(size_t pos) {
    if (pos == order.size()) return true;
    const int t = order[pos];
    const int need = g.vertices[t].second - g.vertices[t].first - 1;
    auto try_pair = [&](int L, int D) {
      int h = L < 0 ? 0 : 1 + hlen[L];
      int v = D < 0 ? 0 : 1 + vlen[D];
      if (h + v != need) return false;
      if (L >= 0 && D >= 0) {
        int c2 = g.down[L];
        if (c2 >= 0 && (g.vertices[c2].first != g.vertices[D].first ||
                        g.left[D] != c2))
          return false;
        int c3 = g.left[D];
        if (c3 >= 0 && (g.vertices[c3].second != g.vertices[L].second ||
                        g.down[L] != c3))
          return false;
      }
      g.left[t] = L;
      g.down[t] = D;
      hlen[t] = h;
      vlen[t] = v;
      if (solve(pos + 1)) return true;
      g.left[t] = g.down[t] = -1;
      return false;
    };
    for (int L : lc[t])
      for (int D : dc[t])
        if (try_pair(L, D)) return true;
    for (int L : lc[t])
      if (try_pair(L, -1)) return true;
    for (int D : dc[t])
      if (try_pair(-1, D)) return true;
    return try_pair(-1, -1);
  }
};

}  // namespace

std::optional<GridGraph> find_t_structure(const UpperMask& mask) {
  GridGraph g = empty_graph(mask);
  Solver s(g);
  if (!s.solve(0)) return std::nullopt;
  return g;
}

}  // namespace braidmat
