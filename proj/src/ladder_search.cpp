#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "braidmat/ladder.hpp"

namespace braidmat {

namespace {

struct Key {
  uint64_t a = 0, b = 0;
  bool operator==(const Key& o) const { return a == o.a && b == o.b; }
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    return static_cast<size_t>(k.a ^ (k.b * 0x9e3779b97f4a7c15ULL));
  }
};

// Two independent 64-bit FNV-1a streams; a collision would only make the
// search miss a state, never accept a wrong result.
Key hash_diagram(const LadderDiagram& d) {
  Key k{1469598103934665603ULL, 0x2b992ddfa23249d6ULL};
  auto mix = [&k](uint64_t v) {
    k.a = (k.a ^ v) * 1099511628211ULL;
    k.b = (k.b ^ (v + 0x9e3779b97f4a7c15ULL)) * 0x100000001b3ULL;
    k.b ^= k.b >> 29;
  };
  mix(static_cast<uint64_t>(d.n));
  for (const auto& e : d.edges)
    mix((static_cast<uint64_t>(e.black) << 32) |
        (static_cast<uint64_t>(e.i) << 16) | static_cast<uint64_t>(e.j));
  return k;
}

// Lower bound on the number of moves still needed: dissolving a black (i,j)
// takes at least j-i moves (L6..L9 shorten it one step at a time, L1 removes
// it once adjacent) and no move shortens two blacks at once.
int heuristic(const LadderDiagram& d) {
  int h = 0;
  for (const auto& e : d.edges)
    if (e.black) h += e.j - e.i;
  return h;
}

// A contiguous window of black edges forming a full row {B(k,k+1)..B(k,l)}
// or column {B(k,l)..B(l-1,l)} pattern, rewritable to whites in one scripted
// burst.
struct Macro {
  bool row = false;
  int start = 0;
  int len = 0;
};

std::vector<Macro> find_macros(const LadderDiagram& d) {
  std::vector<Macro> out;
  const auto& e = d.edges;
  size_t t = 0;
  while (t < e.size()) {
    if (!e[t].black) {
      ++t;
      continue;
    }
    size_t run_end = t;
    while (run_end < e.size() && e[run_end].black) ++run_end;
    for (size_t s = t; s < run_end; ++s)
      for (size_t len = 2; s + len <= run_end; ++len) {
        bool row = true, col = true;
        std::vector<int> js, is;
        for (size_t r = s; r < s + len; ++r) {
          row = row && e[r].i == e[s].i;
          col = col && e[r].j == e[s].j;
          js.push_back(e[r].j);
          is.push_back(e[r].i);
        }
        if (row) {
          std::sort(js.begin(), js.end());
          for (size_t q = 0; q < len; ++q)
            row = row && js[q] == e[s].i + 1 + static_cast<int>(q);
          if (row) out.push_back({true, static_cast<int>(s),
                                  static_cast<int>(len)});
        }
        if (col) {
          std::sort(is.begin(), is.end());
          for (size_t q = 0; q < len; ++q)
            col = col && is[q] == e[s].j - static_cast<int>(len) +
                              static_cast<int>(q);
          if (col) out.push_back({false, static_cast<int>(s),
                                  static_cast<int>(len)});
        }
      }
    t = run_end;
  }
  // Largest windows first; they discharge the most weight per step.
  std::stable_sort(out.begin(), out.end(),
                   [](const Macro& x, const Macro& y) { return x.len > y.len; });
  return out;
}

// Rewrites the macro window into whites with primitive moves, appending them
// to tr: sort the window with L2, peel the innermost black with L1, then let
// each later black climb over the whites already produced (L7 for rows, L9
// for columns) and collapse with L1.
LadderDiagram expand_macro(LadderDiagram d, const Macro& m, MoveTrace& tr) {
  auto step = [&](Move mv) {
    d = apply_move(d, mv);
    tr.push_back(mv);
  };
  for (int pass = 0; pass < m.len; ++pass)
    for (int r = m.start; r < m.start + m.len - 1; ++r) {
      const auto& x = d.edges[r];
      const auto& y = d.edges[r + 1];
      if (m.row ? x.j > y.j : x.i < y.i) step({MoveId::L2, r, true});
    }
  const MoveId climb = m.row ? MoveId::L7 : MoveId::L9;
  step({MoveId::L1, m.start, true});
  for (int q = 1; q < m.len; ++q) {
    int b = m.start + 2 * q;
    for (int s = 0; s < q; ++s) step({climb, b - 1 - s, true});
    step({MoveId::L1, b - q, true});
  }
  return d;
}

struct SearchCtx {
  uint64_t budget = 0;
  uint64_t nodes = 0;
  int limit = 0;
  bool cutoff = false;
  bool budget_hit = false;
  std::unordered_map<Key, int, KeyHash> seen;
  LadderDiagram out;
  MoveTrace trace;
};

bool dfs(SearchCtx& c, const LadderDiagram& cur, int g, MoveTrace& path) {
  if (is_w_ladder(cur)) {
    c.out = cur;
    c.trace = path;
    return true;
  }
  if (g + heuristic(cur) > c.limit) {
    c.cutoff = true;
    return false;
  }
  if (++c.nodes > c.budget) {
    c.budget_hit = true;
    return false;
  }
  auto [it, fresh] = c.seen.try_emplace(hash_diagram(cur), g);
  if (!fresh) {
    if (it->second <= g) return false;
    it->second = g;
  }
  for (const auto& mac : find_macros(cur)) {
    size_t mark = path.size();
    LadderDiagram nxt = expand_macro(cur, mac, path);
    if (dfs(c, nxt, g + static_cast<int>(path.size() - mark), path)) return true;
    path.resize(mark);
    if (c.budget_hit) return false;
  }
  for (const Move& mv : legal_moves(cur)) {
    path.push_back(mv);
    if (dfs(c, apply_move(cur, mv), g + 1, path)) return true;
    path.pop_back();
    if (c.budget_hit) return false;
  }
  return false;
}

}  // namespace

uint64_t default_search_budget() {
  if (const char* s = std::getenv("BRAIDMAT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
  }
  return 1000000;
}

SearchResult search_w_form(const LadderDiagram& d, uint64_t node_budget) {
  validate(d);
  if (node_budget == 0) node_budget = default_search_budget();
  SearchResult res;
  if (is_w_ladder(d)) {
    res.status = SearchStatus::Found;
    res.w_ladder = d;
    return res;
  }
  SearchCtx c;
  c.budget = node_budget;
  // The reachable space is finite (each move preserves the total edge mass
  // counting blacks twice), so an iteration that finishes without hitting its
  // depth bound has exhausted it.
  for (int limit = heuristic(d);; ++limit) {
    c.limit = limit;
    c.cutoff = false;
    c.seen.clear();
    MoveTrace path;
    if (dfs(c, d, 0, path)) {
      res.status = SearchStatus::Found;
      res.w_ladder = c.out;
      res.trace = c.trace;
      res.nodes = c.nodes;
      return res;
    }
    res.nodes = c.nodes;
    if (c.budget_hit) {
      res.status = SearchStatus::BudgetExhausted;
      return res;
    }
    if (!c.cutoff) {
      res.status = SearchStatus::SpaceExhausted;
      return res;
    }
  }
}

namespace {

constexpr uint64_t kThreadFallbackBudget = 200000;

// Pushes a black hook placed above the word downward until its feet are
// adjacent, then collapses it with L1. The hook slides with L6/L8, commutes
// past unrelated whites with L5, and when blocked pulls the nearest feeding
// white up through the blocking run with L3.
std::optional<ProjectionWord> pass_down(const ProjectionWord& w, int bi,
                                        int bj) {
  LadderDiagram d{w.n, {}};
  d.edges.push_back(LadderEdge::Black(bi, bj));
  for (int k : w.letters) d.edges.push_back(LadderEdge::White(k));
  int t = 0;
  for (size_t guard = 0; guard < 4 * d.edges.size() * d.edges.size() + 64;
       ++guard) {
    const LadderEdge cur = d.edges[t];
    if (cur.j == cur.i + 1) {
      d = apply_move(d, {MoveId::L1, t, true});
      return to_projection_word(d);
    }
    if (t + 1 == static_cast<int>(d.edges.size())) return std::nullopt;
    int a = d.edges[t + 1].i;
    if (a == cur.i) {
      d = apply_move(d, {MoveId::L6, t, true});
      ++t;
      continue;
    }
    if (a == cur.j - 1) {
      d = apply_move(d, {MoveId::L8, t, true});
      ++t;
      continue;
    }
    if (is_legal(d, {MoveId::L5, t, true})) {
      d = apply_move(d, {MoveId::L5, t, true});
      ++t;
      continue;
    }
    bool pulled = false;
    for (int s = t + 2; s < static_cast<int>(d.edges.size()) && !pulled; ++s) {
      int b = d.edges[s].i;
      if (b != cur.i && b != cur.j - 1) continue;
      bool clear = true;
      for (int r = t + 1; r < s && clear; ++r)
        clear = std::abs(d.edges[r].i - b) >= 2;
      if (!clear) continue;
      for (int r = s - 1; r > t; --r) d = apply_move(d, {MoveId::L3, r, true});
      pulled = true;
    }
    if (!pulled) return std::nullopt;
  }
  return std::nullopt;
}

// Mirror image of pass_down for a hook placed below the word: climb with
// L7/L9, commute with L5, pull feeding whites down with L3.
std::optional<ProjectionWord> pass_up(const ProjectionWord& w, int bi, int bj) {
  LadderDiagram d{w.n, {}};
  for (int k : w.letters) d.edges.push_back(LadderEdge::White(k));
  d.edges.push_back(LadderEdge::Black(bi, bj));
  int t = static_cast<int>(d.edges.size()) - 1;
  for (size_t guard = 0; guard < 4 * d.edges.size() * d.edges.size() + 64;
       ++guard) {
    const LadderEdge cur = d.edges[t];
    if (cur.j == cur.i + 1) {
      d = apply_move(d, {MoveId::L1, t, true});
      return to_projection_word(d);
    }
    if (t == 0) return std::nullopt;
    int a = d.edges[t - 1].i;
    if (a == cur.i) {
      d = apply_move(d, {MoveId::L7, t - 1, true});
      --t;
      continue;
    }
    if (a == cur.j - 1) {
      d = apply_move(d, {MoveId::L9, t - 1, true});
      --t;
      continue;
    }
    if (is_legal(d, {MoveId::L5, t - 1, false})) {
      d = apply_move(d, {MoveId::L5, t - 1, false});
      --t;
      continue;
    }
    bool pulled = false;
    for (int s = t - 2; s >= 0 && !pulled; --s) {
      int b = d.edges[s].i;
      if (b != cur.i && b != cur.j - 1) continue;
      bool clear = true;
      for (int r = s + 1; r < t && clear; ++r)
        clear = std::abs(d.edges[r].i - b) >= 2;
      if (!clear) continue;
      for (int r = s; r < t - 1; ++r) d = apply_move(d, {MoveId::L3, r, true});
      pulled = true;
    }
    if (!pulled) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ProjectionWord> thread_black(const ProjectionWord& word, int i,
                                           int j, bool from_top) {
  validate(word);
  if (!(1 <= i && i < j && j <= word.n))
    throw Error(ErrorCode::IndexOutOfRange, "hook endpoints out of range");
  auto first = from_top ? pass_down(word, i, j) : pass_up(word, i, j);
  if (first) return first;
  // For a pure word both placements contribute the hook at the same label
  // pair, so the opposite pass is a valid second attempt.
  if (is_pure(word)) {
    auto second = from_top ? pass_up(word, i, j) : pass_down(word, i, j);
    if (second) return second;
  }
  LadderDiagram d{word.n, {}};
  if (from_top) d.edges.push_back(LadderEdge::Black(i, j));
  for (int k : word.letters) d.edges.push_back(LadderEdge::White(k));
  if (!from_top) d.edges.push_back(LadderEdge::Black(i, j));
  auto res = search_w_form(d, kThreadFallbackBudget);
  if (res.status == SearchStatus::Found)
    return to_projection_word(res.w_ladder);
  return std::nullopt;
}

}  // namespace braidmat
