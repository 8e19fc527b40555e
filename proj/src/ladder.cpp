#include "braidmat/ladder.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidmat {

namespace {

void check_edge(const LadderEdge& e, int n) {
  if (e.black) {
    if (e.i < 1 || e.i >= e.j || e.j > n)
      throw Error(ErrorCode::IndexOutOfRange, "black edge endpoints out of range");
  } else {
    if (e.i < 1 || e.i > n - 1)
      throw Error(ErrorCode::IndexOutOfRange, "white edge position out of range");
  }
}

// L5 side condition: the black's position pair {i,j} is disjoint from the
// white's {k,k+1}.
bool commutes(int i, int j, int k) {
  return j < k || k + 1 < i || (i < k && k + 1 < j);
}

// Replacement edges for the move when its pattern and side conditions match
// at m.index, together with the length of the span they replace.
std::optional<std::pair<int, std::vector<LadderEdge>>> try_match(
    const LadderDiagram& d, const Move& m) {
  const auto& e = d.edges;
  size_t t = static_cast<size_t>(m.index);
  if (m.index < 0 || t >= e.size()) return std::nullopt;
  auto white = [&](size_t p) { return !e[p].black; };
  auto black = [&](size_t p) { return e[p].black; };

  switch (m.id) {
    case MoveId::L1:
      if (m.forward) {
        if (black(t) && e[t].j == e[t].i + 1)
          return {{1,
                   {LadderEdge::White(e[t].i), LadderEdge::White(e[t].i)}}};
      } else if (t + 1 < e.size() && white(t) && white(t + 1) &&
                 e[t].i == e[t + 1].i) {
        return {{2, {LadderEdge::Black(e[t].i, e[t].i + 1)}}};
      }
      return std::nullopt;
    case MoveId::L2:
      if (t + 1 < e.size() && black(t) && black(t + 1))
        return {{2, {e[t + 1], e[t]}}};
      return std::nullopt;
    case MoveId::L3:
      if (t + 1 < e.size() && white(t) && white(t + 1) &&
          std::abs(e[t].i - e[t + 1].i) >= 2)
        return {{2, {e[t + 1], e[t]}}};
      return std::nullopt;
    case MoveId::L4:
      if (t + 2 >= e.size() || !white(t) || !white(t + 1) || !white(t + 2))
        return std::nullopt;
      if (m.forward) {
        if (e[t].i == e[t + 2].i && e[t + 1].i == e[t].i + 1)
          return {{3,
                   {LadderEdge::White(e[t].i + 1), LadderEdge::White(e[t].i),
                    LadderEdge::White(e[t].i + 1)}}};
      } else {
        if (e[t].i == e[t + 2].i && e[t + 1].i == e[t].i - 1)
          return {{3,
                   {LadderEdge::White(e[t].i - 1), LadderEdge::White(e[t].i),
                    LadderEdge::White(e[t].i - 1)}}};
      }
      return std::nullopt;
    case MoveId::L5:
      if (t + 1 >= e.size()) return std::nullopt;
      if (m.forward) {
        if (black(t) && white(t + 1) && commutes(e[t].i, e[t].j, e[t + 1].i))
          return {{2, {e[t + 1], e[t]}}};
      } else {
        if (white(t) && black(t + 1) && commutes(e[t + 1].i, e[t + 1].j, e[t].i))
          return {{2, {e[t + 1], e[t]}}};
      }
      return std::nullopt;
    case MoveId::L6:
      if (t + 1 >= e.size()) return std::nullopt;
      if (m.forward) {
        if (black(t) && white(t + 1) && e[t + 1].i == e[t].i &&
            e[t].i + 1 < e[t].j)
          return {{2,
                   {LadderEdge::White(e[t].i),
                    LadderEdge::Black(e[t].i + 1, e[t].j)}}};
      } else {
        if (white(t) && black(t + 1) && e[t + 1].i == e[t].i + 1)
          return {{2,
                   {LadderEdge::Black(e[t].i, e[t + 1].j),
                    LadderEdge::White(e[t].i)}}};
      }
      return std::nullopt;
    case MoveId::L7:
      if (t + 1 >= e.size()) return std::nullopt;
      if (m.forward) {
        if (white(t) && black(t + 1) && e[t + 1].i == e[t].i &&
            e[t].i + 1 < e[t + 1].j)
          return {{2,
                   {LadderEdge::Black(e[t].i + 1, e[t + 1].j),
                    LadderEdge::White(e[t].i)}}};
      } else {
        if (black(t) && white(t + 1) && e[t].i == e[t + 1].i + 1)
          return {{2,
                   {LadderEdge::White(e[t + 1].i),
                    LadderEdge::Black(e[t + 1].i, e[t].j)}}};
      }
      return std::nullopt;
    case MoveId::L8:
      if (t + 1 >= e.size()) return std::nullopt;
      if (m.forward) {
        if (black(t) && white(t + 1) && e[t + 1].i == e[t].j - 1 &&
            e[t].i < e[t].j - 1)
          return {{2,
                   {LadderEdge::White(e[t].j - 1),
                    LadderEdge::Black(e[t].i, e[t].j - 1)}}};
      } else {
        if (white(t) && black(t + 1) && e[t + 1].j == e[t].i)
          return {{2,
                   {LadderEdge::Black(e[t + 1].i, e[t].i + 1),
                    LadderEdge::White(e[t].i)}}};
      }
      return std::nullopt;
    case MoveId::L9:
      if (t + 1 >= e.size()) return std::nullopt;
      if (m.forward) {
        if (white(t) && black(t + 1) && e[t].i == e[t + 1].j - 1 &&
            e[t + 1].i < e[t + 1].j - 1)
          return {{2,
                   {LadderEdge::Black(e[t + 1].i, e[t + 1].j - 1),
                    LadderEdge::White(e[t].i)}}};
      } else {
        if (black(t) && white(t + 1) && e[t].j == e[t + 1].i)
          return {{2,
                   {LadderEdge::White(e[t + 1].i),
                    LadderEdge::Black(e[t].i, e[t + 1].i + 1)}}};
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

void validate(const LadderDiagram& d) {
  check_strand_count(d.n);
  for (const auto& e : d.edges) check_edge(e, d.n);
}

LadderEval eval(const LadderDiagram& d) {
  validate(d);
  LadderEval ev;
  ev.perm.resize(d.n);
  std::iota(ev.perm.begin(), ev.perm.end(), 1);
  ev.counts = Matrix(d.n);
  for (const auto& e : d.edges) {
    if (e.black) {
      int a = ev.perm[e.i - 1], b = ev.perm[e.j - 1];
      ev.counts.at(a, b) += 2;
      ev.counts.at(b, a) += 2;
    } else {
      int a = ev.perm[e.i - 1], b = ev.perm[e.i];
      ev.counts.at(a, b) += 1;
      ev.counts.at(b, a) += 1;
      std::swap(ev.perm[e.i - 1], ev.perm[e.i]);
    }
  }
  return ev;
}

bool is_w_ladder(const LadderDiagram& d) {
  for (const auto& e : d.edges)
    if (e.black) return false;
  return true;
}

ProjectionWord to_projection_word(const LadderDiagram& d) {
  validate(d);
  ProjectionWord w{d.n, {}};
  w.letters.reserve(d.edges.size());
  for (const auto& e : d.edges) {
    if (e.black)
      throw Error(ErrorCode::BlackEdgePresent,
                  "cannot convert a diagram with black edges to a word");
    w.letters.push_back(e.i);
  }
  return w;
}

LadderDiagram b_ladder_of(const UpperMask& mask) {
  LadderDiagram d{mask.n(), {}};
  for (auto [i, j] : mask.pairs()) d.edges.push_back(LadderEdge::Black(i, j));
  return d;
}

LadderDiagram b_ladder_of(const UpperMask& mask, const Matrix& multiplicity) {
  if (multiplicity.n() != mask.n())
    throw Error(ErrorCode::MismatchedStrandCount,
                "multiplicity matrix size differs from mask");
  if (!multiplicity.is_symmetric() || !multiplicity.all_even() ||
      !multiplicity.is_non_negative())
    throw Error(ErrorCode::InvalidParameters,
                "multiplicity must be symmetric, even and non-negative");
  LadderDiagram d{mask.n(), {}};
  for (auto [i, j] : mask.pairs()) {
    int hooks = multiplicity.at(i, j) / 2;
    if (hooks <= 0)
      throw Error(ErrorCode::InvalidParameters,
                  "multiplicity missing for a masked pair");
    for (int h = 0; h < hooks; ++h)
      d.edges.push_back(LadderEdge::Black(i, j));
  }
  return d;
}

std::vector<Move> legal_moves(const LadderDiagram& d) {
  std::vector<Move> out;
  for (int t = 0; t < static_cast<int>(d.edges.size()); ++t)
    for (int id = 1; id <= 9; ++id)
      for (bool fwd : {true, false}) {
        // L2/L3/L5 act the same way in both directions; list them once.
        if (!fwd && (id == 2 || id == 3)) continue;
        Move m{static_cast<MoveId>(id), t, fwd};
        if (try_match(d, m)) out.push_back(m);
      }
  return out;
}

bool is_legal(const LadderDiagram& d, const Move& m) {
  return try_match(d, m).has_value();
}

LadderDiagram apply_move(const LadderDiagram& d, const Move& m) {
  auto match = try_match(d, m);
  if (!match)
    throw Error(ErrorCode::IllegalMove,
                std::string(move_name(m.id)) + " does not apply at index " +
                    std::to_string(m.index));
  auto [span, replacement] = *match;
  LadderDiagram out{d.n, {}};
  out.edges.reserve(d.edges.size() - span + replacement.size());
  out.edges.insert(out.edges.end(), d.edges.begin(), d.edges.begin() + m.index);
  out.edges.insert(out.edges.end(), replacement.begin(), replacement.end());
  out.edges.insert(out.edges.end(), d.edges.begin() + m.index + span,
                   d.edges.end());
  return out;
}

Move inverse_of(const LadderDiagram& before, const Move& m) {
  if (!is_legal(before, m))
    throw Error(ErrorCode::IllegalMove, "cannot invert an illegal move");
  return {m.id, m.index, !m.forward};
}

std::vector<LadderEdge> btow_row(int k, int l, int n) {
  if (!(1 <= k && k < l && l <= n))
    throw Error(ErrorCode::IndexOutOfRange, "need 1 <= k < l <= n");
  std::vector<LadderEdge> e;
  for (int p = k; p <= l - 1; ++p) e.push_back(LadderEdge::White(p));
  for (int p = l - 1; p >= k; --p) e.push_back(LadderEdge::White(p));
  return e;
}

std::vector<LadderEdge> btow_col(int k, int l, int n) {
  if (!(1 <= k && k < l && l <= n))
    throw Error(ErrorCode::IndexOutOfRange, "need 1 <= k < l <= n");
  std::vector<LadderEdge> e;
  for (int p = l - 1; p >= k; --p) e.push_back(LadderEdge::White(p));
  for (int p = k; p <= l - 1; ++p) e.push_back(LadderEdge::White(p));
  return e;
}

LadderDiagram parse_ladder(const std::string& text, int n) {
  LadderDiagram d{n, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      if (tok[0] == 'W') {
        d.edges.push_back(LadderEdge::White(std::stoi(tok.substr(1))));
      } else if (tok[0] == 'B') {
        auto dot = tok.find('.');
        if (dot == std::string::npos) throw std::invalid_argument(tok);
        d.edges.push_back(LadderEdge::Black(std::stoi(tok.substr(1, dot - 1)),
                                            std::stoi(tok.substr(dot + 1))));
      } else {
        throw std::invalid_argument(tok);
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad ladder token '" + tok + "'");
    }
  }
  validate(d);
  return d;
}

std::string format_ladder(const LadderDiagram& d) {
  std::string out;
  for (size_t t = 0; t < d.edges.size(); ++t) {
    if (t) out += ' ';
    const auto& e = d.edges[t];
    if (e.black)
      out += "B" + std::to_string(e.i) + "." + std::to_string(e.j);
    else
      out += "W" + std::to_string(e.i);
  }
  return out;
}

const char* move_name(MoveId id) {
  static const char* names[] = {"L1", "L2", "L3", "L4", "L5",
                                "L6", "L7", "L8", "L9"};
  return names[static_cast<int>(id) - 1];
}

}  // namespace braidmat
