#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidmat/braid.hpp"
#include "braidmat/matrix.hpp"

namespace braidmat {

// One rung of a BW-ladder diagram. A black edge Black(i,j) is a hook between
// the strands at positions i and j (two crossings, no swap). A white edge
// White(k) is a single crossing of the strands at positions k, k+1.
struct LadderEdge {
  bool black = false;
  int i = 0;  // black: lower position; white: k
  int j = 0;  // black only: upper position (i < j)

  static LadderEdge Black(int i, int j) { return {true, i, j}; }
  static LadderEdge White(int k) { return {false, k, 0}; }

  bool operator==(const LadderEdge& o) const {
    return black == o.black && i == o.i && j == o.j;
  }
};

struct LadderDiagram {
  int n = 1;
  std::vector<LadderEdge> edges;

  bool operator==(const LadderDiagram& o) const {
    return n == o.n && edges == o.edges;
  }
};

void validate(const LadderDiagram& d);

// Joint semantics of a diagram: the strand permutation it induces and the
// symmetric label-pair crossing counts it contributes. Rewrites must preserve
// this value exactly.
struct LadderEval {
  std::vector<int> perm;
  Matrix counts;

  bool operator==(const LadderEval& o) const {
    return perm == o.perm && counts == o.counts;
  }
};

LadderEval eval(const LadderDiagram& d);

bool is_w_ladder(const LadderDiagram& d);

// Requires a pure all-white diagram is not needed; any all-white diagram
// converts, black edges throw BlackEdgePresent.
ProjectionWord to_projection_word(const LadderDiagram& d);

// One black edge per set bit of the mask, sorted by (i,j); repeated per pair
// when a multiplicity matrix is supplied (entries are crossing counts, each
// pair contributing count/2 hooks).
LadderDiagram b_ladder_of(const UpperMask& mask);
LadderDiagram b_ladder_of(const UpperMask& mask, const Matrix& multiplicity);

// The nine local rewriting rules. Forward direction reads the rule left to
// right as listed below; every rule is an involution up to direction.
//
//   L1  Black(i,i+1)            <-> White(i) White(i)
//   L2  Black(i,j) Black(k,l)   <-> Black(k,l) Black(i,j)
//   L3  White(k) White(l)       <-> White(l) White(k)       |k-l| >= 2
//   L4  White(i) White(i+1) White(i) <-> White(i+1) White(i) White(i+1)
//   L5  Black(i,j) White(k)     <-> White(k) Black(i,j)     j<k, k+1<i, or i<k<k+1<j
//   L6  Black(i,j) White(i)     <-> White(i) Black(i+1,j)   i+1<j
//   L7  White(i) Black(i,j)     <-> Black(i+1,j) White(i)   i+1<j
//   L8  Black(i,j) White(j-1)   <-> White(j-1) Black(i,j-1) i<j-1
//   L9  White(j-1) Black(i,j)   <-> Black(i,j-1) White(j-1) i<j-1
enum class MoveId { L1 = 1, L2, L3, L4, L5, L6, L7, L8, L9 };

struct Move {
  MoveId id = MoveId::L1;
  int index = 0;  // position of the rule's leftmost edge in the sequence
  bool forward = true;

  bool operator==(const Move& o) const {
    return id == o.id && index == o.index && forward == o.forward;
  }
};

using MoveTrace = std::vector<Move>;

std::vector<Move> legal_moves(const LadderDiagram& d);
bool is_legal(const LadderDiagram& d, const Move& m);
LadderDiagram apply_move(const LadderDiagram& d, const Move& m);
Move inverse_of(const LadderDiagram& before, const Move& m);

// White macro sequences equivalent to runs of black edges sharing an
// endpoint: a row run Black(k,k+1)..Black(k,l) and a column run
// Black(l-1,l)..Black(k,l).
std::vector<LadderEdge> btow_row(int k, int l, int n);
std::vector<LadderEdge> btow_col(int k, int l, int n);

enum class SearchStatus { Found, SpaceExhausted, BudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::SpaceExhausted;
  LadderDiagram w_ladder;
  MoveTrace trace;        // replays from the source diagram
  uint64_t nodes = 0;
};

// Iterative-deepening search for an all-white equivalent of d, using the
// primitive moves plus macro rewrites of black runs. Absence of a result
// proves nothing; the move system is not known to be complete.
SearchResult search_w_form(const LadderDiagram& d, uint64_t node_budget);

uint64_t default_search_budget();

// Dissolves a single black edge into an all-white word by pushing it through
// the word with the directed exchange rules (down: L6/L8, up: L7/L9, plus
// commutations), falling back to bounded search. Returns the resulting word,
// or nothing when every strategy fails.
std::optional<ProjectionWord> thread_black(const ProjectionWord& word, int i,
                                           int j, bool from_top);

// Text format: "B1.3 W2" tokens, space separated.
LadderDiagram parse_ladder(const std::string& text, int n);
std::string format_ladder(const LadderDiagram& d);

const char* move_name(MoveId id);

}  // namespace braidmat
