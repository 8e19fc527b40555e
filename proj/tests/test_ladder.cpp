#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "braidmat/io.hpp"
#include "braidmat/ladder.hpp"

using namespace braidmat;

namespace {

LadderDiagram diagram(int n, std::vector<LadderEdge> edges) {
  return {n, std::move(edges)};
}

const LadderEdge B13 = LadderEdge::Black(1, 3);
const LadderEdge B12 = LadderEdge::Black(1, 2);

// Applies the move, checks the rewrite and its evaluation, then undoes it
// with the reported inverse.
void check_rewrite(const LadderDiagram& before, Move m,
                   const LadderDiagram& after) {
  REQUIRE(is_legal(before, m));
  LadderDiagram got = apply_move(before, m);
  CHECK(got == after);
  CHECK(eval(got) == eval(before));
  Move back = inverse_of(before, m);
  CHECK(apply_move(got, back) == before);
}

}  // namespace

TEST_CASE("eval counts hooks twice without swapping and whites once with") {
  LadderDiagram d = diagram(4, {B13, LadderEdge::White(2)});
  LadderEval e = eval(d);
  CHECK(e.perm == std::vector<int>{1, 3, 2, 4});
  CHECK(e.counts.at(1, 3) == 2);
  CHECK(e.counts.at(2, 3) == 1);
  CHECK(e.counts.sum() == 6);
}

TEST_CASE("each local rule rewrites as listed and preserves eval") {
  const LadderEdge W1 = LadderEdge::White(1);
  const LadderEdge W2 = LadderEdge::White(2);
  const LadderEdge W3 = LadderEdge::White(3);

  // Hook on adjacent positions versus a doubled crossing.
  check_rewrite(diagram(2, {B12}), {MoveId::L1, 0, true}, diagram(2, {W1, W1}));
  check_rewrite(diagram(2, {W1, W1}), {MoveId::L1, 0, false}, diagram(2, {B12}));

  // Hooks commute freely.
  check_rewrite(diagram(4, {B13, LadderEdge::Black(2, 4)}), {MoveId::L2, 0, true},
                diagram(4, {LadderEdge::Black(2, 4), B13}));

  // Distant whites commute.
  check_rewrite(diagram(4, {W1, W3}), {MoveId::L3, 0, true}, diagram(4, {W3, W1}));

  // The braid relation on whites.
  check_rewrite(diagram(3, {W1, W2, W1}), {MoveId::L4, 0, true},
                diagram(3, {W2, W1, W2}));
  check_rewrite(diagram(3, {W2, W1, W2}), {MoveId::L4, 0, false},
                diagram(3, {W1, W2, W1}));

  // A hook passes a white it does not touch: disjoint below, and nested.
  check_rewrite(diagram(4, {B12, W3}), {MoveId::L5, 0, true},
                diagram(4, {W3, B12}));
  check_rewrite(diagram(4, {LadderEdge::Black(1, 4), W2}), {MoveId::L5, 0, true},
                diagram(4, {W2, LadderEdge::Black(1, 4)}));

  // The four directed exchanges at the hook's endpoints.
  check_rewrite(diagram(3, {B13, W1}), {MoveId::L6, 0, true},
                diagram(3, {W1, LadderEdge::Black(2, 3)}));
  check_rewrite(diagram(3, {W1, B13}), {MoveId::L7, 0, true},
                diagram(3, {LadderEdge::Black(2, 3), W1}));
  check_rewrite(diagram(3, {B13, W2}), {MoveId::L8, 0, true},
                diagram(3, {W2, B12}));
  check_rewrite(diagram(3, {W2, B13}), {MoveId::L9, 0, true},
                diagram(3, {B12, W2}));
}

TEST_CASE("legal_moves finds exactly the applicable rewrites") {
  LadderDiagram d = diagram(4, {B13, LadderEdge::White(2)});
  auto moves = legal_moves(d);
  bool has_l8 = false;
  for (const Move& m : moves) {
    CHECK(is_legal(d, m));
    CHECK(eval(apply_move(d, m)) == eval(d));
    if (m.id == MoveId::L8 && m.index == 0 && m.forward) has_l8 = true;
  }
  CHECK(has_l8);
  // The nested-pass rule does not apply here: the white touches position 3.
  for (const Move& m : moves) CHECK(m.id != MoveId::L5);
}

TEST_CASE("white ladders convert to words, hooks refuse") {
  LadderDiagram d = diagram(3, {LadderEdge::White(2), LadderEdge::White(1)});
  CHECK(is_w_ladder(d));
  CHECK(to_projection_word(d).letters == std::vector<int>{2, 1});
  CHECK_THROWS_AS(to_projection_word(diagram(3, {B13})), Error);
}

TEST_CASE("b_ladder_of lays one hook per set pair") {
  UpperMask m(4);
  m.set(1, 3);
  m.set(2, 4);
  LadderDiagram d = b_ladder_of(m);
  CHECK(d.edges.size() == 2);
  LadderEval e = eval(d);
  CHECK(e.counts == m.to_matrix());
  CHECK(e.perm == std::vector<int>{1, 2, 3, 4});

  Matrix heavy = m.to_matrix();
  heavy.at(1, 3) = heavy.at(3, 1) = 4;  // two hooks for this pair
  CHECK(b_ladder_of(m, heavy).edges.size() == 3);
  CHECK(eval(b_ladder_of(m, heavy)).counts == heavy);
}

TEST_CASE("macro expansions preserve eval") {
  for (auto& edges : {btow_row(1, 4, 5), btow_col(1, 4, 5)}) {
    LadderDiagram whites = diagram(5, edges);
    CHECK(is_w_ladder(whites));
  }
  // A full row run of hooks equals its white macro.
  LadderDiagram run = diagram(5, {LadderEdge::Black(1, 2), LadderEdge::Black(1, 3),
                                  LadderEdge::Black(1, 4)});
  CHECK(eval(diagram(5, btow_row(1, 4, 5))) == eval(run));
  LadderDiagram col = diagram(5, {LadderEdge::Black(3, 4), LadderEdge::Black(2, 4),
                                  LadderEdge::Black(1, 4)});
  CHECK(eval(diagram(5, btow_col(1, 4, 5))) == eval(col));
}

TEST_CASE("search finds a white form and its trace replays") {
  LadderDiagram d = diagram(4, {B13, LadderEdge::White(2)});
  SearchResult r = search_w_form(d, 0);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(is_w_ladder(r.w_ladder));
  CHECK(eval(r.w_ladder) == eval(d));
  LadderDiagram replay = d;
  for (const Move& m : r.trace) replay = apply_move(replay, m);
  CHECK(replay == r.w_ladder);
}

TEST_CASE("search reports exhausted space for an unrealizable hook") {
  // Strands 1 and 3 cannot cross alone, and the lone hook has no moves.
  SearchResult r = search_w_form(diagram(3, {B13}), 1000);
  CHECK(r.status == SearchStatus::SpaceExhausted);
}

TEST_CASE("search reports an exhausted budget") {
  LadderDiagram d = diagram(4, {B13, LadderEdge::White(2)});
  SearchResult r = search_w_form(d, 1);
  CHECK(r.status == SearchStatus::BudgetExhausted);
}

TEST_CASE("thread_black dissolves a hook into a pure word") {
  ProjectionWord w{3, {2, 2}};
  auto out = thread_black(w, 1, 3, true);
  REQUIRE(out.has_value());
  CHECK(is_pure(*out));
  Matrix want = cn_matrix(w);
  want.at(1, 3) += 2;
  want.at(3, 1) += 2;
  CHECK(cn_matrix(*out) == want);
}

TEST_CASE("ladder text form round trips") {
  LadderDiagram d = parse_ladder("B1.3 W2", 4);
  CHECK(d == diagram(4, {B13, LadderEdge::White(2)}));
  CHECK(format_ladder(d) == "B1.3 W2");
  CHECK(parse_ladder("", 4).edges.empty());
  CHECK_THROWS_AS(parse_ladder("B3.1", 4), Error);
  CHECK_THROWS_AS(parse_ladder("W4", 4), Error);
  CHECK_THROWS_AS(parse_ladder("X2", 4), Error);
}

TEST_CASE("move traces serialize as json") {
  MoveTrace t{{MoveId::L8, 0, true}, {MoveId::L1, 1, false}};
  MoveTrace back = trace_from_json(trace_to_json(t));
  REQUIRE(back.size() == 2);
  CHECK(back[0] == t[0]);
  CHECK(back[1] == t[1]);
  CHECK_THROWS_AS(trace_from_json("[{\"move\":\"L10\",\"index\":0,\"dir\":\"fwd\"}]"),
                  Error);
}
