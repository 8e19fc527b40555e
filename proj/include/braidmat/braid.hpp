#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidmat/matrix.hpp"

namespace braidmat {

// A braid projection on n strands, written as a word of crossing positions
// read top to bottom. Letter k (1 <= k <= n-1) crosses the strands currently
// occupying positions k and k+1. Strands are labeled by their position at the
// top.
struct ProjectionWord {
  int n = 1;
  std::vector<int> letters;
};

// A braid diagram adds over/under information to every crossing. LeftOver
// means the strand entering the crossing at the left position passes over;
// this is the positive crossing orientation throughout the library.
enum class OverFlag { LeftOver, RightOver };

struct DiagramLetter {
  int pos = 1;
  OverFlag over = OverFlag::LeftOver;
};

struct DiagramWord {
  int n = 1;
  std::vector<DiagramLetter> letters;
};

void validate(const ProjectionWord& w);
void validate(const DiagramWord& d);

// Position -> strand label map after executing the whole word, starting from
// the identity. perm[p-1] is the label at position p.
std::vector<int> permutation(const ProjectionWord& w);

bool is_pure(const ProjectionWord& w);

// Symmetric matrix counting, per strand-label pair, how often the two strands
// cross. Entry sum is 2*length.
Matrix cn_matrix(const ProjectionWord& w);

// Entry (i,j): number of crossings where the strand labeled i passes over the
// strand labeled j. ou + ou^T = cn of the underlying projection.
Matrix ou_matrix(const DiagramWord& d);

// Entry (i,j): positive minus negative crossings among those where strand i
// is over strand j. A LeftOver crossing is positive.
Matrix crossing_matrix(const DiagramWord& d);

ProjectionWord forget(const DiagramWord& d);

// Every crossing marked LeftOver (all positive).
DiagramWord as_positive_diagram(const ProjectionWord& w);

ProjectionWord concat(const ProjectionWord& a, const ProjectionWord& b);

// Each letter k becomes n-k; the crossing-count matrix transforms by index
// reversal.
ProjectionWord mirror(const ProjectionWord& w);

// Re-plant a word on n strands with offset-1 idle strands on the left: letter
// k becomes k + offset - 1.
ProjectionWord embed(const ProjectionWord& w, int n, int offset);

struct WordSearchOutcome {
  std::optional<ProjectionWord> word;
  uint64_t nodes = 0;
};

// Bounded exhaustive search for a pure word whose pair crossing counts equal
// the target exactly. States are keyed by (permutation, counts); a state
// refuted once is never expanded again, so the search space is finite and an
// empty result under a generous budget is strong evidence of impossibility.
WordSearchOutcome exact_word_search(const Matrix& target, uint64_t node_budget);

// Text formats: projection "2 3 3 2"; diagram "+2 -3" (+ is LeftOver).
ProjectionWord parse_projection(const std::string& text, int n);
DiagramWord parse_diagram(const std::string& text, int n);
std::string format_word(const ProjectionWord& w);
std::string format_word(const DiagramWord& d);

}  // namespace braidmat
