#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidmat/braid.hpp"
#include "braidmat/formations.hpp"
#include "braidmat/matrix.hpp"

namespace braidmat {

// A realization witness together with its target. `verified` is only set by
// verify_certificate, which recomputes everything from the witness and never
// trusts the method tag.
struct Certificate {
  enum class Kind { CN, OU, Crossing };

  Kind kind = Kind::CN;
  Matrix target;
  ProjectionWord word;  // CN witness
  DiagramWord diagram;  // OU / Crossing witness
  std::string method;   // human-readable decomposition summary
  uint64_t nodes = 0;   // search nodes spent, 0 for purely constructive runs
  bool verified = false;
};

// How a (0,2) support was decomposed into realizable pieces. Leaves name the
// construction that produced their sub-word.
struct DecompositionNode {
  std::string kind;    // "empty","window","chain","piece","search","word-dfs"
  std::string detail;  // descriptor text, window placement, etc.
  UpperMask mask;
  std::vector<DecompositionNode> children;
};

std::string format_decomposition(const DecompositionNode& node);

struct MaskRealization {
  ProjectionWord word;
  DecompositionNode tree;
  uint64_t nodes = 0;
};

// Realizes a T0 pair mask as a pure projection with every counted pair
// crossing exactly twice. Strategy layers: window shrinking, bandwidth-2
// chain assembly, greedy formation peeling (memoized), ladder search with
// macro moves, and a final bounded word search. Throws NotT0 or
// RealizationFailed.
MaskRealization realize_mask(const UpperMask& mask, uint64_t budget);

DecompositionNode peel_decompose(const UpperMask& mask, uint64_t budget);

// Pure-projection realization of a non-negative even symmetric T0 matrix.
Certificate realize_cn(const Matrix& m, uint64_t budget = 0);

// Pure-diagram realization of a non-negative matrix whose symmetrization
// M + M^T is even and T0. Throws SumNotT0.
Certificate realize_ou(const Matrix& m, uint64_t budget = 0);

// All-positive pure-diagram realization of a non-negative symmetric T0
// matrix; its over/under and signed counts both equal the target.
Certificate realize_crossing(const Matrix& m, uint64_t budget = 0);

bool verify_certificate(Certificate& c);

struct TheoremRow {
  UpperMask mask;
  std::string method;
  size_t word_length = 0;
  uint64_t nodes = 0;
  int64_t micros = 0;
  bool verified = false;
};

struct TheoremReport {
  int n = 6;
  uint64_t total = 0;
  uint64_t verified_count = 0;
  int64_t total_micros = 0;
  int64_t max_micros = 0;
  std::vector<TheoremRow> rows;

  bool all_verified() const { return total == verified_count; }
};

// Runs realize_cn over every T0 (0,2)-matrix on n strands and independently
// re-checks each witness. Failures are reported, not thrown.
TheoremReport verify_theorem(int n = 6, int workers = 1, uint64_t budget = 0);

}  // namespace braidmat
