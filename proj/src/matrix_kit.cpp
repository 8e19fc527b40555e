#include "braidmat/matrix_kit.hpp"

#include <array>

namespace braidmat {

namespace {

// Bit positions of the three pairs of each index triple i<j<k. Row-major pair
// order puts (i,j) lowest and (j,k) highest within a triple.
std::vector<std::array<int, 3>> triple_bits(int n) {
  std::vector<std::array<int, 3>> triples;
  UpperMask probe(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        triples.push_back({probe.bit_index(i, j), probe.bit_index(j, k),
                           probe.bit_index(i, k)});
  return triples;
}

bool t0_bits(uint64_t bits, const std::vector<std::array<int, 3>>& triples) {
  for (const auto& t : triples)
    if (!((bits >> t[0]) & 1) && !((bits >> t[1]) & 1) && ((bits >> t[2]) & 1))
      return false;
  return true;
}

// Assigns bits from the highest pair index down, zero branch first, so masks
// come out in ascending bitset order. A triple becomes checkable once its
// lowest bit (i,j) is assigned, which prunes whole subtrees early.
struct PruningEnumerator {
  int total_bits;
  std::vector<std::vector<std::array<int, 3>>> checks_at;  // keyed by bit (i,j)
  UpperMask mask;
  const std::function<void(const UpperMask&)>& sink;

  PruningEnumerator(int n, const std::function<void(const UpperMask&)>& s)
      : total_bits(n * (n - 1) / 2), checks_at(total_bits), mask(n), sink(s) {
    for (const auto& t : triple_bits(n)) checks_at[t[0]].push_back(t);
  }

  void run(int bit, uint64_t bits) {
    if (bit < 0) {
      mask.set_words({bits, 0});
      sink(mask);
      return;
    }
    for (uint64_t v : {uint64_t{0}, uint64_t{1}}) {
      uint64_t next = bits | (v << bit);
      bool ok = true;
      for (const auto& t : checks_at[bit])
        if (!((next >> t[0]) & 1) && !((next >> t[1]) & 1) &&
            ((next >> t[2]) & 1)) {
          ok = false;
          break;
        }
      if (ok) run(bit - 1, next);
    }
  }
};

}  // namespace

void enumerate_t0(int n, const std::function<void(const UpperMask&)>& sink) {
  check_strand_count(n);
  if (n > 7)
    throw Error(ErrorCode::StrandCountTooLarge,
                "exhaustive T0 enumeration is limited to 7 strands");
  if (n <= 6) {
    PruningEnumerator e(n, sink);
    e.run(n * (n - 1) / 2 - 1, 0);
    return;
  }
  // n = 7: flat scan over all 2^21 masks against the precomputed triples.
  auto triples = triple_bits(n);
  int bits = n * (n - 1) / 2;
  UpperMask mask(n);
  for (uint64_t v = 0; v < (uint64_t{1} << bits); ++v) {
    if (!t0_bits(v, triples)) continue;
    mask.set_words({v, 0});
    sink(mask);
  }
}

uint64_t count_t0(int n) {
  uint64_t count = 0;
  enumerate_t0(n, [&](const UpperMask&) { ++count; });
  return count;
}

}  // namespace braidmat
