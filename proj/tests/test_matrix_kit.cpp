#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "braidmat/io.hpp"
#include "braidmat/matrix_kit.hpp"

using namespace braidmat;

namespace {

// Independent reference predicate: no triple i<j<k may have both short pairs
// absent while the long pair is present.
bool reference_t0(const UpperMask& m) {
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j)
      for (int k = j + 1; k <= m.n(); ++k)
        if (!m.test(i, j) && !m.test(j, k) && m.test(i, k)) return false;
  return true;
}

// Brute-force count over every subset of pairs; tractable through n = 5.
uint64_t reference_count(int n) {
  UpperMask m(n);
  uint64_t total = 0;
  const uint64_t limit = 1ull << m.pair_count();
  for (uint64_t bits = 0; bits < limit; ++bits) {
    m.set_words({bits, 0});
    if (reference_t0(m)) ++total;
  }
  return total;
}

}  // namespace

TEST_CASE("upper mask indexing is row-major over the upper triangle") {
  UpperMask m(4);
  CHECK(m.pair_count() == 6);
  m.set(1, 3);
  m.set(2, 4);
  CHECK(m.test(1, 3));
  CHECK_FALSE(m.test(1, 2));
  CHECK(m.popcount() == 2);
  CHECK(m.pairs() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  m.set(1, 3, false);
  CHECK_FALSE(m.test(1, 3));
  CHECK(m.popcount() == 1);
}

TEST_CASE("mask set algebra") {
  UpperMask a(4), b(4);
  a.set(1, 2);
  a.set(3, 4);
  b.set(1, 2);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.minus(b).pairs() == std::vector<std::pair<int, int>>{{3, 4}});
  CHECK(a.unite(b) == a);
  CHECK(a.intersects(b));
  CHECK_FALSE(a.minus(b).intersects(b));
}

TEST_CASE("mask converts to a symmetric matrix with entries 0 and 2") {
  UpperMask m(3);
  m.set(1, 2);
  Matrix t = m.to_matrix();
  CHECK(t.at(1, 2) == 2);
  CHECK(t.at(2, 1) == 2);
  CHECK(t.at(1, 3) == 0);
  CHECK(t.is_symmetric());
  CHECK(m02(t) == m);
}

TEST_CASE("reverse_mask flips both indices and is an involution") {
  UpperMask m(4);
  m.set(1, 2);
  m.set(2, 4);
  UpperMask r = reverse_mask(m);
  CHECK(r.test(3, 4));  // (1,2) -> (n+1-2, n+1-1)
  CHECK(r.test(1, 3));  // (2,4) -> (1,3)
  CHECK(r.popcount() == 2);
  CHECK(reverse_mask(r) == m);
}

TEST_CASE("is_t0 agrees with the reference predicate on every 4-strand mask") {
  UpperMask m(4);
  for (uint64_t bits = 0; bits < (1ull << 6); ++bits) {
    m.set_words({bits, 0});
    CHECK(is_t0(m) == reference_t0(m));
    CHECK(is_t0(m.to_matrix()) == reference_t0(m));
  }
}

TEST_CASE("find_t0_violation names a genuine offending triple") {
  UpperMask m(4);
  m.set(1, 4);
  int i = 0, j = 0, k = 0;
  REQUIRE(find_t0_violation(m.to_matrix(), i, j, k));
  CHECK(i < j);
  CHECK(j < k);
  CHECK(m.test(i, k));
  CHECK_FALSE(m.test(i, j));
  CHECK_FALSE(m.test(j, k));
  Matrix fine = UpperMask(4).to_matrix();
  CHECK_FALSE(find_t0_violation(fine, i, j, k));
}

TEST_CASE("count_t0 matches brute force on small boards") {
  for (int n = 1; n <= 5; ++n) CHECK(count_t0(n) == reference_count(n));
}

TEST_CASE("count_t0 matches the published table") {
  const uint64_t table[] = {1, 2, 7, 40, 357, 4824, 96428};
  for (int n = 1; n <= 7; ++n) CHECK(count_t0(n) == table[n - 1]);
}

TEST_CASE("enumerate_t0 yields each mask once, in ascending order") {
  std::vector<UpperMask> seen;
  enumerate_t0(5, [&](const UpperMask& m) { seen.push_back(m); });
  CHECK(seen.size() == 357);
  std::set<std::array<uint64_t, 2>> unique;
  for (size_t t = 0; t < seen.size(); ++t) {
    CHECK(reference_t0(seen[t]));
    unique.insert(seen[t].words());
    if (t) CHECK(seen[t - 1] < seen[t]);
  }
  CHECK(unique.size() == seen.size());
}

TEST_CASE("mask text form round trips") {
  UpperMask m(4);
  m.set(1, 2);
  m.set(2, 4);
  CHECK(mask_to_text(m) == "1-2,2-4");
  CHECK(mask_from_text("1-2,2-4", 4) == m);
  CHECK(mask_from_text("", 4).empty());
  CHECK(mask_to_text(UpperMask(4)) == "");
  CHECK_THROWS_AS(mask_from_text("2-1", 4), Error);
  CHECK_THROWS_AS(mask_from_text("1-5", 4), Error);
  CHECK_THROWS_AS(mask_from_text("1:2", 4), Error);
}

TEST_CASE("matrix json round trips") {
  Matrix m(2);
  m.at(1, 2) = 3;
  m.at(2, 1) = -1;
  Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK(back == m);
  CHECK_THROWS_AS(matrix_from_json("{"), Error);
  CHECK_THROWS_AS(matrix_from_json("{\"n\":2,\"entries\":[[0,1]]}"), Error);
}
