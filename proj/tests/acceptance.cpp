// Acceptance checks for the toolkit's headline guarantees. Each criterion
// prints one PASS or FAIL line on stdout and exits nonzero on failure. Run
// with the criterion number (1..8) as the only argument; the timing bounds
// assume a single core and the default search budget.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidmat/formations.hpp"
#include "braidmat/ladder.hpp"
#include "braidmat/matrix_kit.hpp"
#include "braidmat/realizer.hpp"
#include "braidmat/tstructure.hpp"

using namespace braidmat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%d] %s %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
  return ok ? 0 : 1;
}

std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1

int criterion_counts() {
  const uint64_t expect[8] = {0, 1, 2, 7, 40, 357, 4824, 96428};
  bool ok = true;
  double small = 0, large = 0;
  for (int n = 1; n <= 7; ++n) {
    Clock::time_point t = Clock::now();
    uint64_t got = count_t0(n);
    (n <= 6 ? small : large) += seconds_since(t);
    if (got != expect[n]) ok = false;
  }
  ok = ok && small < 5.0 && large < 60.0;
  std::ostringstream d;
  d << "pair-mask counts match through n=7; n<=6 in " << fixed1(small)
    << "s, n=7 in " << fixed1(large) << "s";
  return report(1, ok, d.str());
}

// ---------------------------------------------------------------- criterion 2

int criterion_full_verification() {
  bool ok = true;
  std::ostringstream d;

  TheoremReport r4 = verify_theorem(4);
  TheoremReport r5 = verify_theorem(5);
  ok = ok && r4.total == 40 && r4.all_verified();
  ok = ok && r5.total == 357 && r5.all_verified();

  Clock::time_point t = Clock::now();
  TheoremReport r6 = verify_theorem(6);
  double sweep = seconds_since(t);
  ok = ok && r6.total == 4824 && r6.all_verified() && sweep < 600.0;

  // Recheck from scratch: realize every matrix again and confirm the witness
  // with the word primitives alone, trusting nothing from the report.
  uint64_t confirmed = 0, total = 0;
  enumerate_t0(6, [&](const UpperMask& mask) {
    ++total;
    try {
      Certificate c = realize_cn(mask.to_matrix());
      if (is_pure(c.word) && cn_matrix(c.word) == mask.to_matrix())
        ++confirmed;
    } catch (const Error&) {
    }
  });
  ok = ok && total == 4824 && confirmed == 4824;

  d << r4.verified_count << "/40, " << r5.verified_count << "/357, "
    << r6.verified_count << "/4824 verified, sweep " << fixed1(sweep)
    << "s; independent recheck " << confirmed << "/" << total;
  return report(2, ok, d.str());
}

// ---------------------------------------------------------------- criterion 3

int criterion_rewrites() {
  bool ok = true;
  long applied = 0;
  std::map<std::pair<int, bool>, long> tally;

  auto run_one = [&](const LadderDiagram& d, const Move& m) {
    LadderDiagram after = apply_move(d, m);
    if (!(eval(after) == eval(d))) ok = false;
    ++tally[{static_cast<int>(m.id), m.forward}];
    ++applied;
    return after;
  };

  // One fixture per rule; applying it and then its inverse covers both
  // directions of all nine rules regardless of what the random soup hits.
  const auto B = LadderEdge::Black;
  const auto W = LadderEdge::White;
  const std::vector<std::pair<LadderDiagram, Move>> seeds = {
      {{2, {B(1, 2)}}, {MoveId::L1, 0, true}},
      {{4, {B(1, 4), B(2, 3)}}, {MoveId::L2, 0, true}},
      {{4, {W(1), W(3)}}, {MoveId::L3, 0, true}},
      {{3, {W(1), W(2), W(1)}}, {MoveId::L4, 0, true}},
      {{4, {B(1, 2), W(3)}}, {MoveId::L5, 0, true}},
      {{3, {B(1, 3), W(1)}}, {MoveId::L6, 0, true}},
      {{3, {W(1), B(1, 3)}}, {MoveId::L7, 0, true}},
      {{3, {B(1, 3), W(2)}}, {MoveId::L8, 0, true}},
      {{3, {W(2), B(1, 3)}}, {MoveId::L9, 0, true}},
  };
  for (const auto& [d, m] : seeds) {
    LadderDiagram after = run_one(d, m);
    run_one(after, inverse_of(d, m));
  }

  std::mt19937 rng(77);
  for (int iter = 0; iter < 200000 && applied < 10000; ++iter) {
    LadderDiagram d;
    d.n = 2 + static_cast<int>(rng() % 6);
    int len = 1 + static_cast<int>(rng() % 12);
    for (int e = 0; e < len; ++e) {
      if (d.n > 2 && rng() % 2) {
        int i = 1 + static_cast<int>(rng() % (d.n - 1));
        int j = i + 1 + static_cast<int>(rng() % (d.n - i));
        d.edges.push_back(B(i, j));
      } else {
        d.edges.push_back(W(1 + static_cast<int>(rng() % (d.n - 1))));
      }
    }
    for (const Move& m : legal_moves(d)) run_one(d, m);
  }

  bool covered = true;
  for (int id = 1; id <= 9; ++id)
    for (bool fwd : {false, true})
      if (tally[{id, fwd}] == 0) covered = false;
  ok = ok && covered && applied >= 10000;

  std::ostringstream d;
  d << applied << " rewrites applied, value preserved everywhere, "
    << "all nine rules hit in both directions";
  return report(3, ok, d.str());
}

// ---------------------------------------------------------------- criterion 4

// The full parameter grids, including flag settings the canonical form folds
// away; realization must accept every admissible descriptor as given.
void each_raw_descriptor(int n, const std::function<void(const FormationDescriptor&)>& sink) {
  auto consider = [&](const FormationDescriptor& f) {
    if (admissible(f)) sink(f);
  };
  FormationDescriptor f;
  f.n = n;

  f.family = Family::R;
  for (f.k = 1; f.k < n; ++f.k)
    for (f.J = f.k + 1; f.J <= n; ++f.J) consider(f);
  f = {};
  f.n = n;

  f.family = Family::C;
  for (f.l = 2; f.l <= n; ++f.l)
    for (f.I = 1; f.I <= f.l - 1; ++f.I) consider(f);
  f = {};
  f.n = n;

  f.family = Family::RC;
  for (f.k = 1; f.k < n; ++f.k)
    for (f.l = f.k + 2; f.l <= n; ++f.l)
      for (f.J = f.k + 1; f.J <= f.l - 1; ++f.J)
        for (f.I = f.k + 1; f.I <= std::min(f.J + 1, f.l - 1); ++f.I)
          consider(f);
  f = {};
  f.n = n;

  f.family = Family::Alpha;
  for (f.k = 1; f.k < n; ++f.k)
    for (f.l = f.k + 1; f.l <= n; ++f.l)
      for (f.m = f.l; f.m <= n; ++f.m)
        for (int a1 = 0; a1 < 2; ++a1)
          for (int a2 = 0; a2 < 2; ++a2) {
            f.a1 = a1 ? AlphaKind::RC : AlphaKind::C;
            f.a2 = a2 ? AlphaKind::RC : AlphaKind::R;
            std::vector<std::pair<int, int>> first{{0, 0}}, second{{0, 0}};
            if (a1) {
              first.clear();
              for (int J = f.k + 1; J <= f.l - 1; ++J)
                for (int I = f.k + 1; I <= std::min(J + 1, f.l - 1); ++I)
                  first.push_back({J, I});
            }
            if (a2) {
              second.clear();
              for (int J2 = f.l; J2 <= f.m - 1; ++J2)
                for (int I2 = f.l; I2 <= std::min(J2 + 1, f.m - 1); ++I2)
                  second.push_back({J2, I2});
            }
            for (auto [J, I] : first)
              for (auto [J2, I2] : second) {
                f.J = J;
                f.I = I;
                f.J2 = J2;
                f.I2 = I2;
                consider(f);
              }
            f.J = f.I = f.J2 = f.I2 = 0;
          }
  f = {};
  f.n = n;

  f.family = Family::CSharpR;
  for (f.k = 1; f.k < n; ++f.k)
    for (f.l = f.k + 2; f.l <= n; ++f.l)
      for (f.m = f.l + 1; f.m <= n; ++f.m)
        for (int s = 0; s < 2; ++s) {
          f.second = s;
          consider(f);
        }
  f = {};
  f.n = n;

  f.family = Family::H;
  for (f.k = 1; f.k < n; ++f.k)
    for (f.m = f.k + 1; f.m < n; ++f.m)
      for (f.l = f.m + 2; f.l <= n; ++f.l)
        for (int bits = 0; bits < 64; ++bits) {
          f.f_km = bits & 1;
          f.f_m1l = bits & 2;
          f.f_a = bits & 4;
          f.f_b = bits & 8;
          f.ext_top = bits & 16;
          f.ext_bottom = bits & 32;
          consider(f);
        }
  f = {};
  f.n = n;

  for (Family fam : {Family::L1, Family::L2, Family::L3}) {
    f.family = fam;
    const int span = fam == Family::L1 ? 3 : 4;
    const int ext_bits = fam == Family::L1 ? 32 : 8;
    for (f.k = 1; f.k < n; ++f.k)
      for (f.l = f.k + span; f.l <= n; ++f.l)
        for (int bits = 0; bits < ext_bits; ++bits) {
          f.flag_top = bits & 1;
          f.flag_bottom = bits & 2;
          f.omit_kl = bits & 4;
          f.ext_top = fam == Family::L1 && (bits & 8);
          f.ext_bottom = fam == Family::L1 && (bits & 16);
          consider(f);
        }
    f = {};
    f.n = n;
  }
}

int flag_bits(const FormationDescriptor& f) {
  int bits = 0;
  if (f.f_km) bits |= 1;
  if (f.f_m1l) bits |= 2;
  if (f.f_a) bits |= 4;
  if (f.f_b) bits |= 8;
  if (f.ext_top) bits |= 16;
  if (f.ext_bottom) bits |= 32;
  if (f.flag_top) bits |= 64;
  if (f.flag_bottom) bits |= 128;
  if (f.omit_kl) bits |= 256;
  if (f.second) bits |= 512;
  if (f.a1 == AlphaKind::RC) bits |= 1024;
  if (f.a2 == AlphaKind::RC) bits |= 2048;
  return bits;
}

int criterion_formations() {
  long instances = 0, failures = 0;
  std::map<Family, std::set<int>> combos;
  for (int n = 1; n <= 9; ++n) {
    each_raw_descriptor(n, [&](const FormationDescriptor& f) {
      ++instances;
      combos[f.family].insert(flag_bits(f));
      try {
        ProjectionWord w = realize(f);
        if (!is_pure(w) || !(cn_matrix(w) == formation_matrix(f).to_matrix()))
          ++failures;
      } catch (const Error&) {
        ++failures;
      }
    });
  }
  // Every optional-cell combination must actually have been exercised, not
  // merely enumerated: 64 for the hook family, 32/8/8 for the ladders, both
  // corner variants, and all four fusion kind pairs.
  bool full_grid = combos[Family::H].size() == 64 &&
                   combos[Family::L1].size() == 32 &&
                   combos[Family::L2].size() == 8 &&
                   combos[Family::L3].size() == 8 &&
                   combos[Family::CSharpR].size() == 2 &&
                   combos[Family::Alpha].size() == 4 &&
                   combos[Family::R].size() == 1 &&
                   combos[Family::C].size() == 1 &&
                   combos[Family::RC].size() == 1;
  bool ok = failures == 0 && full_grid && instances > 9000;
  std::ostringstream d;
  d << instances << " admissible placements through n=9 realized, " << failures
    << " mismatches, every flag combination covered";
  return report(4, ok, d.str());
}

// ---------------------------------------------------------------- criterion 5

int criterion_purity() {
  std::mt19937 rng(5);
  auto random_word = [&](int n, int maxlen) {
    ProjectionWord w{n, {}};
    int len = static_cast<int>(rng() % (maxlen + 1));
    for (int t = 0; t < len; ++t)
      w.letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
    return w;
  };
  auto palindrome = [](ProjectionWord w) {
    // w followed by its reversal undoes every position swap, so the result
    // is pure whatever w was.
    size_t len = w.letters.size();
    for (size_t t = 0; t < len; ++t)
      w.letters.push_back(w.letters[len - 1 - t]);
    return w;
  };

  bool ok = true;
  long words = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    ProjectionWord raw = random_word(n, 24);
    ProjectionWord pal = palindrome(random_word(n, 12));
    ok = ok && is_pure(raw) == cn_matrix(raw).all_even();
    ok = ok && is_pure(pal) && cn_matrix(pal).all_even();
    words += 2;
  }

  long products = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    ProjectionWord a = palindrome(random_word(n, 10));
    ProjectionWord b = palindrome(random_word(n, 10));
    ok = ok && cn_matrix(concat(a, b)) == cn_matrix(a) + cn_matrix(b);
    ++products;
  }

  std::ostringstream d;
  d << "purity matched evenness on " << words << " words; counts added over "
    << products << " pure concatenations";
  return report(5, ok, d.str());
}

// ------------------------------------------------------------ criteria 6 and 7

Matrix random_even_t0(std::mt19937& rng, int n, int half_max) {
  Matrix s(n);
  for (;;) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int v = 2 * static_cast<int>(rng() % (half_max + 1));
        s.at(i, j) = v;
        s.at(j, i) = v;
      }
    if (is_t0(s)) return s;
  }
}

int criterion_over_under() {
  std::mt19937 rng(6);
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    Matrix s = random_even_t0(rng, 6, 3);
    Matrix m(6);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        int over = static_cast<int>(rng() % (s.at(i, j) + 1));
        m.at(i, j) = over;
        m.at(j, i) = s.at(i, j) - over;
      }
    try {
      Certificate c = realize_ou(m);
      ok = ok && is_pure(forget(c.diagram)) && ou_matrix(c.diagram) == m;
    } catch (const Error&) {
      ok = false;
    }
  }
  return report(6, ok, "200 random over/under targets met exactly by pure diagrams");
}

int criterion_crossing() {
  std::mt19937 rng(7);
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    Matrix m(6);
    for (;;) {
      for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
          int v = static_cast<int>(rng() % 4);
          m.at(i, j) = v;
          m.at(j, i) = v;
        }
      if (is_t0(m)) break;
    }
    try {
      Certificate c = realize_crossing(m);
      bool positive = true;
      for (const auto& x : c.diagram.letters)
        positive = positive && x.over == OverFlag::LeftOver;
      ok = ok && positive && is_pure(forget(c.diagram)) &&
           crossing_matrix(c.diagram) == m && ou_matrix(c.diagram) == m;
    } catch (const Error&) {
      ok = false;
    }
  }
  return report(7, ok, "200 random signed targets met by all-positive pure diagrams");
}

// ---------------------------------------------------------------- criterion 8

GridGraph block_graph() {
  UpperMask mask(5);
  mask.set(1, 3);
  mask.set(1, 4);
  mask.set(2, 3);
  mask.set(2, 4);
  GridGraph g = empty_graph(mask);
  g.left[g.vertex_index(1, 4)] = g.vertex_index(1, 3);
  g.down[g.vertex_index(1, 4)] = g.vertex_index(2, 4);
  g.down[g.vertex_index(1, 3)] = g.vertex_index(2, 3);
  g.left[g.vertex_index(2, 4)] = g.vertex_index(2, 3);
  return g;
}

int criterion_grid_structure() {
  bool ok = true;

  // Path-count fixture: an isolated far bit cannot satisfy the length sum.
  UpperMask lone(4);
  lone.set(1, 4);
  ok = ok && !check_t_structure(empty_graph(lone)).c1;
  // Edge fixtures: the assembled block passes; dropping either closing edge
  // trips exactly the matching condition.
  ok = ok && check_t_structure(block_graph()).ok();
  GridGraph g2 = block_graph();
  g2.left[g2.vertex_index(2, 4)] = -1;
  ok = ok && !check_t_structure(g2).c2 && check_t_structure(g2).c3;
  GridGraph g3 = block_graph();
  g3.down[g3.vertex_index(1, 3)] = -1;
  ok = ok && !check_t_structure(g3).c3 && check_t_structure(g3).c2;

  long supports = 0, admitted = 0;
  std::set<std::array<uint64_t, 2>> seen;
  for (int n = 2; n <= 8; ++n) {
    UpperMask all(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) all.set(i, j);
    for (const auto& f : detect(all)) {
      UpperMask mask = formation_matrix(f);
      if (!seen.insert(mask.words()).second) continue;
      ++supports;
      auto g = find_t_structure(mask);
      if (g && check_t_structure(*g).ok()) ++admitted;
    }
  }
  ok = ok && supports >= 500 && admitted == supports;

  // Survey, reported but not asserted: among the 6-strand masks with at most
  // one set bit on each far diagonal, how many admit the grid structure, and
  // do all of those realize.
  uint64_t sparse = 0, with_structure = 0, realized = 0;
  enumerate_t0(6, [&](const UpperMask& mask) {
    for (int off = 3; off < 6; ++off) {
      int bits = 0;
      for (int i = 1; i + off <= 6; ++i) bits += mask.test(i, i + off);
      if (bits > 1) return;
    }
    ++sparse;
    auto g = find_t_structure(mask);
    if (!g) return;
    ++with_structure;
    try {
      MaskRealization r = realize_mask(mask, 0);
      if (is_pure(r.word) && cn_matrix(r.word) == mask.to_matrix())
        ++realized;
    } catch (const Error&) {
    }
  });
  std::printf(
      "[8] survey at n=6: %llu sparse-diagonal masks, %llu admit the grid "
      "structure, %llu of those realized\n",
      static_cast<unsigned long long>(sparse),
      static_cast<unsigned long long>(with_structure),
      static_cast<unsigned long long>(realized));

  std::ostringstream d;
  d << admitted << "/" << supports
    << " distinct placement supports admit the grid structure; edge fixtures "
       "trip exactly the matching conditions";
  return report(8, ok, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
    return 2;
  }
  switch (std::atoi(argv[1])) {
    case 1:
      return criterion_counts();
    case 2:
      return criterion_full_verification();
    case 3:
      return criterion_rewrites();
    case 4:
      return criterion_formations();
    case 5:
      return criterion_purity();
    case 6:
      return criterion_over_under();
    case 7:
      return criterion_crossing();
    case 8:
      return criterion_grid_structure();
    default:
      std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
      return 2;
  }
}
