#include "braidmat/realizer.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "braidmat/ladder.hpp"
#include "braidmat/matrix_kit.hpp"

namespace braidmat {

namespace {

// ---------------------------------------------------------------------------
// Piece catalog: everything the peeling layer knows how to cut off a mask in
// one bite. Formation descriptors (plain and mirrored) plus full rectangular
// blocks rows [a..b] x cols [b+1..d], optionally without their far corner.

struct Piece {
  UpperMask support;
  int rank = 0;  // family order, used to break popcount ties
  bool mirrored = false;
  bool rect = false;
  bool rect_omit = false;
  int ra = 0, rb = 0, rd = 0;  // rect rows a..b, cols b+1..d
  FormationDescriptor desc;
};

std::vector<int> rect_word_letters(int a, int b, int d, bool omit) {
  const int p = b - a + 1;
  std::vector<int> delta;
  for (int t = 0; t < p; ++t) {
    int lo = b - t;
    int hi = d - 1 - t;
    if (omit && t == p - 1) hi = d - p - 1;  // shorten row a, dropping (a,d)
    for (int q = lo; q <= hi; ++q) delta.push_back(q);
  }
  std::vector<int> w = delta;
  w.insert(w.end(), delta.rbegin(), delta.rend());
  return w;
}

UpperMask rect_support(int n, int a, int b, int d, bool omit) {
  UpperMask m(n);
  for (int i = a; i <= b; ++i)
    for (int j = b + 1; j <= d; ++j)
      if (!(omit && i == a && j == d)) m.set(i, j);
  return m;
}

std::string piece_detail(const Piece& p) {
  if (p.rect) {
    std::string s = "rect " + std::to_string(p.ra) + ".." + std::to_string(p.rb) +
                    " x " + std::to_string(p.rb + 1) + ".." +
                    std::to_string(p.rd);
    if (p.rect_omit) s += " -corner";
    return s;
  }
  std::string s = format_descriptor(p.desc);
  if (p.mirrored) s += " mirrored";
  return s;
}

ProjectionWord piece_word(const Piece& p, int n) {
  if (p.rect)
    return {n, rect_word_letters(p.ra, p.rb, p.rd, p.rect_omit)};
  ProjectionWord w = realize(p.desc);
  if (p.mirrored) w = mirror(w);
  return w;
}

const std::vector<Piece>& piece_catalog(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::vector<Piece>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Piece> out;
  if (n <= 9) {
    UpperMask full(n);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) full.set(i, j);
    for (const FormationDescriptor& f : detect(full)) {
      Piece p;
      p.support = formation_matrix(f);
      p.rank = static_cast<int>(f.family);
      p.desc = f;
      out.push_back(p);
      Piece q = p;
      q.support = reverse_mask(p.support);
      q.mirrored = true;
      if (q.support != p.support) out.push_back(q);
    }
  }
  const int rect_rank = 9;
  for (int a = 1; a + 1 <= n; ++a)
    for (int b = a + 1; b + 2 <= n; ++b)
      for (int d = b + 2; d <= n; ++d)
        for (bool omit : {false, true}) {
          Piece p;
          p.support = rect_support(n, a, b, d, omit);
          p.rank = rect_rank + (omit ? 1 : 0);
          p.rect = true;
          p.rect_omit = omit;
          p.ra = a;
          p.rb = b;
          p.rd = d;
          out.push_back(p);
        }
  std::stable_sort(out.begin(), out.end(), [](const Piece& x, const Piece& y) {
    if (x.support.popcount() != y.support.popcount())
      return x.support.popcount() > y.support.popcount();
    if (x.rank != y.rank) return x.rank < y.rank;
    if (x.mirrored != y.mirrored) return !x.mirrored;
    return x.support < y.support;
  });
  return cache.emplace(n, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Constructive realization of a T0 mask without any search: window shrinking,
// bandwidth-2 chains, and formation peeling, memoized per (n, bits) including
// failures.

struct FastResult {
  ProjectionWord word;
  DecompositionNode tree;
};

struct MemoKey {
  int n = 0;
  std::array<uint64_t, 2> bits{0, 0};
  bool operator==(const MemoKey& o) const {
    return n == o.n && bits == o.bits;
  }
};

struct MemoKeyHash {
  size_t operator()(const MemoKey& k) const {
    uint64_t h = k.bits[0] * 0x9e3779b97f4a7c15ULL;
    h ^= k.bits[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<uint64_t>(k.n) * 1099511628211ULL;
    return static_cast<size_t>(h);
  }
};

std::optional<FastResult> realize_fast(const UpperMask& mask);

std::pair<int, int> support_span(const UpperMask& mask) {
  int lo = mask.n() + 1, hi = 0;
  for (auto [i, j] : mask.pairs()) {
    lo = std::min(lo, i);
    hi = std::max(hi, j);
  }
  return {lo, hi};
}

UpperMask shift_to_window(const UpperMask& mask, int lo, int hi) {
  UpperMask sub(hi - lo + 1);
  for (auto [i, j] : mask.pairs()) sub.set(i - lo + 1, j - lo + 1);
  return sub;
}

int bandwidth(const UpperMask& mask) {
  int w = 0;
  for (auto [i, j] : mask.pairs()) w = std::max(w, j - i);
  return w;
}

// Bandwidth-2 masks assemble directly: every (i,i+2) bit leans on an adjacent
// (i,i+1) bit (T0 guarantees one exists), giving a list of disjoint local
// pieces whose words concatenate.
FastResult assemble_chain(const UpperMask& mask) {
  const int n = mask.n();
  std::vector<char> a(n + 2, 0), b(n + 2, 0);
  for (auto [i, j] : mask.pairs()) {
    if (j == i + 1) a[i] = 1;
    if (j == i + 2) b[i] = 1;
  }
  // pick[i]: index of the adjacent bit that supports (i,i+2).
  std::vector<int> pick(n + 2, 0);
  for (int i = 1; i + 2 <= n; ++i)
    if (b[i]) pick[i] = a[i] ? i : i + 1;

  FastResult out;
  out.word.n = n;
  out.tree = {"chain", "", mask, {}};
  auto add = [&](std::vector<int> letters, const std::string& what,
                 const UpperMask& sup) {
    out.word.letters.insert(out.word.letters.end(), letters.begin(),
                            letters.end());
    out.tree.children.push_back({"piece", what, sup, {}});
  };
  for (int s = 1; s + 1 <= n; ++s) {
    if (!a[s]) continue;
    const bool from_above = s >= 2 && b[s - 1] && pick[s - 1] == s;
    const bool from_below = b[s] && pick[s] == s;
    UpperMask sup(n);
    sup.set(s, s + 1);
    if (from_above && from_below) {
      sup.set(s - 1, s + 1);
      sup.set(s, s + 2);
      add({s, s - 1, s - 1, s + 1, s + 1, s},
          "fused(" + std::to_string(s - 1) + ".." + std::to_string(s + 2) + ")",
          sup);
    } else if (from_below) {
      sup.set(s, s + 2);
      add({s, s + 1, s + 1, s},
          "r(" + std::to_string(s) + "," + std::to_string(s + 2) + ")", sup);
    } else if (from_above) {
      sup.set(s - 1, s + 1);
      add({s, s - 1, s - 1, s},
          "c(" + std::to_string(s - 1) + "," + std::to_string(s + 1) + ")",
          sup);
    } else {
      add({s, s}, "hook(" + std::to_string(s) + ")", sup);
    }
  }
  return out;
}

std::optional<FastResult> realize_fast_impl(const UpperMask& mask) {
  const int n = mask.n();
  if (mask.empty()) return FastResult{{n, {}}, {"empty", "", mask, {}}};
  auto [lo, hi] = support_span(mask);
  if (hi - lo + 1 < n) {
    auto inner = realize_fast(shift_to_window(mask, lo, hi));
    if (!inner) return std::nullopt;
    FastResult out;
    out.word = embed(inner->word, n, lo);
    out.tree = {"window",
                "rows " + std::to_string(lo) + ".." + std::to_string(hi), mask,
                {inner->tree}};
    return out;
  }
  if (bandwidth(mask) <= 2) return assemble_chain(mask);
  for (const Piece& p : piece_catalog(n)) {
    if (!p.support.is_subset_of(mask)) continue;
    UpperMask rem = mask.minus(p.support);
    if (!is_t0(rem)) continue;
    auto rest = realize_fast(rem);
    if (!rest) continue;
    ProjectionWord pw;
    try {
      pw = piece_word(p, n);
    } catch (const Error&) {
      continue;
    }
    FastResult out;
    out.word = concat(pw, rest->word);
    out.tree = {"piece", piece_detail(p), p.support, {rest->tree}};
    return out;
  }
  return std::nullopt;
}

std::optional<FastResult> realize_fast(const UpperMask& mask) {
  static std::mutex mu;
  static std::unordered_map<MemoKey, std::optional<FastResult>, MemoKeyHash>
      memo;
  MemoKey key{mask.n(), mask.words()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto result = realize_fast_impl(mask);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, std::move(result)).first->second;
}

MaskRealization realize_rec(const UpperMask& mask, uint64_t budget) {
  const int n = mask.n();
  if (mask.empty())
    return {{n, {}}, {"empty", "", mask, {}}, 0};
  auto [lo, hi] = support_span(mask);
  if (hi - lo + 1 < n) {
    MaskRealization inner = realize_rec(shift_to_window(mask, lo, hi), budget);
    MaskRealization out;
    out.word = embed(inner.word, n, lo);
    out.tree = {"window",
                "rows " + std::to_string(lo) + ".." + std::to_string(hi), mask,
                {inner.tree}};
    out.nodes = inner.nodes;
    return out;
  }
  if (auto fast = realize_fast(mask))
    return {fast->word, fast->tree, 0};
  SearchResult sr = search_w_form(b_ladder_of(mask), budget);
  if (sr.status == SearchStatus::Found) {
    MaskRealization out;
    out.word = to_projection_word(sr.w_ladder);
    out.tree = {"search", "nodes=" + std::to_string(sr.nodes), mask, {}};
    out.nodes = sr.nodes;
    return out;
  }
  WordSearchOutcome ws = exact_word_search(mask.to_matrix(), budget);
  if (ws.word) {
    MaskRealization out;
    out.word = *ws.word;
    out.tree = {"word-dfs", "nodes=" + std::to_string(ws.nodes), mask, {}};
    out.nodes = sr.nodes + ws.nodes;
    return out;
  }
  throw Error(ErrorCode::RealizationFailed,
              "no realization found within the node budget");
}

// Replaces the first crossing of each pair needing 2m > 2 crossings with
// 2m-1 consecutive crossings at the same position: same permutation flow,
// pair count raised from 2 to 2m.
ProjectionWord inflate(const ProjectionWord& base, const Matrix& target) {
  ProjectionWord out{base.n, {}};
  std::vector<int> perm(base.n);
  std::iota(perm.begin(), perm.end(), 1);
  Matrix seen(base.n);
  for (int p : base.letters) {
    int a = perm[p - 1], b = perm[p];
    int i = std::min(a, b), j = std::max(a, b);
    int reps = 1;
    if (seen.at(i, j) == 0 && target.at(i, j) > 2)
      reps = target.at(i, j) - 1;
    for (int r = 0; r < reps; ++r) out.letters.push_back(p);
    seen.at(i, j) += reps;
    std::swap(perm[p - 1], perm[p]);  // reps is odd
  }
  return out;
}

void require_t0(const Matrix& m, ErrorCode code) {
  int i, j, k;
  if (find_t0_violation(m, i, j, k))
    throw Error(code,
                "triple (" + std::to_string(i) + "," + std::to_string(j) +
                    "," + std::to_string(k) + ") violates the zero condition",
                i, j, k);
}

}  // namespace

std::string format_decomposition(const DecompositionNode& node) {
  std::string s = node.kind;
  if (!node.detail.empty()) s += "[" + node.detail + "]";
  if (!node.children.empty()) {
    s += "(";
    for (size_t t = 0; t < node.children.size(); ++t) {
      if (t) s += " + ";
      s += format_decomposition(node.children[t]);
    }
    s += ")";
  }
  return s;
}

MaskRealization realize_mask(const UpperMask& mask, uint64_t budget) {
  check_strand_count(mask.n());
  require_t0(mask.to_matrix(), ErrorCode::NotT0);
  if (budget == 0) budget = default_search_budget();
  MaskRealization out = realize_rec(mask, budget);
  if (!is_pure(out.word) || cn_matrix(out.word) != mask.to_matrix())
    throw Error(ErrorCode::RealizationFailed,
                "constructed word does not match its target");
  return out;
}

DecompositionNode peel_decompose(const UpperMask& mask, uint64_t budget) {
  return realize_mask(mask, budget).tree;
}

Certificate realize_cn(const Matrix& m, uint64_t budget) {
  check_strand_count(m.n());
  if (!m.is_zero_diagonal())
    throw Error(ErrorCode::NonZeroDiagonal, "diagonal entries must be zero");
  if (!m.is_symmetric() || !m.is_non_negative() || !m.all_even())
    throw Error(ErrorCode::InvalidParameters,
                "target must be symmetric with even non-negative entries");
  require_t0(m, ErrorCode::NotT0);
  MaskRealization mr = realize_mask(m02(m), budget);
  Certificate c;
  c.kind = Certificate::Kind::CN;
  c.target = m;
  c.word = inflate(mr.word, m);
  c.method = format_decomposition(mr.tree);
  c.nodes = mr.nodes;
  return c;
}

Certificate realize_ou(const Matrix& m, uint64_t budget) {
  check_strand_count(m.n());
  if (!m.is_zero_diagonal())
    throw Error(ErrorCode::NonZeroDiagonal, "diagonal entries must be zero");
  if (!m.is_non_negative())
    throw Error(ErrorCode::InvalidParameters, "entries must be non-negative");
  Matrix s = m + m.transpose();
  if (!s.all_even())
    throw Error(ErrorCode::SumNotT0,
                "pair totals M(i,j)+M(j,i) must all be even");
  require_t0(s, ErrorCode::SumNotT0);
  MaskRealization mr = realize_mask(m02(s), budget);
  ProjectionWord w = inflate(mr.word, s);

  // The first M(i,j) crossings of each pair put i on top, the rest put j.
  DiagramWord d{m.n(), {}};
  std::vector<int> perm(m.n());
  std::iota(perm.begin(), perm.end(), 1);
  Matrix used(m.n());
  for (int p : w.letters) {
    int a = perm[p - 1], b = perm[p];
    int i = std::min(a, b), j = std::max(a, b);
    int over = used.at(i, j) < m.at(i, j) ? i : j;
    d.letters.push_back(
        {p, over == a ? OverFlag::LeftOver : OverFlag::RightOver});
    used.at(i, j) += 1;
    std::swap(perm[p - 1], perm[p]);
  }
  Certificate c;
  c.kind = Certificate::Kind::OU;
  c.target = m;
  c.diagram = d;
  c.method = format_decomposition(mr.tree);
  c.nodes = mr.nodes;
  return c;
}

Certificate realize_crossing(const Matrix& m, uint64_t budget) {
  check_strand_count(m.n());
  if (!m.is_zero_diagonal())
    throw Error(ErrorCode::NonZeroDiagonal, "diagonal entries must be zero");
  if (!m.is_symmetric() || !m.is_non_negative())
    throw Error(ErrorCode::InvalidParameters,
                "target must be symmetric and non-negative");
  require_t0(m, ErrorCode::NotT0);
  Matrix doubled = m + m;
  MaskRealization mr = realize_mask(m02(m), budget);
  ProjectionWord w = inflate(mr.word, doubled);
  Certificate c;
  c.kind = Certificate::Kind::Crossing;
  c.target = m;
  c.diagram = as_positive_diagram(w);
  c.method = format_decomposition(mr.tree);
  c.nodes = mr.nodes;
  return c;
}

bool verify_certificate(Certificate& c) {
  c.verified = false;
  try {
    switch (c.kind) {
      case Certificate::Kind::CN:
        c.verified = is_pure(c.word) && cn_matrix(c.word) == c.target;
        break;
      case Certificate::Kind::OU:
        c.verified =
            is_pure(forget(c.diagram)) && ou_matrix(c.diagram) == c.target;
        break;
      case Certificate::Kind::Crossing:
        c.verified = is_pure(forget(c.diagram)) &&
                     ou_matrix(c.diagram) == c.target &&
                     crossing_matrix(c.diagram) == c.target;
        break;
    }
  } catch (const Error&) {
    c.verified = false;
  }
  return c.verified;
}

TheoremReport verify_theorem(int n, int workers, uint64_t budget) {
  check_strand_count(n);
  TheoremReport rep;
  rep.n = n;
  std::vector<UpperMask> masks;
  enumerate_t0(n, [&masks](const UpperMask& m) { masks.push_back(m); });
  rep.total = masks.size();
  rep.rows.resize(masks.size());
  workers = std::max(1, workers);

  auto work = [&](int wi) {
    for (size_t t = static_cast<size_t>(wi); t < masks.size();
         t += static_cast<size_t>(workers)) {
      TheoremRow& row = rep.rows[t];
      row.mask = masks[t];
      auto start = std::chrono::steady_clock::now();
      try {
        Certificate c = realize_cn(masks[t].to_matrix(), budget);
        row.method = c.method;
        row.word_length = c.word.letters.size();
        row.nodes = c.nodes;
        row.verified = verify_certificate(c);
      } catch (const Error& e) {
        row.method = std::string("error: ") + error_code_name(e.code());
        row.verified = false;
      }
      row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int wi = 0; wi < workers; ++wi) pool.emplace_back(work, wi);
    for (auto& th : pool) th.join();
  }
  for (const TheoremRow& row : rep.rows) {
    if (row.verified) ++rep.verified_count;
    rep.total_micros += row.micros;
    rep.max_micros = std::max(rep.max_micros, row.micros);
  }
  return rep;
}

}  // namespace braidmat
