#include "braidmat/braid.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace braidmat {

namespace {

void check_letter(int pos, int n) {
  if (pos < 1 || pos > n - 1)
    throw Error(ErrorCode::OffsetOutOfRange,
                "crossing position " + std::to_string(pos) +
                    " out of range for " + std::to_string(n) + " strands");
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

// Depth-first search behind exact_word_search. The depth of a node equals the
// sum of its crossing counts, so (permutation, counts) determines the whole
// subtree below it and a state refuted once never needs expanding again.
struct ExactSearch {
  const Matrix& target;
  int n;
  uint64_t budget;
  uint64_t nodes = 0;
  size_t want_len = 0;
  Matrix counts;
  std::vector<int> perm;
  std::vector<int> letters;
  bool memo_ok;
  std::set<std::array<uint64_t, 3>> dead;

  ExactSearch(const Matrix& t, uint64_t b)
      : target(t),
        n(t.n()),
        budget(b),
        counts(t.n()),
        perm(identity_perm(t.n())) {
    int largest = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        want_len += static_cast<size_t>(target.at(i, j));
        largest = std::max(largest, target.at(i, j));
      }
    // The key packs the permutation into 4-bit digits and each pair count
    // into 2 bits, which fits three words when n <= 11 and entries stay <= 3.
    memo_ok = n <= 11 && largest <= 3;
  }

  std::array<uint64_t, 3> state_key() const {
    std::array<uint64_t, 3> key{0, 0, 0};
    for (int t = 0; t < n; ++t)
      key[0] = key[0] * 16 + static_cast<uint64_t>(perm[t] - 1);
    int slot = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++slot)
        key[1 + slot / 32] |=
            static_cast<uint64_t>(counts.at(i, j)) << (2 * (slot % 32));
    return key;
  }

  // A pair with no crossings left can never uncross, and each inverted pair
  // needs at least one more letter; both give cheap cutoffs.
  int pending_inversions() const {
    int pending = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (perm[a] < perm[b]) continue;
        int i = perm[b], j = perm[a];
        if (counts.at(i, j) >= target.at(i, j)) return -1;
        ++pending;
      }
    return pending;
  }

  bool run() {
    if (letters.size() == want_len) {
      for (int t = 0; t < n; ++t)
        if (perm[t] != t + 1) return false;
      return true;
    }
    if (++nodes > budget) return false;
    int inv = pending_inversions();
    if (inv < 0 || static_cast<size_t>(inv) > want_len - letters.size())
      return false;
    std::array<uint64_t, 3> key{};
    if (memo_ok) {
      key = state_key();
      if (dead.count(key)) return false;
    }
    for (int p = 1; p <= n - 1; ++p) {
      int i = std::min(perm[p - 1], perm[p]);
      int j = std::max(perm[p - 1], perm[p]);
      if (counts.at(i, j) >= target.at(i, j)) continue;
      counts.at(i, j) += 1;
      counts.at(j, i) += 1;
      std::swap(perm[p - 1], perm[p]);
      letters.push_back(p);
      if (run()) return true;
      letters.pop_back();
      std::swap(perm[p - 1], perm[p]);
      counts.at(i, j) -= 1;
      counts.at(j, i) -= 1;
      if (nodes > budget) return false;
    }
    // Only a fully explored subtree proves the state dead; the budget
    // bailouts above return before reaching this line.
    if (memo_ok) dead.insert(key);
    return false;
  }
};

}  // namespace

WordSearchOutcome exact_word_search(const Matrix& target, uint64_t node_budget) {
  check_strand_count(target.n());
  WordSearchOutcome out;
  // Pure-word crossing counts are symmetric, even, and zero on the diagonal;
  // any other target has no solution and the search is not worth starting.
  for (int i = 1; i <= target.n(); ++i) {
    if (target.at(i, i) != 0) return out;
    for (int j = i + 1; j <= target.n(); ++j) {
      int v = target.at(i, j);
      if (v < 0 || v != target.at(j, i) || v % 2 != 0) return out;
    }
  }
  ExactSearch search(target, node_budget);
  if (search.run()) out.word = ProjectionWord{target.n(), search.letters};
  out.nodes = search.nodes;
  return out;
}

void validate(const ProjectionWord& w) {
  check_strand_count(w.n);
  for (int k : w.letters) check_letter(k, w.n);
}

void validate(const DiagramWord& d) {
  check_strand_count(d.n);
  for (const auto& l : d.letters) check_letter(l.pos, d.n);
}

std::vector<int> permutation(const ProjectionWord& w) {
  validate(w);
  std::vector<int> p = identity_perm(w.n);
  for (int k : w.letters) std::swap(p[k - 1], p[k]);
  return p;
}

bool is_pure(const ProjectionWord& w) {
  std::vector<int> p = permutation(w);
  for (int i = 0; i < w.n; ++i)
    if (p[i] != i + 1) return false;
  return true;
}

Matrix cn_matrix(const ProjectionWord& w) {
  validate(w);
  Matrix m(w.n);
  std::vector<int> p = identity_perm(w.n);
  for (int k : w.letters) {
    int a = p[k - 1], b = p[k];
    m.at(a, b) += 1;
    m.at(b, a) += 1;
    std::swap(p[k - 1], p[k]);
  }
  return m;
}

Matrix ou_matrix(const DiagramWord& d) {
  validate(d);
  Matrix m(d.n);
  std::vector<int> p = identity_perm(d.n);
  for (const auto& l : d.letters) {
    int a = p[l.pos - 1], b = p[l.pos];  // a enters from the left
    if (l.over == OverFlag::LeftOver)
      m.at(a, b) += 1;
    else
      m.at(b, a) += 1;
    std::swap(p[l.pos - 1], p[l.pos]);
  }
  return m;
}

Matrix crossing_matrix(const DiagramWord& d) {
  validate(d);
  Matrix m(d.n);
  std::vector<int> p = identity_perm(d.n);
  for (const auto& l : d.letters) {
    int a = p[l.pos - 1], b = p[l.pos];
    // LeftOver is the positive crossing: the over strand is the left one.
    if (l.over == OverFlag::LeftOver)
      m.at(a, b) += 1;
    else
      m.at(b, a) -= 1;
    std::swap(p[l.pos - 1], p[l.pos]);
  }
  return m;
}

ProjectionWord forget(const DiagramWord& d) {
  validate(d);
  ProjectionWord w{d.n, {}};
  w.letters.reserve(d.letters.size());
  for (const auto& l : d.letters) w.letters.push_back(l.pos);
  return w;
}

DiagramWord as_positive_diagram(const ProjectionWord& w) {
  validate(w);
  DiagramWord d{w.n, {}};
  d.letters.reserve(w.letters.size());
  for (int k : w.letters) d.letters.push_back({k, OverFlag::LeftOver});
  return d;
}

ProjectionWord concat(const ProjectionWord& a, const ProjectionWord& b) {
  if (a.n != b.n)
    throw Error(ErrorCode::MismatchedStrandCount,
                "cannot concatenate words on different strand counts");
  ProjectionWord w{a.n, a.letters};
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

ProjectionWord mirror(const ProjectionWord& w) {
  validate(w);
  ProjectionWord m{w.n, {}};
  m.letters.reserve(w.letters.size());
  for (int k : w.letters) m.letters.push_back(w.n - k);
  return m;
}

ProjectionWord embed(const ProjectionWord& w, int n, int offset) {
  validate(w);
  check_strand_count(n);
  if (offset < 1 || w.n + offset - 1 > n)
    throw Error(ErrorCode::OffsetOutOfRange,
                "embedding offset does not fit the target strand count");
  ProjectionWord e{n, {}};
  e.letters.reserve(w.letters.size());
  for (int k : w.letters) e.letters.push_back(k + offset - 1);
  return e;
}

ProjectionWord parse_projection(const std::string& text, int n) {
  ProjectionWord w{n, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.letters.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad word token '" + tok + "'");
    }
  }
  validate(w);
  return w;
}

DiagramWord parse_diagram(const std::string& text, int n) {
  DiagramWord d{n, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
      throw Error(ErrorCode::ParseError,
                  "diagram token '" + tok + "' must look like +2 or -3");
    try {
      size_t used = 0;
      int v = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument(tok);
      d.letters.push_back(
          {v, tok[0] == '+' ? OverFlag::LeftOver : OverFlag::RightOver});
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad diagram token '" + tok + "'");
    }
  }
  validate(d);
  return d;
}

std::string format_word(const ProjectionWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

std::string format_word(const DiagramWord& d) {
  std::string out;
  for (size_t i = 0; i < d.letters.size(); ++i) {
    if (i) out += ' ';
    out += d.letters[i].over == OverFlag::LeftOver ? '+' : '-';
    out += std::to_string(d.letters[i].pos);
  }
  return out;
}

}  // namespace braidmat
