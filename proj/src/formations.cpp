#include "braidmat/formations.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "braidmat/ladder.hpp"

namespace braidmat {

namespace {

void push_asc(std::vector<int>& w, int a, int b) {
  for (int p = a; p <= b; ++p) w.push_back(p);
}

void push_desc(std::vector<int>& w, int a, int b) {
  for (int p = a; p >= b; --p) w.push_back(p);
}

// An optional cell that coincides with a required one adds nothing; the flag
// is read as off so every flag combination stays meaningful.
FormationDescriptor canon(FormationDescriptor f) {
  if (f.family == Family::H) {
    if (f.m == f.k + 1) f.f_a = false;  // (m-1,m+1) is the required (k,m+1)
    if (f.l == f.m + 2) f.f_b = false;  // (m,m+2) is the required (m,l)
  }
  return f;
}

bool rc_bounds(int n, int k, int l, int J, int I) {
  return 1 <= k && l <= n && k + 1 <= J && J <= l - 1 && k + 1 <= I &&
         I <= l - 1 && I - J <= 1;
}

// Fields a family does not read must sit at their defaults, so equal supports
// coincide with equal descriptors.
bool others_default(const FormationDescriptor& f) {
  FormationDescriptor used;
  used.family = f.family;
  used.n = f.n;
  switch (f.family) {
    case Family::R:
      used.k = f.k;
      used.J = f.J;
      break;
    case Family::C:
      used.I = f.I;
      used.l = f.l;
      break;
    case Family::RC:
      used.k = f.k;
      used.l = f.l;
      used.J = f.J;
      used.I = f.I;
      break;
    case Family::Alpha:
      used.k = f.k;
      used.l = f.l;
      used.m = f.m;
      used.a1 = f.a1;
      used.a2 = f.a2;
      if (f.a1 == AlphaKind::RC) {
        used.J = f.J;
        used.I = f.I;
      }
      if (f.a2 == AlphaKind::RC) {
        used.J2 = f.J2;
        used.I2 = f.I2;
      }
      break;
    case Family::CSharpR:
      used.k = f.k;
      used.l = f.l;
      used.m = f.m;
      used.second = f.second;
      break;
    case Family::H:
      used.k = f.k;
      used.l = f.l;
      used.m = f.m;
      used.f_km = f.f_km;
      used.f_m1l = f.f_m1l;
      used.f_a = f.f_a;
      used.f_b = f.f_b;
      used.ext_top = f.ext_top;
      used.ext_bottom = f.ext_bottom;
      break;
    case Family::L1:
      used.k = f.k;
      used.l = f.l;
      used.flag_top = f.flag_top;
      used.flag_bottom = f.flag_bottom;
      used.ext_top = f.ext_top;
      used.ext_bottom = f.ext_bottom;
      used.omit_kl = f.omit_kl;
      break;
    case Family::L2:
    case Family::L3:
      used.k = f.k;
      used.l = f.l;
      used.flag_top = f.flag_top;
      used.flag_bottom = f.flag_bottom;
      used.omit_kl = f.omit_kl;
      break;
  }
  return f == used;
}

bool bounds_ok(const FormationDescriptor& f) {
  const int n = f.n, k = f.k, l = f.l, m = f.m;
  if (!others_default(f)) return false;
  switch (f.family) {
    case Family::R:
      return 1 <= k && k + 1 <= f.J && f.J <= n;
    case Family::C:
      return 1 <= f.I && f.I <= l - 1 && l <= n;
    case Family::RC:
      return rc_bounds(n, k, l, f.J, f.I);
    case Family::Alpha: {
      if (!(1 <= k && k < l && l <= n && l <= m && m <= n)) return false;
      if (f.a1 == AlphaKind::RC) {
        if (!rc_bounds(n, k, l, f.J, f.I)) return false;
      } else if (f.a1 != AlphaKind::C) {
        return false;
      }
      if (f.a2 == AlphaKind::RC) {
        if (!rc_bounds(n, l - 1, m, f.J2, f.I2)) return false;
      } else if (f.a2 != AlphaKind::R) {
        return false;
      }
      return true;
    }
    case Family::CSharpR:
      return 1 <= k && l - k >= 2 && m <= n && (f.second ? m - l >= 2 : m - l >= 1);
    case Family::H:
      if (!(1 <= k && k < m && m + 2 <= l && l <= n)) return false;
      if (f.ext_top && k < 2) return false;
      if (f.ext_bottom && l + 1 > n) return false;
      return true;
    case Family::L1:
      if (!(1 <= k && k + 3 <= l && l <= n)) return false;
      if (f.ext_top && k < 2) return false;
      if (f.ext_bottom && l + 1 > n) return false;
      return true;
    case Family::L2:
    case Family::L3:
      return 1 <= k && k + 4 <= l && l <= n;
  }
  return false;
}

// Support of the descriptor, assuming canonical form and bounds_ok.
UpperMask build_mask(const FormationDescriptor& f) {
  UpperMask m(f.n);
  const int k = f.k, l = f.l;
  switch (f.family) {
    case Family::R:
      for (int j = k + 1; j <= f.J; ++j) m.set(k, j);
      break;
    case Family::C:
      for (int i = f.I; i <= l - 1; ++i) m.set(i, l);
      break;
    case Family::RC:
      for (int j = k + 1; j <= f.J; ++j) m.set(k, j);
      for (int i = f.I; i <= l - 1; ++i) m.set(i, l);
      m.set(k, l);
      break;
    case Family::Alpha:
      if (f.a1 == AlphaKind::C) {
        for (int i = k; i <= l - 1; ++i) m.set(i, l);
      } else {
        for (int j = k + 1; j <= f.J; ++j) m.set(k, j);
        for (int i = f.I; i <= l - 1; ++i) m.set(i, l);
        m.set(k, l);
      }
      if (f.a2 == AlphaKind::R) {
        for (int j = l; j <= f.m; ++j) m.set(l - 1, j);
      } else {
        for (int j = l; j <= f.J2; ++j) m.set(l - 1, j);
        for (int i = f.I2; i <= f.m - 1; ++i) m.set(i, f.m);
        m.set(l - 1, f.m);
      }
      break;
    case Family::CSharpR:
      for (int i = k; i <= l - 1; ++i) m.set(i, l);
      for (int j = l; j <= f.m; ++j) m.set(l - 1, j);
      m.set(l - 2, l + 1);
      if (f.second) m.set(l - 2, l + 2);
      break;
    case Family::H: {
      const int mid = f.m;
      m.set(k, mid + 1);
      m.set(k, l);
      m.set(mid, l);
      m.set(mid, mid + 1);
      for (int j = k + 1; j <= mid - 1; ++j) m.set(k, j);
      for (int i = mid + 2; i <= l - 1; ++i) m.set(i, l);
      if (f.f_km) m.set(k, mid);
      if (f.f_m1l) m.set(mid + 1, l);
      if (f.f_a) m.set(mid - 1, mid + 1);
      if (f.f_b) m.set(mid, mid + 2);
      if (f.ext_top) m.set(k - 1, k + 1);
      if (f.ext_bottom) m.set(l - 1, l + 1);
      break;
    }
    case Family::L1:
      m.set(k, k + 1);
      for (int j = k + 3; j <= l; ++j) {
        if (!(f.omit_kl && j == l)) m.set(k, j);
        m.set(k + 2, j);
      }
      if (f.flag_top) m.set(k, k + 2);
      if (f.flag_bottom) m.set(k + 1, k + 3);
      if (f.ext_top) m.set(k - 1, k + 1);
      if (f.ext_bottom) m.set(k + 2, l + 1);
      break;
    case Family::L2:
      m.set(k, k + 1);
      m.set(k, k + 2);
      for (int j = k + 4; j <= l; ++j) {
        if (!(f.omit_kl && j == l)) m.set(k, j);
        m.set(k + 3, j);
      }
      if (f.flag_top) m.set(k, k + 3);
      if (f.flag_bottom) m.set(k + 2, k + 4);
      break;
    case Family::L3:
      m.set(k, k + 1);
      for (int j = k + 4; j <= l; ++j) {
        if (!(f.omit_kl && j == l)) m.set(k, j);
        m.set(k + 2, j);
        m.set(k + 3, j);
      }
      if (f.flag_top) m.set(k, k + 2);
      if (f.flag_bottom) m.set(k + 1, k + 4);
      break;
  }
  return m;
}

// Row piece r(k,J): dive right along row k and come straight back.
std::vector<int> word_r(int k, int J) {
  std::vector<int> w;
  push_asc(w, k, J - 1);
  push_desc(w, J - 1, k);
  return w;
}

// Column piece c(I,l): open the column from below and close it again.
std::vector<int> word_c(int I, int l) {
  std::vector<int> w;
  push_desc(w, l - 1, I);
  push_asc(w, I, l - 1);
  return w;
}

// Corner piece rc(k,l,J,I): strand k walks its row, meets the column strand
// pulled up from l, crosses it twice for the (k,l) corner, and both retreat.
std::vector<int> word_rc(int k, int l, int J, int I) {
  const int na = std::min(J - k, l - k - 1);
  const int mb = l - k - 1 - na;
  std::vector<int> w;
  push_asc(w, k, J - 1);
  push_desc(w, J - 1, k + na);
  push_desc(w, l - 1, l - mb);
  w.push_back(k + na);
  w.push_back(k + na);
  push_desc(w, k + na - 1, k);
  push_desc(w, l - mb - 1, I);
  push_asc(w, I, l - 1);
  return w;
}

// Two pieces sharing the bit at (l-1,l) glue into one pure word by dropping
// the last letter of the first and the first letter of the second: both are
// the crossing at positions (l-1,l) that the shared bit counts once.
std::vector<int> fuse(std::vector<int> w1, const std::vector<int>& w2) {
  w1.pop_back();
  w1.insert(w1.end(), w2.begin() + 1, w2.end());
  return w1;
}

std::vector<int> alpha_first(const FormationDescriptor& f) {
  if (f.a1 == AlphaKind::C) return word_c(f.k, f.l);
  return word_rc(f.k, f.l, f.J, f.I);
}

std::vector<int> alpha_second(const FormationDescriptor& f) {
  if (f.a2 == AlphaKind::R) return word_r(f.l - 1, f.m);
  return word_rc(f.l - 1, f.m, f.J2, f.I2);
}

std::vector<int> h_first(const FormationDescriptor& f) {
  const int J1 = f.f_km ? f.m : f.m - 1;
  const int I1 = f.f_a ? f.m - 1 : f.m;
  if (J1 >= f.k + 1) return word_rc(f.k, f.m + 1, J1, I1);
  return word_c(f.k, f.m + 1);
}

std::vector<int> h_second(const FormationDescriptor& f) {
  const int J2 = f.f_b ? f.m + 2 : f.m + 1;
  const int I2 = f.f_m1l ? f.m + 1 : f.m + 2;
  if (I2 <= f.l - 1) return word_rc(f.m, f.l, J2, I2);
  return word_r(f.m, f.l);
}

ProjectionWord must_thread(const ProjectionWord& w, int i, int j,
                           const FormationDescriptor& f) {
  auto out = thread_black(w, i, j, true);
  if (!out)
    throw Error(ErrorCode::RealizationFailed,
                "could not insert the (" + std::to_string(i) + "," +
                    std::to_string(j) + ") hook into " + format_descriptor(f));
  return *out;
}

}  // namespace

bool admissible(const FormationDescriptor& f) {
  if (f.n < 1 || f.n > kMaxStrands) return false;
  FormationDescriptor c = canon(f);
  if (!bounds_ok(c)) return false;
  return is_t0(build_mask(c));
}

UpperMask formation_matrix(const FormationDescriptor& f) {
  if (!admissible(f))
    throw Error(ErrorCode::InvalidParameters,
                "inadmissible descriptor: " + format_descriptor(f));
  return build_mask(canon(f));
}

namespace {

constexpr uint64_t kRepairSearchBudget = 50'000'000;

// The closed-form constructions. Most descriptors come out of here; a few
// tight hook placements jam the exchange threading, and those throw for
// realize to repair by direct search.
ProjectionWord direct_realize(const FormationDescriptor& f) {
  ProjectionWord w{f.n, {}};
  switch (f.family) {
    case Family::R:
      w.letters = word_r(f.k, f.J);
      break;
    case Family::C:
      w.letters = word_c(f.I, f.l);
      break;
    case Family::RC:
      w.letters = word_rc(f.k, f.l, f.J, f.I);
      break;
    case Family::Alpha:
      w.letters = fuse(alpha_first(f), alpha_second(f));
      break;
    case Family::CSharpR: {
      const int k = f.k, l = f.l, m = f.m;
      std::vector<int>& v = w.letters;
      push_desc(v, l - 1, k);
      push_asc(v, k, l - 3);
      if (!f.second) {
        v.insert(v.end(), {l, l - 1, l - 1, l - 2});
        push_asc(v, l + 1, m - 1);
      } else {
        v.insert(v.end(), {l, l - 1, l + 1, l, l, l - 1, l - 2});
        push_asc(v, l + 2, m - 1);
      }
      push_desc(v, m - 1, l - 1);
      break;
    }
    case Family::H:
      w.letters = fuse(h_first(f), h_second(f));
      w = must_thread(w, f.k, f.l, f);
      if (f.ext_top) w = must_thread(w, f.k - 1, f.k + 1, f);
      if (f.ext_bottom) w = must_thread(w, f.l - 1, f.l + 1, f);
      break;
    case Family::L1: {
      const int k = f.k, l = f.l;
      std::vector<int>& v = w.letters;
      for (int t = k; t <= l - 4; ++t) v.insert(v.end(), {t, t + 2});
      if (f.omit_kl)
        v.insert(v.end(), {l - 3, l - 3, l - 1, l - 1});
      else
        v.insert(v.end(), {l - 3, l - 1, l - 2, l - 2, l - 1, l - 3});
      for (int t = l - 4; t >= k; --t) v.insert(v.end(), {t + 2, t});
      if (f.flag_top) w = must_thread(w, k, k + 2, f);
      if (f.flag_bottom) w = must_thread(w, k + 1, k + 3, f);
      if (f.ext_top) w = must_thread(w, k - 1, k + 1, f);
      if (f.ext_bottom) w = must_thread(w, k + 2, l + 1, f);
      break;
    }
    case Family::L2: {
      const int k = f.k, l = f.l;
      std::vector<int>& v = w.letters;
      if (f.omit_kl) {
        for (int t = k; t <= l - 5; ++t) v.insert(v.end(), {t, t + 3});
        v.insert(v.end(), {l - 4, l - 1, l - 3, l - 3, l - 1, l - 4});
        for (int t = l - 5; t >= k; --t) v.insert(v.end(), {t + 3, t});
      } else {
        for (int t = k; t <= l - 4; ++t) v.insert(v.end(), {t, t + 3});
        v.insert(v.end(), {l - 3, l - 2, l - 2, l - 3});
        for (int t = l - 4; t >= k; --t) v.insert(v.end(), {t + 3, t});
      }
      if (f.flag_top) w = must_thread(w, k, k + 3, f);
      if (f.flag_bottom) w = must_thread(w, k + 2, k + 4, f);
      break;
    }
    case Family::L3: {
      const int k = f.k, l = f.l;
      std::vector<int>& v = w.letters;
      for (int t = k; t <= l - 5; ++t) v.insert(v.end(), {t, t + 3, t + 2});
      if (f.omit_kl)
        v.insert(v.end(), {l - 4, l - 4, l - 1, l - 2, l - 2, l - 1});
      else
        v.insert(v.end(),
                 {l - 4, l - 1, l - 2, l - 3, l - 3, l - 2, l - 1, l - 4});
      for (int t = l - 5; t >= k; --t) v.insert(v.end(), {t + 2, t + 3, t});
      if (f.flag_top) w = must_thread(w, k, k + 2, f);
      if (f.flag_bottom) w = must_thread(w, k + 1, k + 4, f);
      break;
    }
  }
  return w;
}

}  // namespace

ProjectionWord realize(const FormationDescriptor& f0) {
  if (!admissible(f0))
    throw Error(ErrorCode::InvalidParameters,
                "inadmissible descriptor: " + format_descriptor(f0));
  const FormationDescriptor f = canon(f0);
  const Matrix want = build_mask(f).to_matrix();
  ProjectionWord w{f.n, {}};
  try {
    w = direct_realize(f);
  } catch (const Error&) {
    w.letters.clear();
  }
  // Every word is checked against the descriptor's support; the direct
  // construction never fails silently, and the bounded exhaustive search
  // repairs the placements it cannot handle.
  if (!is_pure(w) || !(cn_matrix(w) == want)) {
    auto found = exact_word_search(want, kRepairSearchBudget);
    if (!found.word)
      throw Error(ErrorCode::RealizationFailed,
                  "no pure word found for " + format_descriptor(f));
    w = *found.word;
  }
  return w;
}

std::vector<FormationDescriptor> detect(const UpperMask& mask) {
  const int n = mask.n();
  if (n > 9)
    throw Error(ErrorCode::InvalidParameters,
                "formation detection is bounded to 9 strands");
  std::vector<FormationDescriptor> out;
  auto consider = [&](const FormationDescriptor& f) {
    if (f != canon(f)) return;  // keep one descriptor per support
    if (!admissible(f)) return;
    if (!build_mask(f).is_subset_of(mask)) return;
    out.push_back(f);
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
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::R:
      return "R";
    case Family::C:
      return "C";
    case Family::RC:
      return "RC";
    case Family::Alpha:
      return "Alpha";
    case Family::CSharpR:
      return "CSharpR";
    case Family::H:
      return "H";
    case Family::L1:
      return "L1";
    case Family::L2:
      return "L2";
    case Family::L3:
      return "L3";
  }
  return "?";
}

std::string format_descriptor(const FormationDescriptor& f) {
  std::ostringstream o;
  o << family_name(f.family);
  auto p = [&o](const char* key, int v) { o << ' ' << key << '=' << v; };
  auto flags = [&o](std::initializer_list<std::pair<bool, const char*>> fl) {
    std::string csv;
    for (auto [on, name] : fl)
      if (on) {
        if (!csv.empty()) csv += ',';
        csv += name;
      }
    if (!csv.empty()) o << " flags=" << csv;
  };
  switch (f.family) {
    case Family::R:
      p("k", f.k);
      p("J", f.J);
      break;
    case Family::C:
      p("I", f.I);
      p("l", f.l);
      break;
    case Family::RC:
      p("k", f.k);
      p("l", f.l);
      p("J", f.J);
      p("I", f.I);
      break;
    case Family::Alpha:
      o << " a1=" << (f.a1 == AlphaKind::C ? "c" : "rc");
      o << " a2=" << (f.a2 == AlphaKind::R ? "r" : "rc");
      p("k", f.k);
      p("l", f.l);
      p("m", f.m);
      if (f.a1 == AlphaKind::RC) {
        p("J", f.J);
        p("I", f.I);
      }
      if (f.a2 == AlphaKind::RC) {
        p("J2", f.J2);
        p("I2", f.I2);
      }
      break;
    case Family::CSharpR:
      p("k", f.k);
      p("l", f.l);
      p("m", f.m);
      flags({{f.second, "second"}});
      break;
    case Family::H:
      p("k", f.k);
      p("l", f.l);
      p("m", f.m);
      flags({{f.f_km, "km"},
             {f.f_m1l, "m1l"},
             {f.f_a, "a"},
             {f.f_b, "b"},
             {f.ext_top, "top"},
             {f.ext_bottom, "bottom"}});
      break;
    case Family::L1:
    case Family::L2:
    case Family::L3:
      p("k", f.k);
      p("l", f.l);
      flags({{f.flag_top, "top"},
             {f.flag_bottom, "bottom"},
             {f.ext_top, "exttop"},
             {f.ext_bottom, "extbottom"},
             {f.omit_kl, "omit"}});
      break;
  }
  return o.str();
}

FormationDescriptor parse_descriptor(const std::string& text, int n) {
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok)) throw Error(ErrorCode::ParseError, "empty descriptor");
  FormationDescriptor f;
  f.n = n;
  if (tok == "R")
    f.family = Family::R;
  else if (tok == "C")
    f.family = Family::C;
  else if (tok == "RC")
    f.family = Family::RC;
  else if (tok == "Alpha")
    f.family = Family::Alpha;
  else if (tok == "CSharpR")
    f.family = Family::CSharpR;
  else if (tok == "H")
    f.family = Family::H;
  else if (tok == "L1")
    f.family = Family::L1;
  else if (tok == "L2")
    f.family = Family::L2;
  else if (tok == "L3")
    f.family = Family::L3;
  else
    throw Error(ErrorCode::ParseError, "unknown family '" + tok + "'");

  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, "expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    auto num = [&]() {
      try {
        return std::stoi(val);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad number in '" + tok + "'");
      }
    };
    if (key == "k")
      f.k = num();
    else if (key == "l")
      f.l = num();
    else if (key == "m")
      f.m = num();
    else if (key == "J")
      f.J = num();
    else if (key == "I")
      f.I = num();
    else if (key == "J2")
      f.J2 = num();
    else if (key == "I2")
      f.I2 = num();
    else if (key == "a1") {
      if (val == "c")
        f.a1 = AlphaKind::C;
      else if (val == "rc")
        f.a1 = AlphaKind::RC;
      else
        throw Error(ErrorCode::ParseError, "a1 must be c or rc");
    } else if (key == "a2") {
      if (val == "r")
        f.a2 = AlphaKind::R;
      else if (val == "rc")
        f.a2 = AlphaKind::RC;
      else
        throw Error(ErrorCode::ParseError, "a2 must be r or rc");
    } else if (key == "flags") {
      std::istringstream fl(val);
      std::string name;
      while (std::getline(fl, name, ',')) {
        if (name == "second")
          f.second = true;
        else if (name == "km")
          f.f_km = true;
        else if (name == "m1l" || name == "ml")
          f.f_m1l = true;
        else if (name == "a")
          f.f_a = true;
        else if (name == "b")
          f.f_b = true;
        else if (name == "top")
          (f.family == Family::H ? f.ext_top : f.flag_top) = true;
        else if (name == "bottom")
          (f.family == Family::H ? f.ext_bottom : f.flag_bottom) = true;
        else if (name == "exttop")
          f.ext_top = true;
        else if (name == "extbottom")
          f.ext_bottom = true;
        else if (name == "omit")
          f.omit_kl = true;
        else
          throw Error(ErrorCode::ParseError, "unknown flag '" + name + "'");
      }
    } else {
      throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
    }
  }
  return f;
}

}  // namespace braidmat
