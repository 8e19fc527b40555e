#include "braidmat/matrix.hpp"

#include <bit>

namespace braidmat {

void check_strand_count(int n) {
  if (n < 1)
    throw Error(ErrorCode::InvalidParameters, "strand count must be positive");
  if (n > kMaxStrands)
    throw Error(ErrorCode::StrandCountTooLarge,
                "strand count exceeds supported maximum of 16");
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (n_ != o.n_)
    throw Error(ErrorCode::MismatchedStrandCount, "matrix sizes differ");
  Matrix s(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) s.at(i, j) = at(i, j) + o.at(i, j);
  return s;
}

bool Matrix::is_zero_diagonal() const {
  for (int i = 1; i <= n_; ++i)
    if (at(i, i) != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Matrix::is_non_negative() const {
  for (int v : e_)
    if (v < 0) return false;
  return true;
}

bool Matrix::all_even() const {
  for (int v : e_)
    if (v % 2 != 0) return false;
  return true;
}

int Matrix::sum() const {
  int s = 0;
  for (int v : e_) s += v;
  return s;
}

int UpperMask::bit_index(int i, int j) const {
  if (i < 1 || j <= i || j > n_)
    throw Error(ErrorCode::IndexOutOfRange, "pair index out of range");
  return (i - 1) * (2 * n_ - i) / 2 + (j - i - 1);
}

bool UpperMask::test(int i, int j) const {
  int b = bit_index(i, j);
  return (bits_[b >> 6] >> (b & 63)) & 1;
}

void UpperMask::set(int i, int j, bool value) {
  int b = bit_index(i, j);
  if (value)
    bits_[b >> 6] |= uint64_t{1} << (b & 63);
  else
    bits_[b >> 6] &= ~(uint64_t{1} << (b & 63));
}

int UpperMask::popcount() const noexcept {
  return std::popcount(bits_[0]) + std::popcount(bits_[1]);
}

bool UpperMask::is_subset_of(const UpperMask& o) const {
  return (bits_[0] & ~o.bits_[0]) == 0 && (bits_[1] & ~o.bits_[1]) == 0;
}

UpperMask UpperMask::minus(const UpperMask& o) const {
  UpperMask r(n_);
  r.bits_ = {bits_[0] & ~o.bits_[0], bits_[1] & ~o.bits_[1]};
  return r;
}

UpperMask UpperMask::unite(const UpperMask& o) const {
  UpperMask r(n_);
  r.bits_ = {bits_[0] | o.bits_[0], bits_[1] | o.bits_[1]};
  return r;
}

bool UpperMask::intersects(const UpperMask& o) const {
  return (bits_[0] & o.bits_[0]) != 0 || (bits_[1] & o.bits_[1]) != 0;
}

std::vector<std::pair<int, int>> UpperMask::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (test(i, j)) out.emplace_back(i, j);
  return out;
}

Matrix UpperMask::to_matrix() const {
  Matrix m(n_);
  for (auto [i, j] : pairs()) {
    m.at(i, j) = 2;
    m.at(j, i) = 2;
  }
  return m;
}

bool find_t0_violation(const Matrix& m, int& oi, int& oj, int& ok) {
  if (!m.is_zero_diagonal())
    throw Error(ErrorCode::NonZeroDiagonal, "matrix has a non-zero diagonal");
  int n = m.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        bool ij = m.at(i, j) != 0 || m.at(j, i) != 0;
        bool jk = m.at(j, k) != 0 || m.at(k, j) != 0;
        bool ik = m.at(i, k) != 0 || m.at(k, i) != 0;
        if (!ij && !jk && ik) {
          oi = i;
          oj = j;
          ok = k;
          return true;
        }
      }
  return false;
}

bool is_t0(const Matrix& m) {
  int i, j, k;
  return !find_t0_violation(m, i, j, k);
}

bool is_t0(const UpperMask& mask) {
  int n = mask.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (!mask.test(i, j) && !mask.test(j, k) && mask.test(i, k))
          return false;
  return true;
}

UpperMask m02(const Matrix& m) {
  if (!m.is_zero_diagonal())
    throw Error(ErrorCode::NonZeroDiagonal, "matrix has a non-zero diagonal");
  UpperMask mask(m.n());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i + 1; j <= m.n(); ++j)
      if (m.at(i, j) != 0 || m.at(j, i) != 0) mask.set(i, j);
  return mask;
}

Matrix reverse_matrix(const Matrix& m) {
  int n = m.n();
  Matrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r.at(n + 1 - i, n + 1 - j) = m.at(i, j);
  return r;
}

UpperMask reverse_mask(const UpperMask& mask) {
  int n = mask.n();
  UpperMask r(n);
  for (auto [i, j] : mask.pairs()) r.set(n + 1 - j, n + 1 - i);
  return r;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MismatchedStrandCount: return "MismatchedStrandCount";
    case ErrorCode::OffsetOutOfRange: return "OffsetOutOfRange";
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::StrandCountTooLarge: return "StrandCountTooLarge";
    case ErrorCode::BlackEdgePresent: return "BlackEdgePresent";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::SumNotT0: return "SumNotT0";
    case ErrorCode::RealizationFailed: return "RealizationFailed";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace braidmat
