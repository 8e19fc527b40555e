#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "braidmat/error.hpp"

namespace braidmat {

// Strand counts are capped so pair bitsets fit in 128 bits and matrices stay
// comfortably dense.
inline constexpr int kMaxStrands = 16;

void check_strand_count(int n);

// Dense square integer matrix with 1-based accessors, used for crossing
// counts in all three roles (symmetric pair counts, over/under counts, and
// signed crossing counts).
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {
    check_strand_count(n);
  }

  int n() const noexcept { return n_; }
  int& at(int i, int j) { return e_[idx(i, j)]; }
  int at(int i, int j) const { return e_[idx(i, j)]; }

  bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;

  bool is_zero_diagonal() const;
  bool is_symmetric() const;
  bool is_non_negative() const;
  bool all_even() const;
  int sum() const;

private:
  size_t idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
  }

  int n_ = 0;
  std::vector<int> e_;
};

// Bitset over strand pairs (i,j), i<j, encoding a matrix whose entries are
// 0 or 2 (bit set means entry 2). Bit order is row-major over the upper
// triangle: (1,2),(1,3),...,(1,n),(2,3),...
class UpperMask {
public:
  UpperMask() = default;
  explicit UpperMask(int n) : n_(n) { check_strand_count(n); }

  int n() const noexcept { return n_; }
  int pair_count() const noexcept { return n_ * (n_ - 1) / 2; }

  int bit_index(int i, int j) const;
  bool test(int i, int j) const;
  void set(int i, int j, bool value = true);

  int popcount() const noexcept;
  bool empty() const noexcept { return bits_[0] == 0 && bits_[1] == 0; }
  bool is_subset_of(const UpperMask& o) const;

  // Set difference; requires other ⊆ this for meaningful use.
  UpperMask minus(const UpperMask& o) const;
  UpperMask unite(const UpperMask& o) const;
  bool intersects(const UpperMask& o) const;

  std::vector<std::pair<int, int>> pairs() const;

  // The mask as a (0,2)-matrix with symmetric entries.
  Matrix to_matrix() const;

  // Numeric value of the bitset; total order used for canonical enumeration
  // and hashing. Only valid for pair_count() <= 64 plus the overflow word.
  std::array<uint64_t, 2> words() const noexcept { return bits_; }
  void set_words(std::array<uint64_t, 2> w) noexcept { bits_ = w; }

  bool operator==(const UpperMask& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const UpperMask& o) const { return !(*this == o); }
  bool operator<(const UpperMask& o) const {
    return bits_[1] != o.bits_[1] ? bits_[1] < o.bits_[1] : bits_[0] < o.bits_[0];
  }

private:
  int n_ = 0;
  std::array<uint64_t, 2> bits_{0, 0};
};

// True iff for all i<j<k: M(i,j)=0 and M(j,k)=0 imply M(i,k)=0, evaluated on
// the symmetric closure. Throws NonZeroDiagonal on bad input.
bool is_t0(const Matrix& m);
bool is_t0(const UpperMask& mask);

// The violating triple (i,j,k) if any, as a convenience for error reports.
bool find_t0_violation(const Matrix& m, int& i, int& j, int& k);

// Support mask of a symmetric even matrix: bit (i,j) set iff M(i,j) > 0.
UpperMask m02(const Matrix& m);

// Entries (i,j) -> (n+1-i, n+1-j); an involution.
Matrix reverse_matrix(const Matrix& m);
UpperMask reverse_mask(const UpperMask& mask);

}  // namespace braidmat
