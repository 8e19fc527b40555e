#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidmat/braid.hpp"
#include "braidmat/matrix.hpp"

namespace braidmat {

// Parameterized (0,2)-support patterns with known constructive realizations.
//
//   R(k,J):   row bits (k,j) for k+1 <= j <= J.
//   C(I,l):   column bits (i,l) for I <= i <= l-1.
//   RC(k,l):  R(k,J) + C(I,l) + bit (k,l), with J < l, I > k, I-J <= 1.
//   Alpha:    alpha1(k,l) and alpha2(l-1,m) fused at the shared bit (l-1,l),
//             where alpha1 is C or RC and alpha2 is R or RC.
//   CSharpR:  the C(k,l)/R(l-1,m) fusion plus bit (l-2,l+1), optionally plus
//             bit (l-2,l+2) (flag `second`).
//   H(k,l;m): hooks (k,m+1),(k,l),(m,l),(m,m+1), row (k,j) for j <= m-1 and
//             column (i,l) for i >= m+2, with four optional cells
//             (k,m),(m+1,l),(m-1,m+1),(m,m+2) and optional extensions
//             (k-1,k+1) on top, (l-1,l+1) at the bottom.
//   L1(k,l):  bits (k,k+1), (k,j) and (k+2,j) for k+3 <= j <= l; optional
//             (k,k+2),(k+1,k+3); optional extensions (k-1,k+1),(k+2,l+1);
//             optionally dropping the (k,l) bit (`omit_kl`).
//   L2(k,l):  bits (k,k+1),(k,k+2), (k,j) and (k+3,j) for k+4 <= j <= l;
//             optional (k,k+3),(k+2,k+4); optional omit of (k,l).
//   L3(k,l):  bits (k,k+1), (k,j),(k+2,j),(k+3,j) for k+4 <= j <= l;
//             optional (k,k+2),(k+1,k+4); optional omit of (k,l).
enum class Family { R, C, RC, Alpha, CSharpR, H, L1, L2, L3 };

enum class AlphaKind { C, RC, R };

struct FormationDescriptor {
  Family family = Family::R;
  int n = 1;

  int k = 0, l = 0, m = 0;
  int J = 0, I = 0;    // RC row/column extents; Alpha: first component
  int J2 = 0, I2 = 0;  // Alpha: second component extents

  AlphaKind a1 = AlphaKind::C;  // Alpha only: C or RC
  AlphaKind a2 = AlphaKind::R;  // Alpha only: R or RC

  bool second = false;  // CSharpR only: add the (l-2,l+2) bit

  // H optional cells.
  bool f_km = false;    // (k,m)
  bool f_m1l = false;   // (m+1,l)
  bool f_a = false;     // (m-1,m+1)
  bool f_b = false;     // (m,m+2)

  // L-family optional cells; H/L1 extensions reuse ext_top/ext_bottom.
  bool flag_top = false;     // L1/L3: (k,k+2); L2: (k,k+3)
  bool flag_bottom = false;  // L1: (k+1,k+3); L2: (k+2,k+4); L3: (k+1,k+4)
  bool ext_top = false;      // H/L1: (k-1,k+1)
  bool ext_bottom = false;   // H: (l-1,l+1); L1: (k+2,l+1)
  bool omit_kl = false;      // L1/L2/L3: drop the (k,l) bit

  bool operator==(const FormationDescriptor&) const = default;
};

// Parameter bounds hold, optional cells are in range and distinct from the
// required support, and the resulting support is T0. Realization is defined
// exactly on admissible descriptors.
bool admissible(const FormationDescriptor& f);

// The exact (0,2) support of the descriptor. Throws InvalidParameters when
// !admissible(f).
UpperMask formation_matrix(const FormationDescriptor& f);

// A pure projection word whose pair-count support equals formation_matrix(f)
// (all entries 2).
ProjectionWord realize(const FormationDescriptor& f);

// All admissible descriptors whose support is contained in `mask`, in a
// deterministic family-then-parameters order. Mirror placements are found by
// detecting on the reversed mask and mirroring the realization. Bounded to
// n <= 9.
std::vector<FormationDescriptor> detect(const UpperMask& mask);

// Text form, e.g. "H k=1 l=6 m=3 flags=km,a" or "RC k=1 l=4 J=2 I=3".
std::string format_descriptor(const FormationDescriptor& f);
FormationDescriptor parse_descriptor(const std::string& text, int n);

const char* family_name(Family f);

}  // namespace braidmat
