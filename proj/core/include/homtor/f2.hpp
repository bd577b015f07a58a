#pragma once

// Mod-2 cohomology of a homology 4-torus X: H^1(X;Z/2) is F_2^4 with a fixed
// basis a1..a4, the wedge square Lambda^2 H^1 is F_2^6, and the whole ring
// structure above degree 1 is pinned down by a single bit, the value of
// (a1 u a2 u a3 u a4) on the fundamental class.  X is called odd when that
// bit is 1.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace homtor::f2 {

// Element of H^1(X;Z/2).  Bit i (from 0) is the coefficient of a_{i+1}.
class OneClass {
 public:
  constexpr OneClass() = default;
  explicit constexpr OneClass(unsigned bits) : bits_(bits & 0xFu) {}
  static constexpr OneClass basis(int i) { return OneClass(1u << i); }

  constexpr unsigned bits() const { return bits_; }
  constexpr bool coeff(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr OneClass operator+(OneClass a, OneClass b) {
    return OneClass(a.bits_ ^ b.bits_);
  }
  friend constexpr bool operator==(OneClass a, OneClass b) = default;
  // Order used everywhere a canonical representative is needed.
  friend constexpr bool operator<(OneClass a, OneClass b) {
    return a.bits_ < b.bits_;
  }

 private:
  std::uint8_t bits_ = 0;
};

// Element of Lambda^2 H^1(X;Z/2).  Coordinates indexed by pairs (i,j), i<j,
// in the order 12, 13, 14, 23, 24, 34.
class TwoForm {
 public:
  constexpr TwoForm() = default;
  explicit constexpr TwoForm(unsigned bits) : bits_(bits & 0x3Fu) {}

  // Position of the (i,j) coordinate, i != j, both in 0..3.
  static constexpr int pair_index(int i, int j) {
    constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[i][j];
  }

  constexpr unsigned bits() const { return bits_; }
  constexpr bool coeff(int i, int j) const {
    return i == j ? false : (bits_ >> pair_index(i, j)) & 1u;
  }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr TwoForm operator+(TwoForm a, TwoForm b) {
    return TwoForm(a.bits_ ^ b.bits_);
  }
  friend constexpr bool operator==(TwoForm a, TwoForm b) = default;
  friend constexpr bool operator<(TwoForm a, TwoForm b) {
    return a.bits_ < b.bits_;
  }

 private:
  std::uint8_t bits_ = 0;
};

// The ring data beyond the wedge model: rank is fixed at 4 and det_bit is
// the quadruple product (a1 u a2 u a3 u a4)[X].
struct TorusRing {
  bool det_bit = true;
  static constexpr int rank = 4;
  constexpr bool odd() const { return det_bit; }
};

// a u b.  Bilinear and alternating; over F_2 also symmetric.
TwoForm wedge(OneClass a, OneClass b);

// Pfaffian bit c12 c34 + c13 c24 + c14 c23 of w.  Zero exactly when w is
// decomposable (a product of two one-classes, possibly zero).
bool pfaffian(TwoForm w);

// Factorisation of a decomposable two-form, canonicalised: beta is the
// smallest one-class occurring in any factorisation, then gamma the smallest
// completing it.
struct Decomposition {
  enum class Status { ok, zero, indecomposable };
  Status status = Status::zero;
  OneClass beta, gamma;  // meaningful only when status == ok
};
Decomposition decompose(TwoForm w);

// (x1 u x2 u x3 u x4)[X]: multilinear alternating in the xi, equal to
// det_bit on every basis.  Computed as det over F_2 times det_bit.
bool quad_eval(OneClass x1, OneClass x2, OneClass x3, OneClass x4,
               const TorusRing& ring);

// Sweeps every ordered basis of F_2^4 (singular quadruples are skipped) and
// confirms quad_eval equals ring.det_bit on each.
bool det_basis_invariance(const TorusRing& ring);

// (w u x u y)[X] for one-classes x, y: expand w in the basis and pair.
bool pair_eval(TwoForm w, OneClass x, OneClass y, const TorusRing& ring);

// Pontrjagin square of w, an element of Z/4 (always 0 or 2 here): twice the
// signed pairing of an integral lift of w with itself.  Closed form:
// 2 * pfaffian(w) * det_bit.
int pontrjagin_square(TwoForm w, const TorusRing& ring);

// Whether some U(2)-bundle with p1 = 0 and w2 = w (pulled back from the
// fundamental group) supports the moduli counts computed in this project:
// w must be nonzero, have vanishing Pontrjagin square, and on an even torus
// must pair nontrivially with some pair of one-classes (which never happens
// inside the wedge model, so even rings admit nothing here).
bool is_admissible(TwoForm w, const TorusRing& ring);

// Conjugacy class of a Klein-four SO(3) representation of the fundamental
// group, encoded by the canonical pair of one-classes spanning it.  Its
// second Stiefel-Whitney class is wedge(beta, gamma).
struct KleinClass {
  OneClass beta, gamma;
  friend bool operator==(const KleinClass&, const KleinClass&) = default;
  friend bool operator<(const KleinClass& a, const KleinClass& b) {
    return a.beta != b.beta ? a.beta < b.beta : a.gamma < b.gamma;
  }
};

// All Klein-four classes with second Stiefel-Whitney class w (w must be
// nonzero).  A class is a 2-dimensional subspace of H^1, listed through its
// canonical ordered basis; the list has one entry when w is decomposable
// and is empty otherwise.
std::vector<KleinClass> klein_census(TwoForm w);

// Number of four-orbit points in the moduli space attached to an admissible
// bundle with w2 = w: on an odd torus this is 1 for decomposable nonzero w
// and 0 otherwise; on an even torus no admissible bundle exists in the
// wedge model and the count is 0.  w = 0 is rejected.
int count_four_orbits(TwoForm w, const TorusRing& ring);

// Text forms.  OneClass: "0", "1+3", "a1+a3".  TwoForm: "0", "12+34".
// Emitted sorted; parsers accept unsorted input and unordered digit pairs.
std::string to_string(OneClass a);
std::string to_string(TwoForm w);
OneClass parse_one_class(const std::string& text);
TwoForm parse_two_form(const std::string& text);

}  // namespace homtor::f2
