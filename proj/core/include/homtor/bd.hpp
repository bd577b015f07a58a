#pragma once

// Exact arithmetic in the binary dihedral subgroup of the unit quaternions:
// the 4N elements e^{i pi t/N} and e^{i pi t/N} j, t mod 2N.  Everything the
// representation solvers touch lives here, so no floating point is involved
// anywhere in the pipeline.

#include <string>
#include <utility>

namespace homtor::bd {

class Element {
 public:
  // e^{i pi t/N} when j_part is false, e^{i pi t/N} j when true.
  Element(int modulus, bool j_part, int angle_num);

  static Element identity(int modulus) { return {modulus, false, 0}; }
  static Element minus_one(int modulus) { return {modulus, false, modulus}; }
  static Element rotation(int modulus, int angle_num) {
    return {modulus, false, angle_num};
  }
  // i = e^{i pi/2}; k = i j.  Both need an even modulus.
  static Element i_unit(int modulus);
  static Element j_unit(int modulus) { return {modulus, true, 0}; }
  static Element k_unit(int modulus);

  int modulus() const { return modulus_; }
  bool j_part() const { return j_; }
  int angle_num() const { return angle_; }

  bool is_identity() const { return !j_ && angle_ == 0; }
  bool is_minus_one() const { return !j_ && angle_ == modulus_; }
  // central in the binary dihedral group (and in SU(2)): +1 or -1
  bool is_central() const { return is_identity() || is_minus_one(); }

  Element inverse() const;
  Element operator-() const { return {modulus_, j_, angle_ + modulus_}; }

  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) = default;
  // arbitrary total order, used for canonical forms
  friend bool operator<(const Element& a, const Element& b);

 private:
  int modulus_;
  bool j_;
  int angle_;  // reduced to [0, 2N)
};

Element pow(const Element& a, long long m);
Element conjugate(const Element& c, const Element& a);  // c a c^-1
Element commutator(const Element& a, const Element& b);  // a b a^-1 b^-1

// Image under the double cover SU(2) -> SO(3): elements a and -a are
// identified.  The stored representative has angle_num < modulus.
class So3 {
 public:
  explicit So3(const Element& lift);
  const Element& rep() const { return rep_; }
  bool is_identity() const { return rep_.is_identity(); }
  friend bool operator==(const So3& a, const So3& b) = default;

 private:
  Element rep_;
};

// The two lifts of g, canonical representative first.
std::pair<Element, Element> lifts(const So3& g);

// Whether the two rotations commute in SO(3); for binary dihedral elements
// this means the lifted commutator is central.
bool so3_commute(const Element& a, const Element& b);

// Reinterpret a in the finer group of modulus new_modulus (a multiple of
// the old one).  Group embedding: multiplication commutes with rescaling.
Element rescale(const Element& a, int new_modulus);

// Text form "e(t/N)" or "e(t/N)j".  The parser also accepts the aliases
// 1, -1, i, -i, j, k, -j, -k (i and k need an even modulus).
std::string to_string(const Element& a);
Element parse_element(const std::string& text, int modulus);

}  // namespace homtor::bd
