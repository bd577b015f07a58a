#pragma once

// Projective SU(2) representations of the torus family groups, with exact
// images in a binary dihedral group.  A projective representation sends
// every relator to +-1; the sign pattern is the obstruction class of the
// induced SO(3) representation.  The solvers below enumerate conjugacy
// classes with a prescribed second Stiefel-Whitney evaluation and measure
// the orbit structure under the sign-character action of H^1(X;Z/2).

#include <memory>
#include <string>
#include <vector>

#include "homtor/bd.hpp"
#include "homtor/presentation.hpp"

namespace homtor::rep {

struct ProjRep {
  std::shared_ptr<const grp::Presentation> pres;
  std::vector<bd::Element> images;  // one per generator, shared modulus

  int modulus() const { return images.at(0).modulus(); }
};

bd::Element eval(const ProjRep& r, const grp::Word& w);

// Relator values; true means the relator evaluates to -1.  Throws when a
// relator value is not central, i.e. the assignment is not projective.
std::vector<bool> relator_signs(const ProjRep& r);
bool is_projective(const ProjRep& r);

// Sign character on the generators: bit g set means chi(generator g) = -1.
// A character acts on representations only when every relator has total
// chi-value +1; that condition is derived from the relator words, never
// assumed.
using Character = unsigned;
bool character_consistent(const grp::Presentation& p, Character chi);
std::vector<Character> consistent_characters(const grp::Presentation& p);
ProjRep chi_action(const ProjRep& r, Character chi);  // g -> chi(g) rho(g)

// SU(2)-conjugacy for representations in the binary dihedral model.  When
// some generator maps to +-i in both inputs (true for the whole family:
// rho(x) = +-i), every possible conjugator normalizes the rotation circle,
// so minimising the image tuple over that normalizer is a complete
// canonical form.
std::vector<bd::Element> canonical_images(const ProjRep& r);
bool are_conjugate(const ProjRep& r1, const ProjRep& r2);

// Canonical form of the induced rotation-group representation: like
// canonical_images but with each image reduced modulo sign.  Two reps get
// the same form exactly when their SO(3) representations are conjugate;
// this is the class identity the enumeration counts (lift signs are a
// cocycle choice, not a moduli parameter).
std::vector<bd::Element> so3_canonical_images(const ProjRep& r);

// Second Stiefel-Whitney evaluations.  For the 3-torus family the basis
// 2-cycles are u x x, v x x and the multiple fiber class (sigma); the
// 4-torus family adds u x y, v x y and x x y.
struct W2Bits {
  int dim = 4;                                 // 3 or 4
  bool ux = false, vx = false, sigma = false;  // both dims
  bool uy = false, vy = false, xy = false;     // dim 4 only

  bool is_zero() const {
    return !ux && !vx && !sigma && (dim == 3 || (!uy && !vy && !xy));
  }
  W2Bits restricted() const { return {3, ux, vx, sigma, false, false, false}; }
  W2Bits extended() const { return {4, ux, vx, sigma, uy, vy, xy}; }

  friend bool operator==(const W2Bits& a, const W2Bits& b) {
    if (a.dim != b.dim || a.ux != b.ux || a.vx != b.vx || a.sigma != b.sigma)
      return false;
    return a.dim == 3 || (a.uy == b.uy && a.vy == b.vy && a.xy == b.xy);
  }
};

// Torus bits: for commuting SO(3) images g, h the bit is 1 exactly when the
// lifted commutator is -1 (independent of lift choice; non-commuting images
// are an error).  The sigma bit renormalises the lifts so that the relator
// [u,v] a b holds exactly in SU(2) and reads off the sign of a^q b^q.
W2Bits w2_eval(const ProjRep& r);

// Orbit of the class under all consistent characters of the 4-torus family
// group (there are 16).  Requires a projective rep with w2 != 0; orbits of
// size 1 or 2 would contradict that and raise invariant_error.
struct OrbitData {
  int orbit_size = 0;
  std::vector<Character> stabilizer;  // sorted
};
OrbitData orbit_analysis(const ProjRep& r);

// Cross-check of the orbit size: restrict the representation to the
// subgroup acting trivially mod 2 (generated by squares and commutators),
// classify its image as central / abelian noncentral / nonabelian, and
// compare with stabilizer order 4 / 2 / 1.
bool stabilizer_cover_check(const ProjRep& r);

enum class ClassKind { pair, special, klein };

struct RepClass {
  ClassKind kind = ClassKind::pair;
  int q = 1;
  int k = 0, l = 0;  // rotation numerators, pair and special kinds only
  ProjRep rep;       // representation of t4_group(q), modulus 4q
  W2Bits w2;         // measured on rep (dim 4)
  OrbitData orbit;
};

// All conjugacy classes for the 3-torus family with the requested pattern
// (dim 3).  Directly analysed pattern: ux=1, vx=0, either sigma; the
// mirrored pattern ux=0, vx=1 is solved through the relabeling
// automorphism u<->v, a<->b^-1.  Classes come back sorted by (k,l); there
// are (q^2+1)/2 of them, the k=l=q one special.
std::vector<RepClass> solve_t3(int q, const W2Bits& pattern);

// The one class with w2 supported on x x y alone: a Klein-four
// representation, not pulled back from the 3-torus quotient.
RepClass solve_t4_xy(int q);

// Dispatch on the pattern; unsupported patterns raise invalid_argument.
std::vector<RepClass> solve_classes(int q, const W2Bits& pattern);

// Unsigned instanton-style counts.  lambda_bar is a quarter of the total
// orbit mass; lambda_weighted counts classes with weight 1 (four-orbits)
// or 2 (eight-orbits).  Both equal q^2 on the pullback patterns and 1 on
// the x x y pattern; signs are not determined by this computation.
int lambda_bar(int q, const W2Bits& pattern);
int lambda_weighted(int q, const W2Bits& pattern);

struct ParityReport {
  int lambda_mod2 = 0;
  int four_orbit_mod2 = 0;
  int det_mod2 = 0;
  bool pass = false;
};
// lambda_bar == #four-orbits == det X (mod 2); det X = q mod 2 here.
ParityReport parity_check(int q, const W2Bits& pattern);

// Independent oracle for solve_t3 on the directly analysed pattern: fix
// rho(x) = i, sweep rho(u) over the j-coset and rho(a), rho(b), rho(v) over
// the whole group (pruned by the single-generator relators), filter by
// projectivity and the w2 pattern, and reduce by conjugacy of the induced
// rotation representations (lift signs are a cocycle choice, so reducing
// by strict lift-tuple conjugacy would list each class several times).
// search_modulus must equal 4q; a resource bound (HOMTOR_ORACLE_MAX_N,
// default 64) keeps accidental large sweeps from running away.
std::vector<RepClass> brute_force_classes(int q, const W2Bits& pattern,
                                          int search_modulus);

struct LambdaReport {
  int q = 1;
  W2Bits pattern;
  std::vector<RepClass> classes;
  int lambda_bar = 0;
  int lambda_weighted = 0;
  ParityReport parity;
};
LambdaReport lambda_report(int q, const W2Bits& pattern);

// Free coordinates of a consistent character of the 4-torus family, in the
// order (u, v, a, y); '1' marks a sign flip.  The values on x and b follow
// from the relators.
std::string character_bits(const grp::Presentation& p, Character chi);

}  // namespace homtor::rep
