#pragma once

// Rohlin invariant bookkeeping.  A homology torus of dimension 3 or 4 has
// 2^dim spin structures, an F_2^dim-torsor; an assignment attaches to each
// one a value in Z/2 (mode z2) or in Q/2Z recorded in eighths as an integer
// mod 16 (mode eighths, data entry and display only).

#include <cstdint>
#include <vector>

namespace homtor::rohlin {

enum class Mode { z2, eighths };

class SpinAssignment {
 public:
  SpinAssignment(int dim, Mode mode);

  int dim() const { return dim_; }
  Mode mode() const { return mode_; }
  unsigned size() const { return 1u << dim_; }

  // sigma is a bit mask over the fixed basis of H^1(X;Z/2)
  int value(unsigned sigma) const;
  void set_value(unsigned sigma, int v);  // z2: 0/1, eighths: 0..15

  friend bool operator==(const SpinAssignment&, const SpinAssignment&) = default;

 private:
  int dim_;
  Mode mode_;
  std::vector<std::uint8_t> values_;
};

// Sum of all 8 values of a dimension-3 assignment, in the value group
// (mod 2 for z2, mod 16 for eighths).
int rho_bar(const SpinAssignment& a);

bool det3(unsigned x, unsigned y, unsigned z);  // F_2 determinant, 3x3

// Third finite difference of a z2 assignment in directions x, y, z at base
// sigma = 0: the sum of the values at sigma + (every subset sum of x,y,z).
// The same value comes out at every base, which the implementation checks.
bool turaev_defect(const SpinAssignment& a, unsigned x, unsigned y, unsigned z);

// Whether the defect equals t * det(x,y,z) for every direction triple, the
// shape forced by the cubic identity rho(sigma + x + y + z) = ... with top
// coefficient (x u y u z)[M].  z2 mode, dimension 3.
bool is_turaev_consistent(const SpinAssignment& a, bool t);

// All 256 z2 assignments in dimension 3 filtered by consistency; the two
// values of t split them 128/128.
std::vector<SpinAssignment> enumerate_consistent(bool t);

// For a dimension-4 assignment invariant under the shift by alpha != 0
// (a precondition, rejected otherwise): the 8-fold sums over the cosets of
// every complement of <alpha> all agree, so a quotient 3-torus value is
// well defined.  Complements are swept as kernels of the functionals that
// are nonzero on alpha, which covers every basis through its span.
bool coset_sum_invariance(const SpinAssignment& a, unsigned alpha);

}  // namespace homtor::rohlin
