#include "homtor/rohlin.hpp"

#include <stdexcept>
#include <string>

#include "homtor/errors.hpp"

namespace homtor::rohlin {

SpinAssignment::SpinAssignment(int dim, Mode mode) : dim_(dim), mode_(mode) {
  if (dim != 3 && dim != 4)
    throw std::invalid_argument("spin assignments live in dimension 3 or 4");
  values_.assign(1u << dim, 0);
}

int SpinAssignment::value(unsigned sigma) const {
  if (sigma >= size()) throw std::invalid_argument("spin structure out of range");
  return values_[sigma];
}

void SpinAssignment::set_value(unsigned sigma, int v) {
  if (sigma >= size()) throw std::invalid_argument("spin structure out of range");
  int top = mode_ == Mode::z2 ? 2 : 16;
  if (v < 0 || v >= top)
    throw std::invalid_argument("value " + std::to_string(v) +
                                " outside the value group");
  values_[sigma] = std::uint8_t(v);
}

int rho_bar(const SpinAssignment& a) {
  if (a.dim() != 3)
    throw std::invalid_argument("rho_bar sums the 8 values of a 3-torus");
  int total = 0;
  for (unsigned s = 0; s < a.size(); ++s) total += a.value(s);
  return total % (a.mode() == Mode::z2 ? 2 : 16);
}

bool det3(unsigned x, unsigned y, unsigned z) {
  // expansion over F_2 along the first row
  auto bit = [](unsigned v, int i) { return (v >> i) & 1u; };
  unsigned d = 0;
  d ^= bit(x, 0) & ((bit(y, 1) & bit(z, 2)) ^ (bit(y, 2) & bit(z, 1)));
  d ^= bit(x, 1) & ((bit(y, 0) & bit(z, 2)) ^ (bit(y, 2) & bit(z, 0)));
  d ^= bit(x, 2) & ((bit(y, 0) & bit(z, 1)) ^ (bit(y, 1) & bit(z, 0)));
  return d;
}

namespace {

void require_z2_3(const SpinAssignment& a, const char* op) {
  if (a.dim() != 3 || a.mode() != Mode::z2)
    throw std::invalid_argument(std::string(op) +
                                " applies to z2 assignments in dimension 3");
}

bool defect_at(const SpinAssignment& a, unsigned base, unsigned x, unsigned y,
               unsigned z) {
  int acc = 0;
  for (unsigned s = 0; s < 8; ++s) {
    unsigned shift = ((s & 1) ? x : 0) ^ ((s & 2) ? y : 0) ^ ((s & 4) ? z : 0);
    acc ^= a.value((base ^ shift) & 7u);
  }
  return acc;
}

}  // namespace

bool turaev_defect(const SpinAssignment& a, unsigned x, unsigned y, unsigned z) {
  require_z2_3(a, "turaev_defect");
  bool d = defect_at(a, 0, x, y, z);
  for (unsigned base = 1; base < 8; ++base)
    if (defect_at(a, base, x, y, z) != d)
      throw invariant_error("third difference depends on the base point");
  return d;
}

bool is_turaev_consistent(const SpinAssignment& a, bool t) {
  require_z2_3(a, "is_turaev_consistent");
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y)
      for (unsigned z = 0; z < 8; ++z)
        if (turaev_defect(a, x, y, z) != (t && det3(x, y, z))) return false;
  return true;
}

std::vector<SpinAssignment> enumerate_consistent(bool t) {
  std::vector<SpinAssignment> out;
  for (unsigned code = 0; code < 256; ++code) {
    SpinAssignment a(3, Mode::z2);
    for (unsigned s = 0; s < 8; ++s) a.set_value(s, (code >> s) & 1u);
    if (is_turaev_consistent(a, t)) out.push_back(a);
  }
  return out;
}

bool coset_sum_invariance(const SpinAssignment& a, unsigned alpha) {
  if (a.dim() != 4)
    throw std::invalid_argument("coset sums are taken in dimension 4");
  if (alpha == 0 || alpha >= 16)
    throw std::invalid_argument("alpha must be a nonzero direction");
  for (unsigned s = 0; s < 16; ++s)
    if (a.value(s) != a.value(s ^ alpha))
      throw std::invalid_argument("assignment is not alpha-periodic");

  auto parity = [](unsigned m, unsigned v) {
    return __builtin_popcount(m & v) & 1;
  };
  int modulus = a.mode() == Mode::z2 ? 2 : 16;
  int expected = -1;
  for (unsigned m = 1; m < 16; ++m) {  // functional cutting out a complement
    if (!parity(m, alpha)) continue;
    for (unsigned base = 0; base < 16; ++base) {
      int sum = 0;
      for (unsigned s = 0; s < 16; ++s)
        if (!parity(m, s ^ base)) sum += a.value(s);
      sum %= modulus;
      if (expected < 0) expected = sum;
      if (sum != expected) return false;
    }
  }
  return true;
}

}  // namespace homtor::rohlin
