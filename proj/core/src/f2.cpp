#include "homtor/f2.hpp"

#include <algorithm>
#include <stdexcept>

namespace homtor::f2 {

TwoForm wedge(OneClass a, OneClass b) {
  unsigned out = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      // coefficient of a_i ^ a_j in a^b: a_i b_j + a_j b_i
      bool c = (a.coeff(i) && b.coeff(j)) ^ (a.coeff(j) && b.coeff(i));
      if (c) out |= 1u << TwoForm::pair_index(i, j);
    }
  return TwoForm(out);
}

bool pfaffian(TwoForm w) {
  bool c12 = w.coeff(0, 1), c34 = w.coeff(2, 3);
  bool c13 = w.coeff(0, 2), c24 = w.coeff(1, 3);
  bool c14 = w.coeff(0, 3), c23 = w.coeff(1, 2);
  return (c12 && c34) ^ (c13 && c24) ^ (c14 && c23);
}

Decomposition decompose(TwoForm w) {
  Decomposition d;
  if (w.is_zero()) {
    d.status = Decomposition::Status::zero;
    return d;
  }
  if (pfaffian(w)) {
    d.status = Decomposition::Status::indecomposable;
    return d;
  }
  for (unsigned b = 1; b < 16; ++b)
    for (unsigned g = 1; g < 16; ++g)
      if (wedge(OneClass(b), OneClass(g)) == w) {
        d.status = Decomposition::Status::ok;
        d.beta = OneClass(b);
        d.gamma = OneClass(g);
        return d;
      }
  // a nonzero two-form with zero pfaffian always factors
  throw std::logic_error("decompose: pfaffian-zero form with no factorisation");
}

namespace {

// Determinant over F_2 of the 4x4 matrix whose rows are the bit masks.
bool det4(std::array<unsigned, 4> rows) {
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r)
      if ((rows[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(rows[col], rows[pivot]);
    for (int r = col + 1; r < 4; ++r)
      if ((rows[r] >> col) & 1u) rows[r] ^= rows[col];
  }
  return true;
}

}  // namespace

bool quad_eval(OneClass x1, OneClass x2, OneClass x3, OneClass x4,
               const TorusRing& ring) {
  if (!ring.det_bit) return false;
  return det4({x1.bits(), x2.bits(), x3.bits(), x4.bits()});
}

bool det_basis_invariance(const TorusRing& ring) {
  for (unsigned b1 = 1; b1 < 16; ++b1)
    for (unsigned b2 = 1; b2 < 16; ++b2)
      for (unsigned b3 = 1; b3 < 16; ++b3)
        for (unsigned b4 = 1; b4 < 16; ++b4) {
          if (!det4({b1, b2, b3, b4})) continue;
          if (quad_eval(OneClass(b1), OneClass(b2), OneClass(b3), OneClass(b4),
                        ring) != ring.det_bit)
            return false;
        }
  return true;
}

bool pair_eval(TwoForm w, OneClass x, OneClass y, const TorusRing& ring) {
  bool acc = false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (w.coeff(i, j))
        acc ^= quad_eval(OneClass::basis(i), OneClass::basis(j), x, y, ring);
  return acc;
}

int pontrjagin_square(TwoForm w, const TorusRing& ring) {
  return ring.det_bit && pfaffian(w) ? 2 : 0;
}

bool is_admissible(TwoForm w, const TorusRing& ring) {
  if (w.is_zero()) return false;
  if (pontrjagin_square(w, ring) != 0) return false;
  if (ring.det_bit) return true;
  // Even case: need one-classes pairing nontrivially with w.
  for (unsigned x = 1; x < 16; ++x)
    for (unsigned y = 1; y < 16; ++y)
      if (pair_eval(w, OneClass(x), OneClass(y), ring)) return true;
  return false;
}

std::vector<KleinClass> klein_census(TwoForm w) {
  if (w.is_zero())
    throw std::invalid_argument("klein_census: w must be nonzero");
  std::vector<KleinClass> out;
  for (unsigned b = 1; b < 16; ++b)
    for (unsigned g = 1; g < 16; ++g) {
      if (b == g) continue;
      if (!(wedge(OneClass(b), OneClass(g)) == w)) continue;
      // Canonical basis of the plane span{b, g}: the two smallest of the
      // three nonzero vectors b, g, b+g.  Any two of them wedge to w.
      std::array<unsigned, 3> tri = {b, g, b ^ g};
      std::sort(tri.begin(), tri.end());
      KleinClass cls{OneClass(tri[0]), OneClass(tri[1])};
      if (std::find(out.begin(), out.end(), cls) == out.end()) out.push_back(cls);
    }
  std::sort(out.begin(), out.end());
  return out;
}

int count_four_orbits(TwoForm w, const TorusRing& ring) {
  if (w.is_zero())
    throw std::invalid_argument("count_four_orbits: w must be nonzero");
  if (!ring.det_bit) return 0;
  return pfaffian(w) ? 0 : 1;
}

std::string to_string(OneClass a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = 0; i < 4; ++i)
    if (a.coeff(i)) {
      if (!out.empty()) out += '+';
      out += std::to_string(i + 1);
    }
  return out;
}

std::string to_string(TwoForm w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (w.coeff(i, j)) {
        if (!out.empty()) out += '+';
        out += std::to_string(i + 1);
        out += std::to_string(j + 1);
      }
  return out;
}

namespace {

std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> terms;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == '+') {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  terms.push_back(cur);
  return terms;
}

int basis_digit(char c, const std::string& text) {
  if (c < '1' || c > '4')
    throw std::invalid_argument("bad basis index in '" + text + "'");
  return c - '1';
}

}  // namespace

OneClass parse_one_class(const std::string& text) {
  auto terms = split_terms(text);
  if (terms.size() == 1 && terms[0] == "0") return OneClass();
  unsigned bits = 0;
  for (const auto& t : terms) {
    std::string body = t;
    if (!body.empty() && body[0] == 'a') body = body.substr(1);
    if (body.size() != 1)
      throw std::invalid_argument("bad one-class term in '" + text + "'");
    bits ^= 1u << basis_digit(body[0], text);
  }
  return OneClass(bits);
}

TwoForm parse_two_form(const std::string& text) {
  auto terms = split_terms(text);
  if (terms.size() == 1 && terms[0] == "0") return TwoForm();
  unsigned bits = 0;
  for (const auto& t : terms) {
    if (t.size() != 2)
      throw std::invalid_argument("bad two-form term in '" + text + "'");
    int i = basis_digit(t[0], text);
    int j = basis_digit(t[1], text);
    if (i == j)
      throw std::invalid_argument("repeated index in two-form term '" + t + "'");
    if (i > j) std::swap(i, j);
    bits ^= 1u << TwoForm::pair_index(i, j);
  }
  return TwoForm(bits);
}

}  // namespace homtor::f2
