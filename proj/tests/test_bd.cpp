#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "homtor/bd.hpp"

using namespace homtor::bd;

namespace {

std::vector<Element> whole_group(int n) {
  std::vector<Element> out;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2 * n; ++t) out.emplace_back(n, s == 1, t);
  return out;
}

}  // namespace

TEST_CASE("quaternion constants") {
  int n = 4;
  Element i = Element::i_unit(n), j = Element::j_unit(n), k = Element::k_unit(n);
  CHECK(i * i == Element::minus_one(n));
  CHECK(j * j == Element::minus_one(n));
  CHECK(k * k == Element::minus_one(n));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * j * k == Element::minus_one(n));
  CHECK(commutator(i, j) == Element::minus_one(n));
}

TEST_CASE("rotation arithmetic") {
  for (int q : {1, 3, 5}) {
    int n = 4 * q;
    // a rotation by pi/(2q) raised to the q is i
    CHECK(pow(Element::rotation(n, 2), q) == Element::i_unit(n));
    CHECK(pow(Element::rotation(n, 2), -q) == -Element::i_unit(n));
    // j e^{i t} j^-1 = e^{-i t}
    for (int t = 0; t < 2 * n; ++t)
      CHECK(conjugate(Element::j_unit(n), Element::rotation(n, t)) ==
            Element::rotation(n, -t));
    // [j-coset, rotation] doubles the angle and inverts
    for (int t = 0; t < 2 * n; ++t)
      CHECK(commutator(Element::j_unit(n), Element::rotation(n, t)) ==
            Element::rotation(n, -2 * t));
  }
}

TEST_CASE("mixed moduli are rejected") {
  CHECK_THROWS_AS(Element::i_unit(4) * Element::i_unit(8), std::invalid_argument);
  CHECK_THROWS_AS(Element::i_unit(3), std::invalid_argument);
  CHECK_THROWS_AS(Element(0, false, 0), std::invalid_argument);
}

TEST_CASE("group axioms, exhaustive for small moduli") {
  for (int n : {1, 2, 3, 4, 6, 12}) {
    auto g = whole_group(n);
    CHECK(g.size() == size_t(4 * n));
    Element e = Element::identity(n);
    for (const auto& a : g) {
      CHECK(a * e == a);
      CHECK(e * a == a);
      CHECK(a * a.inverse() == e);
      CHECK(a.inverse() * a == e);
    }
    for (const auto& a : g)
      for (const auto& b : g)
        for (const auto& c : g) CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("group axioms, randomized for the family moduli") {
  std::mt19937 rng(271828);
  for (int n : {28, 44, 60}) {
    std::uniform_int_distribution<int> angle(0, 2 * n - 1), part(0, 1);
    auto pick = [&] { return Element(n, part(rng) == 1, angle(rng)); };
    for (int trial = 0; trial < 10000; ++trial) {
      Element a = pick(), b = pick(), c = pick();
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * b).inverse() == b.inverse() * a.inverse());
      CHECK(pow(a, 5) == a * a * a * a * a);
      CHECK(pow(a, -3) * pow(a, 3) == Element::identity(n));
    }
  }
}

TEST_CASE("center is +-1 once the group is nonabelian") {
  for (int n : {2, 3, 4, 6, 12}) {
    auto g = whole_group(n);
    for (const auto& a : g) {
      bool central = true;
      for (const auto& b : g)
        if (!(a * b == b * a)) central = false;
      CHECK(central == a.is_central());
    }
  }
}

TEST_CASE("so3 identifies exactly the antipodal pairs") {
  for (int n : {2, 4, 12}) {
    auto g = whole_group(n);
    for (const auto& a : g)
      for (const auto& b : g) {
        bool same = So3(a) == So3(b);
        CHECK(same == (a == b || a == -b));
      }
  }
}

TEST_CASE("lifts come back canonical first") {
  int n = 12;
  auto [l1, l2] = lifts(So3(-Element::i_unit(n)));
  CHECK(l1 == Element::i_unit(n));
  CHECK(l2 == -Element::i_unit(n));
  CHECK(l1.angle_num() < n);
  for (const auto& a : whole_group(n)) {
    auto [c1, c2] = lifts(So3(a));
    CHECK((c1 == a || c2 == a));
    CHECK(c1 == -c2);
  }
}

TEST_CASE("rescale embeds compatibly with multiplication") {
  int n = 4, m = 12;
  for (const auto& a : whole_group(n))
    for (const auto& b : whole_group(n))
      CHECK(rescale(a * b, m) == rescale(a, m) * rescale(b, m));
  CHECK_THROWS_AS(rescale(Element::i_unit(4), 6), std::invalid_argument);
  CHECK(rescale(Element::i_unit(4), 8) == Element::i_unit(8));
}

TEST_CASE("element text round trips") {
  CHECK(to_string(Element::i_unit(4)) == "e(2/4)");
  CHECK(to_string(Element::j_unit(4)) == "e(0/4)j");
  CHECK(to_string(-Element::identity(4)) == "e(4/4)");
  CHECK(parse_element("i", 12) == Element::i_unit(12));
  CHECK(parse_element("-k", 12) == -Element::k_unit(12));
  CHECK(parse_element("e(7/12)j", 12) == Element(12, true, 7));
  CHECK_THROWS_AS(parse_element("e(1/8)", 12), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("q", 12), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("i", 3), std::invalid_argument);
  for (const auto& a : whole_group(12))
    CHECK(parse_element(to_string(a), 12) == a);
}
