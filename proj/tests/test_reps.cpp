#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "homtor/errors.hpp"
#include "homtor/reps.hpp"
#include "oracles.hpp"

using homtor::invariant_error;
using namespace homtor;
using rep::ClassKind;
using rep::ProjRep;
using rep::RepClass;
using rep::W2Bits;

namespace {

W2Bits pullback_pattern(bool sigma) { return {4, true, false, sigma, false, false, false}; }
W2Bits mirrored_pattern(bool sigma) { return {4, false, true, sigma, false, false, false}; }
W2Bits klein_pattern() { return {4, false, false, false, false, false, true}; }

std::shared_ptr<const grp::Presentation> t4(int q) {
  return std::make_shared<const grp::Presentation>(grp::t4_group(q));
}

ProjRep make_rep(std::shared_ptr<const grp::Presentation> pres, int n,
                 const std::vector<std::pair<std::string, std::string>>& imgs) {
  ProjRep r;
  r.images.assign(pres->generators.size(), bd::Element::identity(n));
  for (const auto& [gen, lit] : imgs) {
    int g = pres->generator_index(gen);
    REQUIRE(g >= 0);
    r.images[g] = bd::parse_element(lit, n);
  }
  r.pres = std::move(pres);
  return r;
}

const RepClass& class_kl(const std::vector<RepClass>& cs, int k, int l) {
  for (const auto& c : cs)
    if (c.k == k && c.l == l) return c;
  REQUIRE(false);
  return cs.front();
}

// character masks in t4 generator order (x, y, u, v, a, b)
constexpr unsigned chi_x = 1, chi_y = 2, chi_u = 4, chi_v = 8;
constexpr unsigned chi_xab = 1 + 16 + 32;

}  // namespace

TEST_CASE("eval and relator signs on the special class") {
  auto cs = rep::solve_t3(3, pullback_pattern(false));
  const RepClass& sp = class_kl(cs, 3, 3);
  REQUIRE(sp.kind == ClassKind::special);
  const grp::Presentation& p = *sp.rep.pres;

  // a^3 x evaluates to +1 here: the a-image is a fourth root of -1 cubed
  // against x = i.
  grp::Word w = grp::Word::single(p.generator_index("a"), 3) *
                grp::Word::single(p.generator_index("x"));
  CHECK(rep::eval(sp.rep, w).is_identity());

  // sign pattern over the twelve relators of the rank-4 family group
  auto signs = rep::relator_signs(sp.rep);
  REQUIRE(signs.size() == 12);
  std::vector<bool> expected = {true,  false, false, false, false, false,
                                false, false, false, false, true,  true};
  CHECK(signs == expected);
  CHECK(rep::is_projective(sp.rep));
}

TEST_CASE("a^q x sign across classes tracks k mod 4") {
  auto cs = rep::solve_t3(5, pullback_pattern(true));
  for (const auto& c : cs) {
    auto signs = rep::relator_signs(c.rep);
    CHECK(signs[9] == (c.k % 4 == 1));  // relator a^q x
  }
}

TEST_CASE("non pi-rotation x image is not projective") {
  auto pres = t4(3);
  ProjRep bad = make_rep(pres, 12,
                         {{"x", "e(1/12)"},
                          {"y", "1"},
                          {"u", "j"},
                          {"v", "1"},
                          {"a", "i"},
                          {"b", "i"}});
  CHECK_FALSE(rep::is_projective(bad));
  CHECK_THROWS_AS(rep::relator_signs(bad), std::invalid_argument);
}

TEST_CASE("trivial rep is projective with zero w2") {
  auto pres = t4(3);
  ProjRep triv = make_rep(pres, 12, {});
  CHECK(rep::is_projective(triv));
  auto signs = rep::relator_signs(triv);
  CHECK(std::none_of(signs.begin(), signs.end(), [](bool b) { return b; }));
  CHECK(rep::w2_eval(triv).is_zero());
  // zero w2 has no orbit census
  CHECK_THROWS_AS(rep::orbit_analysis(triv), std::invalid_argument);
}

TEST_CASE("w2_eval reproduces the requested pattern") {
  for (bool sigma : {false, true}) {
    for (int q : {1, 3, 5}) {
      for (const auto& c : rep::solve_t3(q, pullback_pattern(sigma))) {
        W2Bits w = rep::w2_eval(c.rep);
        CHECK(w == pullback_pattern(sigma));
        CHECK(w == c.w2);
      }
    }
  }
  RepClass kc = rep::solve_t4_xy(3);
  W2Bits w = rep::w2_eval(kc.rep);
  CHECK(w == klein_pattern());
  CHECK_FALSE(w.is_zero());
}

TEST_CASE("solver class lists: size, labels, kinds, orbits") {
  for (int q : {1, 3, 5, 7, 9}) {
    auto cs = rep::solve_t3(q, pullback_pattern(false));
    CHECK((int)cs.size() == (q * q + 1) / 2);
    int specials = 0, eights = 0;
    for (const auto& c : cs) {
      CHECK(c.q == q);
      CHECK(c.k % 2 == 1);
      CHECK(c.l % 2 == 1);
      CHECK(c.k >= 1);
      CHECK(c.k <= q);
      if (c.kind == ClassKind::special) {
        ++specials;
        CHECK(c.k == q);
        CHECK(c.l == q);
        CHECK(c.orbit.orbit_size == 4);
      } else {
        ++eights;
        CHECK(c.orbit.orbit_size == 8);
      }
      CHECK(c.orbit.orbit_size * (int)c.orbit.stabilizer.size() == 16);
    }
    CHECK(specials == 1);
    CHECK(eights == (q * q - 1) / 2);
  }

  auto q3 = rep::solve_t3(3, pullback_pattern(true));
  std::vector<std::pair<int, int>> labels;
  for (const auto& c : q3) labels.push_back({c.k, c.l});
  std::vector<std::pair<int, int>> want = {{1, 1}, {1, 3}, {1, 5}, {3, 1}, {3, 3}};
  CHECK(labels == want);
}

TEST_CASE("solver input validation") {
  CHECK_THROWS_AS(rep::solve_t3(2, pullback_pattern(false)), std::invalid_argument);
  CHECK_THROWS_AS(rep::solve_t3(0, pullback_pattern(false)), std::invalid_argument);
  CHECK_THROWS_AS(rep::solve_t3(-3, pullback_pattern(false)), std::invalid_argument);
  CHECK_THROWS_AS(rep::solve_t4_xy(4), std::invalid_argument);

  W2Bits both = {4, true, true, false, false, false, false};
  CHECK_THROWS_AS(rep::solve_classes(3, both), std::invalid_argument);
  W2Bits zero = {4, false, false, false, false, false, false};
  CHECK_THROWS_AS(rep::solve_classes(3, zero), std::invalid_argument);
}

TEST_CASE("mirrored pattern is solved by relabeling") {
  for (bool sigma : {false, true}) {
    auto direct = rep::solve_t3(3, pullback_pattern(sigma));
    auto mirror = rep::solve_t3(3, mirrored_pattern(sigma));
    REQUIRE(mirror.size() == direct.size());
    int specials = 0;
    for (const auto& c : mirror) {
      CHECK(rep::w2_eval(c.rep) == mirrored_pattern(sigma));
      CHECK(rep::is_projective(c.rep));
      CHECK(c.orbit.orbit_size * (int)c.orbit.stabilizer.size() == 16);
      if (c.kind == ClassKind::special) {
        ++specials;
        CHECK(c.orbit.orbit_size == 4);
      } else {
        CHECK(c.orbit.orbit_size == 8);
      }
      CHECK(rep::stabilizer_cover_check(c.rep));
    }
    CHECK(specials == 1);
  }
}

TEST_CASE("dispatch accepts dim-3 patterns and the klein pattern") {
  W2Bits dim3 = {3, true, false, true, false, false, false};
  auto a = rep::solve_classes(3, dim3);
  auto b = rep::solve_classes(3, pullback_pattern(true));
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(rep::are_conjugate(a[i].rep, b[i].rep));

  auto kl = rep::solve_classes(5, klein_pattern());
  REQUIRE(kl.size() == 1);
  CHECK(kl[0].kind == ClassKind::klein);
}

TEST_CASE("klein class structure") {
  for (int q : {1, 3}) {
    RepClass c = rep::solve_t4_xy(q);
    const grp::Presentation& p = *c.rep.pres;
    int n = 4 * q;
    CHECK(c.rep.images[p.generator_index("x")] == bd::Element::i_unit(n));
    CHECK(c.rep.images[p.generator_index("y")] == bd::Element::j_unit(n));
    CHECK(c.rep.images[p.generator_index("u")].is_identity());
    CHECK(c.rep.images[p.generator_index("v")].is_identity());
    CHECK(c.rep.images[p.generator_index("a")] == bd::Element::i_unit(n));
    CHECK(c.rep.images[p.generator_index("b")] == bd::Element::i_unit(n));
    CHECK(c.orbit.orbit_size == 4);
    std::vector<rep::Character> stab = {0, chi_y, chi_xab, chi_xab | chi_y};
    CHECK(c.orbit.stabilizer == stab);
    CHECK(rep::stabilizer_cover_check(c.rep));
  }
}

TEST_CASE("consistent characters") {
  auto p3 = grp::t3_group(3);
  auto p4 = grp::t4_group(3);
  auto c3 = rep::consistent_characters(p3);
  auto c4 = rep::consistent_characters(p4);
  CHECK(c3.size() == 8);
  CHECK(c4.size() == 16);

  // closed under composition: a subgroup of the sign characters
  std::set<rep::Character> set4(c4.begin(), c4.end());
  for (auto a : c4)
    for (auto b : c4) CHECK(set4.count(a ^ b) == 1);

  // x, a, b flip only together
  CHECK_FALSE(rep::character_consistent(p4, chi_x));
  CHECK_FALSE(rep::character_consistent(p4, 16));  // a alone
  CHECK(rep::character_consistent(p4, chi_xab));
  CHECK(rep::character_consistent(p4, chi_u));
  CHECK(rep::character_consistent(p4, chi_v | chi_y));
}

TEST_CASE("chi_action basics and witnesses") {
  auto cs = rep::solve_t3(3, pullback_pattern(false));
  const RepClass& eight = class_kl(cs, 1, 1);
  const RepClass& special = class_kl(cs, 3, 3);

  // identity character: same rep
  CHECK(rep::chi_action(eight.rep, 0).images == eight.rep.images);

  // u-flip is realised by conjugation (it is in every pullback stabilizer)
  ProjRep tu = rep::chi_action(eight.rep, chi_u);
  CHECK(rep::are_conjugate(tu, eight.rep));

  // v-flip and y-flip move eight-orbit classes
  CHECK_FALSE(rep::are_conjugate(rep::chi_action(eight.rep, chi_v), eight.rep));
  CHECK_FALSE(rep::are_conjugate(rep::chi_action(eight.rep, chi_y), eight.rep));

  // x,a,b-flip stabilises the special class with sigma 0 ...
  CHECK(rep::are_conjugate(rep::chi_action(special.rep, chi_xab), special.rep));
  // ... but pairs (k,l) with (2q-k, 2q-l) on generic classes
  CHECK_FALSE(rep::are_conjugate(rep::chi_action(eight.rep, chi_xab), eight.rep));

  // inconsistent characters are rejected
  CHECK_THROWS_AS(rep::chi_action(eight.rep, chi_x), std::invalid_argument);

  // the character action never changes the underlying rotation assignment
  for (auto chi : rep::consistent_characters(*eight.rep.pres))
    CHECK(rep::so3_canonical_images(rep::chi_action(eight.rep, chi)) ==
          rep::so3_canonical_images(eight.rep));
}

TEST_CASE("chi_action composes as a group action") {
  std::vector<ProjRep> samples;
  auto cs = rep::solve_t3(3, pullback_pattern(true));
  samples.push_back(class_kl(cs, 3, 3).rep);
  samples.push_back(class_kl(cs, 1, 3).rep);
  samples.push_back(rep::solve_t4_xy(3).rep);
  for (const auto& r : samples) {
    auto chis = rep::consistent_characters(*r.pres);
    REQUIRE(chis.size() == 16);
    for (auto c1 : chis)
      for (auto c2 : chis) {
        ProjRep ab = rep::chi_action(rep::chi_action(r, c1), c2);
        ProjRep combined = rep::chi_action(r, c1 ^ c2);
        CHECK(ab.images == combined.images);
        CHECK(rep::are_conjugate(ab, combined));
      }
  }
}

TEST_CASE("orbit stabilizers match the derived subgroups") {
  auto s0 = rep::solve_t3(3, pullback_pattern(false));
  auto s1 = rep::solve_t3(3, pullback_pattern(true));

  std::vector<rep::Character> eight_stab = {0, chi_u};
  CHECK(class_kl(s0, 1, 1).orbit.stabilizer == eight_stab);
  CHECK(class_kl(s1, 1, 5).orbit.stabilizer == eight_stab);

  std::vector<rep::Character> sp0 = {0, chi_u, chi_xab, chi_xab | chi_u};
  CHECK(class_kl(s0, 3, 3).orbit.stabilizer == sp0);

  std::vector<rep::Character> sp1 = {0, chi_u, chi_xab | chi_v,
                                     chi_xab | chi_v | chi_u};
  CHECK(class_kl(s1, 3, 3).orbit.stabilizer == sp1);
}

TEST_CASE("are_conjugate: canonical forms versus the conjugator sweep") {
  auto cs = rep::solve_t3(3, pullback_pattern(false));

  // reflexive, and distinct labels are distinct classes
  for (const auto& c : cs) CHECK(rep::are_conjugate(c.rep, c.rep));
  CHECK_FALSE(rep::are_conjugate(class_kl(cs, 1, 1).rep, class_kl(cs, 1, 3).rep));

  // exhaustive cross-check against literal conjugation by every element of
  // the double-modulus binary dihedral group
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j)
      CHECK(rep::are_conjugate(cs[i].rep, cs[j].rep) ==
            oracles::conjugate_by_sweep(cs[i].rep, cs[j].rep));

  // ... including on character translates, where conjugacy is nontrivial
  const ProjRep& r = class_kl(cs, 1, 3).rep;
  for (auto chi : rep::consistent_characters(*r.pres)) {
    ProjRep t = rep::chi_action(r, chi);
    CHECK(rep::are_conjugate(r, t) == oracles::conjugate_by_sweep(r, t));
  }
}

TEST_CASE("are_conjugate is an equivalence relation on translates") {
  auto cs = rep::solve_t3(3, pullback_pattern(true));
  std::vector<ProjRep> reps;
  for (const auto& c : cs)
    for (auto chi : rep::consistent_characters(*c.rep.pres))
      reps.push_back(rep::chi_action(c.rep, chi));

  // symmetry and transitivity via canonical forms
  std::vector<std::vector<bd::Element>> forms;
  forms.reserve(reps.size());
  for (const auto& r : reps) forms.push_back(rep::canonical_images(r));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i; j < reps.size(); ++j)
      CHECK(rep::are_conjugate(reps[i], reps[j]) == (forms[i] == forms[j]));
}

TEST_CASE("the mirrored label (2q-k, 2q-l) names the same class") {
  auto cs = rep::solve_t3(3, pullback_pattern(false));
  const RepClass& c = class_kl(cs, 1, 3);  // t_v = 4
  auto pres = c.rep.pres;

  // conjugate of the representative by the y-axis pi-rotation, whose
  // natural parameters read (2q-k, 2q-l) = (5, 3)
  ProjRep mirror = make_rep(pres, 12,
                            {{"x", "-i"},
                             {"y", "1"},
                             {"u", "j"},
                             {"v", "e(20/12)"},
                             {"a", "e(22/12)"},
                             {"b", "e(18/12)"}});
  CHECK(rep::is_projective(mirror));
  CHECK(rep::are_conjugate(c.rep, mirror));

  // the x = +i representative with those parameters is the character
  // translate: same rotation assignment, not the same lift class
  ProjRep translate = make_rep(pres, 12,
                               {{"x", "i"},
                                {"y", "1"},
                                {"u", "j"},
                                {"v", "e(8/12)"},
                                {"a", "e(10/12)"},
                                {"b", "e(6/12)"}});
  CHECK(rep::is_projective(translate));
  CHECK(rep::w2_eval(translate) == pullback_pattern(false));
  CHECK(rep::so3_canonical_images(translate) == rep::so3_canonical_images(c.rep));
  CHECK_FALSE(rep::are_conjugate(c.rep, translate));
  CHECK(rep::are_conjugate(rep::chi_action(c.rep, chi_xab | chi_v), translate));
}

TEST_CASE("are_conjugate input validation") {
  auto c1 = rep::solve_t3(1, pullback_pattern(false));
  auto c3 = rep::solve_t3(3, pullback_pattern(false));
  CHECK_THROWS_AS(rep::are_conjugate(c1[0].rep, c3[0].rep), std::invalid_argument);
}

TEST_CASE("stabilizer cover check on every enumerated class") {
  for (int q : {1, 3, 5}) {
    for (bool sigma : {false, true})
      for (const auto& c : rep::solve_t3(q, pullback_pattern(sigma)))
        CHECK(rep::stabilizer_cover_check(c.rep));
    CHECK(rep::stabilizer_cover_check(rep::solve_t4_xy(q).rep));
  }
}

TEST_CASE("lambda counts") {
  for (int q : {1, 3, 5, 7, 9}) {
    for (bool sigma : {false, true}) {
      CHECK(rep::lambda_bar(q, pullback_pattern(sigma)) == q * q);
      CHECK(rep::lambda_weighted(q, pullback_pattern(sigma)) == q * q);
    }
    CHECK(rep::lambda_bar(q, klein_pattern()) == 1);
    CHECK(rep::lambda_weighted(q, klein_pattern()) == 1);
  }
  CHECK(rep::lambda_bar(3, mirrored_pattern(false)) == 9);
}

TEST_CASE("parity report") {
  for (int q : {1, 3, 9}) {
    for (const W2Bits& pat : {pullback_pattern(false), klein_pattern()}) {
      auto rp = rep::parity_check(q, pat);
      CHECK(rp.lambda_mod2 == 1);
      CHECK(rp.four_orbit_mod2 == 1);
      CHECK(rp.det_mod2 == 1);
      CHECK(rp.pass);
    }
  }
}

TEST_CASE("lambda_report aggregates the class data") {
  auto lr = rep::lambda_report(3, pullback_pattern(true));
  CHECK(lr.q == 3);
  CHECK((int)lr.classes.size() == 5);
  CHECK(lr.lambda_bar == 9);
  CHECK(lr.lambda_weighted == 9);
  CHECK(lr.parity.pass);
}

TEST_CASE("brute force enumeration matches the solver") {
  for (int q : {1, 3}) {
    for (bool sigma : {false, true}) {
      auto want = rep::solve_t3(q, pullback_pattern(sigma));
      auto got = rep::brute_force_classes(q, pullback_pattern(sigma), 4 * q);
      REQUIRE(got.size() == want.size());
      for (size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].k == want[i].k);
        CHECK(got[i].l == want[i].l);
        CHECK(got[i].kind == want[i].kind);
        CHECK(got[i].orbit.orbit_size == want[i].orbit.orbit_size);
        CHECK(rep::are_conjugate(got[i].rep, want[i].rep));
      }
    }
  }
}

TEST_CASE("brute force guards") {
  CHECK_THROWS_AS(rep::brute_force_classes(3, pullback_pattern(false), 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(rep::brute_force_classes(3, mirrored_pattern(false), 12),
                  std::invalid_argument);
  setenv("HOMTOR_ORACLE_MAX_N", "8", 1);
  CHECK_THROWS_AS(rep::brute_force_classes(3, pullback_pattern(false), 12),
                  std::invalid_argument);
  unsetenv("HOMTOR_ORACLE_MAX_N");
  CHECK_NOTHROW(rep::brute_force_classes(1, pullback_pattern(false), 4));
}

TEST_CASE("character bit strings use the (u, v, a, y) coordinates") {
  auto p = grp::t4_group(3);
  CHECK(rep::character_bits(p, 0) == "0000");
  CHECK(rep::character_bits(p, chi_u) == "1000");
  CHECK(rep::character_bits(p, chi_v) == "0100");
  CHECK(rep::character_bits(p, chi_xab) == "0010");
  CHECK(rep::character_bits(p, chi_y) == "0001");
  CHECK(rep::character_bits(p, chi_xab | chi_v | chi_u) == "1110");
}
