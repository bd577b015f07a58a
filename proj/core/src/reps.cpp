#include "homtor/reps.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "homtor/errors.hpp"

namespace homtor::rep {

namespace {

void require_valid(const ProjRep& r) {
  if (!r.pres) throw std::invalid_argument("representation has no presentation");
  if (r.images.size() != r.pres->generators.size())
    throw std::invalid_argument("one image per generator required");
  for (const auto& e : r.images)
    if (e.modulus() != r.images[0].modulus())
      throw std::invalid_argument("images must share one modulus");
}

int named_gen(const grp::Presentation& p, const char* name) {
  int g = p.generator_index(name);
  if (g < 0)
    throw std::invalid_argument(std::string("presentation lacks generator '") +
                                name + "'");
  return g;
}

}  // namespace

bd::Element eval(const ProjRep& r, const grp::Word& w) {
  require_valid(r);
  bd::Element acc = bd::Element::identity(r.modulus());
  for (const auto& l : w.letters()) acc = acc * bd::pow(r.images.at(l.gen), l.exp);
  return acc;
}

std::vector<bool> relator_signs(const ProjRep& r) {
  require_valid(r);
  std::vector<bool> signs;
  signs.reserve(r.pres->relators.size());
  for (const auto& rel : r.pres->relators) {
    bd::Element v = eval(r, rel);
    if (!v.is_central())
      throw std::invalid_argument("relator '" + grp::to_string(rel, *r.pres) +
                                  "' evaluates to " + bd::to_string(v) +
                                  ", not +-1");
    signs.push_back(v.is_minus_one());
  }
  return signs;
}

bool is_projective(const ProjRep& r) {
  require_valid(r);
  for (const auto& rel : r.pres->relators)
    if (!eval(r, rel).is_central()) return false;
  return true;
}

bool character_consistent(const grp::Presentation& p, Character chi) {
  for (const auto& rel : p.relators) {
    int parity = 0;
    for (const auto& l : rel.letters())
      if ((chi >> l.gen) & 1u) parity ^= l.exp & 1;
    if (parity) return false;
  }
  return true;
}

std::vector<Character> consistent_characters(const grp::Presentation& p) {
  std::vector<Character> out;
  for (Character chi = 0; chi < (1u << p.generators.size()); ++chi)
    if (character_consistent(p, chi)) out.push_back(chi);
  return out;
}

ProjRep chi_action(const ProjRep& r, Character chi) {
  require_valid(r);
  if (chi >> r.pres->generators.size())
    throw std::invalid_argument("character has bits beyond the generators");
  if (!character_consistent(*r.pres, chi))
    throw std::invalid_argument("character is not defined on H_1(X;Z/2)");
  ProjRep out = r;
  for (size_t g = 0; g < out.images.size(); ++g)
    if ((chi >> g) & 1u) out.images[g] = -out.images[g];
  return out;
}

namespace {

// Conjugation by e^{i pi d/(2N)} (flip = 0) or e^{i pi d/(2N)} j (flip = 1):
// the full normalizer of the rotation circle, discretised to the maps that
// preserve the modulus-N model.
bd::Element normalizer_map(const bd::Element& e, bool flip, int d) {
  int n = e.modulus();
  if (!e.j_part())
    return bd::Element::rotation(n, flip ? -e.angle_num() : e.angle_num());
  return {n, true, flip ? d - e.angle_num() : e.angle_num() + d};
}

}  // namespace

std::vector<bd::Element> canonical_images(const ProjRep& r) {
  require_valid(r);
  int n2 = 2 * r.modulus();
  std::vector<bd::Element> best = r.images;
  std::vector<bd::Element> cur = r.images;
  for (int flip = 0; flip < 2; ++flip)
    for (int d = 0; d < n2; ++d) {
      for (size_t g = 0; g < r.images.size(); ++g)
        cur[g] = normalizer_map(r.images[g], flip, d);
      if (cur < best) best = cur;
    }
  return best;
}

std::vector<bd::Element> so3_canonical_images(const ProjRep& r) {
  require_valid(r);
  int n2 = 2 * r.modulus();
  std::vector<bd::Element> best;
  std::vector<bd::Element> cur(r.images.size(), bd::Element::identity(r.modulus()));
  for (int flip = 0; flip < 2; ++flip)
    for (int d = 0; d < n2; ++d) {
      for (size_t g = 0; g < r.images.size(); ++g)
        cur[g] = bd::So3(normalizer_map(r.images[g], flip, d)).rep();
      if (best.empty() || cur < best) best = cur;
    }
  return best;
}

bool are_conjugate(const ProjRep& r1, const ProjRep& r2) {
  require_valid(r1);
  require_valid(r2);
  if (!(*r1.pres == *r2.pres))
    throw std::invalid_argument("conjugacy needs a common presentation");
  if (r1.modulus() != r2.modulus())
    throw std::invalid_argument("conjugacy needs a common modulus");
  return canonical_images(r1) == canonical_images(r2);
}

namespace {

int family_q(const grp::Presentation& p) {
  if (!p.family_q)
    throw std::invalid_argument("operation needs a torus family presentation");
  return *p.family_q;
}

bool torus_bit(const bd::Element& a, const bd::Element& b, const char* ga,
               const char* gb) {
  bd::Element c = bd::commutator(a, b);
  if (!c.is_central())
    throw std::invalid_argument(std::string("images of ") + ga + " and " + gb +
                                " do not commute in SO(3)");
  return c.is_minus_one();
}

}  // namespace

W2Bits w2_eval(const ProjRep& r) {
  require_valid(r);
  relator_signs(r);  // rejects non-projective assignments
  const grp::Presentation& p = *r.pres;
  int q = family_q(p);
  const bd::Element& x = r.images[named_gen(p, "x")];
  const bd::Element& u = r.images[named_gen(p, "u")];
  const bd::Element& v = r.images[named_gen(p, "v")];
  const bd::Element& a = r.images[named_gen(p, "a")];
  bool has_y = p.generator_index("y") >= 0;

  W2Bits w;
  w.dim = has_y ? 4 : 3;
  w.ux = torus_bit(u, x, "u", "x");
  w.vx = torus_bit(v, x, "v", "x");
  if (has_y) {
    const bd::Element& y = r.images[named_gen(p, "y")];
    w.uy = torus_bit(u, y, "u", "y");
    w.vy = torus_bit(v, y, "v", "y");
    w.xy = torus_bit(x, y, "x", "y");
  }
  // Renormalise b so that [u,v] a b = 1 holds exactly, then the sign of
  // a^q b^q is independent of every remaining lift choice.
  bd::Element b_exact = a.inverse() * bd::commutator(u, v).inverse();
  bd::Element s = bd::pow(a, q) * bd::pow(b_exact, q);
  if (!s.is_central())
    throw invariant_error("sigma evaluation produced a non-central value");
  w.sigma = s.is_minus_one();
  return w;
}

OrbitData orbit_analysis(const ProjRep& r) {
  require_valid(r);
  if (w2_eval(r).is_zero())
    throw std::invalid_argument("orbit analysis needs w2 != 0");
  auto chars = consistent_characters(*r.pres);
  if (chars.size() != 16)
    throw std::invalid_argument(
        "orbit analysis runs over the 16 characters of the 4-torus family");
  OrbitData out;
  auto canon = canonical_images(r);
  for (Character chi : chars)
    if (canonical_images(chi_action(r, chi)) == canon)
      out.stabilizer.push_back(chi);
  std::sort(out.stabilizer.begin(), out.stabilizer.end());
  out.orbit_size = int(chars.size() / out.stabilizer.size());
  if (out.orbit_size < 4)
    throw invariant_error("orbit of size " + std::to_string(out.orbit_size) +
                          " contradicts w2 != 0");
  return out;
}

namespace {

// Image of the subgroup acting trivially mod 2: closure of the squares and
// commutators of the generator images under multiplication and conjugation
// by the images.  Signs of lifts do not change the subgroup generated.
std::vector<bd::Element> mod2_trivial_image(const ProjRep& r) {
  std::set<bd::Element> closure;
  std::vector<bd::Element> queue;
  auto add = [&](const bd::Element& e) {
    if (closure.insert(e).second) queue.push_back(e);
  };
  add(bd::Element::identity(r.modulus()));
  for (const auto& g : r.images) add(g * g);
  for (const auto& g : r.images)
    for (const auto& h : r.images) add(bd::commutator(g, h));
  while (!queue.empty()) {
    bd::Element e = queue.back();
    queue.pop_back();
    for (const auto& s : std::vector<bd::Element>(closure.begin(), closure.end()))
      add(e * s);
    for (const auto& g : r.images) add(bd::conjugate(g, e));
  }
  return {closure.begin(), closure.end()};
}

}  // namespace

bool stabilizer_cover_check(const ProjRep& r) {
  OrbitData od = orbit_analysis(r);
  auto img = mod2_trivial_image(r);
  bool central = std::all_of(img.begin(), img.end(),
                             [](const bd::Element& e) { return e.is_central(); });
  bool abelian = true;
  for (const auto& a : img)
    for (const auto& b : img)
      if (!(bd::commutator(a, b).is_identity())) abelian = false;
  size_t stab = od.stabilizer.size();
  if (central) return stab == 4;
  if (abelian) return stab == 2;
  return stab == 1;
}

namespace {

std::shared_ptr<const grp::Presentation> shared_t4(int q) {
  return std::make_shared<const grp::Presentation>(grp::t4_group(q));
}

// (k, l) carried into the canonical half-domain: (k, l) and (2q-k, 2q-l)
// label the same class (their rotation representations are conjugate, via
// the j-coset flip combined with a sign character).
std::pair<int, int> canonical_kl(int k, int l, int q) {
  k = ((k % (2 * q)) + 2 * q) % (2 * q);
  l = ((l % (2 * q)) + 2 * q) % (2 * q);
  if (k > q || (k == q && l > q)) {
    k = 2 * q - k;
    l = 2 * q - l;
  }
  return {k, l};
}

RepClass make_class(ClassKind kind, int q, int k, int l, ProjRep t4rep) {
  RepClass c;
  c.kind = kind;
  c.q = q;
  c.k = k;
  c.l = l;
  c.w2 = w2_eval(t4rep);
  c.orbit = orbit_analysis(t4rep);
  c.rep = std::move(t4rep);
  return c;
}

// Parameters of a pullback-type class, read off the stored images.
std::pair<int, int> extract_kl(const ProjRep& r, int q) {
  const grp::Presentation& p = *r.pres;
  const bd::Element& a = r.images[named_gen(p, "a")];
  const bd::Element& b = r.images[named_gen(p, "b")];
  if (a.j_part() || b.j_part() || a.angle_num() % 2 || b.angle_num() % 2)
    throw invariant_error("pullback class with non-rotation a or b image");
  return canonical_kl(a.angle_num() / 2, b.angle_num() / 2, q);
}

ProjRep pullback_rep(int q, int k, int l, int t_v,
                     std::shared_ptr<const grp::Presentation> pres) {
  int n = 4 * q;
  ProjRep r;
  r.pres = std::move(pres);
  r.images.assign(r.pres->generators.size(), bd::Element::identity(n));
  r.images[named_gen(*r.pres, "x")] = bd::Element::i_unit(n);
  r.images[named_gen(*r.pres, "u")] = bd::Element::j_unit(n);
  r.images[named_gen(*r.pres, "v")] = bd::Element::rotation(n, t_v);
  r.images[named_gen(*r.pres, "a")] = bd::Element::rotation(n, 2 * k);
  r.images[named_gen(*r.pres, "b")] = bd::Element::rotation(n, 2 * l);
  return r;
}

void require_odd_q(int q) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("q must be odd and >= 1");
}

// u <-> v, a <-> b^-1: the automorphism of the family group that exchanges
// the two pullback patterns and fixes the sigma bit.
ProjRep swap_uv(const ProjRep& r) {
  const grp::Presentation& p = *r.pres;
  ProjRep out = r;
  out.images[named_gen(p, "u")] = r.images[named_gen(p, "v")];
  out.images[named_gen(p, "v")] = r.images[named_gen(p, "u")];
  out.images[named_gen(p, "a")] = r.images[named_gen(p, "b")].inverse();
  out.images[named_gen(p, "b")] = r.images[named_gen(p, "a")].inverse();
  return out;
}

}  // namespace

std::vector<RepClass> solve_t3(int q, const W2Bits& pattern) {
  require_odd_q(q);
  W2Bits pat = pattern;
  if (pat.dim == 4) {
    if (pat.uy || pat.vy || pat.xy)
      throw std::invalid_argument("solve_t3 covers patterns pulled back from the 3-torus quotient");
    pat = pat.restricted();
  }
  bool mirrored;
  if (pat.ux && !pat.vx)
    mirrored = false;
  else if (!pat.ux && pat.vx)
    mirrored = true;
  else
    throw std::invalid_argument(
        "unsupported w2 pattern: implemented are ux=1 vx=0 (either sigma), "
        "its u<->v mirror, and the pure xy pattern");

  auto pres = shared_t4(q);
  std::vector<RepClass> out;
  for (int k = 1; k <= q; k += 2) {
    int l_max = (k == q) ? q : 2 * q - 1;
    for (int l = 1; l <= l_max; l += 2) {
      // v must rotate by pi(k+l)/(2q) up to a half turn; exactly one of the
      // two choices carries each sigma bit.
      int t_v = (k + l) % (4 * q);
      if ((t_v % 4 == 2) != pat.sigma) t_v = (t_v + 2 * q) % (4 * q);
      ProjRep r = pullback_rep(q, k, l, t_v, pres);
      if (mirrored) r = swap_uv(r);
      auto [ck, cl] = extract_kl(r, q);
      ClassKind kind =
          (k == q && l == q) ? ClassKind::special : ClassKind::pair;
      out.push_back(make_class(kind, q, ck, cl, std::move(r)));
      W2Bits got = out.back().w2.restricted();
      if (!(got == pat))
        throw invariant_error("solver produced pattern ux=" +
                              std::to_string(got.ux) + " vx=" +
                              std::to_string(got.vx) + " sigma=" +
                              std::to_string(got.sigma) + " off the request");
    }
  }
  std::sort(out.begin(), out.end(), [](const RepClass& a, const RepClass& b) {
    return a.k != b.k ? a.k < b.k : a.l < b.l;
  });
  return out;
}

RepClass solve_t4_xy(int q) {
  require_odd_q(q);
  int n = 4 * q;
  ProjRep r;
  r.pres = shared_t4(q);
  r.images.assign(r.pres->generators.size(), bd::Element::identity(n));
  r.images[named_gen(*r.pres, "x")] = bd::Element::i_unit(n);
  r.images[named_gen(*r.pres, "y")] = bd::Element::j_unit(n);
  r.images[named_gen(*r.pres, "a")] = bd::Element::i_unit(n);
  r.images[named_gen(*r.pres, "b")] = bd::Element::i_unit(n);
  RepClass c = make_class(ClassKind::klein, q, 0, 0, std::move(r));
  W2Bits expect{4, false, false, false, false, false, true};
  if (!(c.w2 == expect))
    throw invariant_error("xy class came back with an unexpected w2 pattern");
  return c;
}

std::vector<RepClass> solve_classes(int q, const W2Bits& pattern) {
  if (pattern.dim == 4 && pattern.xy) {
    if (pattern.ux || pattern.vx || pattern.uy || pattern.vy || pattern.sigma)
      throw std::invalid_argument(
          "unsupported w2 pattern: xy is only analysed on its own");
    return {solve_t4_xy(q)};
  }
  return solve_t3(q, pattern);
}

int lambda_bar(int q, const W2Bits& pattern) {
  int total = 0;
  for (const auto& c : solve_classes(q, pattern)) total += c.orbit.orbit_size;
  if (total % 4 != 0)
    throw invariant_error("orbit mass not divisible by 4");
  return total / 4;
}

int lambda_weighted(int q, const W2Bits& pattern) {
  int total = 0;
  for (const auto& c : solve_classes(q, pattern)) {
    switch (c.orbit.orbit_size) {
      case 4: total += 1; break;
      case 8: total += 2; break;
      default: total += 4; break;
    }
  }
  return total;
}

ParityReport parity_check(int q, const W2Bits& pattern) {
  auto classes = solve_classes(q, pattern);
  ParityReport rep;
  int mass = 0, four = 0;
  for (const auto& c : classes) {
    mass += c.orbit.orbit_size;
    if (c.orbit.orbit_size == 4) ++four;
  }
  rep.lambda_mod2 = (mass / 4) % 2;
  rep.four_orbit_mod2 = four % 2;
  rep.det_mod2 = q % 2;
  rep.pass = rep.lambda_mod2 == rep.four_orbit_mod2 &&
             rep.four_orbit_mod2 == rep.det_mod2;
  return rep;
}

LambdaReport lambda_report(int q, const W2Bits& pattern) {
  LambdaReport rep;
  rep.q = q;
  rep.pattern = pattern;
  rep.classes = solve_classes(q, pattern);
  int mass = 0, four = 0;
  for (const auto& c : rep.classes) {
    mass += c.orbit.orbit_size;
    switch (c.orbit.orbit_size) {
      case 4: rep.lambda_weighted += 1; ++four; break;
      case 8: rep.lambda_weighted += 2; break;
      default: rep.lambda_weighted += 4; break;
    }
  }
  rep.lambda_bar = mass / 4;
  rep.parity.lambda_mod2 = rep.lambda_bar % 2;
  rep.parity.four_orbit_mod2 = four % 2;
  rep.parity.det_mod2 = q % 2;
  rep.parity.pass = rep.parity.lambda_mod2 == rep.parity.four_orbit_mod2 &&
                    rep.parity.four_orbit_mod2 == rep.parity.det_mod2;
  return rep;
}

namespace {

int oracle_bound() {
  if (const char* env = std::getenv("HOMTOR_ORACLE_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 64;
}

}  // namespace

std::vector<RepClass> brute_force_classes(int q, const W2Bits& pattern,
                                          int search_modulus) {
  require_odd_q(q);
  int n = 4 * q;
  if (search_modulus != n)
    throw std::invalid_argument("search modulus must be 4q");
  if (n > oracle_bound())
    throw std::invalid_argument(
        "oracle refuses modulus " + std::to_string(n) +
        " (> bound; raise HOMTOR_ORACLE_MAX_N to override)");
  W2Bits pat = pattern.dim == 4 ? pattern.restricted() : pattern;
  if (!pat.ux || pat.vx)
    throw std::invalid_argument(
        "oracle implemented for the directly analysed pattern ux=1 vx=0");

  auto pres3 = std::make_shared<const grp::Presentation>(grp::t3_group(q));
  bd::Element x = bd::Element::i_unit(n);

  std::vector<bd::Element> all;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2 * n; ++t) all.push_back({n, s == 1, t});

  // single-generator relators prune a and b on their own
  std::vector<bd::Element> a_cands, b_cands;
  for (const auto& e : all) {
    if ((bd::pow(e, q) * x).is_central()) a_cands.push_back(e);
    if ((bd::pow(e, -q) * x).is_central()) b_cands.push_back(e);
  }

  std::set<std::vector<bd::Element>> seen;
  std::vector<ProjRep> found;
  ProjRep r;
  r.pres = pres3;
  r.images.assign(5, x);
  int gx = named_gen(*pres3, "x"), gu = named_gen(*pres3, "u"),
      gv = named_gen(*pres3, "v"), ga = named_gen(*pres3, "a"),
      gb = named_gen(*pres3, "b");
  r.images[gx] = x;
  for (int tu = 0; tu < 2 * n; ++tu) {
    r.images[gu] = bd::Element(n, true, tu);
    for (const auto& a : a_cands) {
      r.images[ga] = a;
      for (const auto& b : b_cands) {
        r.images[gb] = b;
        for (const auto& v : all) {
          if (!(bd::commutator(r.images[gu], v) * a * b).is_central()) continue;
          r.images[gv] = v;
          if (!is_projective(r)) continue;
          if (!(w2_eval(r) == pat)) continue;
          if (seen.insert(so3_canonical_images(r)).second) found.push_back(r);
        }
      }
    }
  }

  // Rebuild each discovered class in the solver's normal form, checking that
  // the rebuilt representative stays in the discovered rotation-level class.
  auto pres4 = shared_t4(q);
  std::vector<RepClass> out;
  for (const auto& r3 : found) {
    auto [k, l] = extract_kl(r3, q);
    int t_v = (k + l) % (4 * q);
    if (pat.sigma != (t_v % 4 == 2)) t_v = (t_v + 2 * q) % (4 * q);
    ProjRep r4 = pullback_rep(q, k, l, t_v, pres4);
    ProjRep check = r4;
    check.pres = pres3;
    check.images.assign(5, bd::Element::identity(n));
    for (const char* gen : {"x", "u", "v", "a", "b"})
      check.images[named_gen(*pres3, gen)] = r4.images[named_gen(*pres4, gen)];
    if (so3_canonical_images(check) != so3_canonical_images(r3))
      throw invariant_error("enumerated class does not match its normal form");
    ClassKind kind = (k == q && l == q) ? ClassKind::special : ClassKind::pair;
    out.push_back(make_class(kind, q, k, l, std::move(r4)));
  }
  std::sort(out.begin(), out.end(), [](const RepClass& a, const RepClass& b) {
    return a.k != b.k ? a.k < b.k : a.l < b.l;
  });
  return out;
}

std::string character_bits(const grp::Presentation& p, Character chi) {
  std::string out;
  for (const char* gen : {"u", "v", "a", "y"}) {
    int g = p.generator_index(gen);
    out += (g >= 0 && ((chi >> g) & 1u)) ? '1' : '0';
  }
  return out;
}

}  // namespace homtor::rep
