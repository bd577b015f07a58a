// homtor: invariants of homology 4-tori from exact binary dihedral data.
//
// Exit codes: 0 success, 1 usage error, 2 computation or invariant failure.

#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homtor/errors.hpp"
#include "homtor/f2.hpp"
#include "homtor/json_io.hpp"
#include "homtor/reps.hpp"
#include "homtor/rohlin.hpp"

using nlohmann::json;
using namespace homtor;

namespace {

f2::TorusRing parse_ring(const std::string& name) {
  if (name == "odd") return {true};
  if (name == "even") return {false};
  throw std::invalid_argument("ring must be 'odd' or 'even'");
}

std::string w2_text(const rep::W2Bits& w) {
  std::string s;
  auto add = [&](bool bit, const char* name) {
    if (!bit) return;
    if (!s.empty()) s += '+';
    s += name;
  };
  add(w.ux, "ux");
  add(w.vx, "vx");
  add(w.sigma, "sigma");
  if (w.dim == 4) {
    add(w.uy, "uy");
    add(w.vy, "vy");
    add(w.xy, "xy");
  }
  return s.empty() ? "0" : s;
}

const char* kind_text(rep::ClassKind k) {
  switch (k) {
    case rep::ClassKind::pair: return "pair";
    case rep::ClassKind::special: return "special";
    case rep::ClassKind::klein: return "klein";
  }
  return "?";
}

// ---- det / admissible / four-orbits ---------------------------------------

int cmd_det(const f2::TorusRing& ring, bool as_json) {
  if (as_json)
    std::printf("%s\n", json{{"det", ring.det_bit ? 1 : 0}}.dump().c_str());
  else
    std::printf("det = %d\n", ring.det_bit ? 1 : 0);
  return 0;
}

// Names the first clause of admissibility that fails, for the report line.
std::string admissible_obstruction(f2::TwoForm w, const f2::TorusRing& ring) {
  if (w.is_zero()) return "w2 vanishes";
  if (f2::pontrjagin_square(w, ring) != 0)
    return "w cup w is 2 mod 4, so no p1 = 0 lift exists";
  return "w pairs trivially with every pair of one-classes";
}

int cmd_admissible(const std::string& w_text, const f2::TorusRing& ring,
                   bool as_json) {
  f2::TwoForm w = f2::parse_two_form(w_text);
  bool ok = f2::is_admissible(w, ring);
  std::string reason = ok ? "" : admissible_obstruction(w, ring);
  if (as_json) {
    json out{{"w", f2::to_string(w)}, {"admissible", ok}};
    if (!ok) out["reason"] = reason;
    std::printf("%s\n", out.dump().c_str());
  } else if (ok) {
    std::printf("admissible: yes\n");
  } else {
    std::printf("admissible: no (%s)\n", reason.c_str());
  }
  return 0;
}

int cmd_four_orbits(const std::string& w_text, const f2::TorusRing& ring,
                    bool as_json) {
  f2::TwoForm w = f2::parse_two_form(w_text);
  int count = f2::count_four_orbits(w, ring);
  auto census = f2::klein_census(w);
  if ((int)census.size() != count && ring.det_bit)
    throw invariant_error("four-orbit count disagrees with the Klein census");
  if (as_json) {
    json out{{"w", f2::to_string(w)}, {"count", count}};
    if (count > 0 && ring.det_bit)
      out["witness"] = {{"beta", f2::to_string(census[0].beta)},
                        {"gamma", f2::to_string(census[0].gamma)}};
    std::printf("%s\n", out.dump().c_str());
    return 0;
  }
  std::printf("four-orbits = %d\n", count);
  if (count > 0 && ring.det_bit)
    std::printf("witness: span{%s, %s}\n", f2::to_string(census[0].beta).c_str(),
                f2::to_string(census[0].gamma).c_str());
  return 0;
}

// ---- lambda ----------------------------------------------------------------

void require_odd_q(int q) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("q must be odd");
}

rep::W2Bits resolve_bundle(const std::string& bundle, int sigma) {
  if (sigma != 0 && sigma != 1)
    throw std::invalid_argument("sigma must be 0 or 1");
  if (bundle == "pullback") return {4, true, false, sigma == 1, false, false, false};
  if (sigma != 0)
    throw std::invalid_argument("--sigma applies to the pullback bundle only");
  if (bundle == "xy") return {4, false, false, false, false, false, true};
  if (bundle.size() == 6 &&
      bundle.find_first_not_of("01") == std::string::npos) {
    // Raw bits in declaration order; the solver dispatch decides support.
    return {4,          bundle[0] == '1', bundle[1] == '1', bundle[2] == '1',
            bundle[3] == '1', bundle[4] == '1', bundle[5] == '1'};
  }
  throw std::invalid_argument(
      "bundle must be 'pullback', 'xy', or six bits (ux vx sigma uy vy xy)");
}

void cross_check_with_brute_force(const rep::LambdaReport& r,
                                  const rep::W2Bits& pat) {
  auto brute = rep::brute_force_classes(r.q, pat, 4 * r.q);
  if (brute.size() != r.classes.size())
    throw invariant_error("oracle: class counts differ");
  for (size_t i = 0; i < brute.size(); ++i) {
    const auto& a = brute[i];
    const auto& b = r.classes[i];
    if (a.k != b.k || a.l != b.l || a.kind != b.kind ||
        a.orbit.orbit_size != b.orbit.orbit_size ||
        !rep::are_conjugate(a.rep, b.rep))
      throw invariant_error("oracle: class " + std::to_string(i) +
                            " differs from the solver");
  }
  std::printf("oracle: brute force agrees (%zu classes)\n", brute.size());
}

int cmd_lambda(int q, const std::string& bundle, int sigma, bool as_json,
               bool with_oracle) {
  require_odd_q(q);
  rep::W2Bits pat = resolve_bundle(bundle, sigma);
  rep::LambdaReport r = rep::lambda_report(q, pat);
  if (with_oracle) cross_check_with_brute_force(r, pat);
  if (as_json) {
    std::printf("%s\n", io::lambda_report_to_json(r).c_str());
    return 0;
  }
  std::printf("classes (q = %d, bundle = %s, w2 = %s):\n", q, bundle.c_str(),
              w2_text(pat).c_str());
  std::printf("  %-8s %3s %3s %6s  %-22s %s\n", "kind", "k", "l", "orbit",
              "stabilizer", "w2");
  for (const auto& c : r.classes) {
    std::string stab;
    for (auto chi : c.orbit.stabilizer) {
      if (!stab.empty()) stab += ' ';
      stab += rep::character_bits(*c.rep.pres, chi);
    }
    if (c.kind == rep::ClassKind::klein)
      std::printf("  %-8s %3s %3s %6d  %-22s %s\n", kind_text(c.kind), "-",
                  "-", c.orbit.orbit_size, stab.c_str(),
                  w2_text(c.w2).c_str());
    else
      std::printf("  %-8s %3d %3d %6d  %-22s %s\n", kind_text(c.kind), c.k,
                  c.l, c.orbit.orbit_size, stab.c_str(),
                  w2_text(c.w2).c_str());
  }
  std::printf("lambda_bar      = %d\n", r.lambda_bar);
  std::printf("lambda_weighted = %d\n", r.lambda_weighted);
  std::printf("det parity      = %d\n", r.parity.det_mod2);
  std::printf("parity check: %s\n", r.parity.pass ? "pass" : "FAIL");
  if (!r.parity.pass) throw invariant_error("parity check failed");
  return 0;
}

// ---- rho-bar ---------------------------------------------------------------

int cmd_rho_bar(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();

  std::optional<bool> stored_t;
  rohlin::SpinAssignment a = io::spin_assignment_from_json(buf.str(), &stored_t);
  int sum = rohlin::rho_bar(a);

  std::optional<bool> found_t;
  if (a.mode() == rohlin::Mode::z2)
    found_t = rohlin::is_turaev_consistent(a, true);

  if (as_json) {
    json out{{"rho_bar", sum}};
    if (found_t) out["consistent_t"] = *found_t ? 1 : 0;
    std::printf("%s\n", out.dump().c_str());
  } else {
    std::printf("rho_bar = %d\n", sum);
    if (found_t) std::printf("consistent(t=%d)\n", *found_t ? 1 : 0);
  }
  if (stored_t && found_t && *stored_t != *found_t)
    std::fprintf(stderr,
                 "warning: file says t = %d but the values satisfy t = %d\n",
                 *stored_t ? 1 : 0, *found_t ? 1 : 0);
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct QRange {
  int lo = 0, hi = 0;
};

QRange parse_q_range(const std::string& text) {
  QRange r;
  char extra;
  if (std::sscanf(text.c_str(), "%d..%d%c", &r.lo, &r.hi, &extra) != 2)
    throw std::invalid_argument("q-range must look like 1..9");
  if (r.lo < 1 || r.hi < r.lo)
    throw std::invalid_argument("q-range bounds must satisfy 1 <= lo <= hi");
  return r;
}

bool verify_forms(std::string& line) {
  int decomposable = 0;
  for (unsigned bits = 1; bits < 64; ++bits) {
    f2::TwoForm w(bits);
    auto census = f2::klein_census(w);
    if (f2::count_four_orbits(w, {true}) != (int)census.size()) return false;
    if (f2::count_four_orbits(w, {false}) != 0) return false;
    if (!census.empty()) ++decomposable;
    if (f2::pontrjagin_square(w, {true}) != 2 * (census.empty() ? 1 : 0))
      return false;
  }
  if (decomposable != 35) return false;
  line = "form census: ok (35 decomposable forms, counters agree)";
  return true;
}

bool verify_spin(std::string& line) {
  int counts[2] = {0, 0};
  for (unsigned bits = 0; bits < 256; ++bits) {
    rohlin::SpinAssignment a(3, rohlin::Mode::z2);
    for (unsigned s = 0; s < 8; ++s) a.set_value(s, (bits >> s) & 1u);
    for (bool t : {false, true})
      if (rohlin::is_turaev_consistent(a, t)) {
        ++counts[t];
        if (rohlin::rho_bar(a) != (t ? 1 : 0)) return false;
      }
  }
  if (counts[0] != 128 || counts[1] != 128) return false;
  line = "spin parity: ok (128 + 128 consistent assignments)";
  return true;
}

bool verify_q(int q, std::string& line) {
  const rep::W2Bits patterns[3] = {
      {4, true, false, false, false, false, false},
      {4, true, false, true, false, false, false},
      {4, false, false, false, false, false, true},
  };
  for (int p = 0; p < 3; ++p) {
    const rep::W2Bits& pat = patterns[p];
    bool klein = pat.xy;
    int want = klein ? 1 : q * q;
    if (rep::lambda_bar(q, pat) != want ||
        rep::lambda_weighted(q, pat) != want) {
      line = "q = " + std::to_string(q) + ": FAIL (count != " +
             std::to_string(want) + ")";
      return false;
    }
    auto pr = rep::parity_check(q, pat);
    if (!pr.pass) {
      line = "q = " + std::to_string(q) + ": FAIL (parity)";
      return false;
    }
    int four = 0, eight = 0;
    for (const auto& c : rep::solve_classes(q, pat)) {
      if (c.orbit.orbit_size == 4)
        ++four;
      else if (c.orbit.orbit_size == 8)
        ++eight;
      if (!rep::stabilizer_cover_check(c.rep) ||
          c.orbit.orbit_size * (int)c.orbit.stabilizer.size() != 16) {
        line = "q = " + std::to_string(q) + ": FAIL (stabilizer)";
        return false;
      }
    }
    if (klein ? (four != 1 || eight != 0)
              : (four != 1 || eight != (q * q - 1) / 2)) {
      line = "q = " + std::to_string(q) + ": FAIL (orbit census)";
      return false;
    }
  }
  line = "q = " + std::to_string(q) + ": ok";
  return true;
}

int cmd_verify(const std::string& range_text, int jobs) {
  QRange range = parse_q_range(range_text);
  std::vector<int> qs;
  for (int q = range.lo; q <= range.hi; ++q)
    if (q % 2 == 1) qs.push_back(q);
  if (qs.empty())
    throw std::invalid_argument("q-range contains no odd q");

  bool ok = true;
  std::string line;
  ok = verify_forms(line) && ok;
  std::printf("%s\n", ok ? line.c_str() : "form census: FAIL");
  bool spin_ok = verify_spin(line);
  std::printf("%s\n", spin_ok ? line.c_str() : "spin parity: FAIL");
  ok = ok && spin_ok;

  if (jobs < 1) jobs = 1;
  if (jobs > (int)qs.size()) jobs = (int)qs.size();
  std::vector<std::string> lines(qs.size());
  std::vector<char> good(qs.size(), 0);
  auto worker = [&](int start) {
    for (size_t i = start; i < qs.size(); i += jobs)
      good[i] = verify_q(qs[i], lines[i]) ? 1 : 0;
  };
  std::vector<std::future<void>> futures;
  for (int w = 1; w < jobs; ++w)
    futures.push_back(std::async(std::launch::async, worker, w));
  worker(0);
  for (auto& f : futures) f.get();

  for (size_t i = 0; i < qs.size(); ++i) {
    std::printf("%s\n", lines[i].c_str());
    ok = ok && good[i];
  }
  if (!ok) {
    std::printf("verification failed\n");
    return 2;
  }
  std::printf("all ok\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of homology 4-tori: determinant, bundle "
               "admissibility, representation counts, spin sums"};
  app.require_subcommand(1);

  std::string ring_name = "odd", w_text, bundle = "pullback";
  std::string input_path, range_text, format = "table";
  int q = 1, sigma = 0, jobs = 1;
  bool with_oracle = false;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
  };
  auto add_ring = [&](CLI::App* c) {
    c->add_option("--ring", ring_name, "Torus determinant: odd or even")
        ->check(CLI::IsMember({"odd", "even"}));
  };

  CLI::App* det = app.add_subcommand("det", "Print the determinant bit");
  add_ring(det);
  add_format(det);

  CLI::App* adm =
      app.add_subcommand("admissible", "Decide bundle admissibility");
  adm->add_option("--w", w_text, "Second Stiefel-Whitney class, e.g. 12+34")
      ->required();
  add_ring(adm);
  add_format(adm);

  CLI::App* four =
      app.add_subcommand("four-orbits", "Count four-orbits for a class");
  four->add_option("--w", w_text, "Second Stiefel-Whitney class")->required();
  add_ring(four);
  add_format(four);

  CLI::App* lam = app.add_subcommand(
      "lambda", "Enumerate representation classes and their counts");
  lam->add_option("--q", q, "Odd family parameter")->required();
  lam->add_option("--bundle", bundle, "pullback, xy, or six raw bits");
  lam->add_option("--sigma", sigma, "Multiple-fiber bit of the pullback");
  lam->add_flag("--oracle", with_oracle,
                "Cross-check against the brute-force enumeration");
  add_format(lam);

  CLI::App* rho = app.add_subcommand("rho-bar", "Sum a spin-value assignment");
  rho->add_option("--input", input_path, "JSON assignment file")->required();
  add_format(rho);

  CLI::App* ver =
      app.add_subcommand("verify", "Run the verification suite over a q-range");
  ver->add_option("--q-range", range_text, "Range lo..hi, odd values used")
      ->required();
  ver->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    bool as_json = format == "json";
    if (*det) return cmd_det(parse_ring(ring_name), as_json);
    if (*adm) return cmd_admissible(w_text, parse_ring(ring_name), as_json);
    if (*four) return cmd_four_orbits(w_text, parse_ring(ring_name), as_json);
    if (*lam) return cmd_lambda(q, bundle, sigma, as_json, with_oracle);
    if (*rho) return cmd_rho_bar(input_path, as_json);
    if (*ver) return cmd_verify(range_text, jobs);
  } catch (const invariant_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
