#include "homtor/json_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace homtor::io {

using nlohmann::json;

namespace {

json w2_json(const rep::W2Bits& w) {
  json out;
  out["ux"] = int(w.ux);
  out["vx"] = int(w.vx);
  if (w.dim == 4) {
    out["uy"] = int(w.uy);
    out["vy"] = int(w.vy);
    out["xy"] = int(w.xy);
  }
  out["sigma"] = int(w.sigma);
  return out;
}

rep::W2Bits w2_from_json(const json& j) {
  rep::W2Bits w;
  w.dim = j.contains("xy") ? 4 : 3;
  w.ux = j.at("ux").get<int>() != 0;
  w.vx = j.at("vx").get<int>() != 0;
  w.sigma = j.at("sigma").get<int>() != 0;
  if (w.dim == 4) {
    w.uy = j.at("uy").get<int>() != 0;
    w.vy = j.at("vy").get<int>() != 0;
    w.xy = j.at("xy").get<int>() != 0;
  }
  return w;
}

const char* kind_name(rep::ClassKind k) {
  switch (k) {
    case rep::ClassKind::pair: return "pair";
    case rep::ClassKind::special: return "special";
    case rep::ClassKind::klein: return "klein";
  }
  return "pair";
}

json class_json(const rep::RepClass& c) {
  json out;
  out["kind"] = kind_name(c.kind);
  out["q"] = c.q;
  out["n"] = c.rep.modulus();
  if (c.kind != rep::ClassKind::klein) {
    out["k"] = c.k;
    out["l"] = c.l;
  }
  const auto& p = *c.rep.pres;
  int gv = p.generator_index("v");
  if (gv >= 0 && !c.rep.images[gv].j_part())
    out["v_angle"] = std::to_string(c.rep.images[gv].angle_num()) + "/" +
                     std::to_string(c.rep.modulus());
  json imgs;
  for (size_t g = 0; g < p.generators.size(); ++g)
    imgs[p.generators[g]] = bd::to_string(c.rep.images[g]);
  out["images"] = imgs;
  out["orbit"] = c.orbit.orbit_size;
  json stab = json::array();
  for (rep::Character chi : c.orbit.stabilizer)
    stab.push_back(rep::character_bits(p, chi));
  out["stabilizer"] = stab;
  out["w2"] = w2_json(c.w2);
  return out;
}

}  // namespace

std::string w2_to_json(const rep::W2Bits& w) { return w2_json(w).dump(); }

std::string rep_class_to_json(const rep::RepClass& c) {
  return class_json(c).dump();
}

namespace {

// keep the json library's exception types out of the public contract
json parse_checked(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace

ParsedClass class_from_json(const std::string& text) try {
  json j = parse_checked(text);
  ParsedClass c;
  c.kind = j.at("kind").get<std::string>();
  c.q = j.at("q").get<int>();
  c.n = j.at("n").get<int>();
  if (j.contains("k")) c.k = j.at("k").get<int>();
  if (j.contains("l")) c.l = j.at("l").get<int>();
  if (j.contains("v_angle")) c.v_angle = j.at("v_angle").get<std::string>();
  for (const auto& [gen, lit] : j.at("images").items())
    c.images.emplace_back(gen, lit.get<std::string>());
  c.orbit = j.at("orbit").get<int>();
  for (const auto& s : j.at("stabilizer"))
    c.stabilizer.push_back(s.get<std::string>());
  c.w2 = w2_from_json(j.at("w2"));
  return c;
} catch (const json::exception& e) {
  throw std::invalid_argument(e.what());
}

rep::ProjRep rebuild_rep(const ParsedClass& c) {
  rep::ProjRep r;
  r.pres = std::make_shared<const grp::Presentation>(grp::t4_group(c.q));
  r.images.assign(r.pres->generators.size(), bd::Element::identity(c.n));
  for (const auto& [gen, lit] : c.images) {
    int g = r.pres->generator_index(gen);
    if (g < 0)
      throw std::invalid_argument("image table names unknown generator '" +
                                  gen + "'");
    r.images[g] = bd::parse_element(lit, c.n);
  }
  if (c.images.size() != r.pres->generators.size())
    throw std::invalid_argument("image table does not cover the generators");
  return r;
}

std::string lambda_report_to_json(const rep::LambdaReport& rep) {
  json out;
  out["q"] = rep.q;
  out["bundle"] = w2_json(rep.pattern);
  out["lambda_bar"] = rep.lambda_bar;
  out["lambda_weighted"] = rep.lambda_weighted;
  out["parity"] = {{"lambda", rep.parity.lambda_mod2},
                   {"four_orbits", rep.parity.four_orbit_mod2},
                   {"det", rep.parity.det_mod2},
                   {"pass", rep.parity.pass}};
  json classes = json::array();
  for (const auto& c : rep.classes) classes.push_back(class_json(c));
  out["classes"] = classes;
  return out.dump(2);
}

namespace {

std::string sigma_key(unsigned sigma, int dim) {
  std::string key(dim, '0');
  for (int i = 0; i < dim; ++i)
    if ((sigma >> i) & 1u) key[i] = '1';
  return key;
}

unsigned sigma_from_key(const std::string& key, int dim) {
  if (int(key.size()) != dim)
    throw std::invalid_argument("spin key '" + key + "' has the wrong length");
  unsigned sigma = 0;
  for (int i = 0; i < dim; ++i) {
    if (key[i] != '0' && key[i] != '1')
      throw std::invalid_argument("spin key '" + key + "' is not a bit string");
    if (key[i] == '1') sigma |= 1u << i;
  }
  return sigma;
}

}  // namespace

std::string spin_assignment_to_json(const rohlin::SpinAssignment& a,
                                    std::optional<bool> t) {
  json out;
  out["dim"] = a.dim();
  out["mode"] = a.mode() == rohlin::Mode::z2 ? "z2" : "eighths";
  if (t) out["t"] = int(*t);
  json values;
  for (unsigned s = 0; s < a.size(); ++s)
    values[sigma_key(s, a.dim())] = a.value(s);
  out["values"] = values;
  return out.dump(2);
}

rohlin::SpinAssignment spin_assignment_from_json(const std::string& text,
                                                 std::optional<bool>* t_out) try {
  json j = parse_checked(text);
  int dim = j.at("dim").get<int>();
  std::string mode_name = j.at("mode").get<std::string>();
  rohlin::Mode mode;
  if (mode_name == "z2")
    mode = rohlin::Mode::z2;
  else if (mode_name == "eighths")
    mode = rohlin::Mode::eighths;
  else
    throw std::invalid_argument("unknown mode '" + mode_name + "'");
  rohlin::SpinAssignment a(dim, mode);
  const json& values = j.at("values");
  if (values.size() != a.size())
    throw std::invalid_argument("expected " + std::to_string(a.size()) +
                                " spin values, found " +
                                std::to_string(values.size()));
  for (const auto& [key, v] : values.items())
    a.set_value(sigma_from_key(key, dim), v.get<int>());
  if (t_out) {
    if (j.contains("t"))
      *t_out = j.at("t").get<int>() != 0;
    else
      *t_out = std::nullopt;
  }
  return a;
} catch (const json::exception& e) {
  throw std::invalid_argument(e.what());
}

}  // namespace homtor::io
