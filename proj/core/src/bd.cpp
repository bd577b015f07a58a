#include "homtor/bd.hpp"

#include <stdexcept>
#include <tuple>

namespace homtor::bd {

namespace {

int mod(long long v, int m) {
  long long r = v % m;
  return int(r < 0 ? r + m : r);
}

void require_same_modulus(const Element& a, const Element& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("mixed moduli " + std::to_string(a.modulus()) +
                                " and " + std::to_string(b.modulus()) +
                                "; rescale explicitly first");
}

}  // namespace

Element::Element(int modulus, bool j_part, int angle_num)
    : modulus_(modulus), j_(j_part), angle_(0) {
  // validate before reducing: mod(x, 0) is a hardware trap, not an exception
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  angle_ = mod(angle_num, 2 * modulus);
}

Element Element::i_unit(int modulus) {
  if (modulus % 2 != 0)
    throw std::invalid_argument("i needs an even modulus");
  return {modulus, false, modulus / 2};
}

Element Element::k_unit(int modulus) {
  if (modulus % 2 != 0)
    throw std::invalid_argument("k needs an even modulus");
  return {modulus, true, modulus / 2};
}

Element operator*(const Element& a, const Element& b) {
  require_same_modulus(a, b);
  int n = a.modulus_;
  // j e^{i t} = e^{-i t} j and j^2 = -1 = e^{i pi}
  if (!a.j_ && !b.j_) return {n, false, a.angle_ + b.angle_};
  if (!a.j_ && b.j_) return {n, true, a.angle_ + b.angle_};
  if (a.j_ && !b.j_) return {n, true, a.angle_ - b.angle_};
  return {n, false, a.angle_ - b.angle_ + n};
}

Element Element::inverse() const {
  if (!j_) return {modulus_, false, -angle_};
  return {modulus_, true, angle_ + modulus_};
}

bool operator<(const Element& a, const Element& b) {
  return std::make_tuple(a.modulus_, a.j_, a.angle_) <
         std::make_tuple(b.modulus_, b.j_, b.angle_);
}

Element pow(const Element& a, long long m) {
  if (m < 0) return pow(a.inverse(), -m);
  Element acc = Element::identity(a.modulus());
  Element base = a;
  while (m > 0) {
    if (m & 1) acc = acc * base;
    base = base * base;
    m >>= 1;
  }
  return acc;
}

Element conjugate(const Element& c, const Element& a) {
  return c * a * c.inverse();
}

Element commutator(const Element& a, const Element& b) {
  return a * b * a.inverse() * b.inverse();
}

So3::So3(const Element& lift)
    : rep_(lift.angle_num() < lift.modulus() ? lift : -lift) {}

std::pair<Element, Element> lifts(const So3& g) {
  return {g.rep(), -g.rep()};
}

bool so3_commute(const Element& a, const Element& b) {
  return commutator(a, b).is_central();
}

Element rescale(const Element& a, int new_modulus) {
  if (new_modulus % a.modulus() != 0)
    throw std::invalid_argument("rescale target must be a multiple of the modulus");
  int f = new_modulus / a.modulus();
  return {new_modulus, a.j_part(), a.angle_num() * f};
}

std::string to_string(const Element& a) {
  std::string out = "e(" + std::to_string(a.angle_num()) + "/" +
                    std::to_string(a.modulus()) + ")";
  if (a.j_part()) out += "j";
  return out;
}

Element parse_element(const std::string& text, int modulus) {
  if (text == "1") return Element::identity(modulus);
  if (text == "-1") return Element::minus_one(modulus);
  if (text == "i") return Element::i_unit(modulus);
  if (text == "-i") return -Element::i_unit(modulus);
  if (text == "j") return Element::j_unit(modulus);
  if (text == "-j") return -Element::j_unit(modulus);
  if (text == "k") return Element::k_unit(modulus);
  if (text == "-k") return -Element::k_unit(modulus);
  if (text.size() >= 4 && text.substr(0, 2) == "e(") {
    bool jpart = false;
    std::string body = text.substr(2);
    if (body.size() >= 2 && body.substr(body.size() - 2) == ")j") {
      jpart = true;
      body = body.substr(0, body.size() - 2);
    } else if (!body.empty() && body.back() == ')') {
      body = body.substr(0, body.size() - 1);
    } else {
      throw std::invalid_argument("bad element literal '" + text + "'");
    }
    auto slash = body.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("bad element literal '" + text + "'");
    int t, n;
    try {
      t = std::stoi(body.substr(0, slash));
      n = std::stoi(body.substr(slash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad element literal '" + text + "'");
    }
    if (n != modulus)
      throw std::invalid_argument("element literal '" + text +
                                  "' has modulus " + std::to_string(n) +
                                  ", expected " + std::to_string(modulus));
    return {modulus, jpart, t};
  }
  throw std::invalid_argument("bad element literal '" + text + "'");
}

}  // namespace homtor::bd
