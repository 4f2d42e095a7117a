#include "skeinlab/twovar.hpp"

#include <sstream>

#include "skeinlab/errors.hpp"

namespace skeinlab {

TwoVarLaurentPoly TwoVarLaurentPoly::monomial(Int coeff, int a_exp, int z_exp) {
  TwoVarLaurentPoly p;
  if (coeff != 0) p.terms_[{a_exp, z_exp}] = std::move(coeff);
  return p;
}

TwoVarLaurentPoly TwoVarLaurentPoly::circle() {
  TwoVarLaurentPoly c;
  c.terms_[{1, -1}] = 1;
  c.terms_[{-1, -1}] = -1;
  c.terms_[{0, 0}] = 1;
  return c;
}

Int TwoVarLaurentPoly::coeff(int a_exp, int z_exp) const {
  auto it = terms_.find({a_exp, z_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

void TwoVarLaurentPoly::add_term(const Key& k, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TwoVarLaurentPoly TwoVarLaurentPoly::operator-() const {
  TwoVarLaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

TwoVarLaurentPoly& TwoVarLaurentPoly::operator+=(const TwoVarLaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TwoVarLaurentPoly& TwoVarLaurentPoly::operator-=(const TwoVarLaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TwoVarLaurentPoly operator*(const TwoVarLaurentPoly& x, const TwoVarLaurentPoly& y) {
  TwoVarLaurentPoly r;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_)
      r.add_term({kx.first + ky.first, kx.second + ky.second}, cx * cy);
  return r;
}

TwoVarLaurentPoly TwoVarLaurentPoly::pow(unsigned n) const {
  TwoVarLaurentPoly acc = one();
  TwoVarLaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) acc = acc * base;
    base = base * base;
    n >>= 1u;
  }
  return acc;
}

std::string TwoVarLaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Int v = c;
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    bool printed = false;
    if (v != 1 || (k.first == 0 && k.second == 0)) {
      os << v.str();
      printed = true;
    }
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (printed) os << "*";
      os << name;
      if (e != 1) os << "^" << e;
      printed = true;
    };
    var("a", k.first);
    var("z", k.second);
  }
  return os.str();
}

nlohmann::json TwoVarLaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    nlohmann::json t = nlohmann::json::array();
    t.push_back(k.first);
    t.push_back(k.second);
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      t.push_back(c.convert_to<std::int64_t>());
    } else {
      t.push_back(c.str());
    }
    arr.push_back(std::move(t));
  }
  return arr;
}

TwoVarLaurentPoly TwoVarLaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("two-variable polynomial JSON must be an array");
  TwoVarLaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3)
      throw InputError("two-variable term must be [a_exp, z_exp, coeff]");
    int ae = t[0].get<int>();
    int ze = t[1].get<int>();
    Int c;
    if (t[2].is_number_integer()) {
      c = Int(t[2].get<std::int64_t>());
    } else if (t[2].is_string()) {
      c = Int(t[2].get<std::string>());
    } else {
      throw InputError("two-variable coefficient must be integer or string");
    }
    p.add_term({ae, ze}, c);
  }
  return p;
}

std::complex<double> TwoVarLaurentPoly::eval(std::complex<double> a_val,
                                             std::complex<double> q_val) const {
  std::complex<double> z_val = q_val - 1.0 / q_val;
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [k, c] : terms_)
    acc += c.convert_to<double>() * std::pow(a_val, k.first) * std::pow(z_val, k.second);
  return acc;
}

LaurentPoly twovar_specialize(const TwoVarLaurentPoly& p, const LaurentPoly& a_val) {
  if (a_val.terms().size() != 1)
    throw DomainError("exact specialization needs an invertible monomial for a");
  const auto& [a_half, a_coeff] = *a_val.terms().begin();
  if (a_coeff != 1 && a_coeff != -1)
    throw DomainError("exact specialization needs a unit monomial for a");

  // z = q - q^{-1} in half-exponent form.
  const LaurentPoly z = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
  int min_z = 0;
  for (const auto& [k, c] : p.terms()) min_z = std::min(min_z, k.second);

  // Clear z^{-1} by multiplying through with z^{-min_z}, substitute, then
  // divide back out; exactness of that division is the cancellation claim.
  LaurentPoly cleared;
  for (const auto& [k, c] : p.terms()) {
    LaurentPoly a_part = (a_coeff < 0 && (k.first % 2 != 0))
                             ? LaurentPoly::monomial(-1, a_half * k.first)
                             : LaurentPoly::monomial(1, a_half * k.first);
    cleared += a_part.scaled(c) * z.pow(static_cast<unsigned>(k.second - min_z));
  }
  if (min_z == 0) return cleared;
  auto quot = cleared.divide_exact(z.pow(static_cast<unsigned>(-min_z)));
  if (!quot)
    throw DomainError(
        "z^{-1} terms do not cancel under this specialization; "
        "evaluate numerically instead");
  return *quot;
}

std::complex<double> twovar_specialize_numeric(const TwoVarLaurentPoly& p,
                                               std::complex<double> a_val,
                                               std::complex<double> q_val) {
  return p.eval(a_val, q_val);
}

}  // namespace skeinlab
