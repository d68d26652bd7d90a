#include "slinv/poly.hpp"

#include <sstream>

namespace slinv {

void ConwayPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ConwayPoly& ConwayPoly::operator+=(const ConwayPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

ConwayPoly& ConwayPoly::operator-=(const ConwayPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

ConwayPoly operator*(const ConwayPoly& a, const ConwayPoly& b) {
  ConwayPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

ConwayPoly ConwayPoly::shifted(int k) const {
  ConwayPoly r;
  if (is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + k, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

std::string ConwayPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first && coeffs_[i] > 0) os << "+";
    if (i == 0) {
      os << coeffs_[i];
    } else {
      if (coeffs_[i] == -1)
        os << "-";
      else if (coeffs_[i] != 1)
        os << coeffs_[i] << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

HomflyPoly HomflyPoly::monomial(Int c, int t_pow, int z_pow) {
  HomflyPoly p;
  if (c != 0) p.terms_[{t_pow, z_pow}] = std::move(c);
  return p;
}

HomflyPoly HomflyPoly::unlink_factor() {
  HomflyPoly p;
  p.terms_[{-1, -1}] = 1;
  p.terms_[{1, -1}] = -1;
  return p;
}

Int HomflyPoly::coeff(int t_pow, int z_pow) const {
  auto it = terms_.find({t_pow, z_pow});
  return it == terms_.end() ? Int(0) : it->second;
}

int HomflyPoly::min_z_power() const {
  int m = 0;
  for (const auto& [k, c] : terms_)
    if (k.second < m) m = k.second;
  return m;
}

HomflyPoly& HomflyPoly::operator+=(const HomflyPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    Int& v = terms_[k];
    v += c;
    if (v == 0) terms_.erase(k);
  }
  return *this;
}

HomflyPoly& HomflyPoly::operator-=(const HomflyPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    Int& v = terms_[k];
    v -= c;
    if (v == 0) terms_.erase(k);
  }
  return *this;
}

HomflyPoly operator*(const HomflyPoly& a, const HomflyPoly& b) {
  HomflyPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      HomflyPoly::Key k{ka.first + kb.first, ka.second + kb.second};
      Int& v = r.terms_[k];
      v += ca * cb;
      if (v == 0) r.terms_.erase(k);
    }
  return r;
}

HomflyPoly HomflyPoly::shifted(int t_pow, int z_pow) const {
  HomflyPoly r;
  for (const auto& [k, c] : terms_) r.terms_[{k.first + t_pow, k.second + z_pow}] = c;
  return r;
}

ConwayPoly HomflyPoly::at_t1() const {
  ConwayPoly r;
  for (const auto& [k, c] : terms_) {
    if (k.second < 0) throw std::runtime_error("at_t1: negative z power");
    r += ConwayPoly(c).shifted(k.second);
  }
  return r;
}

std::map<int, Int> HomflyPoly::z_coefficient(int z_pow) const {
  std::map<int, Int> r;
  for (const auto& [k, c] : terms_)
    if (k.second == z_pow) r[k.first] = c;
  return r;
}

std::string HomflyPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first && c > 0) os << "+";
    os << c;
    if (k.first != 0) os << "*t^" << k.first;
    if (k.second != 0) os << "*z^" << k.second;
    first = false;
  }
  return os.str();
}

Int derivative_at_one(const std::map<int, Int>& tpoly, int l) {
  Int total = 0;
  for (const auto& [a, c] : tpoly) {
    Int falling = 1;
    for (int i = 0; i < l; ++i) falling *= Int(a - i);
    total += c * falling;
  }
  return total;
}

}  // namespace slinv
