#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace slinv {

using Int = boost::multiprecision::cpp_int;

// Conway polynomial: integer coefficients of z^0..z^d.
class ConwayPoly {
public:
  ConwayPoly() = default;
  explicit ConwayPoly(Int constant) {
    if (constant != 0) coeffs_ = {std::move(constant)};
  }

  static ConwayPoly zero() { return ConwayPoly(); }
  static ConwayPoly one() { return ConwayPoly(Int(1)); }
  static ConwayPoly z(int power = 1) {
    ConwayPoly p;
    p.coeffs_.assign(power + 1, Int(0));
    p.coeffs_[power] = 1;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Int coeff(int power) const {
    if (power < 0 || power > degree()) return Int(0);
    return coeffs_[power];
  }

  ConwayPoly& operator+=(const ConwayPoly& o);
  ConwayPoly& operator-=(const ConwayPoly& o);
  friend ConwayPoly operator+(ConwayPoly a, const ConwayPoly& b) { return a += b; }
  friend ConwayPoly operator-(ConwayPoly a, const ConwayPoly& b) { return a -= b; }
  friend ConwayPoly operator*(const ConwayPoly& a, const ConwayPoly& b);

  // Multiply by z^k.
  ConwayPoly shifted(int k) const;

  bool operator==(const ConwayPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;  // e.g. "1+z^2"

private:
  void trim();
  std::vector<Int> coeffs_;
};

// HOMFLYPT values: finitely many terms c * t^a * z^b with a in Z and b in Z.
// Negative z-powers occur only through split-link factors (t^-1 - t)/z; any
// value of a knot is certified polynomial in z by the callers.
class HomflyPoly {
public:
  using Key = std::pair<int, int>;  // (t exponent, z exponent)

  HomflyPoly() = default;

  static HomflyPoly zero() { return {}; }
  static HomflyPoly one() { return monomial(1, 0, 0); }
  static HomflyPoly monomial(Int c, int t_pow, int z_pow);
  // (t^-1 - t) / z, the extra-component factor of split unlinks.
  static HomflyPoly unlink_factor();

  bool is_zero() const { return terms_.empty(); }
  Int coeff(int t_pow, int z_pow) const;
  const std::map<Key, Int>& terms() const { return terms_; }

  int min_z_power() const;

  HomflyPoly& operator+=(const HomflyPoly& o);
  HomflyPoly& operator-=(const HomflyPoly& o);
  friend HomflyPoly operator+(HomflyPoly a, const HomflyPoly& b) { return a += b; }
  friend HomflyPoly operator-(HomflyPoly a, const HomflyPoly& b) { return a -= b; }
  friend HomflyPoly operator*(const HomflyPoly& a, const HomflyPoly& b);

  // Multiply by t^a z^b.
  HomflyPoly shifted(int t_pow, int z_pow) const;

  bool operator==(const HomflyPoly& o) const { return terms_ == o.terms_; }

  // Specialization t = 1; only valid when no negative z-powers remain.
  ConwayPoly at_t1() const;

  // Coefficient polynomial P_2k(t) as a map t-exponent -> coefficient.
  std::map<int, Int> z_coefficient(int z_pow) const;

  std::string str() const;

private:
  std::map<Key, Int> terms_;
};

// l-th derivative of the t-polynomial sum c_a t^a, evaluated at t = 1.
Int derivative_at_one(const std::map<int, Int>& tpoly, int l);

}  // namespace slinv
