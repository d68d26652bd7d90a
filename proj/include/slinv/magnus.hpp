#pragma once

#include "slinv/poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace slinv {

// Truncated power series in noncommuting symbols X_1..X_n with integer
// coefficients.  Words are packed into a uint64 key (4 bits per letter,
// leading sentinel), which caps letters at 15 and lengths at 15; the Milnor
// computations stay far below both.
class MagnusSeries {
public:
  using Word = uint64_t;
  static constexpr Word kEmpty = 1;

  static Word append(Word w, int letter) { return (w << 4) | Word(letter); }
  static int word_length(Word w);
  static std::vector<int> letters(Word w);
  static Word pack(const std::vector<int>& ls);

  explicit MagnusSeries(int trunc) : trunc_(trunc) {}

  int trunc() const { return trunc_; }
  static MagnusSeries one(int trunc);
  // x_i -> 1 + X_i ; inverse -> 1 - X_i + X_i^2 - ...
  static MagnusSeries generator(int letter, int exponent, int trunc);

  Int coeff(Word w) const;
  const std::map<Word, Int>& terms() const { return terms_; }

  MagnusSeries operator*(const MagnusSeries& o) const;
  MagnusSeries inverse() const;  // requires constant term 1
  MagnusSeries conjugated(const MagnusSeries& g, int exponent) const;  // g^-e * this * g^e

  bool operator==(const MagnusSeries& o) const = default;

private:
  void add(Word w, const Int& c);
  int trunc_;
  std::map<Word, Int> terms_;
};

}  // namespace slinv
