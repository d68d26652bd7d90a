#include "slinv/magnus.hpp"

#include <stdexcept>

namespace slinv {

int MagnusSeries::word_length(Word w) {
  int len = 0;
  while (w > 1) {
    ++len;
    w >>= 4;
  }
  return len;
}

std::vector<int> MagnusSeries::letters(Word w) {
  std::vector<int> out;
  while (w > 1) {
    out.push_back(int(w & 0xF));
    w >>= 4;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

MagnusSeries::Word MagnusSeries::pack(const std::vector<int>& ls) {
  Word w = kEmpty;
  for (int l : ls) {
    if (l < 1 || l > 15) throw std::invalid_argument("magnus: letter out of range");
    w = append(w, l);
  }
  return w;
}

MagnusSeries MagnusSeries::one(int trunc) {
  MagnusSeries s(trunc);
  s.terms_[kEmpty] = 1;
  return s;
}

MagnusSeries MagnusSeries::generator(int letter, int exponent, int trunc) {
  MagnusSeries s = one(trunc);
  if (exponent == 0) return s;
  if (exponent == 1) {
    if (trunc >= 1) s.terms_[append(kEmpty, letter)] = 1;
    return s;
  }
  if (exponent == -1) {
    Word w = kEmpty;
    Int c = 1;
    for (int d = 1; d <= trunc; ++d) {
      w = append(w, letter);
      c = -c;
      s.terms_[w] = c;
    }
    return s;
  }
  MagnusSeries base = generator(letter, exponent > 0 ? 1 : -1, trunc);
  MagnusSeries power = one(trunc);
  for (int k = 0; k < std::abs(exponent); ++k) power = power * base;
  return power;
}

void MagnusSeries::add(Word w, const Int& c) {
  Int& v = terms_[w];
  v += c;
  if (v == 0) terms_.erase(w);
}

Int MagnusSeries::coeff(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& o) const {
  MagnusSeries r(trunc_);
  for (const auto& [wa, ca] : terms_) {
    int la = word_length(wa);
    for (const auto& [wb, cb] : o.terms_) {
      int lb = word_length(wb);
      if (la + lb > trunc_) continue;
      // concatenate: shift wa over wb's letters
      Word w = wa;
      for (int l : letters(wb)) w = append(w, l);
      r.add(w, ca * cb);
    }
  }
  return r;
}

MagnusSeries MagnusSeries::inverse() const {
  if (coeff(kEmpty) != 1) throw std::invalid_argument("magnus: inverse needs constant term 1");
  // (1 + N)^-1 = sum (-N)^k
  MagnusSeries n(trunc_);
  for (const auto& [w, c] : terms_)
    if (w != kEmpty) n.add(w, -c);
  MagnusSeries r = one(trunc_);
  MagnusSeries power = one(trunc_);
  for (int k = 1; k <= trunc_; ++k) {
    power = power * n;
    if (power.terms_.empty()) break;
    for (const auto& [w, c] : power.terms_) r.add(w, c);
  }
  return r;
}

MagnusSeries MagnusSeries::conjugated(const MagnusSeries& g, int exponent) const {
  if (exponent == 0) return *this;
  MagnusSeries gi = g.inverse();
  const MagnusSeries& left = exponent > 0 ? gi : g;
  const MagnusSeries& right = exponent > 0 ? g : gi;
  MagnusSeries r = *this;
  for (int k = 0; k < std::abs(exponent); ++k) r = left * r * right;
  return r;
}

}  // namespace slinv
