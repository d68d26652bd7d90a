#pragma once

#include "slinv/diagram.hpp"
#include "slinv/magnus.hpp"

#include <map>
#include <vector>

namespace slinv {

inline constexpr int kMaxMilnorLength = 6;

// Longitudes of a string link in the Magnus expansion, computed from the
// Wirtinger presentation by iterated substitution.  Meridian generators are
// the bottom arcs; the i-th longitude reads off the overpassing arcs along
// strand i and is 0-framed (total x_i exponent zero).
class MilnorEvaluator {
public:
  MilnorEvaluator(const StringLink& sl, int trunc);

  const MagnusSeries& longitude(int comp);  // 1-based

  // mu(I): coefficient of X_{i1}..X_{i_{m-1}} in the i_m-th longitude.
  Int mu(const std::vector<int>& index);

  int trunc() const { return trunc_; }

private:
  int n_;
  int trunc_;
  std::vector<MagnusSeries> arc_series_;
  std::vector<MagnusSeries> longitudes_;
  std::vector<bool> longitude_done_;
  TracedDiagram traced_;
};

// Milnor invariant of a string link, |index| <= kMaxMilnorLength.
Int mu(const StringLink& sl, const std::vector<int>& index);

// Batch evaluation sharing one longitude computation.
std::map<std::vector<int>, Int> mu_many(const StringLink& sl,
                                        const std::vector<std::vector<int>>& indices);

// Arf invariant of component i: a_2 of the closed i-th strand, mod 2.
int arf(const StringLink& sl, int comp);

}  // namespace slinv
