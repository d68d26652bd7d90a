#include "slinv/milnor.hpp"

#include "slinv/closures.hpp"
#include "slinv/skein.hpp"

#include <algorithm>

namespace slinv {

namespace {

// Wirtinger substitution at an underpass with oriented sign eps: the outgoing
// under-arc meridian is o^eps * u * o^-eps.  The sign convention is pinned by
// mu(ij) = lk: the positive clasp L_12 must give mu(12) = +1.
constexpr int kConjExp = -1;

}  // namespace

MilnorEvaluator::MilnorEvaluator(const StringLink& sl, int trunc)
    : n_(sl.n), trunc_(trunc), traced_(trace(sl.diagram)) {
  for (const auto& comp : traced_.components)
    if (comp.is_closed) throw diagram_error("milnor: closed component in string link");

  arc_series_.assign(traced_.n_arcs, MagnusSeries::one(trunc_));
  longitudes_.assign(n_, MagnusSeries::one(trunc_));
  longitude_done_.assign(n_, false);

  // Initialize every arc with its component's bottom meridian, then iterate
  // the substitutions once per degree of precision.
  for (int a = 0; a < traced_.n_arcs; ++a)
    arc_series_[a] = MagnusSeries::generator(traced_.arc_component[a] + 1, 1, trunc_);

  for (int pass = 0; pass < trunc_; ++pass) {
    for (int ci = 0; ci < traced_.n_components; ++ci) {
      const ComponentInfo& comp = traced_.components[ci];
      int arc = comp.first_arc;
      MagnusSeries cur = MagnusSeries::generator(ci + 1, 1, trunc_);
      arc_series_[arc] = cur;
      for (const Passage& p : comp.passages) {
        if (p.over) continue;
        const Crossing& c = traced_.crossings[p.crossing];
        cur = cur.conjugated(arc_series_[c.arc_over], kConjExp * c.sign());
        arc_series_[c.arc_under_out] = cur;
      }
    }
  }
}

const MagnusSeries& MilnorEvaluator::longitude(int comp) {
  int ci = comp - 1;
  if (ci < 0 || ci >= n_) throw diagram_error("milnor: component out of range");
  if (longitude_done_[ci]) return longitudes_[ci];

  MagnusSeries lam = MagnusSeries::one(trunc_);
  for (const Passage& p : traced_.components[ci].passages) {
    if (p.over) continue;
    const Crossing& c = traced_.crossings[p.crossing];
    lam = lam * (c.sign() > 0 ? arc_series_[c.arc_over]
                              : arc_series_[c.arc_over].inverse());
  }
  // 0-framing: cancel the exponent sum of x_i.
  Int e = lam.coeff(MagnusSeries::append(MagnusSeries::kEmpty, ci + 1));
  if (e != 0) {
    int ei = e.convert_to<int>();
    lam = lam * MagnusSeries::generator(ci + 1, -ei, trunc_);
  }
  longitudes_[ci] = lam;
  longitude_done_[ci] = true;
  return longitudes_[ci];
}

Int MilnorEvaluator::mu(const std::vector<int>& index) {
  if (index.size() < 2) throw diagram_error("mu: index too short");
  if (int(index.size()) - 1 > trunc_) throw diagram_error("mu: index beyond truncation");
  std::vector<int> head(index.begin(), index.end() - 1);
  return longitude(index.back()).coeff(MagnusSeries::pack(head));
}

Int mu(const StringLink& sl, const std::vector<int>& index) {
  if (int(index.size()) > kMaxMilnorLength)
    throw diagram_error("mu: index longer than the supported ceiling");
  for (int i : index)
    if (i < 1 || i > sl.n) throw diagram_error("mu: index letter out of range");
  MilnorEvaluator ev(sl, int(index.size()) - 1);
  return ev.mu(index);
}

std::map<std::vector<int>, Int> mu_many(const StringLink& sl,
                                        const std::vector<std::vector<int>>& indices) {
  int maxlen = 0;
  for (const auto& idx : indices) maxlen = std::max(maxlen, int(idx.size()));
  if (maxlen > kMaxMilnorLength) throw diagram_error("mu: index longer than the supported ceiling");
  std::map<std::vector<int>, Int> out;
  if (indices.empty()) return out;
  MilnorEvaluator ev(sl, maxlen - 1);
  for (const auto& idx : indices) out[idx] = ev.mu(idx);
  return out;
}

int arf(const StringLink& sl, int comp) {
  StringLink strand = substring_link(sl, {comp});
  Int a2 = a2k(braid_closure(strand), 1);
  return (a2 % 2) == 0 ? 0 : 1;
}

}  // namespace slinv
