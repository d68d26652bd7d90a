#include "slinv/skein.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace slinv {

namespace {

std::shared_mutex cache_mutex;
std::unordered_map<std::string, HomflyPoly> homfly_cache;
std::unordered_map<std::string, ConwayPoly> conway_cache;

template <class Poly, class Cache>
bool cache_lookup(const Cache& cache, const std::string& key, Poly& out) {
  std::shared_lock lock(cache_mutex);
  auto it = cache.find(key);
  if (it == cache.end()) return false;
  out = it->second;
  return true;
}

template <class Poly, class Cache>
void cache_store(Cache& cache, const std::string& key, const Poly& value) {
  std::unique_lock lock(cache_mutex);
  cache.emplace(key, value);
}

// Passage sequence in canonical traversal order, for bad-crossing scans.
struct Scan {
  std::vector<Passage> order;
  std::vector<int> smooth_split;  // crossing -> 1 if smoothing splits off a factor
  int n_components = 0;
};

Scan make_scan(const TracedDiagram& t) {
  Scan s;
  s.n_components = t.n_components;
  s.smooth_split.assign(t.crossings.size(), 0);
  for (const auto& comp : t.components) {
    // Self-crossing whose two halves share no other crossing: smoothing there
    // splits the diagram into independent pieces (a connected-sum cut).
    std::vector<int> first_at(t.crossings.size(), -1);
    for (int i = 0; i < int(comp.passages.size()); ++i) {
      int c = comp.passages[i].crossing;
      if (first_at[c] < 0) {
        first_at[c] = i;
      } else {
        int q1 = first_at[c], q2 = i;
        bool split = true;
        for (int j = q1 + 1; j < q2 && split; ++j) {
          int cj = comp.passages[j].crossing;
          bool partner_inside = false;
          for (int k = q1 + 1; k < q2; ++k)
            if (k != j && comp.passages[k].crossing == cj) partner_inside = true;
          if (!partner_inside) split = false;
        }
        if (split) s.smooth_split[c] = 1;
      }
    }
    for (const Passage& p : comp.passages) s.order.push_back(p);
  }
  return s;
}

// First-visit scan: returns the chosen bad crossing or -1 when descending.
int find_bad(const Scan& scan, const std::vector<int>& geo, const TracedDiagram& t) {
  std::vector<char> visited(t.crossings.size(), 0);
  int first_bad = -1, best_split = -1;
  for (const Passage& p : scan.order) {
    const Crossing& c = t.crossings[p.crossing];
    if (visited[p.crossing]) continue;
    visited[p.crossing] = 1;
    // p.over was computed for the original geo; re-derive for current signs.
    bool sign_flipped = geo[p.crossing] != c.geo;
    bool over = p.over != sign_flipped;
    if (!over) {
      if (first_bad < 0) first_bad = p.crossing;
      if (scan.smooth_split[p.crossing] && best_split < 0) best_split = p.crossing;
    }
  }
  return best_split >= 0 ? best_split : first_bad;
}

MorseDiagram rebuild(const MorseDiagram& base, const TracedDiagram& t,
                     const std::vector<int>& geo, int smooth_at) {
  MorseDiagram out;
  out.n_bottom = base.n_bottom;
  out.n_top = base.n_top;
  int smooth_slice = smooth_at >= 0 ? t.crossings[smooth_at].slice : -1;
  bool parallel = smooth_at >= 0 && t.crossings[smooth_at].dir_a * t.crossings[smooth_at].dir_b > 0;
  int ci = 0;
  for (size_t i = 0; i < base.slices.size(); ++i) {
    const Slice& s = base.slices[i];
    if (s.kind != SliceKind::Cross) {
      out.slices.push_back(s);
      continue;
    }
    if (int(i) == smooth_slice) {
      if (!parallel) {
        out.slices.push_back(Slice::cap(s.pos));
        out.slices.push_back(Slice::cup(s.pos));
      }
      // parallel smoothing deletes the crossing
    } else {
      out.slices.push_back(Slice::cross(s.pos, geo[ci]));
    }
    ++ci;
  }
  return out;
}

template <class Poly>
struct Rules;

template <>
struct Rules<HomflyPoly> {
  static HomflyPoly one() { return HomflyPoly::one(); }
  static HomflyPoly base_value(int n_components) {
    HomflyPoly v = HomflyPoly::one();
    for (int i = 1; i < n_components; ++i) v = v * HomflyPoly::unlink_factor();
    return v;
  }
  // L_current with sign eps: P(cur) = switch_factor * P(switched) + smooth_factor * P(smooth)
  static HomflyPoly switch_factor(int eps) {
    return HomflyPoly::monomial(1, eps > 0 ? 2 : -2, 0);
  }
  static HomflyPoly smooth_factor(int eps) {
    return eps > 0 ? HomflyPoly::monomial(1, 1, 1) : HomflyPoly::monomial(-1, -1, 1);
  }
};

template <>
struct Rules<ConwayPoly> {
  static ConwayPoly one() { return ConwayPoly::one(); }
  static ConwayPoly base_value(int n_components) {
    return n_components == 1 ? ConwayPoly::one() : ConwayPoly::zero();
  }
  static ConwayPoly switch_factor(int) { return ConwayPoly::one(); }
  static ConwayPoly smooth_factor(int eps) {
    ConwayPoly z = ConwayPoly::z();
    return eps > 0 ? z : ConwayPoly::zero() - z;
  }
};

template <class Poly, class Cache>
Poly eval_skein(const MorseDiagram& input, Cache& cache, bool use_cache) {
  MorseDiagram d = simplify(input);
  std::string key = d.key();
  Poly cached;
  if (use_cache && cache_lookup(cache, key, cached)) return cached;

  TracedDiagram t = trace(d);
  Scan scan = make_scan(t);
  std::vector<int> geo(t.crossings.size());
  for (size_t i = 0; i < t.crossings.size(); ++i) geo[i] = t.crossings[i].geo;

  Poly result;
  Poly coeff = Rules<Poly>::one();
  while (true) {
    int bad = find_bad(scan, geo, t);
    if (bad < 0) {
      result += coeff * Rules<Poly>::base_value(scan.n_components);
      break;
    }
    int eps = geo[bad] * t.crossings[bad].dir_a * t.crossings[bad].dir_b;
    Poly smooth_value = eval_skein<Poly>(rebuild(d, t, geo, bad), cache, use_cache);
    result += coeff * Rules<Poly>::smooth_factor(eps) * smooth_value;
    coeff = coeff * Rules<Poly>::switch_factor(eps);
    geo[bad] = -geo[bad];
  }

  if (use_cache) cache_store(cache, key, result);
  return result;
}

}  // namespace

ConwayPoly conway(const MorseDiagram& d, bool use_cache) {
  if (!d.closed()) throw diagram_error("conway: diagram is not closed");
  return eval_skein<ConwayPoly>(d, conway_cache, use_cache);
}

HomflyPoly homflypt(const MorseDiagram& d, bool use_cache) {
  if (!d.closed()) throw diagram_error("homflypt: diagram is not closed");
  HomflyPoly p = eval_skein<HomflyPoly>(d, homfly_cache, use_cache);
  return p;
}

void clear_skein_cache() {
  std::unique_lock lock(cache_mutex);
  homfly_cache.clear();
  conway_cache.clear();
}

Int a2k(const MorseDiagram& d, int k) {
  TracedDiagram t = trace(d);
  if (!d.closed() || t.n_components != 1) throw diagram_error("a2k: input is not a knot");
  return conway(d).coeff(2 * k);
}

Int p_deriv(const MorseDiagram& d, int two_k, int l) {
  TracedDiagram t = trace(d);
  if (!d.closed() || t.n_components != 1) throw diagram_error("p_deriv: input is not a knot");
  HomflyPoly p = homflypt(d);
  if (p.min_z_power() < 0) throw diagram_error("p_deriv: non-polynomial z powers on a knot");
  return derivative_at_one(p.z_coefficient(two_k), l);
}

}  // namespace slinv
