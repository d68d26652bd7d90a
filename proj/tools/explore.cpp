// Scratch probe used while fixing catalog conventions against the paper's
// tables; not part of the shipped toolchain.
#include "slinv/clasper.hpp"
#include "slinv/closures.hpp"
#include "slinv/diagram.hpp"
#include "slinv/milnor.hpp"
#include "slinv/skein.hpp"

#include <chrono>
#include <iostream>

using namespace slinv;

static StringLink knot_tree(const std::vector<int>& heights, int twists = 0) {
  LinearTreeClasperSpec s;
  for (int h : heights) s.leaves.push_back({1, h});
  s.half_twists = twists;
  return surgery(StringLink::trivial(1), s);
}

static void quad(const std::string& name, const MorseDiagram& knot) {
  auto t0 = std::chrono::steady_clock::now();
  Int a2 = a2k(knot, 1);
  Int a4 = a2k(knot, 2);
  Int p03 = p_deriv(knot, 0, 3);
  Int p04 = p_deriv(knot, 0, 4);
  auto t1 = std::chrono::steady_clock::now();
  auto d = simplify(knot);
  std::cout << name << ": a2=" << a2 << " P03=" << p03 << " a4=" << a4 << " P04=" << p04
            << "   [" << trace(d).crossings.size() << " crossings, "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms]\n";
}

int main() {
  // degree 2: trefoil generator
  quad("T(111) planar", braid_closure(knot_tree({0, 1, 2})));

  // degree 3 candidates
  quad("H cand (0,1,2,3)", braid_closure(knot_tree({0, 1, 2, 3})));
  quad("X cand ends swapped (3,1,2,0)", braid_closure(knot_tree({3, 1, 2, 0})));
  quad("X cand mid swapped (0,2,1,3)", braid_closure(knot_tree({0, 2, 1, 3})));

  // degree 4 family k_alpha: ends at extremes, interior heights permuted
  quad("K id    (0,1,2,3,4)", braid_closure(knot_tree({0, 1, 2, 3, 4})));
  quad("K (12)  (0,2,1,3,4)", braid_closure(knot_tree({0, 2, 1, 3, 4})));
  quad("K (23)  (0,1,3,2,4)", braid_closure(knot_tree({0, 1, 3, 2, 4})));
  quad("K (13)  (0,3,2,1,4)", braid_closure(knot_tree({0, 3, 2, 1, 4})));
  quad("K (123) (0,2,3,1,4)", braid_closure(knot_tree({0, 2, 3, 1, 4})));
  quad("K (132) (0,3,1,2,4)", braid_closure(knot_tree({0, 3, 1, 2, 4})));
  return 0;
}
