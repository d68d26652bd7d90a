#pragma once

#include "slinv/diagram.hpp"

#include <vector>

namespace slinv {

// Standard closure: each strand's top joined to its bottom by nested return
// arcs on the left; no extra crossings.
MorseDiagram braid_closure(const StringLink& sl);

// Plat closure of a 2-string link: identify the two top and the two bottom
// endpoints.
MorseDiagram plat_closure(const StringLink& sl);

// Zigzag closure: visit the components in `order` (1-based permutation),
// joining consecutive ones by arcs that alternate between top and bottom,
// starting at the top when `top_first`; the final arc closes the cycle.
// Earlier arcs pass over later ones where arcs must cross.
MorseDiagram zigzag_closure(const StringLink& sl, const std::vector<int>& order, bool top_first);

// The five closures of a 3-string link and the three closures of a 4-string
// link used by the degree-4 invariants.  Their arc patterns are fixed
// zigzag templates; see closures.cpp.
MorseDiagram cl_closure(const StringLink& sl, int i);  // i = 0..4, n = 3
MorseDiagram k_closure(const StringLink& sl, int i);   // i = 1..3, n = 4

// K_tau of section 7: tau maps {1..n-1} onto {2..n} with tau(1) < tau(n-1);
// the knot visits components 1, tau(1), ..., tau(n-1) with arcs alternating
// top/bottom from the top, and arc a_i overpasses a_j for i < j.
MorseDiagram ktau_closure(const StringLink& sl, const std::vector<int>& tau);

// All of B_n(1): the valid tau vectors for ktau_closure.
std::vector<std::vector<int>> b_n_bijections(int n, int excluded);

// 0-framed doubling of component comp (1-based); returns an (n+1)-string
// link with the new copy adjacent to the original.
StringLink cable(const StringLink& sl, int comp);

}  // namespace slinv
