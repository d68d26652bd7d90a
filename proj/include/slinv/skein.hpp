#pragma once

#include "slinv/diagram.hpp"
#include "slinv/poly.hpp"

namespace slinv {

// Skein-recursion evaluation of the Conway and HOMFLYPT polynomials on closed
// diagrams, with the conventions
//   nabla(L+) - nabla(L-) = z nabla(L0),          nabla(unknot) = 1
//   t^-1 P(L+) - t P(L-) = z P(L0),               P(unknot) = 1.
// Split links: nabla = 0, P gains a factor (t^-1 - t)/z per extra component.
//
// The engine reduces to descending diagrams along a canonical traversal,
// simplifying between branches, and memoizes results under the canonical
// slice-word key.  The shared cache takes a lock on writes; evaluation is
// otherwise pure.

ConwayPoly conway(const MorseDiagram& d, bool use_cache = true);
HomflyPoly homflypt(const MorseDiagram& d, bool use_cache = true);

void clear_skein_cache();

// Conway coefficient a_{2k} of a knot diagram.
Int a2k(const MorseDiagram& d, int k);

// P_{2k}^{(l)}: l-th derivative at t=1 of the 2k-th coefficient polynomial of
// a knot diagram.
Int p_deriv(const MorseDiagram& d, int two_k, int l);

}  // namespace slinv
