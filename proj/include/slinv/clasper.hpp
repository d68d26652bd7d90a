#pragma once

#include "slinv/diagram.hpp"

#include <vector>

namespace slinv {

struct ClasperLeaf {
  int component = 0;  // 1-based
  int height = 0;     // orders leaves along a shared component
};

// A simple linear tree clasper attached to a string link.  The first leaf is
// the root end: surgery reroutes its strand through the iterated commutator
// [m_1, [m_2, [... , m_k]]] of loops around the remaining leaves, in tree
// order.  An odd number of half twists replaces the band word by its inverse.
struct LinearTreeClasperSpec {
  std::vector<ClasperLeaf> leaves;
  int half_twists = 0;

  int degree() const { return int(leaves.size()) - 1; }
};

LinearTreeClasperSpec inverse_spec(LinearTreeClasperSpec spec);

// Ordered index per the lexicographically minimal end-to-end reading.
std::vector<int> o_index(const LinearTreeClasperSpec& spec);

// Surgery along the clasper; leaves grab the strands in a widget inserted at
// the bottom of the diagram, ordered along each strand by leaf height.
StringLink surgery(const StringLink& sl, const LinearTreeClasperSpec& spec);

// The widget alone (an n-strand string link word realizing the surgery on
// the trivial string link).
std::vector<Slice> surgery_widget(int n, const LinearTreeClasperSpec& spec);

// Text format: `clasper <k>`, then k+1 lines `leaf <component> <height>`,
// optional `twist <count>`, then `end`.
LinearTreeClasperSpec parse_clasper_string(const std::string& text);
std::string emit_clasper(const LinearTreeClasperSpec& spec);

}  // namespace slinv
