#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slinv {

// Elementary Morse slices, read bottom to top.
//
// Cross(p, sign): the strands at positions p, p+1 cross; sign +1 means the
// strand entering at p (and leaving at p+1) passes over.  With both strands
// oriented upward this is the positive crossing, so that the closure of a
// single positive clasp has linking number +1.
// Cup(p): a local minimum creating two new points at positions p, p+1.
// Cap(p): a local maximum joining the points at positions p, p+1.
enum class SliceKind : uint8_t { Cross, Cup, Cap };

struct Slice {
  SliceKind kind;
  int pos = 0;
  int sign = 0;  // Cross only

  static Slice cross(int p, int s) { return {SliceKind::Cross, p, s}; }
  static Slice cup(int p) { return {SliceKind::Cup, p, 0}; }
  static Slice cap(int p) { return {SliceKind::Cap, p, 0}; }

  bool operator==(const Slice&) const = default;
};

struct MorseDiagram {
  int n_bottom = 0;
  int n_top = 0;
  std::vector<Slice> slices;

  bool closed() const { return n_bottom == 0 && n_top == 0; }
  bool operator==(const MorseDiagram&) const = default;

  // Width before slice i (i = slices.size() gives the top width), or -1 if
  // the word is malformed at some earlier slice.
  int width_at(size_t i) const;

  std::string key() const;  // compact serialization, used as memo key
};

class diagram_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One crossing with its traced strand data.
struct Crossing {
  int slice = 0;
  int pos = 0;
  int geo = 0;           // +1: strand entering at pos is over
  int comp_a = 0, comp_b = 0;  // a enters at pos, b at pos+1
  int dir_a = 0, dir_b = 0;    // +1 = flows upward through the crossing
  int arc_over = -1;
  int arc_under_in = -1, arc_under_out = -1;
  int comp_over = 0, comp_under = 0;

  int sign() const { return geo * dir_a * dir_b; }
};

// A passage of some component through a crossing.
struct Passage {
  int crossing = 0;
  bool over = false;
};

struct ComponentInfo {
  bool is_closed = false;
  int bottom = -1, top = -1;      // boundary positions for open components
  std::vector<Passage> passages;  // in traversal order
  int first_arc = -1;             // arc at the bottom endpoint (open comps)
};

// Full traced structure of a diagram: components, orientations, crossings
// and Wirtinger arcs.  Components of open strands are numbered by bottom
// position first, then closed components in discovery order.
struct TracedDiagram {
  int n_components = 0;
  int n_open = 0;
  std::vector<int> comp_of_bottom;
  std::vector<int> comp_of_top;
  std::vector<ComponentInfo> components;
  std::vector<Crossing> crossings;
  int n_arcs = 0;
  std::vector<int> arc_component;

  int writhe(int comp) const;
  int linking2(int comp_a, int comp_b) const;  // twice the linking number
};

TracedDiagram trace(const MorseDiagram& d);

enum class DiagramClass { StringLink, ClosedLink, Tangle };

struct ValidationReport {
  bool ok = true;
  DiagramClass cls = DiagramClass::Tangle;
  std::vector<std::string> errors;
};

ValidationReport validate(const MorseDiagram& d);

// An n-string link: component i runs from bottom position i to top
// position i, oriented upward.  Knotted strands need cups and caps, so the
// slice word is unrestricted; the string-link property is about endpoints
// and the absence of closed components.
struct StringLink {
  int n = 0;
  MorseDiagram diagram;

  static StringLink trivial(int n);
};

// Throws diagram_error when d is not a valid string-link diagram.
StringLink as_string_link(const MorseDiagram& d);

StringLink stack(const StringLink& a, const StringLink& b);

// Deletes the strands outside `keep` (1-based component labels, ascending
// order induced by the subset).
StringLink substring_link(const StringLink& sl, const std::vector<int>& keep);

MorseDiagram mirror_lr(const MorseDiagram& d);

// Reidemeister I/II removal, snake cancellation and a canonical ordering of
// commuting slices.  Idempotent; preserves the isotopy class.
MorseDiagram simplify(const MorseDiagram& d);

// Text format, one directive per line:
//   stringlink <n> | link
//   x+ <p> / x- <p> / cup <p> / cap <p>   (positions 1-based)
//   end
MorseDiagram parse_diagram(std::istream& in);
MorseDiagram parse_diagram_string(const std::string& text);
std::string emit_diagram(const MorseDiagram& d);

}  // namespace slinv
