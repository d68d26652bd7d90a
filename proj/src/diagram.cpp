#include "slinv/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <sstream>

namespace slinv {

int MorseDiagram::width_at(size_t i) const {
  int w = n_bottom;
  for (size_t k = 0; k < i && k < slices.size(); ++k) {
    const Slice& s = slices[k];
    switch (s.kind) {
      case SliceKind::Cross:
        if (s.pos < 0 || s.pos + 1 >= w) return -1;
        break;
      case SliceKind::Cup:
        if (s.pos < 0 || s.pos > w) return -1;
        w += 2;
        break;
      case SliceKind::Cap:
        if (s.pos < 0 || s.pos + 1 >= w) return -1;
        w -= 2;
        break;
    }
  }
  return w;
}

std::string MorseDiagram::key() const {
  std::string k;
  k.reserve(slices.size() * 3 + 8);
  k += static_cast<char>('0' + n_bottom % 64);
  k += static_cast<char>('0' + n_top % 64);
  for (const Slice& s : slices) {
    char c;
    switch (s.kind) {
      case SliceKind::Cross: c = s.sign > 0 ? 'X' : 'x'; break;
      case SliceKind::Cup: c = 'u'; break;
      default: c = 'n'; break;
    }
    k += c;
    k += static_cast<char>('0' + s.pos);
  }
  return k;
}

namespace {

struct Link {
  int other = -1;
  bool lateral = false;  // min/max connection at the same level
};

struct NodeGraph {
  std::vector<int> level_base;  // node id of (level, 0)
  std::vector<int> widths;
  std::vector<Link> up, down;
  int id(int level, int pos) const { return level_base[level] + pos; }
};

NodeGraph build_nodes(const MorseDiagram& d) {
  NodeGraph g;
  int w = d.n_bottom;
  g.widths.push_back(w);
  for (size_t i = 0; i < d.slices.size(); ++i) {
    const Slice& s = d.slices[i];
    switch (s.kind) {
      case SliceKind::Cross:
        if (s.pos < 0 || s.pos + 1 >= w)
          throw diagram_error("crossing position out of range at slice " + std::to_string(i));
        break;
      case SliceKind::Cup:
        if (s.pos < 0 || s.pos > w)
          throw diagram_error("cup position out of range at slice " + std::to_string(i));
        w += 2;
        break;
      case SliceKind::Cap:
        if (s.pos < 0 || s.pos + 1 >= w)
          throw diagram_error("cap position out of range at slice " + std::to_string(i));
        w -= 2;
        break;
    }
    g.widths.push_back(w);
  }
  if (w != d.n_top) throw diagram_error("final width does not match n_top");

  g.level_base.resize(g.widths.size());
  int total = 0;
  for (size_t l = 0; l < g.widths.size(); ++l) {
    g.level_base[l] = total;
    total += g.widths[l];
  }
  g.up.assign(total, {});
  g.down.assign(total, {});

  auto connect_vertical = [&](int lo, int hi) {
    g.up[lo] = {hi, false};
    g.down[hi] = {lo, false};
  };

  for (size_t i = 0; i < d.slices.size(); ++i) {
    const Slice& s = d.slices[i];
    int wl = g.widths[i];
    auto below = [&](int p) { return g.id(int(i), p); };
    auto above = [&](int p) { return g.id(int(i) + 1, p); };
    switch (s.kind) {
      case SliceKind::Cross:
        for (int q = 0; q < wl; ++q) {
          if (q == s.pos)
            connect_vertical(below(q), above(q + 1));
          else if (q == s.pos + 1)
            connect_vertical(below(q), above(q - 1));
          else
            connect_vertical(below(q), above(q));
        }
        break;
      case SliceKind::Cup:
        for (int q = 0; q < wl; ++q)
          connect_vertical(below(q), above(q < s.pos ? q : q + 2));
        g.down[above(s.pos)] = {above(s.pos + 1), true};
        g.down[above(s.pos + 1)] = {above(s.pos), true};
        break;
      case SliceKind::Cap:
        for (int q = 0; q < wl; ++q) {
          if (q == s.pos || q == s.pos + 1) continue;
          connect_vertical(below(q), above(q < s.pos ? q : q - 2));
        }
        g.up[below(s.pos)] = {below(s.pos + 1), true};
        g.up[below(s.pos + 1)] = {below(s.pos), true};
        break;
    }
  }
  return g;
}

}  // namespace

int TracedDiagram::writhe(int comp) const {
  int w = 0;
  for (const Crossing& c : crossings)
    if (c.comp_a == comp && c.comp_b == comp) w += c.sign();
  return w;
}

int TracedDiagram::linking2(int ca, int cb) const {
  int s = 0;
  for (const Crossing& c : crossings) {
    if ((c.comp_a == ca && c.comp_b == cb) || (c.comp_a == cb && c.comp_b == ca)) s += c.sign();
  }
  return s;
}

TracedDiagram trace(const MorseDiagram& d) {
  NodeGraph g = build_nodes(d);
  TracedDiagram t;
  t.comp_of_bottom.assign(d.n_bottom, -1);
  t.comp_of_top.assign(d.n_top, -1);

  // Crossing lookup: directed node pair -> (crossing index, strand role).
  std::map<std::pair<int, int>, std::pair<int, int>> cross_of;
  for (size_t i = 0; i < d.slices.size(); ++i) {
    const Slice& s = d.slices[i];
    if (s.kind != SliceKind::Cross) continue;
    Crossing c;
    c.slice = int(i);
    c.pos = s.pos;
    c.geo = s.sign;
    int idx = int(t.crossings.size());
    cross_of[{g.id(int(i), s.pos), g.id(int(i) + 1, s.pos + 1)}] = {idx, 0};
    cross_of[{g.id(int(i), s.pos + 1), g.id(int(i) + 1, s.pos)}] = {idx, 1};
    t.crossings.push_back(c);
  }

  int total_nodes = int(g.up.size());
  std::vector<int> node_comp(total_nodes, -1);

  int top_level = int(g.widths.size()) - 1;

  // Walk one component from `start`, entering in flow direction `via_down`
  // (true: we arrive at start from its down side, flowing upward).
  auto walk = [&](int start, bool entered_from_down, int comp) {
    int node = start;
    bool from_down = entered_from_down;
    while (true) {
      if (node_comp[node] != -1) {
        // closed component completed
        break;
      }
      node_comp[node] = comp;
      const Link& exit_link = from_down ? g.up[node] : g.down[node];
      if (exit_link.other == -1) {
        // boundary endpoint reached
        if (from_down) {
          int p = node - g.level_base[top_level];
          t.comp_of_top[p] = comp;
          t.components[comp].top = p;
        } else {
          int p = node - g.level_base[0];
          t.comp_of_bottom[p] = comp;
          t.components[comp].bottom = p;
        }
        break;
      }
      // Record the passage if this step runs through a crossing.
      if (!exit_link.lateral) {
        int lo = from_down ? node : exit_link.other;
        int hi = from_down ? exit_link.other : node;
        auto it = cross_of.find({lo, hi});
        if (it != cross_of.end()) {
          auto [ci, role] = it->second;
          Crossing& c = t.crossings[ci];
          int dir = from_down ? 1 : -1;
          if (role == 0) {
            c.comp_a = comp;
            c.dir_a = dir;
          } else {
            c.comp_b = comp;
            c.dir_b = dir;
          }
          bool over = (role == 0) == (c.geo > 0);
          t.components[comp].passages.push_back({ci, over});
        }
      }
      int next = exit_link.other;
      if (exit_link.lateral) {
        from_down = !from_down;  // min/max arc reverses the flow
      }
      node = next;
    }
  };

  // Open components starting at the bottom, in position order.
  for (int i = 0; i < d.n_bottom; ++i) {
    int start = g.id(0, i);
    if (node_comp[start] != -1) continue;
    int comp = t.n_components++;
    t.components.push_back({});
    t.components[comp].bottom = i;
    t.comp_of_bottom[i] = comp;
    walk(start, true, comp);
  }
  // Open components hanging from the top only.
  for (int i = 0; i < d.n_top; ++i) {
    int start = g.id(top_level, i);
    if (node_comp[start] != -1) continue;
    int comp = t.n_components++;
    t.components.push_back({});
    t.components[comp].top = i;
    t.comp_of_top[i] = comp;
    walk(start, false, comp);
  }
  t.n_open = t.n_components;
  // Closed components.
  for (int node = 0; node < total_nodes; ++node) {
    if (node_comp[node] != -1) continue;
    int comp = t.n_components++;
    t.components.push_back({});
    t.components[comp].is_closed = true;
    walk(node, true, comp);
  }

  // Arc structure (Wirtinger): arcs are maximal runs between underpasses.
  t.arc_component.clear();
  for (int ci = 0; ci < int(t.components.size()); ++ci) {
    ComponentInfo& comp = t.components[ci];
    auto passages = comp.passages;
    int n_under = 0;
    for (const Passage& p : passages)
      if (!p.over) ++n_under;
    if (!comp.is_closed) {
      int arc = t.n_arcs++;
      t.arc_component.push_back(ci);
      comp.first_arc = arc;
      for (const Passage& p : passages) {
        Crossing& c = t.crossings[p.crossing];
        if (p.over) {
          c.arc_over = arc;
          c.comp_over = ci;
        } else {
          c.arc_under_in = arc;
          c.comp_under = ci;
          arc = t.n_arcs++;
          t.arc_component.push_back(ci);
          c.arc_under_out = arc;
        }
      }
    } else {
      if (n_under == 0) {
        int arc = t.n_arcs++;
        t.arc_component.push_back(ci);
        comp.first_arc = arc;
        for (const Passage& p : passages) {
          Crossing& c = t.crossings[p.crossing];
          c.arc_over = arc;
          c.comp_over = ci;
        }
      } else {
        // Arcs wrap around: allocate per underpass, then assign.
        std::vector<int> arc_ids(n_under);
        for (int k = 0; k < n_under; ++k) {
          arc_ids[k] = t.n_arcs++;
          t.arc_component.push_back(ci);
        }
        comp.first_arc = arc_ids.empty() ? -1 : arc_ids.back();
        // Before the first underpass the component is on the arc that
        // follows the *last* underpass.
        int under_seen = 0;
        for (const Passage& p : passages) {
          Crossing& c = t.crossings[p.crossing];
          int cur = arc_ids[(under_seen + n_under - 1) % n_under];
          if (p.over) {
            c.arc_over = cur;
            c.comp_over = ci;
          } else {
            c.arc_under_in = cur;
            c.comp_under = ci;
            c.arc_under_out = arc_ids[under_seen];
            ++under_seen;
          }
        }
      }
    }
  }

  return t;
}

ValidationReport validate(const MorseDiagram& d) {
  ValidationReport r;
  if (d.n_bottom < 0 || d.n_top < 0) {
    r.ok = false;
    r.errors.push_back("negative boundary count");
    return r;
  }
  TracedDiagram t;
  try {
    t = trace(d);
  } catch (const diagram_error& e) {
    r.ok = false;
    r.errors.push_back(e.what());
    return r;
  }
  if (d.closed()) {
    r.cls = DiagramClass::ClosedLink;
    return r;
  }
  bool string_link = d.n_bottom == d.n_top;
  if (string_link) {
    for (int i = 0; i < d.n_bottom && string_link; ++i) {
      if (t.comp_of_bottom[i] != i || t.comp_of_top[i] != i) string_link = false;
    }
    for (const auto& c : t.components)
      if (c.is_closed) string_link = false;
  }
  r.cls = string_link ? DiagramClass::StringLink : DiagramClass::Tangle;
  return r;
}

StringLink StringLink::trivial(int n) {
  StringLink sl;
  sl.n = n;
  sl.diagram.n_bottom = sl.diagram.n_top = n;
  return sl;
}

StringLink as_string_link(const MorseDiagram& d) {
  ValidationReport r = validate(d);
  if (!r.ok)
    throw diagram_error("invalid diagram: " + (r.errors.empty() ? "?" : r.errors.front()));
  if (r.cls != DiagramClass::StringLink) throw diagram_error("diagram is not a string link");
  return StringLink{d.n_bottom, d};
}

StringLink stack(const StringLink& a, const StringLink& b) {
  if (a.n != b.n) throw diagram_error("stack: component counts differ");
  StringLink r = a;
  r.diagram.slices.insert(r.diagram.slices.end(), b.diagram.slices.begin(),
                          b.diagram.slices.end());
  return r;
}

StringLink substring_link(const StringLink& sl, const std::vector<int>& keep) {
  if (keep.empty()) throw diagram_error("substring_link: empty component set");
  std::vector<int> ks = keep;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (int c : ks)
    if (c < 1 || c > sl.n) throw diagram_error("substring_link: component out of range");

  std::vector<bool> keep_comp(sl.n, false);
  for (int c : ks) keep_comp[c - 1] = true;

  TracedDiagram t = trace(sl.diagram);
  // alive[p]: current position p belongs to a kept component
  std::vector<bool> alive;
  for (int i = 0; i < sl.n; ++i) alive.push_back(keep_comp[t.comp_of_bottom[i]]);

  auto newpos = [&](int p) {
    int np = 0;
    for (int q = 0; q < p; ++q)
      if (alive[q]) ++np;
    return np;
  };

  MorseDiagram out;
  out.n_bottom = out.n_top = int(ks.size());

  // Component of every cup-created point, via a flood fill over the nodes.
  NodeGraph g = build_nodes(sl.diagram);
  std::vector<int> node_comp(g.up.size(), -1);
  for (int i = 0; i < sl.diagram.n_bottom; ++i) {
    int comp_id = t.comp_of_bottom[i];
    std::vector<int> stack{g.id(0, i)};
    while (!stack.empty()) {
      int nd = stack.back();
      stack.pop_back();
      if (node_comp[nd] != -1) continue;
      node_comp[nd] = comp_id;
      for (const Link* lk : {&g.up[nd], &g.down[nd]})
        if (lk->other != -1 && node_comp[lk->other] == -1) stack.push_back(lk->other);
    }
  }

  for (size_t i = 0; i < sl.diagram.slices.size(); ++i) {
    const Slice& s = sl.diagram.slices[i];
    switch (s.kind) {
      case SliceKind::Cross: {
        if (alive[s.pos] && alive[s.pos + 1])
          out.slices.push_back(Slice::cross(newpos(s.pos), s.sign));
        bool tmp = alive[s.pos];
        alive[s.pos] = alive[s.pos + 1];
        alive[s.pos + 1] = tmp;
        break;
      }
      case SliceKind::Cup: {
        int c0 = node_comp[g.id(int(i) + 1, s.pos)];
        bool live = c0 >= 0 && keep_comp[c0];
        if (live) out.slices.push_back(Slice::cup(newpos(s.pos)));
        alive.insert(alive.begin() + s.pos, 2, live);
        break;
      }
      case SliceKind::Cap: {
        if (alive[s.pos]) out.slices.push_back(Slice::cap(newpos(s.pos)));
        alive.erase(alive.begin() + s.pos, alive.begin() + s.pos + 2);
        break;
      }
    }
  }
  return as_string_link(out);
}

MorseDiagram mirror_lr(const MorseDiagram& d) {
  MorseDiagram out;
  out.n_bottom = d.n_bottom;
  out.n_top = d.n_top;
  int w = d.n_bottom;
  for (const Slice& s : d.slices) {
    switch (s.kind) {
      case SliceKind::Cross:
        out.slices.push_back(Slice::cross(w - 2 - s.pos, -s.sign));
        break;
      case SliceKind::Cup:
        out.slices.push_back(Slice::cup(w - s.pos));
        w += 2;
        break;
      case SliceKind::Cap:
        out.slices.push_back(Slice::cap(w - 2 - s.pos));
        w -= 2;
        break;
    }
  }
  return out;
}

namespace {

int kind_rank(SliceKind k) {
  switch (k) {
    case SliceKind::Cap: return 0;
    case SliceKind::Cross: return 1;
    default: return 2;
  }
}

// If [a, b] can be rewritten as [b', a'] (disjoint supports), return the pair.
std::optional<std::pair<Slice, Slice>> commute_adjacent(const Slice& a, const Slice& b) {
  using K = SliceKind;
  auto mk = [](Slice x, Slice y) { return std::optional(std::make_pair(x, y)); };
  if (a.kind == K::Cross && b.kind == K::Cross) {
    if (b.pos + 1 < a.pos || b.pos > a.pos + 1) return mk(b, a);
    return std::nullopt;
  }
  if (a.kind == K::Cross && b.kind == K::Cup) {
    if (b.pos <= a.pos) return mk(b, Slice::cross(a.pos + 2, a.sign));
    if (b.pos >= a.pos + 2) return mk(b, a);
    return std::nullopt;
  }
  if (a.kind == K::Cross && b.kind == K::Cap) {
    if (b.pos + 1 < a.pos) return mk(b, Slice::cross(a.pos - 2, a.sign));
    if (b.pos > a.pos + 1) return mk(b, a);
    return std::nullopt;
  }
  if (a.kind == K::Cup && b.kind == K::Cross) {
    if (b.pos + 1 < a.pos) return mk(b, a);
    if (b.pos > a.pos + 1) return mk(Slice::cross(b.pos - 2, b.sign), a);
    return std::nullopt;
  }
  if (a.kind == K::Cup && b.kind == K::Cup) {
    if (b.pos <= a.pos) return mk(b, Slice::cup(a.pos + 2));
    if (b.pos >= a.pos + 2) return mk(Slice::cup(b.pos - 2), a);
    return std::nullopt;
  }
  if (a.kind == K::Cup && b.kind == K::Cap) {
    if (b.pos + 1 < a.pos) return mk(b, Slice::cup(a.pos - 2));
    if (b.pos > a.pos + 1) return mk(Slice::cap(b.pos - 2), a);
    return std::nullopt;
  }
  if (a.kind == K::Cap && b.kind == K::Cross) {
    if (b.pos + 1 < a.pos) return mk(b, a);
    if (b.pos >= a.pos) return mk(Slice::cross(b.pos + 2, b.sign), a);
    return std::nullopt;
  }
  if (a.kind == K::Cap && b.kind == K::Cup) {
    if (b.pos <= a.pos) return mk(b, Slice::cap(a.pos + 2));
    return mk(Slice::cup(b.pos + 2), a);
  }
  if (a.kind == K::Cap && b.kind == K::Cap) {
    if (b.pos + 1 < a.pos) return mk(b, Slice::cap(a.pos - 2));
    if (b.pos >= a.pos) return mk(Slice::cap(b.pos + 2), a);
    return std::nullopt;
  }
  return std::nullopt;
}

std::tuple<int, int, int> slice_key(const Slice& s) {
  return {kind_rank(s.kind), s.pos, s.sign};
}

bool peephole_pass(std::vector<Slice>& v) {
  bool changed = false;
  std::vector<Slice> out;
  size_t i = 0;
  while (i < v.size()) {
    // triples
    if (i + 2 < v.size()) {
      const Slice &a = v[i], &b = v[i + 1], &c = v[i + 2];
      bool kink1 = a.kind == SliceKind::Cup && b.kind == SliceKind::Cross &&
                   c.kind == SliceKind::Cap && a.pos == c.pos &&
                   ((b.pos == a.pos - 1 && a.pos >= 1) || b.pos == a.pos + 1);
      if (kink1) {
        i += 3;
        changed = true;
        continue;
      }
    }
    if (i + 1 < v.size()) {
      const Slice &a = v[i], &b = v[i + 1];
      // Reidemeister II
      if (a.kind == SliceKind::Cross && b.kind == SliceKind::Cross && a.pos == b.pos &&
          a.sign == -b.sign) {
        i += 2;
        changed = true;
        continue;
      }
      // snake
      if (a.kind == SliceKind::Cup && b.kind == SliceKind::Cap &&
          (b.pos == a.pos + 1 || b.pos + 1 == a.pos)) {
        i += 2;
        changed = true;
        continue;
      }
      // Reidemeister I at a cup or cap
      if (a.kind == SliceKind::Cup && b.kind == SliceKind::Cross && a.pos == b.pos) {
        out.push_back(a);
        i += 2;
        changed = true;
        continue;
      }
      if (a.kind == SliceKind::Cross && b.kind == SliceKind::Cap && a.pos == b.pos) {
        out.push_back(b);
        i += 2;
        changed = true;
        continue;
      }
    }
    out.push_back(v[i]);
    ++i;
  }
  v = std::move(out);
  return changed;
}

bool bubble_pass(std::vector<Slice>& v) {
  bool changed = false;
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    auto sw = commute_adjacent(v[i], v[i + 1]);
    if (sw && slice_key(sw->first) < slice_key(v[i])) {
      v[i] = sw->first;
      v[i + 1] = sw->second;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

MorseDiagram simplify(const MorseDiagram& d) {
  MorseDiagram out = d;
  size_t guard = d.slices.size() * d.slices.size() + 64;
  bool changed = true;
  while (changed && guard-- > 0) {
    changed = peephole_pass(out.slices);
    size_t inner = out.slices.size() + 8;
    while (bubble_pass(out.slices) && inner-- > 0) changed = true;
  }
  return out;
}

MorseDiagram parse_diagram(std::istream& in) {
  MorseDiagram d;
  bool have_header = false, have_end = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& msg) {
      throw diagram_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (have_end) fail("content after end");
    if (!have_header) {
      if (tok == "stringlink") {
        int n;
        if (!(ls >> n) || n < 1) fail("stringlink needs a positive strand count");
        d.n_bottom = d.n_top = n;
      } else if (tok == "link") {
        d.n_bottom = d.n_top = 0;
      } else {
        fail("expected 'stringlink <n>' or 'link' header");
      }
      have_header = true;
      continue;
    }
    if (tok == "end") {
      have_end = true;
      continue;
    }
    int p;
    if (!(ls >> p) || p < 1) fail("directive needs a 1-based position");
    if (tok == "x+")
      d.slices.push_back(Slice::cross(p - 1, +1));
    else if (tok == "x-")
      d.slices.push_back(Slice::cross(p - 1, -1));
    else if (tok == "cup")
      d.slices.push_back(Slice::cup(p - 1));
    else if (tok == "cap")
      d.slices.push_back(Slice::cap(p - 1));
    else
      fail("unknown directive '" + tok + "'");
  }
  if (!have_header) throw diagram_error("missing header line");
  if (!have_end) throw diagram_error("missing 'end' line");
  return d;
}

MorseDiagram parse_diagram_string(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

std::string emit_diagram(const MorseDiagram& d) {
  std::ostringstream os;
  if (d.closed())
    os << "link\n";
  else
    os << "stringlink " << d.n_bottom << "\n";
  for (const Slice& s : d.slices) {
    switch (s.kind) {
      case SliceKind::Cross: os << (s.sign > 0 ? "x+ " : "x- ") << s.pos + 1 << "\n"; break;
      case SliceKind::Cup: os << "cup " << s.pos + 1 << "\n"; break;
      case SliceKind::Cap: os << "cap " << s.pos + 1 << "\n"; break;
    }
  }
  os << "end\n";
  return os.str();
}

}  // namespace slinv
