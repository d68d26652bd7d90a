#include "slinv/clasper.hpp"

#include <algorithm>
#include <map>
#include <cstdlib>
#include <sstream>

namespace slinv {

LinearTreeClasperSpec inverse_spec(LinearTreeClasperSpec spec) {
  spec.half_twists += 1;
  return spec;
}

std::vector<int> o_index(const LinearTreeClasperSpec& spec) {
  std::vector<int> seq;
  for (const ClasperLeaf& l : spec.leaves) seq.push_back(l.component);
  std::vector<int> rev(seq.rbegin(), seq.rend());
  return std::min(seq, rev);
}

namespace {

struct Letter {
  int leaf = 0;  // index into spec.leaves, >= 1
  int sign = 0;
};

std::vector<Letter> invert_word(const std::vector<Letter>& w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (Letter& l : out) l.sign = -l.sign;
  return out;
}

// Right-normed commutator [m_j, [m_{j+1}, [..., m_k]]].
std::vector<Letter> commutator_word(int j, int k) {
  if (j == k) return {{j, +1}};
  std::vector<Letter> inner = commutator_word(j + 1, k);
  std::vector<Letter> out{{j, +1}};
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back({j, -1});
  auto inv = invert_word(inner);
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

void validate_spec(int n, const LinearTreeClasperSpec& spec) {
  if (spec.degree() < 1) throw diagram_error("clasper: need at least two leaves");
  std::map<int, std::vector<int>> heights;
  for (const ClasperLeaf& l : spec.leaves) {
    if (l.component < 1 || l.component > n)
      throw diagram_error("clasper: leaf component out of range");
    heights[l.component].push_back(l.height);
  }
  for (auto& [c, hs] : heights) {
    std::sort(hs.begin(), hs.end());
    if (std::adjacent_find(hs.begin(), hs.end()) != hs.end())
      throw diagram_error("clasper: leaves on one component need distinct heights");
  }
}

}  // namespace

// The band word is realized on a widget where every leaf owns a column:
// a strand hit by several leaves is split into serial columns joined by
// switchback channels, and the root-leaf column claps the other leaf
// columns in band-word order, diving under everything it crosses in
// transit.  The switchback routing (which side the channel sits on and how
// it crosses its neighbor) decides whether clasp loops can slide around the
// fold; the default style pins them.
std::vector<Slice> surgery_widget(int n, const LinearTreeClasperSpec& spec) {
  validate_spec(n, spec);
  int k = spec.degree();

  std::vector<Letter> word = commutator_word(1, k);
  if (spec.half_twists % 2 != 0) word = invert_word(word);

  int n_leaves = k + 1;
  std::vector<int> rank(n_leaves, 0);
  std::vector<int> count(n, 0);
  {
    std::vector<int> idx(n_leaves);
    for (int i = 0; i < n_leaves; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return std::tie(spec.leaves[a].component, spec.leaves[a].height) <
             std::tie(spec.leaves[b].component, spec.leaves[b].height);
    });
    for (int i : idx) {
      int s = spec.leaves[i].component - 1;
      rank[i] = count[s]++;
    }
  }

  // Column layout per strand block.
  std::vector<int> block_start(n, 0);
  int total = 0;
  for (int s = 0; s < n; ++s) {
    block_start[s] = total;
    total += 2 * std::max(count[s], 1) - 1;
  }
  // leaf column within its block: [c1 ch1 c2 ch2 c3 ...]
  auto leaf_col = [&](int leaf) {
    int s = spec.leaves[leaf].component - 1;
    return block_start[s] + 2 * rank[leaf];
  };

  std::vector<Slice> out;
  // widen: switchback channels split each multi-site strand into columns
  for (int s = 0; s < n; ++s)
    for (int j = 1; j < count[s]; ++j) out.push_back(Slice::cup(block_start[s] + 2 * j - 1));

  // the band: the root column claps each leaf column in band-word order,
  // diving under whatever it crosses in transit
  int home = leaf_col(0);
  for (const Letter& lt : word) {
    int target = leaf_col(lt.leaf);
    int step = target > home ? 1 : -1;
    int cur = home;
    while (cur + step != target) {
      out.push_back(Slice::cross(std::min(cur, cur + step), step > 0 ? -1 : +1));
      cur += step;
    }
    int p = std::min(cur, target);
    out.push_back(Slice::cross(p, lt.sign));
    out.push_back(Slice::cross(p, lt.sign));
    while (cur != home) {
      out.push_back(Slice::cross(std::min(cur, cur - step), step > 0 ? +1 : -1));
      cur -= step;
    }
  }

  // collapse; blocks left of s are already one column wide
  for (int s = 0; s < n; ++s) {
    for (int j = 1; j < count[s]; ++j) out.push_back(Slice::cap(s));
  }
  return out;
}

StringLink surgery(const StringLink& sl, const LinearTreeClasperSpec& spec) {
  std::vector<Slice> widget = surgery_widget(sl.n, spec);
  StringLink out = sl;
  out.diagram.slices = std::move(widget);
  out.diagram.slices.insert(out.diagram.slices.end(), sl.diagram.slices.begin(),
                            sl.diagram.slices.end());
  return out;
}

LinearTreeClasperSpec parse_clasper_string(const std::string& text) {
  std::istringstream in(text);
  LinearTreeClasperSpec spec;
  std::string line;
  int lineno = 0, want = -1;
  bool have_end = false;
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
    if (want < 0) {
      int k;
      if (tok != "clasper" || !(ls >> k) || k < 1) fail("expected 'clasper <degree>'");
      want = k + 1;
      continue;
    }
    if (tok == "leaf") {
      ClasperLeaf lf;
      if (!(ls >> lf.component >> lf.height)) fail("leaf needs component and height");
      spec.leaves.push_back(lf);
    } else if (tok == "twist") {
      if (!(ls >> spec.half_twists)) fail("twist needs a count");
    } else if (tok == "end") {
      have_end = true;
      break;
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (want < 0) throw diagram_error("missing 'clasper' header");
  if (!have_end) throw diagram_error("missing 'end' line");
  if (int(spec.leaves.size()) != want)
    throw diagram_error("expected " + std::to_string(want) + " leaves");
  return spec;
}

std::string emit_clasper(const LinearTreeClasperSpec& spec) {
  std::ostringstream os;
  os << "clasper " << spec.degree() << "\n";
  for (const ClasperLeaf& l : spec.leaves)
    os << "leaf " << l.component << " " << l.height << "\n";
  if (spec.half_twists) os << "twist " << spec.half_twists << "\n";
  os << "end\n";
  return os.str();
}

}  // namespace slinv
