#pragma once
// Braid words, crossing resolutions, and the resulting annular webs: layered
// graphs on k concentric strands with dumbbell (thick-edge) joints at
// resolved crossings and one trace vertex per strand at the closure section.
// Also the resolution cube with its edge signs.
//
// Geometry conventions: strand heights run 1 (innermost) to k (outermost);
// level positions run 0 (outgoing side of the trace section), 1..n (crossing
// levels, in braid word order), n+1 (incoming side of the trace section).
// The marking sits on strand k's trace vertex. Edges are directed from the
// trace section around the annulus and back (from lower to higher position).

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace glzero::webs {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +i = sigma_i, -i = sigma_i^{-1}

  int n() const { return static_cast<int>(letters.size()); }
  int n_plus() const {
    int c = 0;
    for (int l : letters)
      if (l > 0) ++c;
    return c;
  }
  int n_minus() const { return n() - n_plus(); }
  int writhe() const { return n_plus() - n_minus(); }

  // Permutation of strand endpoints induced by the braid: perm[h-1] is the
  // height where the strand entering at height h leaves.
  std::vector<int> permutation() const {
    std::vector<int> p(strands);
    std::iota(p.begin(), p.end(), 1);
    for (int l : letters) {
      int i = l > 0 ? l : -l;
      std::swap(p[i - 1], p[i]);
    }
    return p;
  }

  // The closure is a knot (single component) iff the permutation is one cycle.
  bool closure_is_knot() const {
    std::vector<int> p = permutation();
    int len = 0, h = 1;
    do {
      h = p[h - 1];
      ++len;
    } while (h != 1);
    return len == strands;
  }
};

inline BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  BraidWord b;
  b.strands = strands;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int v;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("braid letter is not an integer: " + tok);
    }
    if (v == 0) throw std::invalid_argument("braid letter 0 is not a generator");
    int idx = v > 0 ? v : -v;
    if (idx >= strands)
      throw std::invalid_argument("braid letter " + tok + " needs at least " +
                                  std::to_string(idx + 1) + " strands");
    b.letters.push_back(v);
  }
  return b;
}

struct Resolution {
  std::vector<std::uint8_t> bits;  // one per crossing, word order
  int total() const { return std::accumulate(bits.begin(), bits.end(), 0); }
};

inline Resolution resolution_from_mask(int n, unsigned long mask) {
  Resolution I;
  I.bits.resize(n);
  for (int j = 0; j < n; ++j) I.bits[j] = (mask >> j) & 1u;
  return I;
}

// A crossing becomes a dumbbell ("singularized") in exactly one of its two
// resolutions: at I=0 when positive, at I=1 when negative.
inline bool is_dumbbell(int letter, std::uint8_t bit) {
  return letter > 0 ? bit == 0 : bit == 1;
}

struct ThinEdge {
  int height;    // 1..k
  int from_pos;  // 0 or a crossing level
  int to_pos;    // a crossing level or n+1
};

struct Dumbbell {
  int level;   // 1..n
  int height;  // joins heights height and height+1
  int in_lo, in_hi;    // incoming thin edges (ids), lower/upper
  int out_lo, out_hi;  // outgoing thin edges (ids), lower/upper
};

struct TraceVertex {
  int height;
  int in_edge;   // thin edge ending at position n+1
  int out_edge;  // thin edge starting at position 0
  bool marked;   // true exactly on strand k
};

class AnnularWeb {
 public:
  AnnularWeb(int k, int n) : k_(k), n_(n) {}

  int strands() const { return k_; }
  int levels() const { return n_; }
  int thin_count() const { return static_cast<int>(edges_.size()); }
  int dumbbell_count() const { return static_cast<int>(dumbbells_.size()); }

  const std::vector<ThinEdge>& edges() const { return edges_; }
  const std::vector<Dumbbell>& dumbbells() const { return dumbbells_; }
  const std::vector<TraceVertex>& traces() const { return traces_; }
  const ThinEdge& edge(int id) const { return edges_.at(id); }
  const TraceVertex& trace(int height) const { return traces_.at(height - 1); }

  // The unique thin edge at `height` covering the gap between positions
  // `gap` and `gap+1` (gap in 0..n).
  int edge_at(int height, int gap) const {
    auto it = gap_index_.find({height, gap});
    if (it == gap_index_.end()) throw std::out_of_range("edge_at: no such gap");
    return it->second;
  }

  int add_edge(int height, int from_pos, int to_pos) {
    int id = thin_count();
    edges_.push_back({height, from_pos, to_pos});
    for (int g = from_pos; g < to_pos; ++g) gap_index_[{height, g}] = id;
    return id;
  }
  void add_dumbbell(const Dumbbell& d) { dumbbells_.push_back(d); }
  void add_trace(const TraceVertex& t) { traces_.push_back(t); }

  std::string dump() const {
    std::ostringstream os;
    os << "web k=" << k_ << " n=" << n_ << " s=" << dumbbell_count() << "\n";
    for (int e = 0; e < thin_count(); ++e)
      os << "edge " << e << " h" << edges_[e].height << " [" << edges_[e].from_pos
         << "," << edges_[e].to_pos << "]\n";
    for (const auto& d : dumbbells_)
      os << "dumbbell level " << d.level << " h" << d.height << " in(" << d.in_lo
         << "," << d.in_hi << ") out(" << d.out_lo << "," << d.out_hi << ")\n";
    for (const auto& t : traces_)
      os << "trace h" << t.height << " in " << t.in_edge << " out " << t.out_edge
         << (t.marked ? " *" : "") << "\n";
    return os.str();
  }

 private:
  int k_, n_;
  std::vector<ThinEdge> edges_;
  std::vector<Dumbbell> dumbbells_;
  std::vector<TraceVertex> traces_;
  std::map<std::pair<int, int>, int> gap_index_;  // (height, gap) -> edge id
};

// Build the I-resolution of the braid closure. Edge ids are assigned height
// by height, then by starting position, so equal inputs produce identical
// webs.
inline AnnularWeb resolve(const BraidWord& b, const Resolution& I) {
  const int k = b.strands, n = b.n();
  if (static_cast<int>(I.bits.size()) != n)
    throw std::invalid_argument("resolution size does not match braid length");
  AnnularWeb w(k, n);

  // Dumbbell levels touching each height.
  std::vector<std::vector<int>> events(k + 1);
  for (int j = 0; j < n; ++j) {
    if (!is_dumbbell(b.letters[j], I.bits[j])) continue;
    int h = b.letters[j] > 0 ? b.letters[j] : -b.letters[j];
    events[h].push_back(j + 1);
    events[h + 1].push_back(j + 1);
  }

  for (int h = 1; h <= k; ++h) {
    int prev = 0;
    for (int lvl : events[h]) {
      w.add_edge(h, prev, lvl);
      prev = lvl;
    }
    w.add_edge(h, prev, n + 1);
  }

  for (int j = 0; j < n; ++j) {
    if (!is_dumbbell(b.letters[j], I.bits[j])) continue;
    int h = b.letters[j] > 0 ? b.letters[j] : -b.letters[j];
    int lvl = j + 1;
    Dumbbell d;
    d.level = lvl;
    d.height = h;
    d.in_lo = w.edge_at(h, lvl - 1);
    d.in_hi = w.edge_at(h + 1, lvl - 1);
    d.out_lo = w.edge_at(h, lvl);
    d.out_hi = w.edge_at(h + 1, lvl);
    w.add_dumbbell(d);
  }

  for (int h = 1; h <= k; ++h)
    w.add_trace({h, w.edge_at(h, n), w.edge_at(h, 0), h == k});
  return w;
}

// Connected components of the underlying (undirected) graph.
inline int components(const AnnularWeb& w) {
  std::vector<int> parent(w.thin_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& t : w.traces()) unite(t.in_edge, t.out_edge);
  for (const auto& d : w.dumbbells()) {
    unite(d.in_lo, d.in_hi);
    unite(d.in_lo, d.out_lo);
    unite(d.in_lo, d.out_hi);
  }
  int c = 0;
  for (int e = 0; e < w.thin_count(); ++e)
    if (find(e) == e) ++c;
  return c;
}

// ---------------------------------------------------------------------------
// Resolution cube.

struct CubeVertex {
  Resolution I;
  int hdeg;    // |I| - n_minus
  int qshift;  // -hdeg
};

struct CubeEdge {
  int from, to;  // vertex indices (bitmask order)
  int crossing;  // 0-based index into the braid word
  int sign;      // +1 or -1
  bool zip;      // true: smoothing -> dumbbell (negative crossing 0 -> 1)
};

struct Cube {
  BraidWord braid;
  std::vector<CubeVertex> vertices;  // index = resolution bitmask
  std::vector<CubeEdge> edges;

  const CubeVertex& vertex(unsigned long mask) const { return vertices.at(mask); }
};

inline Cube cube(const BraidWord& b) {
  const int n = b.n();
  if (n > 26) throw std::invalid_argument("cube too large");
  Cube c;
  c.braid = b;
  const unsigned long total = 1ul << n;
  c.vertices.reserve(total);
  for (unsigned long m = 0; m < total; ++m) {
    Resolution I = resolution_from_mask(n, m);
    int h = I.total() - b.n_minus();
    c.vertices.push_back({std::move(I), h, -h});
  }
  for (unsigned long m = 0; m < total; ++m)
    for (int j = 0; j < n; ++j) {
      if ((m >> j) & 1u) continue;
      int sign = 1;
      for (int j2 = 0; j2 < j; ++j2)
        if ((m >> j2) & 1u) sign = -sign;
      c.edges.push_back({static_cast<int>(m), static_cast<int>(m | (1ul << j)), j,
                         sign, b.letters[j] < 0});
    }
  return c;
}

}  // namespace glzero::webs
