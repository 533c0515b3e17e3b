#pragma once
// Evaluation-based state spaces over the rationals: omnichrome colorings of
// an annular web, the infinity-evaluation of decorations as exact symmetric
// polynomials in the pigment variables X_1..X_k, and the graded dimensions
// of the pairing quotients, both plain and with the basepoint twist. All of
// this is computed straight from the coloring definitions with no algebra
// presentation involved, so it serves as an independent oracle for the
// quotient-algebra pipeline after specializing q to 1.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glzero/field.hpp"
#include "glzero/matrix.hpp"
#include "glzero/multipoly.hpp"
#include "glzero/snf.hpp"
#include "glzero/web.hpp"

namespace glzero::evalspaces {

using webs::AnnularWeb;

using PigmentPoly = MultiPoly<Rat>;  // polynomials in the pigments X_1..X_k

// ---------------------------------------------------------------------------
// Omnichrome colorings.

// One pigment (0-based) per thin edge. Thick-edge colors are the induced
// pigment pairs at each dumbbell, so they need no storage of their own.
struct Coloring {
  std::vector<int> thin;  // thin edge id -> pigment in 0..k-1
};

// The defining conditions, checked directly: on every gap section the
// pigments of the k edges crossing it form a bijection with {0..k-1}; at
// each dumbbell the two incoming pigments are distinct and match the two
// outgoing ones as a set (the flow condition on both thick-edge endpoints);
// and pigments propagate through the trace vertices.
inline bool coloring_valid(const AnnularWeb& w, const Coloring& c) {
  const int k = w.strands(), n = w.levels();
  if (static_cast<int>(c.thin.size()) != w.thin_count()) return false;
  for (int p : c.thin)
    if (p < 0 || p >= k) return false;
  for (int g = 0; g <= n; ++g) {
    std::vector<bool> seen(k, false);
    for (int h = 1; h <= k; ++h) {
      int p = c.thin[w.edge_at(h, g)];
      if (seen[p]) return false;
      seen[p] = true;
    }
  }
  for (const auto& d : w.dumbbells()) {
    int a = c.thin[d.in_lo], b = c.thin[d.in_hi];
    int x = c.thin[d.out_lo], y = c.thin[d.out_hi];
    if (a == b) return false;
    if (std::minmax(a, b) != std::minmax(x, y)) return false;
  }
  for (const auto& t : w.traces())
    if (c.thin[t.in_edge] != c.thin[t.out_edge]) return false;
  return true;
}

// All omnichrome colorings: a bijection heights -> pigments at the start
// section evolves level by level (each dumbbell either keeps or swaps the
// two pigments it joins) and must return to itself at the trace section.
inline std::vector<Coloring> omnichrome_colorings(const AnnularWeb& w) {
  const int k = w.strands();
  const int s = w.dumbbell_count();
  std::vector<int> order(s);  // dumbbells in level order
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return w.dumbbells()[a].level < w.dumbbells()[b].level;
  });

  std::vector<Coloring> out;
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Coloring c;
    c.thin.assign(w.thin_count(), -1);
    std::vector<int> cur = sigma;  // cur[h-1] = pigment at height h
    for (int h = 1; h <= k; ++h) c.thin[w.edge_at(h, 0)] = cur[h - 1];
    auto rec = [&](auto&& self, int step) -> void {
      if (step == s) {
        if (cur == sigma) {
          if (!coloring_valid(w, c))
            throw std::logic_error("coloring enumeration produced an invalid coloring");
          out.push_back(c);
        }
        return;
      }
      const auto& d = w.dumbbells()[order[step]];
      for (int flip : {0, 1}) {
        if (flip) std::swap(cur[d.height - 1], cur[d.height]);
        c.thin[d.out_lo] = cur[d.height - 1];
        c.thin[d.out_hi] = cur[d.height];
        self(self, step + 1);
        if (flip) std::swap(cur[d.height - 1], cur[d.height]);
      }
    };
    rec(rec, 0);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation of decorations.

// One exponent per thin edge; shorter vectors are padded with zeros. Dots on
// thick edges are assumed already migrated onto adjacent thin edges, which
// the dot-migration relations always permit.
using Decoration = std::vector<int>;

inline int decoration_degree(const Decoration& T) {
  return std::accumulate(T.begin(), T.end(), 0);
}

inline Decoration normalized_decoration(const AnnularWeb& w, Decoration T) {
  if (static_cast<int>(T.size()) > w.thin_count())
    throw std::invalid_argument("decoration longer than the web's edge list");
  T.resize(w.thin_count(), 0);
  return T;
}

// Product over split vertices of prod_{i in left, j in right} (X_i - X_j),
// given the out-edge pigment sets of each split. Swapping the sides of one
// split with singleton sides flips the sign.
inline PigmentPoly split_denominator(
    std::size_t k,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& splits) {
  PigmentPoly q = PigmentPoly::one(k);
  for (const auto& [left, right] : splits)
    for (int i : left)
      for (int j : right)
        q *= PigmentPoly::variable(k, i) - PigmentPoly::variable(k, j);
  return q;
}

struct ColoringEval {
  PigmentPoly num, den;
};

// The contribution of one coloring before summing: num is the decoration
// evaluated at the pigments, den the split-vertex product with the lower
// out-edge taken as the left one.
inline ColoringEval eval_coloring(const AnnularWeb& w, const Decoration& T,
                                  const Coloring& c) {
  const std::size_t k = w.strands();
  Decoration t = normalized_decoration(w, T);
  PigmentPoly::Mono m(k, 0);
  for (std::size_t e = 0; e < t.size(); ++e)
    if (t[e]) m[c.thin.at(e)] += t[e];
  PigmentPoly num(k);
  num.add_term(m, Rat(1));
  std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
  for (const auto& d : w.dumbbells())
    splits.push_back({{c.thin[d.out_lo]}, {c.thin[d.out_hi]}});
  return {num, split_denominator(k, splits)};
}

// ---------------------------------------------------------------------------
// The infinity-evaluation and the pairings.
//
// Summing num/den over colorings uses the common denominator
// D = prod_{i<j} (X_i - X_j)^{m_ij}, where m_ij is the largest number of
// splits any one coloring resolves into the pigment pair {i, j}; each
// coloring contributes sign * num * (D/den) as a polynomial. Numerators and
// denominators are homogeneous, so the sum is too — of degree |T| - s after
// dividing out D. The pairing value (the constant coefficient) is therefore
// nonzero only when |T| = s, in which case the quotient is a constant read
// off from a single coefficient; the equality N = const * D is still checked
// exactly so a non-clearing denominator cannot slip through.

class PairingEvaluator {
 public:
  explicit PairingEvaluator(const AnnularWeb& w)
      : w_(&w), k_(w.strands()), colorings_(omnichrome_colorings(w)) {
    pair_of_.assign(k_ * k_, -1);
    for (int i = 0; i < k_; ++i)
      for (int j = i + 1; j < k_; ++j) {
        pair_of_[i * k_ + j] = static_cast<int>(pairs_.size());
        pairs_.push_back({i, j});
      }
    std::vector<std::vector<int>> expo;  // per coloring: factor multiplicities
    std::vector<int> sign;
    for (const auto& c : colorings_) {
      std::vector<int> e(pairs_.size(), 0);
      int sg = 1;
      for (const auto& d : w.dumbbells()) {
        int a = c.thin[d.out_lo], b = c.thin[d.out_hi];
        if (a > b) {
          std::swap(a, b);
          sg = -sg;
        }
        ++e[pair_of_[a * k_ + b]];
      }
      expo.push_back(std::move(e));
      sign.push_back(sg);
    }
    mult_.assign(pairs_.size(), 0);
    for (const auto& e : expo)
      for (std::size_t t = 0; t < pairs_.size(); ++t)
        mult_[t] = std::max(mult_[t], e[t]);
    std::vector<PigmentPoly> fac;
    for (auto [i, j] : pairs_)
      fac.push_back(PigmentPoly::variable(k_, i) - PigmentPoly::variable(k_, j));
    den_ = PigmentPoly::one(k_);
    for (std::size_t t = 0; t < pairs_.size(); ++t)
      for (int r = 0; r < mult_[t]; ++r) den_ *= fac[t];
    for (std::size_t ci = 0; ci < colorings_.size(); ++ci) {
      PigmentPoly cof = PigmentPoly::constant(k_, Rat(sign[ci]));
      for (std::size_t t = 0; t < pairs_.size(); ++t)
        for (int r = expo[ci][t]; r < mult_[t]; ++r) cof *= fac[t];
      cofactor_.push_back(std::move(cof));
    }
  }

  const AnnularWeb& web() const { return *w_; }
  const std::vector<Coloring>& colorings() const { return colorings_; }
  const PigmentPoly& common_denominator() const { return den_; }
  const std::vector<std::pair<int, int>>& factor_pairs() const { return pairs_; }
  int factor_multiplicity(std::size_t t) const { return mult_[t]; }

  // N(T) = sum over colorings of cofactor * X^{pigment image of T}; this is
  // the infinity-evaluation times the common denominator.
  PigmentPoly numerator(const Decoration& T) const {
    PigmentPoly n(k_);
    for (std::size_t ci = 0; ci < colorings_.size(); ++ci) {
      PigmentPoly::Mono mono(k_, 0);
      for (std::size_t e = 0; e < T.size(); ++e)
        if (T[e]) mono[colorings_[ci].thin.at(e)] += T[e];
      for (const auto& [m, c] : cofactor_[ci].terms()) {
        PigmentPoly::Mono mm = m;
        for (int v = 0; v < k_; ++v) mm[v] += mono[v];
        n.add_term(mm, c);
      }
    }
    return n;
  }

  // The pairing value of one monomial decoration: the constant coefficient
  // of its infinity-evaluation.
  Rat pair_monomial(const Decoration& T) const {
    Decoration key = normalized_decoration(*w_, T);
    if (decoration_degree(key) != w_->dumbbell_count()) return Rat(0);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    PigmentPoly n = numerator(key);
    Rat val(0);
    if (!n.is_zero()) {
      const auto& lead = *den_.terms().rbegin();
      val = n.coeff(lead.first) / lead.second;
      if (n != den_.scaled(val))
        throw std::domain_error("pairing: denominators do not clear");
    }
    memo_.emplace(std::move(key), val);
    return val;
  }

 private:
  const AnnularWeb* w_;
  int k_;
  std::vector<Coloring> colorings_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_of_;
  std::vector<int> mult_;
  PigmentPoly den_;
  std::vector<PigmentPoly> cofactor_;
  mutable std::map<Decoration, Rat> memo_;
};

// The summed evaluation as an honest polynomial; throws std::domain_error if
// the coloring sum fails to clear its denominators (which would be a bug,
// not an input error).
inline PigmentPoly eval_infty(const PairingEvaluator& ev, const Decoration& T) {
  PigmentPoly n = ev.numerator(normalized_decoration(ev.web(), T));
  for (std::size_t t = 0; t < ev.factor_pairs().size(); ++t)
    for (int r = 0; r < ev.factor_multiplicity(t); ++r) {
      if (n.is_zero()) return n;
      n = n.divide_by_linear(ev.factor_pairs()[t].first, ev.factor_pairs()[t].second);
    }
  return n;
}

inline PigmentPoly eval_infty(const AnnularWeb& w, const Decoration& T) {
  return eval_infty(PairingEvaluator(w), T);
}

// Constant coefficient of the infinity-evaluation.
inline Rat eval_gl1(const AnnularWeb& w, const Decoration& T) {
  return PairingEvaluator(w).pair_monomial(T);
}

// ---------------------------------------------------------------------------
// Graded dimensions of the pairing quotients.

using GradedDims = std::map<int, int>;  // quantum degree -> dimension

// All exponent vectors over nvars variables of total degree d.
inline std::vector<Decoration> monomials_of_degree(int nvars, int d) {
  std::vector<Decoration> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  Decoration cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur[var] = rem;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[var] = e;
      self(self, var + 1, rem - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

namespace detail {
// Rank of one pairing block: rows are the degree-p monomials with the fixed
// extra exponents `twist` multiplied in, columns the monomials of the
// complementary degree (so that every product has total degree s).
inline int pairing_block_rank(const PairingEvaluator& ev, const Decoration& twist, int p) {
  const AnnularWeb& w = ev.web();
  const int s = w.dumbbell_count(), E = w.thin_count();
  const int q = s - decoration_degree(twist) - p;
  if (p < 0 || q < 0) return 0;
  const auto rows = monomials_of_degree(E, p);
  const auto cols = monomials_of_degree(E, q);
  Mat<Rat> G(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Decoration U(E, 0);
      for (int e = 0; e < E; ++e) {
        U[e] = rows[r][e] + cols[c][e];
        if (e < static_cast<int>(twist.size())) U[e] += twist[e];
      }
      G(r, c) = ev.pair_monomial(U);
    }
  return static_cast<int>(rank_ff(G));
}
}  // namespace detail

// Graded dimensions of the plain pairing quotient: the block of polynomial
// degree p sits in quantum degree 2p - s. A nonnegative degree_bound caps p;
// the default computes every (automatically finitely many) nonzero block.
inline GradedDims gl1_dims(const AnnularWeb& w, int degree_bound = -1) {
  PairingEvaluator ev(w);
  const int s = w.dumbbell_count();
  GradedDims dims;
  for (int p = 0; p <= s; ++p) {
    if (degree_bound >= 0 && p > degree_bound) break;
    // the block at p is the transpose of the block at s - p
    int rk = detail::pairing_block_rank(ev, {}, std::min(p, s - p));
    if (rk > 0) dims[2 * p - s] += rk;
  }
  return dims;
}

// ---------------------------------------------------------------------------
// The basepoint twist.

enum class PhiStyle {
  marked_power,  // k-1 dots on the marked edge
  dots_below     // one dot on each strand below the basepoint
};

// The thin edge carrying the basepoint: the outgoing closure edge of the
// marked strand.
inline int marked_edge(const AnnularWeb& w) {
  return w.trace(w.strands()).out_edge;
}

inline Decoration phi_star_twist(const AnnularWeb& w, PhiStyle style) {
  Decoration t(w.thin_count(), 0);
  if (style == PhiStyle::marked_power) {
    t[marked_edge(w)] = w.strands() - 1;
  } else {
    for (int h = 1; h < w.strands(); ++h) t[w.edge_at(h, 0)] += 1;
  }
  return t;
}

inline Decoration phi_star(const AnnularWeb& w, const Decoration& S,
                           PhiStyle style = PhiStyle::marked_power) {
  Decoration r = normalized_decoration(w, S);
  Decoration t = phi_star_twist(w, style);
  for (int e = 0; e < w.thin_count(); ++e) r[e] += t[e];
  return r;
}

// Graded dimensions of the image of the basepoint twist inside the pairing
// quotient; the quantum grading gains the k-1 shift, so the degree-p block
// sits in quantum degree 2p - s + (k-1).
inline GradedDims gl0_dims(const AnnularWeb& w, int degree_bound = -1,
                           PhiStyle style = PhiStyle::marked_power) {
  PairingEvaluator ev(w);
  const int s = w.dumbbell_count(), k = w.strands();
  const Decoration twist = phi_star_twist(w, style);
  GradedDims dims;
  for (int p = 0; p + (k - 1) <= s; ++p) {
    if (degree_bound >= 0 && p > degree_bound) break;
    int rk = detail::pairing_block_rank(ev, twist, p);
    if (rk > 0) dims[2 * p - s + (k - 1)] += rk;
  }
  return dims;
}

}  // namespace glzero::evalspaces
