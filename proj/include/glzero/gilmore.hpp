#pragma once
// Presentation-based annular state spaces over K[q, q^-1].
//
// Each web carries a commutative algebra generated by its thin-edge
// variables, cut down by local relations (trace vertices, the marking,
// dumbbells) and by one non-local relation per coherent cycle. QagSpace
// computes, degree by degree, the free part of that algebra together with
// projection/section maps onto a free basis; torsion classes are exactly the
// kernel of the evaluation pairing, so they are dropped. unzip_matrix and
// zip_matrix express the two saddle maps between neighbouring resolutions in
// those free bases.
//
// The graded pieces are cut out in three phases so that the large webs stay
// tractable:
//   0. variable-level elimination along linear relations with a unit
//      coefficient (traces, the marking, the linear dumbbell relation),
//   1. sparse Gaussian elimination on the degree-p presentation restricted
//      to unit pivots, recorded as a replayable rewrite chain,
//   2. Smith normal form of the small remainder, whose cokernel
//      decomposition yields the free rank, torsion divisors, projection and
//      section.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glzero/cycles.hpp"
#include "glzero/euclid.hpp"
#include "glzero/field.hpp"
#include "glzero/laurent.hpp"
#include "glzero/matrix.hpp"
#include "glzero/multipoly.hpp"
#include "glzero/snf.hpp"
#include "glzero/web.hpp"

namespace glzero::gilmore {

using webs::AnnularWeb;
using webs::CoherentCycle;

using GradedDims = std::map<int, int>;

// Quantum degree carried by a polynomial-degree-p class on a web with s
// dumbbells and k strands: 2p - s + (k - 1). The cube's homological shift is
// applied later, at chain-assembly time.
inline int quantum_degree(const AnnularWeb& w, int p) {
  return 2 * p - static_cast<int>(w.dumbbell_count()) + static_cast<int>(w.strands()) - 1;
}

// Polynomial degrees above s - k + 1 pair to zero against every decorated
// dual web, so they carry no free rank; this caps the per-web computation.
inline int degree_cap(const AnnularWeb& w) {
  return std::max(0, static_cast<int>(w.dumbbell_count()) - static_cast<int>(w.strands()) + 1);
}

// Exponent of q in the non-local relation of a cycle whose companion curve
// encloses `enclosed_traces` trace vertices.
inline constexpr int nonlocal_twist(int enclosed_traces) { return 2 * enclosed_traces; }

template <class K = Rat>
struct Relation {
  MultiPoly<Laurent<K>> poly;  // in the web's thin-edge variables
  std::string kind;            // trace | marking | dumbbell-linear | dumbbell-quadratic | nonlocal
};

// Local relations: at an unmarked trace vertex the outgoing variable is q^2
// times the incoming one; the marked outgoing variable vanishes; at a
// dumbbell the outgoing pair and incoming pair share their elementary
// symmetric functions (sum and product).
template <class K = Rat>
std::vector<Relation<K>> local_relations(const AnnularWeb& w) {
  using L = Laurent<K>;
  using Poly = MultiPoly<L>;
  const std::size_t nv = w.thin_count();
  auto var = [&](int e) { return Poly::variable(nv, static_cast<std::size_t>(e)); };
  const L q2 = L::q_power(2);
  std::vector<Relation<K>> rels;
  for (const auto& t : w.traces()) {
    if (t.marked)
      rels.push_back({var(t.out_edge), "marking"});
    else
      rels.push_back({var(t.out_edge) - var(t.in_edge).scaled(q2), "trace"});
  }
  for (const auto& d : w.dumbbells()) {
    rels.push_back(
        {var(d.out_lo) + var(d.out_hi) - var(d.in_lo) - var(d.in_hi), "dumbbell-linear"});
    rels.push_back({var(d.out_lo) * var(d.out_hi) - var(d.in_lo) * var(d.in_hi),
                    "dumbbell-quadratic"});
  }
  return rels;
}

// Non-local relation of one coherent cycle: the product of variables crossed
// on the way out equals q^{2i} times the product crossed on the way in,
// where i counts the trace vertices enclosed by the cycle's companion curve.
// Both crossed sets have equal size, so the relation is homogeneous; a cycle
// that crosses nothing (a full circle strand, which happens exactly when the
// web is disconnected at that height) yields the scalar relation 1 - q^{2i}.
template <class K = Rat>
std::vector<Relation<K>> nonlocal_relations(const AnnularWeb& w,
                                            const std::vector<CoherentCycle>& cycles) {
  using L = Laurent<K>;
  using Poly = MultiPoly<L>;
  const std::size_t nv = w.thin_count();
  std::vector<Relation<K>> rels;
  for (const auto& cyc : cycles) {
    Poly out = Poly::one(nv);
    for (int e : cyc.crossed_out) out = out * Poly::variable(nv, static_cast<std::size_t>(e));
    Poly in = Poly::one(nv);
    for (int e : cyc.crossed_in) in = in * Poly::variable(nv, static_cast<std::size_t>(e));
    const L twist = L::q_power(nonlocal_twist(cyc.enclosed_traces));
    rels.push_back({out - in.scaled(twist), "nonlocal"});
  }
  return rels;
}

namespace detail {

inline std::vector<std::vector<int>> exponent_vectors(int nvars, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == nvars - 1) {
      cur[static_cast<std::size_t>(pos)] = rem;
      out.push_back(cur);
      cur[static_cast<std::size_t>(pos)] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, rem - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

template <class C>
bool is_homogeneous(const MultiPoly<C>& p, int degree) {
  for (const auto& [m, c] : p.terms()) {
    (void)c;
    int d = 0;
    for (int e : m) d += e;
    if (d != degree) return false;
  }
  return true;
}

}  // namespace detail

// The graded free part of the relation quotient of one web, with enough
// structure to express linear maps in its free bases: reduce() sends an
// arbitrary homogeneous polynomial in the web's edge variables to its
// coordinate vector, basis_poly() produces a representative of each basis
// class.
template <class K = Rat>
class QagSpace {
 public:
  using L = Laurent<K>;
  using Poly = MultiPoly<L>;

  explicit QagSpace(const AnnularWeb& w, int degree_bound = -1, bool reversed_order = false)
      : web_(w), reversed_(reversed_order) {
    rels_ = local_relations<K>(w);
    auto nl = nonlocal_relations<K>(w, webs::coherent_cycles(w));
    rels_.insert(rels_.end(), nl.begin(), nl.end());
    for (const auto& r : rels_) {
      if (r.poly.is_zero()) continue;
      if (!detail::is_homogeneous(r.poly, r.poly.total_degree()))
        throw std::logic_error("QagSpace: inhomogeneous relation");
    }
    eliminate_linear();
    const int limit = degree_bound >= 0 ? degree_bound : degree_cap(w);
    slices_.reserve(static_cast<std::size_t>(limit) + 1);
    for (int p = 0; p <= limit; ++p) slices_.push_back(build_slice(p));
  }

  const AnnularWeb& web() const { return web_; }
  const std::vector<Relation<K>>& relations() const { return rels_; }
  int max_degree() const { return static_cast<int>(slices_.size()) - 1; }

  int free_rank(int p) const {
    if (p < 0 || p > max_degree()) return 0;
    return static_cast<int>(slices_[static_cast<std::size_t>(p)].cok.free_rank);
  }

  const std::vector<L>& torsion(int p) const {
    return slice_at(p).cok.torsion;
  }

  // Number of degree-p monomials in the reduced variables, before and after
  // the sparse elimination phase; exposed for diagnostics and tests.
  int slice_width(int p) const { return static_cast<int>(slice_at(p).monos.size()); }
  int slice_survivors(int p) const { return static_cast<int>(slice_at(p).survivors.size()); }

  // Free rank per quantum degree.
  GradedDims dims_at_q1() const {
    GradedDims dims;
    for (int p = 0; p <= max_degree(); ++p) {
      int r = free_rank(p);
      if (r > 0) dims[quantum_degree(web_, p)] += r;
    }
    return dims;
  }

  // Coordinates of a homogeneous degree-p polynomial (in the web's edge
  // variables) with respect to the degree-p free basis.
  std::vector<L> reduce(int p, const Poly& poly) const {
    const Slice& s = slice_at(p);
    const std::size_t rank = s.cok.free_rank;
    if (poly.nvars() != web_.thin_count())
      throw std::invalid_argument("QagSpace::reduce: wrong variable count");
    Poly f = poly;
    for (std::size_t v = 0; v < elim_expr_.size(); ++v)
      if (is_elim_[v]) f = f.subst(v, elim_expr_[v]);
    std::map<int, L> vec;
    for (const auto& [m, c] : f.terms()) {
      int deg = 0;
      std::vector<int> red(survivor_var_.size(), 0);
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        deg += m[v];
        int idx = red_index_[v];
        if (idx < 0) throw std::logic_error("QagSpace::reduce: eliminated variable survived");
        red[static_cast<std::size_t>(idx)] = m[v];
      }
      if (deg != p) throw std::invalid_argument("QagSpace::reduce: wrong degree");
      auto it = s.index.find(red);
      if (it == s.index.end()) throw std::logic_error("QagSpace::reduce: unknown monomial");
      L& slot = vec[it->second];
      slot = slot + c;
      if (slot.is_zero()) vec.erase(it->second);
    }
    for (const Step& st : s.steps) {
      auto it = vec.find(st.col);
      if (it == vec.end()) continue;
      L c = it->second;
      vec.erase(it);
      for (const auto& [j, w] : st.repl) {
        L& slot = vec[j];
        slot = slot + c * w;
        if (slot.is_zero()) vec.erase(j);
      }
    }
    std::vector<L> coords(s.survivors.size());
    for (const auto& [col, v] : vec) {
      int slot = s.col_slot[static_cast<std::size_t>(col)];
      if (slot < 0) throw std::logic_error("QagSpace::reduce: dead coordinate after replay");
      coords[static_cast<std::size_t>(slot)] = v;
    }
    std::vector<L> out(rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) out[i] = out[i] + s.cok.projection(i, j) * coords[j];
    return out;
  }

  // Representative of the i-th degree-p basis class, in the web's edge
  // variables.
  Poly basis_poly(int p, int i) const {
    const Slice& s = slice_at(p);
    if (i < 0 || static_cast<std::size_t>(i) >= s.cok.free_rank)
      throw std::out_of_range("QagSpace::basis_poly index");
    Poly out(web_.thin_count());
    for (std::size_t j = 0; j < s.survivors.size(); ++j) {
      const L& c = s.cok.section(j, static_cast<std::size_t>(i));
      if (c.is_zero()) continue;
      const auto& red = s.monos[static_cast<std::size_t>(s.survivors[j])];
      typename Poly::Mono m(web_.thin_count(), 0);
      for (std::size_t t = 0; t < red.size(); ++t)
        m[static_cast<std::size_t>(survivor_var_[t])] = red[t];
      out.add_term(m, c);
    }
    return out;
  }

 private:
  struct Step {
    int col = -1;
    std::vector<std::pair<int, L>> repl;  // eliminated monomial = sum repl
  };
  struct Slice {
    std::vector<std::vector<int>> monos;       // degree-p exponent vectors, reduced alphabet
    std::map<std::vector<int>, int> index;     // exponent vector -> column id
    std::vector<Step> steps;                   // phase-1 rewrite chain, in order
    std::vector<int> survivors;                // columns alive after phase 1, increasing
    std::vector<int> col_slot;                 // column id -> index in survivors, or -1
    CokernelDecomposition<L> cok;              // of the phase-2 remainder
  };

  const Slice& slice_at(int p) const {
    if (p < 0 || p > max_degree()) throw std::out_of_range("QagSpace: degree out of range");
    return slices_[static_cast<std::size_t>(p)];
  }

  // Phase 0: repeatedly use a degree-1 relation with a unit coefficient to
  // express one variable in the others. Leftover linear relations (all of
  // whose coefficients are non-units) stay in the presentation as torsion
  // rows, as do all higher-degree relations after substitution.
  void eliminate_linear() {
    const std::size_t nv = web_.thin_count();
    is_elim_.assign(nv, false);
    elim_expr_.assign(nv, Poly(nv));
    std::vector<Poly> linear;
    std::vector<Poly> rest;
    for (const auto& r : rels_) {
      if (r.poly.is_zero()) continue;
      if (r.poly.total_degree() == 1)
        linear.push_back(r.poly);
      else
        rest.push_back(r.poly);
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto& f : linear) {
        if (f.is_zero()) continue;
        int pivot = -1;
        L pc;
        for (const auto& [m, c] : f.terms()) {
          if (!Euclid<L>::is_unit(c)) continue;
          for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] == 1 && static_cast<int>(v) > pivot) {
              pivot = static_cast<int>(v);
              pc = c;
            }
        }
        if (pivot < 0) continue;
        const std::size_t pv = static_cast<std::size_t>(pivot);
        Poly expr =
            (f - Poly::variable(nv, pv, 1, pc)).scaled(L() - Euclid<L>::inv_unit(pc));
        for (auto& g : linear)
          if (!g.is_zero()) g = g.subst(pv, expr);
        for (std::size_t v = 0; v < nv; ++v)
          if (is_elim_[v]) elim_expr_[v] = elim_expr_[v].subst(pv, expr);
        is_elim_[pv] = true;
        elim_expr_[pv] = expr;
        progress = true;
      }
    }
    std::vector<Poly> kept;
    for (const auto& g : linear)
      if (!g.is_zero()) kept.push_back(g);
    for (auto g : rest) {
      for (std::size_t v = 0; v < nv; ++v)
        if (is_elim_[v]) g = g.subst(v, elim_expr_[v]);
      if (!g.is_zero()) kept.push_back(g);
    }
    red_index_.assign(nv, -1);
    survivor_var_.clear();
    for (std::size_t v = 0; v < nv; ++v)
      if (!is_elim_[v]) {
        red_index_[v] = static_cast<int>(survivor_var_.size());
        survivor_var_.push_back(static_cast<int>(v));
      }
    reduced_.clear();
    for (const auto& g : kept) reduced_.push_back(compress(g));
  }

  Poly compress(const Poly& f) const {
    Poly out(survivor_var_.size());
    for (const auto& [m, c] : f.terms()) {
      typename Poly::Mono red(survivor_var_.size(), 0);
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (red_index_[v] < 0)
          throw std::logic_error("QagSpace: eliminated variable in reduced relation");
        red[static_cast<std::size_t>(red_index_[v])] = m[v];
      }
      out.add_term(red, c);
    }
    return out;
  }

  Slice build_slice(int p) const {
    Slice s;
    const int nred = static_cast<int>(survivor_var_.size());
    s.monos = detail::exponent_vectors(nred, p);
    if (reversed_) std::reverse(s.monos.begin(), s.monos.end());
    for (std::size_t i = 0; i < s.monos.size(); ++i)
      s.index.emplace(s.monos[i], static_cast<int>(i));

    std::vector<std::map<int, L>> rows;
    for (const auto& rel : reduced_) {
      const int dg = rel.total_degree();
      if (dg > p) continue;
      for (const auto& mult : detail::exponent_vectors(nred, p - dg)) {
        std::map<int, L> row;
        for (const auto& [m, c] : rel.terms()) {
          std::vector<int> key(m);
          for (int t = 0; t < nred; ++t) key[static_cast<std::size_t>(t)] += mult[static_cast<std::size_t>(t)];
          const int col = s.index.at(key);
          L& slot = row[col];
          slot = slot + c;
          if (slot.is_zero()) row.erase(col);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    phase1(s, rows);

    std::vector<std::size_t> alive_rows;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!rows[r].empty()) alive_rows.push_back(r);
    Mat<L> rem(s.survivors.size(), alive_rows.size());
    for (std::size_t j = 0; j < alive_rows.size(); ++j)
      for (const auto& [col, v] : rows[alive_rows[j]]) {
        const int slot = s.col_slot[static_cast<std::size_t>(col)];
        if (slot < 0) throw std::logic_error("QagSpace: dead column in phase-2 remainder");
        rem(static_cast<std::size_t>(slot), j) = v;
      }
    s.cok = cokernel_decompose(rem);
    return s;
  }

  // Sparse Gaussian elimination restricted to unit pivots, Markowitz-style
  // pivot choice. Each pivot retires one relation row and one monomial
  // column and is recorded so vectors can be replayed through the same
  // rewrites later.
  void phase1(Slice& s, std::vector<std::map<int, L>>& rows) const {
    const int ncols = static_cast<int>(s.monos.size());
    std::vector<std::set<int>> colrows(static_cast<std::size_t>(ncols));
    std::vector<bool> col_alive(static_cast<std::size_t>(ncols), true);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) {
        (void)v;
        colrows[static_cast<std::size_t>(c)].insert(static_cast<int>(r));
      }
    for (;;) {
      long long best = -1;
      int br = -1, bc = -1;
      for (std::size_t r = 0; r < rows.size() && best != 0; ++r) {
        if (rows[r].empty()) continue;
        for (const auto& [c, v] : rows[r]) {
          if (!Euclid<L>::is_unit(v)) continue;
          const long long score =
              static_cast<long long>(rows[r].size() - 1) *
              static_cast<long long>(colrows[static_cast<std::size_t>(c)].size() - 1);
          if (best < 0 || score < best) {
            best = score;
            br = static_cast<int>(r);
            bc = c;
            if (best == 0) break;
          }
        }
      }
      if (br < 0) break;
      const std::size_t pr = static_cast<std::size_t>(br);
      const std::size_t pc = static_cast<std::size_t>(bc);
      const L ui = Euclid<L>::inv_unit(rows[pr][bc]);
      Step st;
      st.col = bc;
      for (const auto& [j, v] : rows[pr])
        if (j != bc) st.repl.emplace_back(j, L() - v * ui);
      const std::set<int> affected = colrows[pc];
      for (int r2 : affected) {
        if (r2 == br) continue;
        auto& row = rows[static_cast<std::size_t>(r2)];
        const L c = row[bc];
        row.erase(bc);
        for (const auto& [j, w] : st.repl) {
          L& slot = row[j];
          const bool was = !slot.is_zero();
          slot = slot + c * w;
          if (slot.is_zero()) {
            row.erase(j);
            if (was) colrows[static_cast<std::size_t>(j)].erase(r2);
          } else if (!was) {
            colrows[static_cast<std::size_t>(j)].insert(r2);
          }
        }
      }
      for (const auto& [j, v] : rows[pr]) {
        (void)v;
        colrows[static_cast<std::size_t>(j)].erase(br);
      }
      rows[pr].clear();
      col_alive[pc] = false;
      colrows[pc].clear();
      s.steps.push_back(std::move(st));
    }
    s.col_slot.assign(static_cast<std::size_t>(ncols), -1);
    for (int c = 0; c < ncols; ++c)
      if (col_alive[static_cast<std::size_t>(c)]) {
        s.col_slot[static_cast<std::size_t>(c)] = static_cast<int>(s.survivors.size());
        s.survivors.push_back(c);
      }
  }

  AnnularWeb web_;
  bool reversed_ = false;
  std::vector<Relation<K>> rels_;       // original-variable generators
  std::vector<bool> is_elim_;           // per original variable
  std::vector<Poly> elim_expr_;         // eliminated variable -> survivor combination
  std::vector<int> red_index_;          // original variable -> reduced index, or -1
  std::vector<int> survivor_var_;       // reduced index -> original variable
  std::vector<Poly> reduced_;           // relations in the reduced alphabet
  std::vector<Slice> slices_;           // degree 0 .. limit
};

// Free ranks per quantum degree of one web's space.
template <class K = Rat>
GradedDims ag_at_q1(const AnnularWeb& w, int degree_bound = -1) {
  return QagSpace<K>(w, degree_bound).dims_at_q1();
}

namespace detail {

// Edge correspondence used by both saddle maps: a thin edge of `a` maps to
// the edge of `b` covering the same (height, gap) cell at its start. When a
// dumbbell is removed this merges its four thin neighbours in pairs; when
// one is inserted, edges straddling the new level land on its incoming side.
inline std::vector<int> edge_correspondence(const AnnularWeb& a, const AnnularWeb& b) {
  std::vector<int> to(a.thin_count());
  for (std::size_t e = 0; e < a.thin_count(); ++e) {
    const auto& ed = a.edge(static_cast<int>(e));
    to[e] = b.edge_at(ed.height, ed.from_pos);
  }
  return to;
}

template <class K>
MultiPoly<Laurent<K>> push_through(const MultiPoly<Laurent<K>>& f, const std::vector<int>& to,
                                   std::size_t dst_vars) {
  MultiPoly<Laurent<K>> out(dst_vars);
  for (const auto& [m, c] : f.terms()) {
    typename MultiPoly<Laurent<K>>::Mono mm(dst_vars, 0);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0) mm[static_cast<std::size_t>(to[v])] += m[v];
    out.add_term(mm, c);
  }
  return out;
}

// Require that every relation of src, pushed through the variable map (and
// optionally multiplied by a prefactor), dies in dst's free quotient. This
// is what makes the induced matrices independent of the chosen
// representatives.
template <class K>
void check_relations_die(const QagSpace<K>& src, const QagSpace<K>& dst,
                         const std::vector<int>& to,
                         const MultiPoly<Laurent<K>>* prefactor, const char* what) {
  for (const auto& r : src.relations()) {
    if (r.poly.is_zero()) continue;
    MultiPoly<Laurent<K>> img = push_through<K>(r.poly, to, dst.web().thin_count());
    if (prefactor != nullptr) img = img * (*prefactor);
    if (img.is_zero()) continue;
    const int dg = img.total_degree();
    if (dg > dst.max_degree()) continue;  // beyond the computed (rank-zero) range
    for (const auto& c : dst.reduce(dg, img))
      if (!c.is_zero()) throw std::logic_error(std::string(what) + ": relation does not map to zero");
  }
}

inline const webs::Dumbbell& dumbbell_at_level(const AnnularWeb& w, int level) {
  for (const auto& d : w.dumbbells())
    if (d.level == level) return d;
  throw std::invalid_argument("no dumbbell at the requested level");
}

inline void require_no_dumbbell(const AnnularWeb& w, int level) {
  for (const auto& d : w.dumbbells())
    if (d.level == level) throw std::invalid_argument("unexpected dumbbell at the requested level");
}

}  // namespace detail

// Matrix of the unzip map (dumbbell at `level` replaced by the parallel
// smoothing) on degree-p free bases: variables are identified along the
// merged edges, polynomial degree is preserved. Rows index dst's basis,
// columns src's.
template <class K>
Mat<Laurent<K>> unzip_matrix(const QagSpace<K>& src, const QagSpace<K>& dst, int level, int p) {
  using L = Laurent<K>;
  detail::dumbbell_at_level(src.web(), level);
  detail::require_no_dumbbell(dst.web(), level);
  const auto to = detail::edge_correspondence(src.web(), dst.web());
  if (p == 0) detail::check_relations_die<K>(src, dst, to, nullptr, "unzip");
  const std::size_t rows = static_cast<std::size_t>(dst.free_rank(p));
  const std::size_t cols = static_cast<std::size_t>(src.free_rank(p));
  Mat<L> out(rows, cols);
  if (rows == 0 || cols == 0) return out;
  for (std::size_t j = 0; j < cols; ++j) {
    const auto img =
        detail::push_through<K>(src.basis_poly(p, static_cast<int>(j)), to, dst.web().thin_count());
    const auto col = dst.reduce(p, img);
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = col[i];
  }
  return out;
}

// Matrix of the zip map (parallel smoothing replaced by a dumbbell at
// `level`) on free bases: push the representative through the edge
// correspondence, multiply by the dot difference x_out_hi - x_in_lo of the
// new dumbbell, land in degree p + 1. The dumbbell relations make the result
// independent of the incoming-side substitution choice: (x_B - x_C)(x_B - x_D)
// = x_B (x_A + x_B - x_C - x_D) - (x_A x_B - x_C x_D) identically.
template <class K>
Mat<Laurent<K>> zip_matrix(const QagSpace<K>& src, const QagSpace<K>& dst, int level, int p) {
  using L = Laurent<K>;
  using Poly = MultiPoly<L>;
  detail::require_no_dumbbell(src.web(), level);
  const auto& d = detail::dumbbell_at_level(dst.web(), level);
  const auto to = detail::edge_correspondence(src.web(), dst.web());
  const std::size_t nd = dst.web().thin_count();
  const Poly prefactor = Poly::variable(nd, static_cast<std::size_t>(d.out_hi)) -
                         Poly::variable(nd, static_cast<std::size_t>(d.in_lo));
  if (p == 0) detail::check_relations_die<K>(src, dst, to, &prefactor, "zip");
  const std::size_t rows = static_cast<std::size_t>(dst.free_rank(p + 1));
  const std::size_t cols = static_cast<std::size_t>(src.free_rank(p));
  Mat<L> out(rows, cols);
  if (rows == 0 || cols == 0) return out;
  for (std::size_t j = 0; j < cols; ++j) {
    const auto img =
        detail::push_through<K>(src.basis_poly(p, static_cast<int>(j)), to, nd) * prefactor;
    const auto col = dst.reduce(p + 1, img);
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = col[i];
  }
  return out;
}

}  // namespace glzero::gilmore
