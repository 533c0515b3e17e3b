#pragma once
//
// Bigraded chain complexes of annular braid closures, assembled from the cube
// of resolutions: one evaluation space per resolution, signed zip/unzip
// saddle maps as differentials.  On top of the complex sit homology with
// elementary divisors over K[q,q^-1] (or its q = 1 specialization), Poincare
// polynomials, the graded Euler characteristic against a reduced-Burau
// Alexander oracle, and the (q -> 1) Bockstein spectral sequence computed by
// divisor bookkeeping (with a mod-p integer analogue running through the
// same code path).

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "glzero/euclid.hpp"
#include "glzero/field.hpp"
#include "glzero/gilmore.hpp"
#include "glzero/laurent.hpp"
#include "glzero/matrix.hpp"
#include "glzero/snf.hpp"
#include "glzero/web.hpp"

namespace glzero::homology {

// (homological degree, quantum degree)
using Bidegree = std::pair<int, int>;

// Dimension per bidegree; the coefficient of t^h q^j.
using PoincarePolynomial = std::map<Bidegree, int>;

inline int total_dim(const PoincarePolynomial& p) {
  int t = 0;
  for (const auto& [key, c] : p) t += c;
  return t;
}

inline std::string poincare_str(const PoincarePolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : p) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << "t^" << key.first << " q^" << key.second;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// The chain complex, sliced by bidegree.  diff[(h,q)] is the block
// C_{h,q} -> C_{h+1,q}; the differential preserves q and raises h by one.

template <class R>
struct CubeComplex {
  std::map<Bidegree, int> ranks;    // nonzero chain ranks only
  std::map<Bidegree, Mat<R>> diff;  // stored blocks (absent means zero)

  int rank(int h, int q) const {
    auto it = ranks.find({h, q});
    return it == ranks.end() ? 0 : it->second;
  }

  Mat<R> block(int h, int q) const {
    auto it = diff.find({h, q});
    if (it != diff.end()) return it->second;
    return Mat<R>(static_cast<std::size_t>(rank(h + 1, q)),
                  static_cast<std::size_t>(rank(h, q)));
  }
};

namespace detail {

// Run body(0..n-1) on `jobs` threads; rethrows the first exception.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::size_t nt = std::min(static_cast<std::size_t>(jobs), n);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

// One reduced evaluation space per resolution of the braid.  A nonnegative
// degree_bound truncates every space at that polynomial degree (exploratory
// use only; the default covers the full pairing range).
template <class K>
std::vector<std::unique_ptr<gilmore::QagSpace<K>>> vertex_spaces(
    const webs::Cube& c, int jobs, int degree_bound = -1) {
  std::vector<std::unique_ptr<gilmore::QagSpace<K>>> spaces(c.vertices.size());
  parallel_for(spaces.size(), jobs, [&](std::size_t m) {
    webs::AnnularWeb w = webs::resolve(c.braid, c.vertices[m].I);
    int bound = degree_bound;
    if (bound >= 0) bound = std::min(bound, gilmore::degree_cap(w));
    spaces[m] = std::make_unique<gilmore::QagSpace<K>>(w, bound);
  });
  return spaces;
}

inline void require_knot(const webs::BraidWord& b, const char* what) {
  if (!b.closure_is_knot())
    throw std::invalid_argument(
        std::string(what) +
        ": the braid closure has more than one component; "
        "this invariant is defined for knots");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Chain ranks alone (no differentials).  Enough for the graded Euler
// characteristic, and much cheaper than a full assembly.

template <class K = Rat>
std::map<Bidegree, int> chain_ranks(const webs::BraidWord& b, int jobs = 1,
                                    int degree_bound = -1) {
  webs::Cube c = webs::cube(b);
  auto spaces = detail::vertex_spaces<K>(c, jobs, degree_bound);
  std::map<Bidegree, int> out;
  for (std::size_t m = 0; m < spaces.size(); ++m) {
    const auto& sp = *spaces[m];
    for (int p = 0; p <= sp.max_degree(); ++p) {
      int r = sp.free_rank(p);
      if (r == 0) continue;
      int q = gilmore::quantum_degree(sp.web(), p) + c.vertices[m].qshift;
      out[{c.vertices[m].hdeg, q}] += r;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Full assembly over K[q,q^-1].  Every square face of the cube is checked to
// anticommute degree by degree; a failure aborts naming the face.

template <class K = Rat>
CubeComplex<Laurent<K>> assemble(const webs::BraidWord& b, int jobs = 1,
                                 int degree_bound = -1) {
  using L = Laurent<K>;
  webs::Cube c = webs::cube(b);
  auto spaces = detail::vertex_spaces<K>(c, jobs, degree_bound);

  CubeComplex<L> C;
  // (mask, degree) -> (bidegree, column offset inside that slice)
  std::map<std::pair<std::size_t, int>, std::pair<Bidegree, int>> slot;
  for (std::size_t m = 0; m < spaces.size(); ++m) {
    const auto& sp = *spaces[m];
    for (int p = 0; p <= sp.max_degree(); ++p) {
      int r = sp.free_rank(p);
      if (r == 0) continue;
      Bidegree key{c.vertices[m].hdeg,
                   gilmore::quantum_degree(sp.web(), p) + c.vertices[m].qshift};
      slot[{m, p}] = {key, C.ranks[key]};
      C.ranks[key] += r;
    }
  }

  // Saddle matrices, one per (cube edge, source degree).
  std::vector<std::map<int, Mat<L>>> emats(c.edges.size());
  detail::parallel_for(c.edges.size(), jobs, [&](std::size_t ei) {
    const webs::CubeEdge& e = c.edges[ei];
    const auto& src = *spaces[static_cast<std::size_t>(e.from)];
    const auto& dst = *spaces[static_cast<std::size_t>(e.to)];
    const int level = e.crossing + 1;
    for (int p = 0; p <= src.max_degree(); ++p) {
      if (src.free_rank(p) == 0) continue;
      Mat<L> M = e.zip ? gilmore::zip_matrix(src, dst, level, p)
                       : gilmore::unzip_matrix(src, dst, level, p);
      emats[ei].emplace(p, std::move(M));
    }
  });

  std::map<std::pair<int, int>, std::size_t> edge_ix;
  for (std::size_t ei = 0; ei < c.edges.size(); ++ei)
    edge_ix[{c.edges[ei].from, c.edges[ei].to}] = ei;

  auto edge_block = [&](std::size_t ei, int p) -> Mat<L> {
    auto it = emats[ei].find(p);
    if (it != emats[ei].end()) return it->second;
    const webs::CubeEdge& e = c.edges[ei];
    int pd = p + (e.zip ? 1 : 0);
    return Mat<L>(
        static_cast<std::size_t>(spaces[static_cast<std::size_t>(e.to)]->free_rank(pd)),
        static_cast<std::size_t>(spaces[static_cast<std::size_t>(e.from)]->free_rank(p)));
  };

  // Square faces anticommute.
  const int n = b.n();
  for (std::size_t m = 0; m < spaces.size(); ++m) {
    for (int a = 0; a < n; ++a) {
      if ((m >> a) & 1u) continue;
      for (int bb = a + 1; bb < n; ++bb) {
        if ((m >> bb) & 1u) continue;
        std::size_t ma = m | (1ull << a), mb = m | (1ull << bb);
        std::size_t mab = ma | (1ull << bb);
        std::size_t e1 = edge_ix[{static_cast<int>(m), static_cast<int>(ma)}];
        std::size_t e2 = edge_ix[{static_cast<int>(ma), static_cast<int>(mab)}];
        std::size_t f1 = edge_ix[{static_cast<int>(m), static_cast<int>(mb)}];
        std::size_t f2 = edge_ix[{static_cast<int>(mb), static_cast<int>(mab)}];
        int s_a = c.edges[e1].sign * c.edges[e2].sign;
        int s_b = c.edges[f1].sign * c.edges[f2].sign;
        for (int p = 0; p <= spaces[m]->max_degree(); ++p) {
          if (spaces[m]->free_rank(p) == 0) continue;
          Mat<L> via_a =
              edge_block(e2, p + (c.edges[e1].zip ? 1 : 0)) * edge_block(e1, p);
          Mat<L> via_b =
              edge_block(f2, p + (c.edges[f1].zip ? 1 : 0)) * edge_block(f1, p);
          Mat<L> sum = (s_a == s_b) ? via_a + via_b : via_a - via_b;
          if (!sum.is_zero()) {
            std::ostringstream os;
            os << "d^2 != 0 on the square face at resolution mask " << m
               << ", crossings " << a << " and " << bb << ", degree " << p;
            throw std::logic_error(os.str());
          }
        }
      }
    }
  }

  // Scatter the signed blocks into the per-bidegree differential.
  for (std::size_t ei = 0; ei < c.edges.size(); ++ei) {
    const webs::CubeEdge& e = c.edges[ei];
    for (const auto& [p, M] : emats[ei]) {
      if (M.rows() == 0 || M.cols() == 0) continue;
      auto [skey, coff] = slot.at({static_cast<std::size_t>(e.from), p});
      auto [dkey, roff] =
          slot.at({static_cast<std::size_t>(e.to), p + (e.zip ? 1 : 0)});
      if (dkey.second != skey.second || dkey.first != skey.first + 1)
        throw std::logic_error("saddle map does not preserve the bigrading");
      auto it = C.diff.find(skey);
      if (it == C.diff.end())
        it = C.diff
                 .emplace(skey, Mat<L>(static_cast<std::size_t>(C.ranks.at(dkey)),
                                       static_cast<std::size_t>(C.ranks.at(skey))))
                 .first;
      Mat<L>& B = it->second;
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
          const L& v = M(i, j);
          if (v.is_zero()) continue;
          B(static_cast<std::size_t>(roff) + i, static_cast<std::size_t>(coff) + j) =
              e.sign > 0 ? v : L() - v;
        }
    }
  }
  return C;
}

// Specialize every differential block at q = 1.
template <class K>
CubeComplex<K> at_q1(const CubeComplex<Laurent<K>>& C) {
  CubeComplex<K> out;
  out.ranks = C.ranks;
  for (const auto& [key, M] : C.diff) {
    Mat<K> N(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) N(i, j) = M(i, j).eval_at_one();
    out.diff.emplace(key, std::move(N));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homology with elementary divisors, one bidegree at a time: kernel of the
// outgoing block, incoming image rewritten in kernel coordinates, cokernel.

template <class R>
struct HomologyTable {
  std::map<Bidegree, int> free_rank;           // zero ranks omitted
  std::map<Bidegree, std::vector<R>> torsion;  // non-unit divisors only

  PoincarePolynomial poincare() const {
    PoincarePolynomial p;
    for (const auto& [key, r] : free_rank) p[key] = r;
    return p;
  }
  int total_rank() const {
    int t = 0;
    for (const auto& [key, r] : free_rank) t += r;
    return t;
  }
};

template <class R>
HomologyTable<R> homology_table(const CubeComplex<R>& C) {
  HomologyTable<R> H;
  for (const auto& [key, r] : C.ranks) {
    const auto [h, q] = key;
    Mat<R> dout = C.block(h, q);
    Mat<R> din = C.block(h - 1, q);
    Mat<R> ker = kernel_basis(dout);  // r x kdim, saturated
    Mat<R> pres(ker.cols(), din.cols());
    if (din.cols() > 0) {
      if (ker.cols() == 0) {
        if (!din.is_zero())
          throw std::logic_error("incoming differential does not land in the kernel");
      } else {
        Snf<R> s = smith_normal_form(ker);
        for (std::size_t j = 0; j < din.cols(); ++j) {
          std::vector<R> col(din.rows());
          for (std::size_t i = 0; i < din.rows(); ++i) col[i] = din(i, j);
          auto sol = solve_linear(s, col);
          if (!sol)
            throw std::logic_error("incoming differential does not land in the kernel");
          for (std::size_t i = 0; i < pres.rows(); ++i) pres(i, j) = (*sol)[i];
        }
      }
    }
    auto cok = cokernel_decompose(pres);
    if (cok.free_rank > 0) H.free_rank[key] = static_cast<int>(cok.free_rank);
    if (!cok.torsion.empty()) H.torsion[key] = std::move(cok.torsion);
  }
  return H;
}

// ---------------------------------------------------------------------------
// Poincare polynomial of the q = 1 homology (defined for knot closures).

template <class K = Rat>
PoincarePolynomial gl0_poincare(const webs::BraidWord& b, int jobs = 1,
                                int degree_bound = -1) {
  detail::require_knot(b, "gl0_poincare");
  CubeComplex<Laurent<K>> C = assemble<K>(b, jobs, degree_bound);
  return homology_table(at_q1(C)).poincare();
}

// ---------------------------------------------------------------------------
// Graded Euler characteristic, sum over bidegrees of (-1)^h q^j.  Computed
// from the chain ranks; rank-nullity makes the homology-level sum identical,
// and the tests pin that equality down.

template <class K = Rat>
Laurent<K> alexander_from_euler(const webs::BraidWord& b, int jobs = 1,
                                int degree_bound = -1) {
  detail::require_knot(b, "alexander_from_euler");
  auto ranks = chain_ranks<K>(b, jobs, degree_bound);
  Laurent<K> chi;
  for (const auto& [key, r] : ranks) {
    long long c = (key.first % 2 == 0) ? r : -r;
    chi += Laurent<K>::q_power(key.second, FieldOps<K>::from_int(c));
  }
  return chi;
}

// ---------------------------------------------------------------------------
// Independent Alexander oracle through the reduced Burau representation.
// det(burau(beta) - id) * (t - 1) / (t^k - 1) equals the Alexander polynomial
// of the closure up to a unit; the result is centered so the exponents are
// symmetric, the sign fixed by value +1 at t = 1, and the variable then
// substituted t = q^2.  The substitution is calibrated once against the
// graded Euler characteristic of the trefoil (q^2 - 1 + q^-2) and applied
// uniformly.

namespace detail {

// Reduced Burau matrix of one braid generator (0-based index j, k strands).
// Only column j differs from the identity.
inline Mat<LaurentQ> burau_generator(int k, int j, bool inverse) {
  using L = LaurentQ;
  Mat<L> m = Mat<L>::identity(static_cast<std::size_t>(k - 1));
  auto at = [&](int r) -> L& {
    return m(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
  };
  if (!inverse) {
    if (j >= 1) at(j - 1) = L::q_power(1);
    at(j) = L() - L::q_power(1);
    if (j + 1 <= k - 2) at(j + 1) = L(1);
  } else {
    if (j >= 1) at(j - 1) = L(1);
    at(j) = L() - L::q_power(-1);
    if (j + 1 <= k - 2) at(j + 1) = L::q_power(-1);
  }
  return m;
}

}  // namespace detail

inline LaurentQ alexander_burau(const webs::BraidWord& b) {
  using L = LaurentQ;
  detail::require_knot(b, "alexander_burau");
  const int k = b.strands;
  L delta;
  if (k == 1) {
    delta = L(1);
  } else {
    Mat<L> M = Mat<L>::identity(static_cast<std::size_t>(k - 1));
    for (int letter : b.letters)
      M = M * detail::burau_generator(k, std::abs(letter) - 1, letter < 0);
    Mat<L> MI = M - Mat<L>::identity(static_cast<std::size_t>(k - 1));
    L D = det_ff(MI);
    if (D.is_zero())
      throw std::logic_error("alexander_burau: vanishing Burau determinant");
    // cyclotomic factor: t^k - 1 over t - 1
    L num = D * (L::q_power(1) - L(1));
    auto [quot, rem] = L::divmod(num, L::q_power(k) - L(1));
    if (!rem.is_zero())
      throw std::logic_error("alexander_burau: determinant not divisible by t^k - 1");
    delta = quot;
  }
  int center = delta.min_exp() + delta.max_exp();
  if (center % 2 != 0)
    throw std::logic_error("alexander_burau: polynomial cannot be centered");
  delta = delta.shifted(-center / 2);
  Rat one_val = delta.eval_at_one();
  if (one_val == Rat(-1))
    delta = L() - delta;
  else if (one_val != Rat(1))
    throw std::logic_error("alexander_burau: value at 1 is not a unit");
  L out;
  for (const auto& [e, c] : delta.terms()) out += L::q_power(2 * e, c);
  return out;
}

// ---------------------------------------------------------------------------
// Bockstein spectral sequence by divisor bookkeeping.  A torsion divisor at
// (h, j) whose prime valuation is v >= 1 presents a two-term subcomplex
// spanning (h-1, j) -> (h, j); it contributes one dimension at each end on
// pages 1..v and nothing afterwards.  Free summands persist on every page.

struct BocksteinReport {
  std::vector<PoincarePolynomial> pages;  // pages[r-1] = E_r, for r = 1..r_star
  int r_star = 1;                         // E_{r_star} = E_infty
  PoincarePolynomial einf;                // free ranks of the integral homology
};

template <class R, class Valuation>
BocksteinReport bockstein_from_table(const HomologyTable<R>& H, Valuation&& val) {
  std::map<Bidegree, std::vector<int>> vals;
  int vmax = 0;
  for (const auto& [key, divs] : H.torsion) {
    for (const R& d : divs) {
      int v = val(d);
      vals[key].push_back(v);
      vmax = std::max(vmax, v);
    }
  }
  BocksteinReport rep;
  rep.r_star = vmax + 1;
  rep.einf = [&] {
    PoincarePolynomial p;
    for (const auto& [key, r] : H.free_rank) p[key] = r;
    return p;
  }();
  for (int r = 1; r <= rep.r_star; ++r) {
    PoincarePolynomial page = rep.einf;
    for (const auto& [key, vs] : vals) {
      int live = 0;
      for (int v : vs)
        if (v >= r) ++live;
      if (live == 0) continue;
      page[{key.first, key.second}] += live;
      page[{key.first - 1, key.second}] += live;
    }
    rep.pages.push_back(std::move(page));
  }
  return rep;
}

// q -> 1 Bockstein of a complex over K[q,q^-1].
template <class K>
BocksteinReport bockstein_pages(const CubeComplex<Laurent<K>>& C) {
  auto H = homology_table(C);
  return bockstein_from_table(H, [](const Laurent<K>& d) { return d.valuation_at_one(); });
}

// Mod-p analogue over the integers: same bookkeeping, prime p.
inline BocksteinReport bockstein_pages_mod(const CubeComplex<Int>& C, const Int& p) {
  auto H = homology_table(C);
  return bockstein_from_table(H, [&](const Int& d) {
    int v = 0;
    Int r = abs(d);
    while (true) {
      auto [quot, rem] = Euclid<Int>::divmod(r, p);
      if (rem != 0) return v;
      r = quot;
      ++v;
    }
  });
}

template <class K = Rat>
BocksteinReport bockstein_pages(const webs::BraidWord& b, int jobs = 1,
                                int degree_bound = -1) {
  return bockstein_pages(assemble<K>(b, jobs, degree_bound));
}

// ---------------------------------------------------------------------------
// Last-page dimensions of the (q -> 1) spectral sequence: the free ranks of
// the homology over K[q,q^-1], reported in (homological, quantum) bidegrees.

template <class K = Rat>
PoincarePolynomial hfk_ranks(const webs::BraidWord& b, int jobs = 1,
                             int degree_bound = -1) {
  detail::require_knot(b, "hfk_ranks");
  CubeComplex<Laurent<K>> C = assemble<K>(b, jobs, degree_bound);
  return homology_table(C).poincare();
}

}  // namespace glzero::homology
