#pragma once
// Smith normal form over a Euclidean domain, with optional unimodular
// transform tracking (U * M * V = D), plus the derived linear-algebra
// operations the rest of the project needs: fraction-field rank, kernels,
// linear solves, and cokernel decompositions.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glzero/matrix.hpp"

namespace glzero {

template <class R>
bool euclid_divides(const R& d, const R& a) {
  if (Euclid<R>::is_zero(a)) return true;
  if (Euclid<R>::is_zero(d)) return false;
  return Euclid<R>::is_zero(Euclid<R>::divmod(a, d).second);
}

template <class R>
struct Snf {
  Mat<R> D;                 // diagonal, same shape as input
  Mat<R> U, Uinv, V, Vinv;  // U*M*V = D; empty when transforms not requested
  std::vector<R> divisors;  // nonzero diagonal entries, d1 | d2 | ...
  std::size_t rank = 0;
};

namespace detail {

// Elementary-operation bookkeeping. The working matrix always satisfies
// M_work = U * M_orig * V, with Uinv/Vinv tracking the inverse transforms.
template <class R>
struct SnfWorker {
  Mat<R>& M;
  Mat<R>*U, *Uinv, *V, *Vinv;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
    if (U)
      for (std::size_t j = 0; j < U->cols(); ++j) std::swap((*U)(a, j), (*U)(b, j));
    if (Uinv)
      for (std::size_t i = 0; i < Uinv->rows(); ++i) std::swap((*Uinv)(i, a), (*Uinv)(i, b));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
    if (V)
      for (std::size_t i = 0; i < V->rows(); ++i) std::swap((*V)(i, a), (*V)(i, b));
    if (Vinv)
      for (std::size_t j = 0; j < Vinv->cols(); ++j) std::swap((*Vinv)(a, j), (*Vinv)(b, j));
  }
  // row_i -= q * row_t
  void row_sub(std::size_t i, std::size_t t, const R& q) {
    if (Euclid<R>::is_zero(q)) return;
    for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = M(i, j) - q * M(t, j);
    if (U)
      for (std::size_t j = 0; j < U->cols(); ++j) (*U)(i, j) = (*U)(i, j) - q * (*U)(t, j);
    if (Uinv)
      for (std::size_t a = 0; a < Uinv->rows(); ++a)
        (*Uinv)(a, t) = (*Uinv)(a, t) + q * (*Uinv)(a, i);
  }
  // col_j -= q * col_t
  void col_sub(std::size_t j, std::size_t t, const R& q) {
    if (Euclid<R>::is_zero(q)) return;
    for (std::size_t i = 0; i < M.rows(); ++i) M(i, j) = M(i, j) - q * M(i, t);
    if (V)
      for (std::size_t i = 0; i < V->rows(); ++i) (*V)(i, j) = (*V)(i, j) - q * (*V)(i, t);
    if (Vinv)
      for (std::size_t b = 0; b < Vinv->cols(); ++b)
        (*Vinv)(t, b) = (*Vinv)(t, b) + q * (*Vinv)(j, b);
  }
  // row_t *= u (u a unit), used for final normalization
  void row_scale(std::size_t t, const R& u) {
    R ui = Euclid<R>::inv_unit(u);
    for (std::size_t j = 0; j < M.cols(); ++j) M(t, j) = M(t, j) * u;
    if (U)
      for (std::size_t j = 0; j < U->cols(); ++j) (*U)(t, j) = (*U)(t, j) * u;
    if (Uinv)
      for (std::size_t a = 0; a < Uinv->rows(); ++a) (*Uinv)(a, t) = (*Uinv)(a, t) * ui;
  }
};

}  // namespace detail

template <class R>
Snf<R> smith_normal_form(const Mat<R>& input, bool with_transforms = true) {
  using E = Euclid<R>;
  Snf<R> out;
  out.D = input;
  const std::size_t m = input.rows(), n = input.cols();
  if (with_transforms) {
    out.U = Mat<R>::identity(m);
    out.Uinv = Mat<R>::identity(m);
    out.V = Mat<R>::identity(n);
    out.Vinv = Mat<R>::identity(n);
  }
  detail::SnfWorker<R> w{out.D, with_transforms ? &out.U : nullptr,
                         with_transforms ? &out.Uinv : nullptr,
                         with_transforms ? &out.V : nullptr,
                         with_transforms ? &out.Vinv : nullptr};
  Mat<R>& M = out.D;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot: smallest Euclidean norm in the remaining submatrix; ties broken
    // by fewest other nonzeros in the pivot's row and column (cheapest to
    // clear first, keeps intermediate entries small).
    std::size_t pi = m, pj = n;
    std::size_t best_fill = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (E::is_zero(M(i, j))) continue;
        std::size_t fill = 0;
        for (std::size_t a = t; a < m; ++a)
          if (a != i && !E::is_zero(M(a, j))) ++fill;
        for (std::size_t b = t; b < n; ++b)
          if (b != j && !E::is_zero(M(i, b))) ++fill;
        bool better;
        if (pi == m) better = true;
        else if (E::norm_less(M(i, j), M(pi, pj))) better = true;
        else if (E::norm_less(M(pi, pj), M(i, j))) better = false;
        else better = fill < best_fill;
        if (better) { pi = i; pj = j; best_fill = fill; }
      }
    if (pi == m) break;  // remaining submatrix is zero
    w.swap_rows(pi, t);
    w.swap_cols(pj, t);

    for (;;) {
      bool restart = false;
      // Clear column t. A nonzero remainder has strictly smaller norm than
      // the pivot; swap it up and start over (norm is well-founded).
      for (std::size_t i = t + 1; i < m && !restart; ++i) {
        if (E::is_zero(M(i, t))) continue;
        auto [q, r] = E::divmod(M(i, t), M(t, t));
        w.row_sub(i, t, q);
        if (!E::is_zero(r)) {
          w.swap_rows(i, t);
          restart = true;
        }
      }
      if (restart) continue;
      // Clear row t (column t is untouched by these column operations).
      for (std::size_t j = t + 1; j < n && !restart; ++j) {
        if (E::is_zero(M(t, j))) continue;
        auto [q, r] = E::divmod(M(t, j), M(t, t));
        w.col_sub(j, t, q);
        if (!E::is_zero(r)) {
          w.swap_cols(j, t);
          restart = true;
        }
      }
      if (restart) continue;
      // Divisor-chain condition: the pivot must divide every remaining
      // entry. If not, fold the offending row into row t; the next clearing
      // pass then produces a nonzero remainder, shrinking the pivot norm.
      for (std::size_t i = t + 1; i < m && !restart; ++i)
        for (std::size_t j = t + 1; j < n && !restart; ++j)
          if (!euclid_divides(M(t, t), M(i, j))) {
            w.row_sub(t, i, E::from_int(-1));  // row_t += row_i
            restart = true;
          }
      if (!restart) break;
    }
  }

  for (std::size_t t = 0; t < steps; ++t) {
    if (E::is_zero(M(t, t))) break;
    auto [u, nrm] = E::unit_and_normal(M(t, t));
    if (!E::is_zero(u) && !(u == E::one())) w.row_scale(t, E::inv_unit(u));
    M(t, t) = nrm;
    out.divisors.push_back(nrm);
  }
  out.rank = out.divisors.size();
  return out;
}

// Rank over the fraction field via fraction-free (Bareiss) elimination.
// All divisions below are exact over any integral domain.
template <class R>
std::size_t rank_ff(Mat<R> a) {
  using E = Euclid<R>;
  const std::size_t m = a.rows(), n = a.cols();
  R prev = E::one();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = m;
    for (std::size_t i = rank; i < m; ++i)
      if (!E::is_zero(a(i, col))) {
        if (piv == m || E::norm_less(a(i, col), a(piv, col))) piv = i;
      }
    if (piv == m) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(rank, j));
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a(i, j) = E::exact_div(a(rank, col) * a(i, j) - a(i, col) * a(rank, j), prev);
      a(i, col) = E::zero();
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

template <class R>
std::size_t rank_over_fraction_field(const Mat<R>& a) {
  return rank_ff(a);
}

// Determinant of a square matrix by Bareiss elimination.
template <class R>
R det_ff(Mat<R> a) {
  using E = Euclid<R>;
  if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return E::one();
  R prev = E::one();
  bool neg = false;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    std::size_t piv = n;
    for (std::size_t i = t; i < n; ++i)
      if (!E::is_zero(a(i, t))) { piv = i; break; }
    if (piv == n) return E::zero();
    if (piv != t) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(t, j));
      neg = !neg;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j)
        a(i, j) = E::exact_div(a(t, t) * a(i, j) - a(i, t) * a(t, j), prev);
      a(i, t) = E::zero();
    }
    prev = a(t, t);
  }
  R d = a(n - 1, n - 1);
  return neg ? E::zero() - d : d;
}

// Basis of { x : M x = 0 } as matrix columns. Because the basis consists of
// columns of a unimodular matrix, it is automatically saturated (a direct
// summand of the ambient free module).
template <class R>
Mat<R> kernel_basis(const Mat<R>& M) {
  Snf<R> s = smith_normal_form(M);
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank; j < M.cols(); ++j) idx.push_back(j);
  return s.V.submatrix_cols(idx);
}

// Basis of { y : y M = 0 } as matrix rows (rows of a unimodular matrix,
// hence saturated).
template <class R>
Mat<R> left_kernel_basis(const Mat<R>& M) {
  Snf<R> s = smith_normal_form(M);
  std::vector<std::size_t> idx;
  for (std::size_t i = s.rank; i < M.rows(); ++i) idx.push_back(i);
  return s.U.submatrix_rows(idx);
}

// Solve M x = b over the ring; nullopt when no exact solution exists.
template <class R>
std::optional<std::vector<R>> solve_linear(const Snf<R>& s, const std::vector<R>& b) {
  using E = Euclid<R>;
  const std::size_t m = s.D.rows(), n = s.D.cols();
  if (b.size() != m) throw std::invalid_argument("solve_linear: size mismatch");
  std::vector<R> c = mat_vec(s.U, b);
  std::vector<R> y(n, E::zero());
  for (std::size_t i = 0; i < m; ++i) {
    if (i < s.rank) {
      if (!euclid_divides(s.D(i, i), c[i])) return std::nullopt;
      if (!E::is_zero(c[i])) y[i] = E::exact_div(c[i], s.D(i, i));
    } else if (!E::is_zero(c[i])) {
      return std::nullopt;
    }
  }
  return mat_vec(s.V, y);
}

template <class R>
std::optional<std::vector<R>> solve_linear(const Mat<R>& M, const std::vector<R>& b) {
  return solve_linear(smith_normal_form(M), b);
}

// Cokernel of M : R^r -> R^m (columns of M are the relations), decomposed as
// R^free_rank  (+)  sum_i R/(torsion_i).
//
// `projection` (free_rank x m) maps coordinates onto the free part and kills
// exactly the torsion; its rows are rows of a unimodular matrix, so they form
// a saturated system. `section` (m x free_rank) is a right inverse:
// projection * section = identity, and projection * M = 0.
template <class R>
struct CokernelDecomposition {
  std::size_t free_rank = 0;
  std::vector<R> torsion;  // non-unit divisors, in chain order
  Mat<R> projection;
  Mat<R> section;
};

template <class R>
CokernelDecomposition<R> cokernel_decompose(const Mat<R>& M) {
  using E = Euclid<R>;
  Snf<R> s = smith_normal_form(M);
  CokernelDecomposition<R> out;
  out.free_rank = M.rows() - s.rank;
  for (const R& d : s.divisors)
    if (!E::is_unit(d)) out.torsion.push_back(d);
  std::vector<std::size_t> idx;
  for (std::size_t i = s.rank; i < M.rows(); ++i) idx.push_back(i);
  out.projection = s.U.submatrix_rows(idx);
  out.section = s.Uinv.submatrix_cols(idx);
  return out;
}

}  // namespace glzero
