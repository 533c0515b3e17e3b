#pragma once
// Young-diagram calculus and symmetric polynomials over finite alphabets:
// complement/transpose/dual in a bounding box, Schur polynomials by tableau
// enumeration and by the bialternant determinant, Littlewood-Richardson
// coefficients by expansion, and the alphabet-splitting identities used by
// the web evaluation formulas.

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "glzero/multipoly.hpp"

namespace glzero::symfunc {

class Young {
 public:
  Young() = default;
  Young(std::initializer_list<int> parts) : Young(std::vector<int>(parts)) {}
  explicit Young(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("Young: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Young: parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int cols() const { return parts_.empty() ? 0 : parts_[0]; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int part(int i) const {  // 0-based, 0 beyond the last row
    return i < rows() ? parts_[i] : 0;
  }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Young& a, const Young& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Young& a, const Young& b) { return !(a == b); }
  friend bool operator<(const Young& a, const Young& b) { return a.parts_ < b.parts_; }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

struct BoxBound {
  int a = 0;  // max columns
  int b = 0;  // max rows
};

inline Young box_diagram(const BoxBound& bound) {
  if (bound.a == 0 || bound.b == 0) return Young{};
  return Young(std::vector<int>(bound.b, bound.a));
}

inline bool in_box(const Young& lam, const BoxBound& bound) {
  return lam.rows() <= bound.b && lam.cols() <= bound.a;
}

inline Young complement(const Young& lam, const BoxBound& bound) {
  if (!in_box(lam, bound)) throw std::invalid_argument("complement: diagram exceeds box");
  std::vector<int> parts(bound.b);
  for (int i = 0; i < bound.b; ++i) parts[i] = bound.a - lam.part(bound.b - 1 - i);
  return Young(std::move(parts));
}

inline Young transpose(const Young& lam) {
  std::vector<int> parts(lam.cols());
  for (int j = 0; j < lam.cols(); ++j) {
    int count = 0;
    for (int i = 0; i < lam.rows(); ++i)
      if (lam.part(i) >= j + 1) ++count;
    parts[j] = count;
  }
  return Young(std::move(parts));
}

// dual(lam) in the transposed box: transpose o complement = complement o transpose.
inline Young dual(const Young& lam, const BoxBound& bound) {
  return transpose(complement(lam, bound));
}

inline bool contains(const Young& outer, const Young& inner) {
  if (inner.rows() > outer.rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

inline std::vector<Young> all_in_box(const BoxBound& bound) {
  std::vector<Young> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int row, int maxlen) -> void {
    out.emplace_back(parts);
    if (row >= bound.b) return;
    for (int len = maxlen; len >= 1; --len) {
      parts.push_back(len);
      self(self, row + 1, len);
      parts.pop_back();
    }
  };
  rec(rec, 0, bound.a);
  return out;
}

inline std::vector<Young> subdiagrams(const Young& lam) {
  std::vector<Young> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int row, int maxlen) -> void {
    out.emplace_back(parts);
    if (row >= lam.rows()) return;
    for (int len = std::min(maxlen, lam.part(row)); len >= 1; --len) {
      parts.push_back(len);
      self(self, row + 1, len);
      parts.pop_back();
    }
  };
  rec(rec, 0, lam.cols());
  return out;
}

// ---------------------------------------------------------------------------
// Schur polynomials.

// Schur polynomial s_lam in the variables picked out by `subset` from a
// global alphabet of `nvars` variables, by semistandard tableau enumeration
// (rows weakly increase, columns strictly increase).
inline MultiPoly<Rat> schur_on_subset(const Young& lam, std::size_t nvars,
                                      const std::vector<std::size_t>& subset) {
  MultiPoly<Rat> out(nvars);
  const int m = static_cast<int>(subset.size());
  if (lam.rows() > m) return out;  // no valid tableau
  if (lam.empty()) return MultiPoly<Rat>::one(nvars);

  std::vector<std::vector<int>> grid(lam.rows());
  for (int i = 0; i < lam.rows(); ++i) grid[i].assign(lam.part(i), 0);

  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == lam.rows()) {
      std::vector<int> mono(nvars, 0);
      for (const auto& row : grid)
        for (int v : row) ++mono[subset[v - 1]];
      out.add_term(mono, Rat(1));
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == lam.part(r)) { nr = r + 1; nc = 0; }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);       // weakly increasing rows
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);   // strictly increasing cols
    for (int v = lo; v <= m; ++v) {
      grid[r][c] = v;
      self(self, nr, nc);
    }
    grid[r][c] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

inline MultiPoly<Rat> schur(const Young& lam, std::size_t nvars) {
  std::vector<std::size_t> all(nvars);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return schur_on_subset(lam, nvars, all);
}

namespace detail {
template <class C>
MultiPoly<C> poly_det(const std::vector<std::vector<MultiPoly<C>>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  if (n == 1) return m[0][0];
  MultiPoly<C> acc(m[0][0].nvars());
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<MultiPoly<C>>> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    MultiPoly<C> t = m[i][0] * poly_det(minor);
    acc = (i % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}
}  // namespace detail

// Bialternant formula: s_lam = det(x_i^{lam_j + n - j}) / det(x_i^{n - j}),
// the denominator being the Vandermonde product of the (x_i - x_j), i < j.
inline MultiPoly<Rat> schur_bialternant(const Young& lam, std::size_t nvars) {
  const int n = static_cast<int>(nvars);
  if (lam.rows() > n) return MultiPoly<Rat>(nvars);
  if (n == 0) return MultiPoly<Rat>::one(0);
  std::vector<std::vector<MultiPoly<Rat>>> m(n, std::vector<MultiPoly<Rat>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = MultiPoly<Rat>::variable(nvars, i, lam.part(j) + n - 1 - j);
  MultiPoly<Rat> num = detail::poly_det(m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) num = num.divide_by_linear(i, j);
  return num;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficients by expanding s_lam * s_mu in enough
// variables and peeling leading terms. The lex-greatest exponent vector of a
// symmetric polynomial is a partition, and it is the leading term of its
// Schur polynomial, so repeated subtraction terminates.
inline std::map<Young, long> lr_coeffs(const Young& lam, const Young& mu) {
  const std::size_t n = std::max(1, lam.size() + mu.size());
  MultiPoly<Rat> p = schur(lam, n) * schur(mu, n);
  std::map<Young, long> out;
  while (!p.is_zero()) {
    const auto& lead = *p.terms().rbegin();
    std::vector<int> parts = lead.first;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
      if (parts[i] < parts[i + 1])
        throw std::logic_error("lr_coeffs: leading term is not a partition");
    Young nu(parts);
    const Rat& c = lead.second;
    if (c.get_den() != 1) throw std::logic_error("lr_coeffs: non-integer coefficient");
    long ci = c.get_num().get_si();
    p -= schur(nu, n).scaled(c);
    out[nu] += ci;
    if (out[nu] == 0) out.erase(nu);
  }
  return out;
}

inline long lr_coeff(const Young& lam, const Young& mu, const Young& nu) {
  auto m = lr_coeffs(lam, mu);
  auto it = m.find(nu);
  return it == m.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// Alphabet-splitting identities. Alphabets are encoded as consecutive index
// blocks X = [0, nx), Y = [nx, nx+ny), Z = [nx+ny, nx+ny+nz) of one global
// variable space; Schur polynomials on a subset use schur_on_subset.

namespace detail {
inline std::vector<std::size_t> iota_block(std::size_t from, std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}
inline std::vector<std::size_t> join(std::vector<std::size_t> a,
                                     const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
}  // namespace detail

// s_lam(X u Z) = sum c^lam_{alpha beta} s_alpha(X) s_beta(Z)
inline bool schur_union_expansion_holds(const Young& lam, std::size_t nx, std::size_t nz) {
  const std::size_t n = nx + nz;
  auto X = detail::iota_block(0, nx);
  auto Z = detail::iota_block(nx, nz);
  MultiPoly<Rat> lhs = schur_on_subset(lam, n, detail::join(X, Z));
  MultiPoly<Rat> rhs(n);
  for (const Young& alpha : subdiagrams(lam))
    for (const Young& beta : subdiagrams(lam)) {
      if (alpha.size() + beta.size() != lam.size()) continue;
      long c = lr_coeff(alpha, beta, lam);
      if (c == 0) continue;
      rhs += (schur_on_subset(alpha, n, X) * schur_on_subset(beta, n, Z)).scaled(Rat(c));
    }
  return lhs == rhs;
}

// s_lam(X) = sum c^lam_{alpha beta} (-1)^{|beta|} s_alpha(X u Z) s_{beta^t}(Z)
inline bool schur_restriction_holds(const Young& lam, std::size_t nx, std::size_t nz) {
  const std::size_t n = nx + nz;
  auto X = detail::iota_block(0, nx);
  auto Z = detail::iota_block(nx, nz);
  auto XZ = detail::join(X, Z);
  MultiPoly<Rat> lhs = schur_on_subset(lam, n, X);
  MultiPoly<Rat> rhs(n);
  for (const Young& alpha : subdiagrams(lam))
    for (const Young& beta : subdiagrams(lam)) {
      if (alpha.size() + beta.size() != lam.size()) continue;
      long c = lr_coeff(alpha, beta, lam);
      if (c == 0) continue;
      Rat sign = (beta.size() % 2 == 0) ? Rat(c) : Rat(-c);
      rhs += (schur_on_subset(alpha, n, XZ) * schur_on_subset(transpose(beta), n, Z))
                 .scaled(sign);
    }
  return lhs == rhs;
}

// sum (-1)^{|beta|} c^lam_{alpha beta} s_alpha(X) s_{beta^t}(Y)
//   = sum (-1)^{|beta|} c^lam_{alpha beta} s_alpha(X u Z) s_{beta^t}(Y u Z)
inline bool schur_stability_holds(const Young& lam, std::size_t nx, std::size_t ny,
                                  std::size_t nz) {
  const std::size_t n = nx + ny + nz;
  auto X = detail::iota_block(0, nx);
  auto Y = detail::iota_block(nx, ny);
  auto Z = detail::iota_block(nx + ny, nz);
  auto XZ = detail::join(X, Z);
  auto YZ = detail::join(Y, Z);
  MultiPoly<Rat> lhs(n), rhs(n);
  for (const Young& alpha : subdiagrams(lam))
    for (const Young& beta : subdiagrams(lam)) {
      if (alpha.size() + beta.size() != lam.size()) continue;
      long c = lr_coeff(alpha, beta, lam);
      if (c == 0) continue;
      Rat sign = (beta.size() % 2 == 0) ? Rat(c) : Rat(-c);
      Young bt = transpose(beta);
      lhs += (schur_on_subset(alpha, n, X) * schur_on_subset(bt, n, Y)).scaled(sign);
      rhs += (schur_on_subset(alpha, n, XZ) * schur_on_subset(bt, n, YZ)).scaled(sign);
    }
  return lhs == rhs;
}

// sum_{alpha in T(a,b)} (-1)^{|dual(alpha)|} s_alpha(X) s_{dual(alpha)}(Y)
// is unchanged when a common alphabet Z is appended to both X and Y.
inline bool dual_pairing_stability_holds(const BoxBound& bound, std::size_t nx,
                                         std::size_t ny, std::size_t nz) {
  const std::size_t n = nx + ny + nz;
  auto X = detail::iota_block(0, nx);
  auto Y = detail::iota_block(nx, ny);
  auto Z = detail::iota_block(nx + ny, nz);
  auto XZ = detail::join(X, Z);
  auto YZ = detail::join(Y, Z);
  MultiPoly<Rat> lhs(n), rhs(n);
  for (const Young& alpha : all_in_box(bound)) {
    Young d = dual(alpha, bound);
    Rat sign = (d.size() % 2 == 0) ? Rat(1) : Rat(-1);
    lhs += (schur_on_subset(alpha, n, X) * schur_on_subset(d, n, Y)).scaled(sign);
    rhs += (schur_on_subset(alpha, n, XZ) * schur_on_subset(d, n, YZ)).scaled(sign);
  }
  return lhs == rhs;
}

// Bundle of all alphabet-splitting identities for one instance.
inline bool schur_alphabet_identities(const Young& lam, std::size_t nx, std::size_t ny,
                                      std::size_t nz, const BoxBound& bound) {
  return schur_union_expansion_holds(lam, nx, nz) &&
         schur_restriction_holds(lam, nx, nz) &&
         schur_stability_holds(lam, nx, ny, nz) &&
         dual_pairing_stability_holds(bound, nx, ny, nz);
}

}  // namespace glzero::symfunc
