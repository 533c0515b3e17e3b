#pragma once
// Multivariate polynomials over an exact coefficient ring, with dense
// exponent vectors as monomials. Coefficient ring access goes through
// Euclid<C>, so C can be a field, the integers, or Laurent polynomials.
//
// The alphabets here are small (pigment variables, web edge variables), so a
// sorted map keyed by exponent vector is both canonical and fast enough.

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "glzero/euclid.hpp"

namespace glzero {

template <class C>
class MultiPoly {
 public:
  using Mono = std::vector<int>;  // exponents, one per variable

  MultiPoly() : n_(0) {}
  explicit MultiPoly(std::size_t nvars) : n_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const C& c) {
    MultiPoly p(nvars);
    if (!Euclid<C>::is_zero(c)) p.terms_[Mono(nvars, 0)] = c;
    return p;
  }
  static MultiPoly one(std::size_t nvars) { return constant(nvars, Euclid<C>::one()); }
  static MultiPoly variable(std::size_t nvars, std::size_t i, int power = 1,
                            const C& c = Euclid<C>::one()) {
    if (i >= nvars) throw std::out_of_range("MultiPoly::variable index");
    MultiPoly p(nvars);
    if (!Euclid<C>::is_zero(c)) {
      Mono m(nvars, 0);
      m[i] = power;
      p.terms_[std::move(m)] = c;
    }
    return p;
  }

  std::size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, C>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  C coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Euclid<C>::zero() : it->second;
  }
  C constant_coeff() const { return coeff(Mono(n_, 0)); }

  void add_term(const Mono& m, const C& c) {
    if (m.size() != n_) throw std::invalid_argument("MultiPoly::add_term arity");
    if (Euclid<C>::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (Euclid<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  int total_degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (int e : m) t += e;
      if (t > d) d = t;
    }
    return d;
  }
  int degree_in(std::size_t i) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
      if (m[i] > d) d = m[i];
    return d;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [m, c] : r.terms_) c = Euclid<C>::zero() - c;
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MultiPoly scaled(const C& c) const {
    MultiPoly r(n_);
    if (Euclid<C>::is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Full evaluation.
  C eval(const std::vector<C>& xs) const {
    if (xs.size() != n_) throw std::invalid_argument("MultiPoly::eval arity");
    C acc = Euclid<C>::zero();
    for (const auto& [m, c] : terms_) {
      C t = c;
      for (std::size_t i = 0; i < n_; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * xs[i];
      acc = acc + t;
    }
    return acc;
  }

  // Substitute variable i by a polynomial (same alphabet).
  MultiPoly subst(std::size_t i, const MultiPoly& value) const {
    check_arity(value);
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) {
      Mono base = m;
      int e = base[i];
      base[i] = 0;
      MultiPoly t(n_);
      t.terms_[base] = c;
      for (int k = 0; k < e; ++k) t *= value;
      r += t;
    }
    return r;
  }

  MultiPoly swapped(std::size_t i, std::size_t j) const {
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) {
      Mono s = m;
      std::swap(s[i], s[j]);
      r.add_term(s, c);
    }
    return r;
  }

  bool symmetric_in(const std::vector<std::size_t>& vars) const {
    for (std::size_t t = 0; t + 1 < vars.size(); ++t)
      if (swapped(vars[t], vars[t + 1]) != *this) return false;
    return true;
  }

  // Map coefficients through f into another ring.
  template <class D, class F>
  MultiPoly<D> map_coeffs(F&& f) const {
    MultiPoly<D> r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  // Exact division by (x_i - x_j). Horner in x_i:
  //   P = sum_d A_d x_i^d,  Q_{D-1} = A_D,  Q_{d-1} = A_d + x_j Q_d,
  // with remainder A_0 + x_j Q_0 = P|_{x_i = x_j}, required to vanish.
  MultiPoly divide_by_linear(std::size_t i, std::size_t j) const {
    if (i == j || i >= n_ || j >= n_)
      throw std::invalid_argument("divide_by_linear variable indices");
    int D = degree_in(i);
    if (D == 0) {
      if (!is_zero()) throw std::domain_error("divide_by_linear: not divisible");
      return MultiPoly(n_);
    }
    std::vector<MultiPoly> A(D + 1, MultiPoly(n_));
    for (const auto& [m, c] : terms_) {
      Mono base = m;
      int e = base[i];
      base[i] = 0;
      A[e].add_term(base, c);
    }
    MultiPoly xj = variable(n_, j);
    std::vector<MultiPoly> Q(D, MultiPoly(n_));
    Q[D - 1] = A[D];
    for (int d = D - 1; d >= 1; --d) Q[d - 1] = A[d] + xj * Q[d];
    MultiPoly rem = A[0] + xj * Q[0];
    if (!rem.is_zero()) throw std::domain_error("divide_by_linear: not divisible");
    MultiPoly out(n_);
    for (int d = 0; d < D; ++d)
      for (const auto& [m, c] : Q[d].terms_) {
        Mono mm = m;
        mm[i] += d;
        out.add_term(mm, c);
      }
    return out;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << Euclid<C>::str(c) << ")";
      for (std::size_t i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
        if (m[i] != 1) os << "^" << m[i];
      }
    }
    return os.str();
  }

 private:
  void check_arity(const MultiPoly& b) const {
    if (n_ != b.n_) throw std::invalid_argument("MultiPoly arity mismatch");
  }
  std::size_t n_;
  std::map<Mono, C> terms_;
};

}  // namespace glzero
