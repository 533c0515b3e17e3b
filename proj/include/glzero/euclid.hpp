#pragma once
// Euclidean-domain interface used by the generic Smith normal form, linear
// solvers and module machinery. Models: the integers (GMP), Laurent
// polynomials over a field, and fields themselves (trivial norm).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "glzero/field.hpp"
#include "glzero/laurent.hpp"

namespace glzero {

using Int = mpz_class;

template <class R>
struct Euclid;

// --- integers -------------------------------------------------------------
template <>
struct Euclid<Int> {
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
  static Int from_int(long long n) { return Int(static_cast<long>(n)); }
  static bool is_zero(const Int& a) { return sgn(a) == 0; }
  static bool is_unit(const Int& a) { return a == 1 || a == -1; }
  // Norm 0 iff zero; otherwise |a| (fits the generic pivot heuristics; the
  // comparison below avoids materializing huge values).
  static bool norm_less(const Int& a, const Int& b) { return cmp(abs(a), abs(b)) < 0; }
  // Least-absolute-remainder division: |r| <= |b|/2.
  static std::pair<Int, Int> divmod(const Int& a, const Int& b) {
    if (is_zero(b)) throw std::domain_error("integer division by zero");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // Floor remainder carries the sign of b; pulling it toward zero is the
    // same adjustment for either sign: a = (q+1)b + (r-b).
    if (cmp(2 * abs(r), abs(b)) > 0) { q += 1; r -= b; }
    return {q, r};
  }
  static Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  // a = unit * normal with normal >= 0 canonical.
  static std::pair<Int, Int> unit_and_normal(const Int& a) {
    if (sgn(a) < 0) return {Int(-1), -a};
    return {Int(1), a};
  }
  static Int inv_unit(const Int& u) { return u; }  // only +-1
  static std::string str(const Int& a) { return a.get_str(); }
  static Int eval_at_one(const Int& a) = delete;  // not a specializable ring
};

// --- Laurent polynomials over a field --------------------------------------
template <class K>
struct Euclid<Laurent<K>> {
  using R = Laurent<K>;
  static R zero() { return R(); }
  static R one() { return R(1); }
  static R from_int(long long n) { return R(n); }
  static bool is_zero(const R& a) { return a.is_zero(); }
  static bool is_unit(const R& a) { return !a.is_zero() && a.is_unit(); }
  static bool norm_less(const R& a, const R& b) {
    // norm = span+1 for nonzero, 0 for zero
    auto n = [](const R& x) { return x.is_zero() ? 0 : x.span() + 1; };
    return n(a) < n(b);
  }
  static std::pair<R, R> divmod(const R& a, const R& b) { return R::divmod(a, b); }
  static R exact_div(const R& a, const R& b) {
    auto [q, r] = R::divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: not divisible");
    return q;
  }
  static std::pair<R, R> unit_and_normal(const R& a) {
    auto n = a.normalized();
    return {n.unit, n.normal};
  }
  static R inv_unit(const R& u) {
    if (!is_unit(u)) throw std::domain_error("inv_unit of non-unit");
    const auto& t = u.terms()[0];
    return R::q_power(-t.first, FieldOps<K>::inv(t.second));
  }
  static std::string str(const R& a) { return a.str(); }
};

// --- fields (trivial Euclidean structure) ----------------------------------
template <class K>
struct FieldEuclid {
  static K zero() { return FieldOps<K>::zero(); }
  static K one() { return FieldOps<K>::one(); }
  static K from_int(long long n) { return FieldOps<K>::from_int(n); }
  static bool is_zero(const K& a) { return FieldOps<K>::is_zero(a); }
  static bool is_unit(const K& a) { return !is_zero(a); }
  static bool norm_less(const K& a, const K& b) {
    return (is_zero(a) ? 0 : 1) < (is_zero(b) ? 0 : 1);
  }
  static std::pair<K, K> divmod(const K& a, const K& b) {
    if (is_zero(b)) throw std::domain_error("field division by zero");
    return {a / b, zero()};
  }
  static K exact_div(const K& a, const K& b) { return a / b; }
  static std::pair<K, K> unit_and_normal(const K& a) {
    if (is_zero(a)) return {one(), zero()};
    return {a, one()};
  }
  static K inv_unit(const K& u) { return FieldOps<K>::inv(u); }
  static std::string str(const K& a) { return FieldOps<K>::str(a); }
};

template <>
struct Euclid<Rat> : FieldEuclid<Rat> {};
template <>
struct Euclid<Fp> : FieldEuclid<Fp> {};

template <class R>
R euclid_gcd(R a, R b) {
  using E = Euclid<R>;
  while (!E::is_zero(b)) {
    auto [q, r] = E::divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return E::unit_and_normal(a).second;
}

}  // namespace glzero
