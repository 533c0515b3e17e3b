#pragma once
// Univariate Laurent polynomials K[q, q^-1] with exact coefficients.
// Terms are kept sorted by exponent with no stored zero coefficient, so
// equality is structural. This ring is the PID over which all graded
// presentations and normal forms are computed.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glzero/field.hpp"

namespace glzero {

template <class K>
class Laurent {
 public:
  using Term = std::pair<int, K>;  // (exponent, coefficient)

  Laurent() = default;
  Laurent(long long c) {  // NOLINT: implicit from integers is convenient
    K v = FieldOps<K>::from_int(c);
    if (!FieldOps<K>::is_zero(v)) terms_.emplace_back(0, v);
  }
  explicit Laurent(const K& c) {
    if (!FieldOps<K>::is_zero(c)) terms_.emplace_back(0, c);
  }

  static Laurent q_power(int e, K c = FieldOps<K>::one()) {
    Laurent r;
    if (!FieldOps<K>::is_zero(c)) r.terms_.emplace_back(e, std::move(c));
    return r;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exp() const { require_nonzero(); return terms_.front().first; }
  int max_exp() const { require_nonzero(); return terms_.back().first; }
  int span() const { return max_exp() - min_exp(); }
  std::size_t term_count() const { return terms_.size(); }

  // Single term with coefficient that has an inverse => unit of K[q,q^-1].
  bool is_unit() const { return terms_.size() == 1; }

  K coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return FieldOps<K>::zero();
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.push_back(*ib++);
      } else {
        K c = ia->second + ib->second;
        if (!FieldOps<K>::is_zero(c)) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia; ++ib;
      }
    }
    return r;
  }
  friend Laurent operator-(const Laurent& a) {
    Laurent r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
    std::vector<Term> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        acc.emplace_back(ta.first + tb.first, ta.second * tb.second);
    std::sort(acc.begin(), acc.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    Laurent r;
    for (auto& t : acc) {
      if (!r.terms_.empty() && r.terms_.back().first == t.first) {
        r.terms_.back().second += t.second;
        if (FieldOps<K>::is_zero(r.terms_.back().second)) r.terms_.pop_back();
      } else if (!FieldOps<K>::is_zero(t.second)) {
        r.terms_.push_back(std::move(t));
      }
    }
    return r;
  }
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

  // this * c * q^e
  Laurent scaled(int e, const K& c) const {
    Laurent r;
    if (FieldOps<K>::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first + e, t.second * c);
    return r;
  }
  Laurent shifted(int e) const { return scaled(e, FieldOps<K>::one()); }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // q -> 1/q.
  Laurent bar() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      r.terms_.emplace_back(-it->first, it->second);
    return r;
  }

  K eval_at_one() const {
    K s = FieldOps<K>::zero();
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  // Evaluate at a nonzero field element.
  K eval(const K& q0) const {
    if (FieldOps<K>::is_zero(q0)) throw std::domain_error("Laurent eval at 0");
    if (terms_.empty()) return FieldOps<K>::zero();
    // Horner over the exponent gaps, then divide by q0^{-min_exp} if needed.
    K acc = FieldOps<K>::zero();
    int prev = terms_.back().first;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      for (int e = prev; e > it->first; --e) acc *= q0;
      acc += it->second;
      prev = it->first;
    }
    int m = terms_.front().first;
    if (m > 0) {
      for (int e = 0; e < m; ++e) acc *= q0;
    } else if (m < 0) {
      K d = FieldOps<K>::one();
      for (int e = 0; e < -m; ++e) d *= q0;
      acc = acc / d;
    }
    return acc;
  }

  // The unique associate that is monic with minimal exponent 0; also returns
  // the unit u with *this == u * normal.
  struct Normalized {
    Laurent unit;
    Laurent normal;
  };
  Normalized normalized() const {
    if (is_zero()) return {Laurent(), Laurent()};
    const K& lead = terms_.back().second;
    Laurent unit = q_power(min_exp(), lead);
    Laurent normal = scaled(-min_exp(), FieldOps<K>::inv(lead));
    return {std::move(unit), std::move(normal)};
  }

  // Multiplicity of the root q = 1 (0 for units and anything not divisible
  // by q-1). Drives the Bockstein page bookkeeping.
  int valuation_at_one() const {
    if (is_zero()) throw std::domain_error("valuation of 0");
    Laurent qm1 = q_power(1) - Laurent(1);
    Laurent r = *this;
    int v = 0;
    while (true) {
      auto [quot, rem] = divmod(r, qm1);
      if (!rem.is_zero()) return v;
      r = quot;
      ++v;
    }
  }

  // Euclidean division: a = b*c + r with span(r) < span(b) (norm = span+1).
  static std::pair<Laurent, Laurent> divmod(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("Laurent division by zero");
    Laurent c, r = a;
    const K lead_inv = FieldOps<K>::inv(b.terms_.back().second);
    const int bspan = b.span();
    while (!r.is_zero() && r.span() >= bspan) {
      if (bspan == 0) {  // b is a unit: divides exactly
        c += r.scaled(-b.max_exp(), lead_inv);
        r = Laurent();
        break;
      }
      K f = r.terms_.back().second * lead_inv;
      int e = r.max_exp() - b.max_exp();
      Laurent t = q_power(e, std::move(f));
      c += t;
      r -= t * b;
    }
    return {std::move(c), std::move(r)};
  }

  static bool divides(const Laurent& d, const Laurent& a) {
    if (a.is_zero()) return true;
    if (d.is_zero()) return false;
    return divmod(a, d).second.is_zero();
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = FieldOps<K>::str(t.second);
      bool neg = !c.empty() && c[0] == '-';
      if (first) {
        if (neg) { os << "-"; c = c.substr(1); }
      } else {
        os << (neg ? " - " : " + ");
        if (neg) c = c.substr(1);
      }
      first = false;
      bool unit_coeff = (c == "1");
      if (t.first == 0) {
        os << c;
      } else {
        if (!unit_coeff) os << c << "*";
        os << "q";
        if (t.first != 1) os << "^" << t.first;
      }
    }
    return os.str();
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("zero Laurent polynomial has no degree");
  }
  std::vector<Term> terms_;
};

using LaurentQ = Laurent<Rat>;

// Quantum integer [k] = (q^k - q^-k)/(q - q^-1) = q^{k-1} + q^{k-3} + ... + q^{1-k}.
template <class K = Rat>
Laurent<K> quantum_int(int k) {
  Laurent<K> r;
  if (k < 0) throw std::invalid_argument("quantum_int of negative k");
  for (int e = -(k - 1); e <= k - 1; e += 2) r += Laurent<K>::q_power(e);
  return r;
}

// Quantum binomial [n choose k] = [n]!/([k]![n-k]!), a genuine Laurent
// polynomial, invariant under q -> 1/q.
template <class K = Rat>
Laurent<K> quantum_binom(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("quantum_binom out of range");
  Laurent<K> num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= quantum_int<K>(n - i);
    den *= quantum_int<K>(i + 1);
  }
  auto [c, r] = Laurent<K>::divmod(num, den);
  if (!r.is_zero()) throw std::logic_error("quantum binomial division not exact");
  return c;
}

}  // namespace glzero
