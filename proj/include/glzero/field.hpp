#pragma once
// Exact scalar fields: arbitrary-precision rationals (default) and a prime
// field F_p selectable at run time. Both satisfy the small interface the
// generic linear algebra needs: +,-,*,/, ==, is_zero, inv, from_int.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glzero {

using Rat = mpq_class;

inline std::string to_string(const Rat& x) { return x.get_str(); }

// Prime field with a process-wide modulus, set once before use (the CLI sets
// it from --char; tests set it explicitly). Elements are stored reduced.
struct Fp {
  static inline std::uint64_t p = 0;

  static void set_modulus(std::uint64_t prime) {
    if (prime < 2) throw std::invalid_argument("Fp modulus must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= prime; ++d)
      if (prime % d == 0) throw std::invalid_argument("Fp modulus must be prime");
    p = prime;
  }

  std::uint64_t v = 0;

  Fp() = default;
  Fp(long long x) {
    if (p == 0) throw std::logic_error("Fp used before set_modulus");
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    v = static_cast<std::uint64_t>(r);
  }
  explicit Fp(const Rat& x) {
    Fp num(0), den(0);
    num.v = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
    den.v = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
    if (den.v == 0) throw std::domain_error("rational has denominator divisible by p");
    *this = num / den;
  }

  friend Fp operator+(Fp a, Fp b) { Fp r; r.v = (a.v + b.v) % p; return r; }
  friend Fp operator-(Fp a, Fp b) { Fp r; r.v = (a.v + p - b.v) % p; return r; }
  friend Fp operator-(Fp a) { Fp r; r.v = a.v == 0 ? 0 : p - a.v; return r; }
  friend Fp operator*(Fp a, Fp b) {
    Fp r;
    r.v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % p);
    return r;
  }
  Fp inv() const {
    if (v == 0) throw std::domain_error("division by zero in Fp");
    // Fermat: v^(p-2) mod p.
    std::uint64_t e = p - 2;
    Fp base = *this, acc; acc.v = 1;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

inline std::string to_string(const Fp& x) { return std::to_string(x.v); }

// Uniform access used by templated code.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long long n) { return Rat(static_cast<long>(n)); }
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
  static Rat inv(const Rat& x) { return Rat(1) / x; }
  static std::string str(const Rat& x) { return x.get_str(); }
};

template <>
struct FieldOps<Fp> {
  static Fp zero() { return Fp(0); }
  static Fp one() { return Fp(1); }
  static Fp from_int(long long n) { return Fp(n); }
  static bool is_zero(const Fp& x) { return x.v == 0; }
  static Fp inv(const Fp& x) { return x.inv(); }
  static std::string str(const Fp& x) { return std::to_string(x.v); }
};

}  // namespace glzero
