#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace bezout {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt abs_int(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// Floor division/modulus. cpp_int's operator/ truncates toward zero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_mod(const BigInt& a, const BigInt& b) {
  return a - floor_div(a, b) * b;
}

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

// g = a*x + b*y with g = gcd(a, b) >= 0.
struct ExtendedGcd {
  BigInt g, x, y;
};

inline ExtendedGcd xgcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    BigInt x2 = x0 - q * x1;
    BigInt y2 = y0 - q * y1;
    x0 = std::move(x1);
    x1 = std::move(x2);
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return {a, x0, y0};
}

// Modular inverse of a mod m, gcd(a, m) = 1 assumed.
inline BigInt inv_mod(const BigInt& a, const BigInt& m) {
  auto e = xgcd(floor_mod(a, m), m);
  return floor_mod(e.x, m);
}

// Distinct prime factors by trial division; moduli here are desk scale.
inline std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> ps;
  if (n < 0) n = -n;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Nearest integer to p/q (q > 0); ties round up.
inline BigInt nearest_int(const BigInt& p, const BigInt& q) {
  return floor_div(2 * p + q, 2 * q);
}

// Nearest odd integer to p/q (q > 0); ties round toward the larger value.
inline BigInt nearest_odd(const BigInt& p, const BigInt& q) {
  return 2 * floor_div(p, 2 * q) + 1;
}

}  // namespace bezout
