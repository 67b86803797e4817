#pragma once

// Brute-force references used only by tests. Nothing here goes through the
// dlog tables, the Gauss table, or the hypergeometric code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "frobtrace/field.hpp"

namespace frobtrace::oracle {

// 1 + #{(x, y) in F_q^2 : y^2 = x^3 + ax + b}, O(q^2), polynomial arithmetic only.
inline std::uint64_t count_points_pairs(const FieldContext& ctx, std::uint32_t a, std::uint32_t b) {
  std::uint64_t count = 1;
  for (std::uint32_t x = 0; x < ctx.q(); ++x) {
    const std::uint32_t x3 = ctx.mul_poly(ctx.mul_poly(x, x), x);
    const std::uint32_t rhs = ctx.add(ctx.add(x3, ctx.mul_poly(a, x)), b);
    for (std::uint32_t y = 0; y < ctx.q(); ++y) {
      if (ctx.mul_poly(y, y) == rhs) ++count;
    }
  }
  return count;
}

// Legendre symbol mod an odd prime by Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  std::int64_t r = 1, base = a;
  for (std::int64_t k = (p - 1) / 2; k > 0; k >>= 1) {
    if (k & 1) r = r * base % p;
    base = base * base % p;
  }
  return r == 1 ? 1 : -1;
}

// Quadratic Gauss sum over a prime field, sum_x (x/p) exp(2 pi i x / p).
inline std::complex<double> quadratic_gauss_prime(std::int64_t p) {
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t x = 1; x < p; ++x) {
    acc += static_cast<double>(legendre(x, p)) *
           std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi * static_cast<double>(x) /
                                                  static_cast<double>(p)));
  }
  return acc;
}

// T^m(x) straight from a multiplicative search for the exponent: g^k = x.
inline std::complex<double> mult_char_by_search(const FieldContext& ctx, std::int64_t m,
                                                std::uint32_t x) {
  if (x == 0) return {0.0, 0.0};
  const std::uint32_t g = ctx.generator().index();
  std::uint32_t cur = 1;
  std::int64_t k = 0;
  while (cur != x) {
    cur = ctx.mul_poly(cur, g);
    ++k;
  }
  const double n = static_cast<double>(ctx.order());
  return std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi *
                                                static_cast<double>((m % ctx.order()) * k % ctx.order()) / n));
}

}  // namespace frobtrace::oracle
