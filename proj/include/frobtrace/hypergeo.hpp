#pragma once

#include <cstdint>
#include <vector>

#include "frobtrace/charsums.hpp"

namespace frobtrace {

// Character exponents for {}_{n+1}F_n(A_0 ... A_n; B_1 ... B_n | x), with
// T^k denoted by the exponent k mod q-1.
struct HypergeoParams {
  std::vector<std::int64_t> numerators;    // A_0 .. A_n
  std::vector<std::int64_t> denominators;  // B_1 .. B_n
  FieldElement argument;
};

// (q/(q-1)) sum_chi (A_0 chi over chi) prod_k (A_k chi over B_k chi) chi(x).
// Binomials come from Gauss sums where T^(m-n) is nontrivial and from direct
// Jacobi summation otherwise. BadParameters if the list lengths do not differ
// by one.
ComplexValue eval_series(const GaussTable& table, const HypergeoParams& params);

// Same series with every binomial taken from its Jacobi-sum definition.
// O(q^2 n); meant for cross-checking.
ComplexValue eval_series_direct(const Characters& chars, const HypergeoParams& params);

// 2F1(A, B; C | x), specialized loop.
ComplexValue eval_2f1(const GaussTable& table, std::int64_t a, std::int64_t b, std::int64_t c,
                      const FieldElement& x);

// scale * 2F1(a, b; c | x). Transformation images carry their prefactor in
// scale so a chain of rewrites can be evaluated and compared directly.
struct Scaled2F1 {
  ComplexValue scale{1.0, 0.0};
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  FieldElement x;
};

ComplexValue evaluate(const GaussTable& table, const Scaled2F1& f);

// 2F1(A, B; C | x) = A(-1) 2F1(A, B; AB/C | 1-x), x not in {0, 1}.
Scaled2F1 apply_one_minus_x(const Characters& chars, const Scaled2F1& f);
// 2F1(A, B; C | x) = ABC(-1) conj(A)(x) 2F1(A, A/C; A/B | 1/x), x != 0.
Scaled2F1 apply_one_over_x(const Characters& chars, const Scaled2F1& f);

// Both sides of the corresponding law for 2F1(A, B; C | x). BadArgument when
// x violates the hypothesis.
IdentityCheck transform_1_minus_x(const GaussTable& table, std::int64_t a, std::int64_t b,
                                  std::int64_t c, const FieldElement& x);
IdentityCheck transform_1_over_x(const GaussTable& table, std::int64_t a, std::int64_t b,
                                 std::int64_t c, const FieldElement& x);

}  // namespace frobtrace
