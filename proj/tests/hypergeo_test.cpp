#include <gtest/gtest.h>

#include <cmath>

#include "frobtrace/elliptic.hpp"
#include "frobtrace/hypergeo.hpp"
#include "frobtrace/rng.hpp"
#include "oracles.hpp"

namespace frobtrace {
namespace {

struct Fixture {
  FieldPtr field;
  GaussTable table;

  Fixture(std::uint32_t p, std::uint32_t e) : field(build_field(p, e)), table(build_gauss_table(*field)) {}
};

HypergeoParams random_params(const FieldContext& ctx, SplitMix64& rng, std::size_t n) {
  HypergeoParams params;
  for (std::size_t k = 0; k <= n; ++k) params.numerators.push_back(static_cast<std::int64_t>(rng.below(ctx.order())));
  for (std::size_t k = 0; k < n; ++k) params.denominators.push_back(static_cast<std::int64_t>(rng.below(ctx.order())));
  params.argument = ctx.element(static_cast<std::uint32_t>(rng.below(ctx.q())));
  return params;
}

TEST(EvalSeries, ZeroArgumentIsExactlyZero) {
  const Fixture fx(13, 1);
  SplitMix64 rng(1);
  for (int i = 0; i < 20; ++i) {
    HypergeoParams params = random_params(*fx.field, rng, 1 + i % 3);
    params.argument = fx.field->zero();
    EXPECT_EQ(eval_series(fx.table, params), ComplexValue(0.0, 0.0));
    EXPECT_EQ(eval_series_direct(fx.table.characters(), params), ComplexValue(0.0, 0.0));
  }
  EXPECT_EQ(eval_2f1(fx.table, 1, 5, 6, fx.field->zero()), ComplexValue(0.0, 0.0));
}

TEST(EvalSeries, ShapeIsValidated) {
  const Fixture fx(13, 1);
  HypergeoParams params{{1, 2}, {3, 4}, fx.field->one()};
  try {
    eval_series(fx.table, params);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParameters);
  }
}

TEST(EvalSeries, WeierstrassInstanceAtThirteen) {
  // y^2 = x^3 + x + 1 over F_13: brute force gives trace -4, so
  // q T^3(a^3/27) 2F1(T, T^5; T^6 | -27b^2/(4a^3)) must round to +4.
  const Fixture fx(13, 1);
  const FieldContext& f = *fx.field;
  ASSERT_EQ(13 + 1 - static_cast<std::int64_t>(oracle::count_points_pairs(f, 1, 1)), -4);
  const FieldElement a = f.one(), b = f.one();
  const FieldElement x = -(f.from_int(27) * b * b) / (f.from_int(4) * a * a * a);
  const ComplexValue value = 13.0 * fx.table.characters().mult(3, (a * a * a / f.from_int(27)).index()) *
                             eval_series(fx.table, HypergeoParams{{1, 5}, {6}, x});
  EXPECT_NEAR(value.real(), 4.0, 1e-9);
  EXPECT_NEAR(value.imag(), 0.0, 1e-9);
}

TEST(EvalSeries, GaussPathMatchesJacobiPath) {
  const Fixture fx(13, 1);
  SplitMix64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const HypergeoParams params = random_params(*fx.field, rng, 1 + i % 2);
    EXPECT_LT(std::abs(eval_series(fx.table, params) - eval_series_direct(fx.table.characters(), params)),
              default_tolerance(13));
  }
}

TEST(EvalSeries, DegenerateBinomialsUseDirectSums) {
  // A_0 = trivial and A_1 = B_1 force the Jacobi fallback for every term.
  const Fixture fx(5, 2);
  for (std::uint32_t x = 0; x < 25; ++x) {
    const HypergeoParams params{{0, 7}, {7}, fx.field->element(x)};
    const ComplexValue direct = eval_series_direct(fx.table.characters(), params);
    EXPECT_LT(std::abs(eval_series(fx.table, params) - direct), 1e-9);
    EXPECT_LT(std::abs(eval_2f1(fx.table, 0, 7, 7, fx.field->element(x)) - direct), 1e-9);
  }
}

TEST(Eval2F1, SpecializedMatchesGeneral) {
  for (auto [p, e] : {std::pair{13u, 1u}, {5u, 2u}, {37u, 1u}}) {
    const Fixture fx(p, e);
    SplitMix64 rng(p);
    for (int i = 0; i < 30; ++i) {
      const HypergeoParams params = random_params(*fx.field, rng, 1);
      const ComplexValue general = eval_series(fx.table, params);
      const ComplexValue special = eval_2f1(fx.table, params.numerators[0], params.numerators[1],
                                            params.denominators[0], params.argument);
      EXPECT_LT(std::abs(general - special), 1e-9);
    }
  }
}

TEST(Eval2F1, LegendreFamilyPointCounts) {
  // q 2F1(phi, phi; eps | l) = -phi(-1) a(E_l) for y^2 = x(x-1)(x-l), l != 0, 1.
  for (auto [p, e] : {std::pair{13u, 1u}, {5u, 2u}, {7u, 1u}, {3u, 2u}}) {
    const Fixture fx(p, e);
    const FieldContext& f = *fx.field;
    const std::int64_t half = f.order() / 2;
    const double phi_minus_one = fx.table.characters().mult(half, f.neg(1)).real();
    for (std::uint32_t l = 2; l < f.q(); ++l) {
      // x(x-1)(x-l) = x^3 - (1+l) x^2 + l x: count by enumeration.
      std::int64_t points = 1;
      for (std::uint32_t x = 0; x < f.q(); ++x) {
        const std::uint32_t rhs = f.mul_poly(f.mul_poly(x, f.sub(x, 1)), f.sub(x, l));
        for (std::uint32_t y = 0; y < f.q(); ++y) points += f.mul_poly(y, y) == rhs;
      }
      const double trace = static_cast<double>(f.q()) + 1.0 - static_cast<double>(points);
      const ComplexValue value = static_cast<double>(f.q()) * eval_2f1(fx.table, half, half, 0, f.element(l));
      EXPECT_LT(std::abs(value - (-phi_minus_one * trace)), 1e-8) << "q = " << f.q() << ", l = " << l;
    }
  }
}

TEST(Transform, OneMinusXAllArgumentsAtThirteen) {
  const Fixture fx(13, 1);
  SplitMix64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const std::int64_t a = rng.below(12), b = rng.below(12), c = rng.below(12);
    for (std::uint32_t x = 2; x < 13; ++x) {
      EXPECT_LT(transform_1_minus_x(fx.table, a, b, c, fx.field->element(x)).deviation, default_tolerance(13));
    }
  }
}

TEST(Transform, OneOverXAllArgumentsAtThirteen) {
  const Fixture fx(13, 1);
  SplitMix64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const std::int64_t a = rng.below(12), b = rng.below(12), c = rng.below(12);
    for (std::uint32_t x = 1; x < 13; ++x) {
      EXPECT_LT(transform_1_over_x(fx.table, a, b, c, fx.field->element(x)).deviation, default_tolerance(13));
    }
  }
}

TEST(Transform, RandomInstancesAcrossFields) {
  for (std::uint32_t q : {13u, 25u, 37u, 49u, 61u, 73u, 97u, 109u, 121u, 169u}) {
    const auto [p, e] = *as_prime_power(q);
    const Fixture fx(p, e);
    SplitMix64 rng = substream(9, q, 0);
    for (int i = 0; i < 50; ++i) {
      const std::int64_t a = rng.below(q - 1), b = rng.below(q - 1), c = rng.below(q - 1);
      const FieldElement x = fx.field->element(static_cast<std::uint32_t>(2 + rng.below(q - 2)));
      EXPECT_LT(transform_1_minus_x(fx.table, a, b, c, x).deviation, default_tolerance(q));
      EXPECT_LT(transform_1_over_x(fx.table, a, b, c, x).deviation, default_tolerance(q));
    }
  }
}

TEST(Transform, ExcludedArguments) {
  const Fixture fx(13, 1);
  for (auto x : {fx.field->zero(), fx.field->one()}) {
    try {
      transform_1_minus_x(fx.table, 1, 2, 3, x);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadArgument);
    }
  }
  try {
    transform_1_over_x(fx.table, 1, 2, 3, fx.field->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadArgument);
  }
  EXPECT_NO_THROW(transform_1_over_x(fx.table, 1, 2, 3, fx.field->one()));
}

TEST(Transform, WeierstrassSeriesRewritesToJInvariantSeries) {
  for (std::uint32_t q : {13u, 25u, 37u, 49u}) {
    const auto [p, e] = *as_prime_power(q);
    const Fixture fx(p, e);
    const Characters& chars = fx.table.characters();
    SplitMix64 rng = substream(5, q, 1);
    for (int i = 0; i < 10; ++i) {
      const Curve curve = random_curve(*fx.field, rng);
      const Scaled2F1 source = weierstrass_trace_series(curve, chars);
      const Scaled2F1 step1 = apply_one_minus_x(chars, source);
      EXPECT_EQ(step1.c, 0);  // AB/C is trivial
      const Scaled2F1 step2 = apply_one_over_x(chars, step1);
      const Scaled2F1 target = j_invariant_trace_series(curve, chars);
      EXPECT_EQ(step2.a, target.a);
      EXPECT_EQ(step2.b, target.b);
      EXPECT_EQ(step2.c, target.c);
      EXPECT_EQ(step2.x, target.x);
      EXPECT_LT(std::abs(step2.scale - target.scale), 1e-9 * q);
      const double tol = default_tolerance(q);
      EXPECT_LT(std::abs(evaluate(fx.table, source) - evaluate(fx.table, step1)), tol);
      EXPECT_LT(std::abs(evaluate(fx.table, step1) - evaluate(fx.table, step2)), tol);
    }
  }
}

}  // namespace
}  // namespace frobtrace
