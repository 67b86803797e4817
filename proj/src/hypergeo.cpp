#include "frobtrace/hypergeo.hpp"

#include <string>

namespace frobtrace {

namespace {

std::int64_t reduce(std::int64_t m, std::int64_t n) { return ((m % n) + n) % n; }

void check_shape(const HypergeoParams& params) {
  if (params.numerators.empty() ||
      params.numerators.size() != params.denominators.size() + 1) {
    throw Error(ErrorCode::BadParameters,
                "hypergeometric series needs n+1 numerator and n denominator characters, got " +
                    std::to_string(params.numerators.size()) + " and " +
                    std::to_string(params.denominators.size()));
  }
}

ComplexValue binom_lookup(const GaussTable& table, std::int64_t m, std::int64_t n) {
  if (reduce(m - n, table.field().order()) == 0) return binom(table.characters(), m, n);
  return binom_from_gauss(table, m, n);
}

template <typename Binom>
ComplexValue sum_series(const Characters& chars, const HypergeoParams& params, Binom&& binomial) {
  check_shape(params);
  const FieldContext& ctx = chars.field();
  if (params.argument.is_zero()) return {0.0, 0.0};
  const std::int64_t n = ctx.order();
  const std::int64_t log_x = ctx.dlog(params.argument.index());
  ComplexValue acc{0.0, 0.0};
  for (std::int64_t i = 0; i < n; ++i) {
    ComplexValue term = binomial(params.numerators[0] + i, i);
    for (std::size_t k = 0; k < params.denominators.size(); ++k) {
      term *= binomial(params.numerators[k + 1] + i, params.denominators[k] + i);
    }
    acc += term * chars.omega(i * log_x % n);
  }
  return acc * (static_cast<double>(ctx.q()) / static_cast<double>(n));
}

}  // namespace

ComplexValue eval_series(const GaussTable& table, const HypergeoParams& params) {
  return sum_series(table.characters(), params, [&](std::int64_t m, std::int64_t k) {
    return binom_lookup(table, m, k);
  });
}

ComplexValue eval_series_direct(const Characters& chars, const HypergeoParams& params) {
  return sum_series(chars, params,
                    [&](std::int64_t m, std::int64_t k) { return binom(chars, m, k); });
}

ComplexValue eval_2f1(const GaussTable& table, std::int64_t a, std::int64_t b, std::int64_t c,
                      const FieldElement& x) {
  if (x.is_zero()) return {0.0, 0.0};
  const FieldContext& ctx = table.field();
  const Characters& chars = table.characters();
  const std::int64_t n = ctx.order();
  const double q = static_cast<double>(ctx.q());
  a = reduce(a, n);
  b = reduce(b, n);
  c = reduce(c, n);
  const std::int64_t log_x = ctx.dlog(x.index());
  const std::int64_t log_minus_one = ctx.dlog(ctx.neg(1));
  const bool first_direct = a == 0;
  const bool second_direct = b == c;
  const ComplexValue g_a = table[a];
  const ComplexValue g_bc = table[b - c];

  ComplexValue acc{0.0, 0.0};
  for (std::int64_t i = 0; i < n; ++i) {
    // (T^(a+i) over T^i) and (T^(b+i) over T^(c+i)) via G_m G_-n T^n(-1) / (G_{m-n} q)
    const ComplexValue first =
        first_direct ? binom(chars, a + i, i)
                     : table[a + i] * table[-i] * chars.omega(i * log_minus_one) / (g_a * q);
    const ComplexValue second =
        second_direct
            ? binom(chars, b + i, c + i)
            : table[b + i] * table[-c - i] * chars.omega((c + i) * log_minus_one) / (g_bc * q);
    acc += first * second * chars.omega(i * log_x % n);
  }
  return acc * (q / static_cast<double>(n));
}

ComplexValue evaluate(const GaussTable& table, const Scaled2F1& f) {
  return f.scale * eval_2f1(table, f.a, f.b, f.c, f.x);
}

Scaled2F1 apply_one_minus_x(const Characters& chars, const Scaled2F1& f) {
  const FieldContext& ctx = chars.field();
  if (f.x.is_zero() || f.x.index() == 1) {
    throw Error(ErrorCode::BadArgument, "the 1-x transformation requires x != 0, 1");
  }
  const std::int64_t n = ctx.order();
  Scaled2F1 out;
  out.scale = f.scale * chars.mult(f.a, ctx.neg(1));
  out.a = reduce(f.a, n);
  out.b = reduce(f.b, n);
  out.c = reduce(f.a + f.b - f.c, n);
  out.x = ctx.one() - f.x;
  return out;
}

Scaled2F1 apply_one_over_x(const Characters& chars, const Scaled2F1& f) {
  const FieldContext& ctx = chars.field();
  if (f.x.is_zero()) {
    throw Error(ErrorCode::BadArgument, "the 1/x transformation requires x != 0");
  }
  const std::int64_t n = ctx.order();
  Scaled2F1 out;
  out.scale = f.scale * chars.mult(f.a + f.b + f.c, ctx.neg(1)) * chars.mult(-f.a, f.x.index());
  out.a = reduce(f.a, n);
  out.b = reduce(f.a - f.c, n);
  out.c = reduce(f.a - f.b, n);
  out.x = f.x.inv();
  return out;
}

IdentityCheck transform_1_minus_x(const GaussTable& table, std::int64_t a, std::int64_t b,
                                  std::int64_t c, const FieldElement& x) {
  const Scaled2F1 source{{1.0, 0.0}, a, b, c, x};
  const Scaled2F1 image = apply_one_minus_x(table.characters(), source);
  IdentityCheck out;
  out.lhs = evaluate(table, source);
  out.rhs = evaluate(table, image);
  out.deviation = std::abs(out.lhs - out.rhs);
  return out;
}

IdentityCheck transform_1_over_x(const GaussTable& table, std::int64_t a, std::int64_t b,
                                 std::int64_t c, const FieldElement& x) {
  const Scaled2F1 source{{1.0, 0.0}, a, b, c, x};
  const Scaled2F1 image = apply_one_over_x(table.characters(), source);
  IdentityCheck out;
  out.lhs = evaluate(table, source);
  out.rhs = evaluate(table, image);
  out.deviation = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace frobtrace
