#include "frobtrace/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace frobtrace {

ComplexValue root_of_unity(std::int64_t k, std::uint32_t n) {
  const std::int64_t nn = n;
  const std::int64_t r = ((k % nn) + nn) % nn;
  if (r == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

RootsOfUnity::RootsOfUnity(std::uint32_t n) : roots_(n) {
  for (std::uint32_t k = 0; k < n; ++k) roots_[k] = root_of_unity(k, n);
}

Characters::Characters(const FieldContext& ctx)
    : ctx_(&ctx), n_(ctx.order()), unit_(ctx.order()), additive_(ctx.p()) {}

ComplexValue mult_char_eval(const FieldContext& ctx, std::int64_t m, const FieldElement& x) {
  if (x.is_zero()) return {0.0, 0.0};
  const std::int64_t n = ctx.order();
  const std::int64_t k = ((m % n) + n) % n * ctx.dlog(x.index()) % n;
  return root_of_unity(k, ctx.order());
}

ComplexValue add_char_eval(const FieldContext& ctx, const FieldElement& x) {
  return root_of_unity(ctx.trace(x.index()), ctx.p());
}

ComplexValue indicator_sum(const FieldContext& ctx, const FieldElement& v) {
  const Characters chars(ctx);
  ComplexValue sum{0.0, 0.0};
  for (std::uint32_t z = 0; z < ctx.q(); ++z) sum += chars.theta(ctx.mul(z, v.index()));
  return sum;
}

IdentityCheck theta_expansion_check(const Characters& chars,
                                    std::span<const ComplexValue> gauss_values,
                                    const FieldElement& alpha) {
  const FieldContext& ctx = chars.field();
  if (alpha.is_zero()) {
    throw Error(ErrorCode::ZeroArgument, "theta expansion holds only on F_q^*");
  }
  const std::uint32_t n = ctx.order();
  if (gauss_values.size() != n) {
    throw Error(ErrorCode::BadParameters,
                "expected " + std::to_string(n) + " Gauss sums, got " +
                    std::to_string(gauss_values.size()));
  }
  IdentityCheck out;
  out.lhs = chars.theta(alpha.index());
  for (std::uint32_t m = 0; m < n; ++m) {
    out.rhs += gauss_values[(n - m) % n] * chars.mult(m, alpha.index());
  }
  out.rhs /= static_cast<double>(n);
  out.deviation = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace frobtrace
