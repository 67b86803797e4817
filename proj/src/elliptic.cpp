#include "frobtrace/elliptic.hpp"

#include <cmath>
#include <string>

namespace frobtrace {

namespace {

std::uint32_t cubic_rhs(const FieldContext& ctx, std::uint32_t x, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t x3 = ctx.mul(ctx.mul(x, x), x);
  return ctx.add(ctx.add(x3, ctx.mul(a, x)), b);
}

FieldElement four_a_cubed(const Curve& curve) {
  const FieldContext& ctx = curve.field();
  return ctx.from_int(4) * curve.a.pow(3);
}

FieldElement delta_core(const Curve& curve) {
  const FieldContext& ctx = curve.field();
  return four_a_cubed(curve) + ctx.from_int(27) * curve.b.pow(2);
}

void require_congruence(const FieldContext& ctx) {
  if (ctx.q() % 12 != 1) {
    throw Error(ErrorCode::BadFieldCongruence,
                "q = " + std::to_string(ctx.q()) + " is not 1 mod 12, outside the trace formula");
  }
}

void require_nonsingular(const Curve& curve) {
  if (discriminant(curve).is_zero()) {
    throw Error(ErrorCode::SingularCurve, "discriminant vanishes, the curve is singular");
  }
}

TraceResult round_trace(ComplexValue value, std::uint32_t q, double tolerance) {
  if (tolerance < 0.0) tolerance = default_tolerance(q);
  TraceResult out;
  out.value = value;
  out.trace = std::llround(value.real());
  out.residual = std::abs(value - ComplexValue(static_cast<double>(out.trace), 0.0));
  if (!(out.residual <= tolerance)) {
    throw Error(ErrorCode::RoundingFailure,
                "trace value (" + std::to_string(value.real()) + ", " +
                    std::to_string(value.imag()) + ") is not within " + std::to_string(tolerance) +
                    " of an integer");
  }
  return out;
}

}  // namespace

Curve make_curve(const FieldContext& ctx, std::uint32_t a_index, std::uint32_t b_index) {
  return {ctx.element(a_index), ctx.element(b_index)};
}

Curve random_curve(const FieldContext& ctx, SplitMix64& rng) {
  if (ctx.p() == 2) {
    throw Error(ErrorCode::BadArgument, "every short Weierstrass curve is singular in characteristic 2");
  }
  for (;;) {
    const Curve curve{ctx.element(static_cast<std::uint32_t>(1 + rng.below(ctx.q() - 1))),
                      ctx.element(static_cast<std::uint32_t>(1 + rng.below(ctx.q() - 1)))};
    if (!discriminant(curve).is_zero()) return curve;
  }
}

FieldElement discriminant(const Curve& curve) {
  return curve.field().from_int(-16) * delta_core(curve);
}

FieldElement j_invariant(const Curve& curve) {
  if (discriminant(curve).is_zero()) {
    throw Error(ErrorCode::SingularCurve, "j-invariant undefined for a singular curve");
  }
  return curve.field().from_int(1728) * four_a_cubed(curve) / delta_core(curve);
}

std::uint64_t count_points_oracle(const Curve& curve) {
  const FieldContext& ctx = curve.field();
  const std::uint32_t q = ctx.q();
  std::vector<std::uint32_t> roots(q, 0);
  for (std::uint32_t y = 0; y < q; ++y) ++roots[ctx.mul_poly(y, y)];
  std::uint64_t count = 1;  // point at infinity
  for (std::uint32_t x = 0; x < q; ++x) {
    count += roots[cubic_rhs(ctx, x, curve.a.index(), curve.b.index())];
  }
  return count;
}

std::uint64_t count_points_character_sum(const Curve& curve) {
  const FieldContext& ctx = curve.field();
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < ctx.q(); ++x) {
    const std::uint32_t v = cubic_rhs(ctx, x, curve.a.index(), curve.b.index());
    if (v != 0) sum += ctx.dlog(v) % 2 == 0 ? 1 : -1;
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(ctx.q()) + 1 + sum);
}

std::int64_t trace_oracle(const Curve& curve) {
  return static_cast<std::int64_t>(curve.field().q()) + 1 -
         static_cast<std::int64_t>(count_points_oracle(curve));
}

bool within_hasse_bound(std::int64_t trace, std::uint64_t q) noexcept {
  return static_cast<std::uint64_t>(trace * trace) <= 4 * q;
}

Curve quadratic_twist(const Curve& curve, const FieldElement& d) {
  return {curve.a * d.pow(2), curve.b * d.pow(3)};
}

Curve rescale(const Curve& curve, const FieldElement& u) {
  return {curve.a * u.pow(4), curve.b * u.pow(6)};
}

Curve lift_curve(const Curve& curve, const FieldContext& extension) {
  if (extension.p() != curve.field().p()) {
    throw Error(ErrorCode::ContextMismatch, "extension has a different characteristic");
  }
  // Prime-subfield elements are the constant polynomials, index < p.
  if (curve.a.index() >= extension.p() || curve.b.index() >= extension.p()) {
    throw Error(ErrorCode::BadArgument, "curve coefficients do not lie in F_p");
  }
  return {extension.embed_base(curve.a.index()), extension.embed_base(curve.b.index())};
}

Scaled2F1 weierstrass_trace_series(const Curve& curve, const Characters& chars) {
  const FieldContext& ctx = curve.field();
  const std::int64_t n = ctx.order();
  const FieldElement a3 = curve.a.pow(3);
  Scaled2F1 out;
  out.scale = -static_cast<double>(ctx.q()) * chars.mult(n / 4, (a3 / ctx.from_int(27)).index());
  out.a = n / 12;
  out.b = 5 * n / 12;
  out.c = n / 2;
  out.x = -(ctx.from_int(27) * curve.b.pow(2)) / (ctx.from_int(4) * a3);
  return out;
}

Scaled2F1 j_invariant_trace_series(const Curve& curve, const Characters& chars) {
  const FieldContext& ctx = curve.field();
  const std::int64_t n = ctx.order();
  const FieldElement c1728 = ctx.from_int(1728);
  Scaled2F1 out;
  out.scale = -static_cast<double>(ctx.q()) * chars.mult(n / 12, (c1728 / discriminant(curve)).index());
  out.a = n / 12;
  out.b = n / 12;
  out.c = 2 * n / 3;
  out.x = j_invariant(curve) / c1728;
  return out;
}

TraceResult trace_thm2(const Curve& curve, const GaussTable& table, double tolerance) {
  const FieldContext& ctx = curve.field();
  if (&table.field() != &ctx) {
    throw Error(ErrorCode::ContextMismatch, "Gauss table built for a different field");
  }
  require_congruence(ctx);
  require_nonsingular(curve);
  if (curve.a.is_zero()) {
    throw Error(ErrorCode::JInvariantZero, "a = 0 gives j(E) = 0, excluded by the formula");
  }
  if (curve.b.is_zero()) {
    throw Error(ErrorCode::JInvariant1728, "b = 0 gives j(E) = 1728, excluded by the formula");
  }
  return round_trace(evaluate(table, weierstrass_trace_series(curve, table.characters())), ctx.q(),
                     tolerance);
}

TraceResult trace_thm1(const Curve& curve, const GaussTable& table, double tolerance) {
  const FieldContext& ctx = curve.field();
  if (&table.field() != &ctx) {
    throw Error(ErrorCode::ContextMismatch, "Gauss table built for a different field");
  }
  require_congruence(ctx);
  require_nonsingular(curve);
  const FieldElement j = j_invariant(curve);
  if (j.is_zero()) {
    throw Error(ErrorCode::JInvariantExcluded, "j(E) = 0 is excluded by the formula");
  }
  if (j == ctx.from_int(1728)) {
    throw Error(ErrorCode::JInvariantExcluded, "j(E) = 1728 is excluded by the formula");
  }
  return round_trace(evaluate(table, j_invariant_trace_series(curve, table.characters())), ctx.q(),
                     tolerance);
}

SubfieldTrace recover_subfield_trace(std::uint32_t p, std::int64_t trace_over_p2) {
  const std::int64_t square = trace_over_p2 + 2 * static_cast<std::int64_t>(p);
  std::int64_t t = square < 0 ? -1 : std::llround(std::sqrt(static_cast<double>(square)));
  while (t > 0 && t * t > square) --t;
  while (t >= 0 && (t + 1) * (t + 1) <= square) ++t;
  if (t < 0 || t * t != square) {
    throw Error(ErrorCode::NotAPerfectSquare,
                std::to_string(trace_over_p2) + " + 2p is not a perfect square");
  }
  if (!within_hasse_bound(t, p)) {
    throw Error(ErrorCode::BadArgument, "|t| = " + std::to_string(t) + " exceeds 2 sqrt(p)");
  }
  SubfieldTrace out;
  out.trace_over_p2 = trace_over_p2;
  out.abs_trace = t;
  out.candidates = t == 0 ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{t, -t};
  return out;
}

SubfieldTrace trace_subfield_up_to_sign(const Curve& curve_over_fp, const GaussTable& table_p2,
                                        double tolerance) {
  const FieldContext& ext = table_p2.field();
  if (curve_over_fp.field().e() != 1 || ext.e() != 2) {
    throw Error(ErrorCode::BadArgument, "expects a curve over F_p and a table over F_{p^2}");
  }
  const Curve lifted = lift_curve(curve_over_fp, ext);
  return recover_subfield_trace(ext.p(), trace_thm1(lifted, table_p2, tolerance).trace);
}

TraceReport make_trace_report(const Curve& curve, const GaussTable& table, unsigned methods,
                              double tolerance) {
  const FieldContext& ctx = curve.field();
  TraceReport report;
  report.p = ctx.p();
  report.e = ctx.e();
  report.q = ctx.q();
  report.a = curve.a.index();
  report.b = curve.b.index();
  report.delta = discriminant(curve).index();
  if (!discriminant(curve).is_zero()) report.j = j_invariant(curve).index();

  if (methods & kMethodThm1) {
    const TraceResult r = trace_thm1(curve, table, tolerance);
    report.trace_thm1 = r.trace;
    report.residual_thm1 = r.residual;
  }
  if (methods & kMethodThm2) {
    const TraceResult r = trace_thm2(curve, table, tolerance);
    report.trace_thm2 = r.trace;
    report.residual_thm2 = r.residual;
  }
  if (methods & kMethodOracle) report.trace_oracle = trace_oracle(curve);

  std::optional<std::int64_t> seen;
  report.agree = true;
  for (const auto& t : {report.trace_thm1, report.trace_thm2, report.trace_oracle}) {
    if (!t) continue;
    if (seen && *seen != *t) report.agree = false;
    seen = t;
  }
  return report;
}

}  // namespace frobtrace
