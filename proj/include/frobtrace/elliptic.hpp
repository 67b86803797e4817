#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobtrace/charsums.hpp"
#include "frobtrace/hypergeo.hpp"
#include "frobtrace/rng.hpp"

namespace frobtrace {

// y^2 = x^3 + a x + b over the context shared by a and b.
struct Curve {
  FieldElement a;
  FieldElement b;

  const FieldContext& field() const { return a.context(); }
};

// OutOfRange for indices >= q.
Curve make_curve(const FieldContext& ctx, std::uint32_t a_index, std::uint32_t b_index);

// Uniform (a, b) with a != 0, b != 0 and nonzero discriminant, by rejection.
// BadArgument in characteristic 2, where no such curve exists.
Curve random_curve(const FieldContext& ctx, SplitMix64& rng);

// -16 (4a^3 + 27b^2)
FieldElement discriminant(const Curve& curve);
// 1728 * 4a^3 / (4a^3 + 27b^2); SingularCurve when the discriminant vanishes.
FieldElement j_invariant(const Curve& curve);

// Projective point count: 1 + #{(x, y) : y^2 = x^3 + ax + b}, with the fibre
// over each x read from a table of square-root counts built by enumerating y.
std::uint64_t count_points_oracle(const Curve& curve);
// q + 1 + sum_x eta(x^3 + ax + b), eta from the parity of the discrete log.
std::uint64_t count_points_character_sum(const Curve& curve);
std::int64_t trace_oracle(const Curve& curve);

bool within_hasse_bound(std::int64_t trace, std::uint64_t q) noexcept;

// (a d^2, b d^3)
Curve quadratic_twist(const Curve& curve, const FieldElement& d);
// (a u^4, b u^6), isomorphic to the original.
Curve rescale(const Curve& curve, const FieldElement& u);
// Coefficients of a curve over F_p mapped into an extension of the same
// characteristic.
Curve lift_curve(const Curve& curve, const FieldContext& extension);

// -q T^((q-1)/4)(a^3/27) 2F1(T^((q-1)/12), T^(5(q-1)/12); T^((q-1)/2) | -27b^2/(4a^3))
Scaled2F1 weierstrass_trace_series(const Curve& curve, const Characters& chars);
// -q T^((q-1)/12)(1728/D) 2F1(T^((q-1)/12), T^((q-1)/12); T^(2(q-1)/3) | j/1728)
Scaled2F1 j_invariant_trace_series(const Curve& curve, const Characters& chars);

struct TraceResult {
  std::int64_t trace = 0;
  double residual = 0.0;  // |value - trace|
  ComplexValue value;
};

// Trace from the Weierstrass-coefficient formula. Errors, checked in order:
// BadFieldCongruence (q != 1 mod 12), SingularCurve, JInvariantZero (a = 0),
// JInvariant1728 (b = 0), RoundingFailure (residual > tolerance). A negative
// tolerance selects default_tolerance(q).
TraceResult trace_thm2(const Curve& curve, const GaussTable& table, double tolerance = -1.0);
// Trace from the j-invariant/discriminant formula. Same errors, except the
// excluded j values both raise JInvariantExcluded.
TraceResult trace_thm1(const Curve& curve, const GaussTable& table, double tolerance = -1.0);

struct SubfieldTrace {
  std::int64_t trace_over_p2 = 0;
  std::int64_t abs_trace = 0;
  std::vector<std::int64_t> candidates;  // {+t, -t}, or {0}
};

// Solves t^2 = a(E/F_{p^2}) + 2p. NotAPerfectSquare if no integer root,
// BadArgument if |t| > 2 sqrt(p).
SubfieldTrace recover_subfield_trace(std::uint32_t p, std::int64_t trace_over_p2);
// Lifts a curve over F_p into table's F_{p^2}, applies trace_thm1 there and
// recovers |a(E/F_p)|.
SubfieldTrace trace_subfield_up_to_sign(const Curve& curve_over_fp, const GaussTable& table_p2,
                                        double tolerance = -1.0);

enum TraceMethod : unsigned {
  kMethodThm1 = 1u << 0,
  kMethodThm2 = 1u << 1,
  kMethodOracle = 1u << 2,
  kMethodAll = kMethodThm1 | kMethodThm2 | kMethodOracle,
};

struct TraceReport {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::optional<std::uint32_t> j;  // absent for singular curves
  std::uint32_t delta = 0;
  std::optional<std::int64_t> trace_thm1;
  std::optional<std::int64_t> trace_thm2;
  std::optional<std::int64_t> trace_oracle;
  std::optional<double> residual_thm1;
  std::optional<double> residual_thm2;
  bool agree = false;
};

// Runs the requested methods; Error from any formula propagates. agree is
// true when every computed trace is equal.
TraceReport make_trace_report(const Curve& curve, const GaussTable& table, unsigned methods,
                              double tolerance = -1.0);

}  // namespace frobtrace
