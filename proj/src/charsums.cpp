#include "frobtrace/charsums.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <string>

namespace frobtrace {

namespace {

std::vector<ComplexValue> gauss_naive(const FieldContext& ctx, const Characters& chars) {
  const std::uint32_t n = ctx.order();
  std::vector<ComplexValue> theta_by_log(n);
  for (std::uint32_t k = 0; k < n; ++k) theta_by_log[k] = chars.theta(ctx.exp(k));

  std::vector<ComplexValue> out(n);
  for (std::uint32_t m = 0; m < n; ++m) {
    ComplexValue acc{0.0, 0.0};
    std::uint64_t step = 0;  // m*k mod n, advanced incrementally
    for (std::uint32_t k = 0; k < n; ++k) {
      acc += chars.omega(static_cast<std::int64_t>(step)) * theta_by_log[k];
      step += m;
      if (step >= n) step -= n;
    }
    out[m] = acc;
  }
  return out;
}

// FFTW's planner is not reentrant.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<ComplexValue> gauss_dft(const FieldContext& ctx, const Characters& chars) {
  const std::uint32_t n = ctx.order();
  // G_m = sum_k theta(g^k) exp(+2 pi i m k / n): an unnormalized backward DFT.
  fftw_complex* in = fftw_alloc_complex(n);
  fftw_complex* out = fftw_alloc_complex(n);
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    const ComplexValue t = chars.theta(ctx.exp(k));
    in[k][0] = t.real();
    in[k][1] = t.imag();
  }
  fftw_execute(plan);
  std::vector<ComplexValue> values(n);
  for (std::uint32_t m = 0; m < n; ++m) values[m] = {out[m][0], out[m][1]};
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return values;
}

std::int64_t reduce(std::int64_t m, std::int64_t n) { return ((m % n) + n) % n; }

IdentityCheck make_check(ComplexValue lhs, ComplexValue rhs) {
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace

GaussTable build_gauss_table(const FieldContext& ctx, GaussStrategy strategy) {
  if (strategy == GaussStrategy::Auto) {
    strategy = ctx.q() <= kNaiveGaussLimit ? GaussStrategy::Naive : GaussStrategy::Dft;
  }
  const Characters chars(ctx);
  auto values = strategy == GaussStrategy::Naive ? gauss_naive(ctx, chars) : gauss_dft(ctx, chars);
  return GaussTable(ctx, strategy, std::move(values));
}

ComplexValue gauss_sum_direct(const Characters& chars, std::int64_t m) {
  const FieldContext& ctx = chars.field();
  ComplexValue acc{0.0, 0.0};
  for (std::uint32_t x = 1; x < ctx.q(); ++x) acc += chars.mult(m, x) * chars.theta(x);
  return acc;
}

ComplexValue jacobi_sum(const Characters& chars, std::int64_t m, std::int64_t n) {
  const FieldContext& ctx = chars.field();
  ComplexValue acc{0.0, 0.0};
  // x = 0 (index 0) and x = 1 (index 1) vanish under chi(0) = 0.
  for (std::uint32_t x = 2; x < ctx.q(); ++x) {
    acc += chars.mult(m, x) * chars.mult(n, ctx.sub(1, x));
  }
  return acc;
}

ComplexValue jacobi_sum(const FieldContext& ctx, std::int64_t m, std::int64_t n) {
  return jacobi_sum(Characters(ctx), m, n);
}

ComplexValue binom(const Characters& chars, std::int64_t m, std::int64_t n) {
  const FieldContext& ctx = chars.field();
  const ComplexValue sign = chars.mult(n, ctx.neg(1));
  return sign * jacobi_sum(chars, m, -n) / static_cast<double>(ctx.q());
}

ComplexValue binom(const FieldContext& ctx, std::int64_t m, std::int64_t n) {
  return binom(Characters(ctx), m, n);
}

ComplexValue binom_from_gauss(const GaussTable& table, std::int64_t m, std::int64_t n) {
  const FieldContext& ctx = table.field();
  const std::int64_t ord = ctx.order();
  if (reduce(m - n, ord) == 0) {
    throw Error(ErrorCode::BadArgument, "Gauss-sum form of the binomial needs T^(m-n) nontrivial");
  }
  const ComplexValue sign = table.characters().mult(n, ctx.neg(1));
  return table[m] * table[-n] * sign / (table[m - n] * static_cast<double>(ctx.q()));
}

IdentityCheck jacobi_gauss_check(const GaussTable& table, std::int64_t m, std::int64_t n) {
  return make_check(binom(table.characters(), m, n), binom_from_gauss(table, m, n));
}

IdentityCheck davenport_hasse_check(const GaussTable& table, std::uint32_t mdiv, std::int64_t psi) {
  const FieldContext& ctx = table.field();
  const std::uint32_t ord = ctx.order();
  if (mdiv == 0 || ord % mdiv != 0) {
    throw Error(ErrorCode::BadModulus, "q = " + std::to_string(ctx.q()) + " is not 1 mod " +
                                           std::to_string(mdiv));
  }
  const std::int64_t step = ord / mdiv;
  ComplexValue lhs{1.0, 0.0};
  ComplexValue trivial_product{1.0, 0.0};
  for (std::uint32_t j = 0; j < mdiv; ++j) {
    lhs *= table[j * step + psi];
    trivial_product *= table[j * step];
  }
  // psi(mdiv^-mdiv)
  const std::uint32_t m_elem = ctx.from_int(mdiv).index();
  const std::uint32_t arg = ctx.pow(m_elem, -static_cast<std::int64_t>(mdiv));
  const ComplexValue rhs =
      -table[static_cast<std::int64_t>(mdiv) * psi] * table.characters().mult(psi, arg) *
      trivial_product;
  return make_check(lhs, rhs);
}

IdentityCheck davenport_hasse_cubic(const GaussTable& table, std::int64_t k) {
  const FieldContext& ctx = table.field();
  const std::int64_t ord = ctx.order();
  if (ord % 3 != 0) {
    throw Error(ErrorCode::BadModulus, "q = " + std::to_string(ctx.q()) + " is not 1 mod 3");
  }
  const std::int64_t third = ord / 3;
  const ComplexValue lhs = table[k] * table[k + third] * table[k + 2 * third];
  const ComplexValue rhs = static_cast<double>(ctx.q()) *
                           table.characters().mult(-k, ctx.from_int(27).index()) * table[3 * k];
  return make_check(lhs, rhs);
}

IdentityCheck davenport_hasse_quadratic(const GaussTable& table, std::int64_t k) {
  const FieldContext& ctx = table.field();
  const std::int64_t half = ctx.order() / 2;
  const ComplexValue lhs = table[-k] * table[-half - k];
  const ComplexValue rhs =
      table[-2 * k] * table.characters().mult(k, ctx.from_int(4).index()) * table[half];
  return make_check(lhs, rhs);
}

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Informational: return "info";
  }
  return "unknown";
}

bool SpecialIdentitiesReport::all_pass() const noexcept {
  for (const auto& entry : entries) {
    if (entry.status == CheckStatus::Fail) return false;
  }
  return true;
}

SpecialIdentitiesReport special_identities_report(const GaussTable& table, double tolerance) {
  const FieldContext& ctx = table.field();
  const Characters& chars = table.characters();
  const std::uint32_t q = ctx.q();
  const std::int64_t ord = ctx.order();
  const double qd = static_cast<double>(q);
  if (tolerance < 0.0) tolerance = default_tolerance(q);
  const std::uint32_t minus_one = ctx.neg(1);

  SpecialIdentitiesReport report;
  auto add = [&](std::string name, ComplexValue measured, ComplexValue expected,
                 std::string note = {}) {
    IdentityEntry entry{std::move(name), CheckStatus::Pass, measured, expected,
                        std::abs(measured - expected), std::move(note)};
    if (entry.deviation >= tolerance) entry.status = CheckStatus::Fail;
    report.entries.push_back(std::move(entry));
  };
  auto skip = [&](std::string name, std::string note) {
    IdentityEntry entry;
    entry.name = std::move(name);
    entry.status = CheckStatus::Skipped;
    entry.note = std::move(note);
    report.entries.push_back(std::move(entry));
  };

  add("G_0 = -1", table[0], {-1.0, 0.0});

  {
    // Worst case over i != 0 of G_i G_-i against q T^i(-1).
    IdentityEntry worst{"G_i G_-i = q T^i(-1), i != 0", CheckStatus::Pass, {}, {}, 0.0, {}};
    for (std::int64_t i = 1; i < ord; ++i) {
      const ComplexValue measured = table[i] * table[-i];
      const ComplexValue expected = qd * chars.mult(i, minus_one);
      const double dev = std::abs(measured - expected);
      if (i == 1 || dev > worst.deviation) {
        worst.measured = measured;
        worst.expected = expected;
        worst.deviation = dev;
        worst.note = "worst at i = " + std::to_string(i);
      }
    }
    if (worst.deviation >= tolerance) worst.status = CheckStatus::Fail;
    report.entries.push_back(std::move(worst));
  }

  add("G_0 G_0 = q T^0(-1) - (q-1)", table[0] * table[0],
      qd * chars.mult(0, minus_one) - static_cast<double>(q - 1));

  if (q % 4 == 1) {
    const std::int64_t half = ord / 2;
    add("T^((q-1)/2)(-1) = 1", chars.mult(half, minus_one), {1.0, 0.0});

    const ComplexValue g_half = table[half];
    const double root_q = std::sqrt(qd);
    report.quadratic_gauss_sign = g_half.real() >= 0.0 ? 1 : -1;
    const double signed_root = report.quadratic_gauss_sign * root_q;
    add("G_((q-1)/2) = +-sqrt(q)", g_half, {signed_root, 0.0});

    IdentityEntry sign_entry;
    sign_entry.name = "sign of G_((q-1)/2) relative to +sqrt(q)";
    sign_entry.status = CheckStatus::Informational;
    sign_entry.measured = g_half;
    sign_entry.expected = {root_q, 0.0};
    sign_entry.deviation = std::abs(g_half - sign_entry.expected);
    sign_entry.note = report.quadratic_gauss_sign > 0 ? "+" : "-";
    report.entries.push_back(std::move(sign_entry));
  } else {
    skip("T^((q-1)/2)(-1) = 1", "requires q = 1 mod 4");
    skip("G_((q-1)/2) = +-sqrt(q)", "requires q = 1 mod 4");
  }

  if (q % 12 == 1) {
    const std::uint32_t two = ctx.from_int(2).index();
    add("T^((q-1)/4)(-1) = T^((q-1)/2)(2)", chars.mult(ord / 4, minus_one),
        chars.mult(ord / 2, two));
    add("T^((q-1)/12)(-1) T^((q-1)/4)(-1) = 1",
        chars.mult(ord / 12, minus_one) * chars.mult(ord / 4, minus_one), {1.0, 0.0});
  } else {
    skip("T^((q-1)/4)(-1) = T^((q-1)/2)(2)", "requires q = 1 mod 12");
    skip("T^((q-1)/12)(-1) T^((q-1)/4)(-1) = 1", "requires q = 1 mod 12");
  }
  return report;
}

}  // namespace frobtrace
