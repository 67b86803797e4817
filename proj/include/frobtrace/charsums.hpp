#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frobtrace/characters.hpp"
#include "frobtrace/field.hpp"

namespace frobtrace {

enum class GaussStrategy {
  Auto,   // Naive up to kNaiveGaussLimit, Dft above
  Naive,  // direct O(q^2) summation
  Dft,    // one length-(q-1) DFT over the unit group ordered by dlog
};

inline constexpr std::uint32_t kNaiveGaussLimit = 4096;

// G_m = sum_x T^m(x) theta(x) for every m mod q-1.
class GaussTable {
 public:
  const FieldContext& field() const noexcept { return chars_.field(); }
  const Characters& characters() const noexcept { return chars_; }
  GaussStrategy strategy() const noexcept { return strategy_; }

  ComplexValue operator[](std::int64_t m) const noexcept {
    const std::int64_t n = static_cast<std::int64_t>(values_.size());
    return values_[static_cast<std::size_t>(((m % n) + n) % n)];
  }
  std::span<const ComplexValue> values() const noexcept { return values_; }

 private:
  friend GaussTable build_gauss_table(const FieldContext&, GaussStrategy);
  GaussTable(const FieldContext& ctx, GaussStrategy strategy, std::vector<ComplexValue> values)
      : chars_(ctx), strategy_(strategy), values_(std::move(values)) {}

  Characters chars_;
  GaussStrategy strategy_;
  std::vector<ComplexValue> values_;
};

GaussTable build_gauss_table(const FieldContext& ctx, GaussStrategy strategy = GaussStrategy::Auto);

// One Gauss sum by direct O(q) summation over F_q.
ComplexValue gauss_sum_direct(const Characters& chars, std::int64_t m);

inline ComplexValue gauss_sum(const GaussTable& table, std::int64_t m) { return table[m]; }

// J(T^m, T^n) = sum_x T^m(x) T^n(1-x), by direct summation.
ComplexValue jacobi_sum(const Characters& chars, std::int64_t m, std::int64_t n);
ComplexValue jacobi_sum(const FieldContext& ctx, std::int64_t m, std::int64_t n);

// Normalized binomial (T^m over T^n) = T^n(-1) J(T^m, T^-n) / q, by direct
// summation.
ComplexValue binom(const Characters& chars, std::int64_t m, std::int64_t n);
ComplexValue binom(const FieldContext& ctx, std::int64_t m, std::int64_t n);

// The same binomial from Gauss sums: G_m G_-n T^n(-1) / (G_{m-n} q).
// Requires m != n mod q-1 (BadArgument otherwise).
ComplexValue binom_from_gauss(const GaussTable& table, std::int64_t m, std::int64_t n);

IdentityCheck jacobi_gauss_check(const GaussTable& table, std::int64_t m, std::int64_t n);

// General Davenport-Hasse product relation for characters of order dividing
// mdiv, at psi = T^psi:
//   prod_{chi^mdiv = 1} G(chi psi) = -G(psi^mdiv) psi(mdiv^-mdiv) prod_{chi^mdiv = 1} G(chi).
// BadModulus unless mdiv divides q-1.
IdentityCheck davenport_hasse_check(const GaussTable& table, std::uint32_t mdiv, std::int64_t psi);

// G_k G_{k+(q-1)/3} G_{k+2(q-1)/3} = q T^-k(27) G_{3k}   (q = 1 mod 3)
IdentityCheck davenport_hasse_cubic(const GaussTable& table, std::int64_t k);
// G_-k G_{-(q-1)/2-k} = G_-2k T^k(4) G_{(q-1)/2}
IdentityCheck davenport_hasse_quadratic(const GaussTable& table, std::int64_t k);

enum class CheckStatus { Pass, Fail, Skipped, Informational };

std::string_view to_string(CheckStatus status) noexcept;

struct IdentityEntry {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  ComplexValue measured;
  ComplexValue expected;
  double deviation = 0.0;
  std::string note;
};

struct SpecialIdentitiesReport {
  std::vector<IdentityEntry> entries;
  // Sign of the real number G_{(q-1)/2} relative to +sqrt(q); 0 when q is
  // not 1 mod 4.
  int quadratic_gauss_sign = 0;

  bool all_pass() const noexcept;
};

// Gauss-sum facts used when simplifying the point-count expression:
// G_0 = -1, G_i G_-i = q T^i(-1) (i != 0), G_0 G_0 = q T^0(-1) - (q-1),
// T^{(q-1)/2}(-1) = 1, G_{(q-1)/2} = +-sqrt(q) (sign informational),
// T^{(q-1)/4}(-1) = T^{(q-1)/2}(2) and T^{(q-1)/12}(-1) T^{(q-1)/4}(-1) = 1.
SpecialIdentitiesReport special_identities_report(const GaussTable& table,
                                                  double tolerance = -1.0);

}  // namespace frobtrace
