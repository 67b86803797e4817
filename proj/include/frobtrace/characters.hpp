#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "frobtrace/field.hpp"

namespace frobtrace {

using ComplexValue = std::complex<double>;

// Absolute tolerance for character-sum identities at field size q.
inline double default_tolerance(std::uint32_t q) { return 1e-6 * static_cast<double>(q); }

// exp(2 pi i k / n) for k in [0, n), with k reduced before evaluation.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(std::uint32_t n);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(roots_.size()); }
  ComplexValue operator()(std::int64_t k) const noexcept {
    const std::int64_t n = static_cast<std::int64_t>(roots_.size());
    return roots_[static_cast<std::size_t>(((k % n) + n) % n)];
  }

 private:
  std::vector<ComplexValue> roots_;
};

ComplexValue root_of_unity(std::int64_t k, std::uint32_t n);

// Multiplicative characters T^m (T(g) = exp(2 pi i / (q-1)) for the context's
// generator g) and the additive character theta(x) = exp(2 pi i tr(x) / p),
// backed by root tables of sizes q-1 and p.
class Characters {
 public:
  explicit Characters(const FieldContext& ctx);

  const FieldContext& field() const noexcept { return *ctx_; }

  // T^m(x); exactly 0 at x = 0.
  ComplexValue mult(std::int64_t m, std::uint32_t x) const noexcept {
    if (x == 0) return {0.0, 0.0};
    const std::int64_t k = (m % n_) * static_cast<std::int64_t>(ctx_->dlog(x));
    return unit_(k);
  }
  ComplexValue theta(std::uint32_t x) const noexcept { return additive_(ctx_->trace(x)); }
  // omega^k with omega = exp(2 pi i / (q-1)).
  ComplexValue omega(std::int64_t k) const noexcept { return unit_(k); }

 private:
  const FieldContext* ctx_;
  std::int64_t n_;
  RootsOfUnity unit_;
  RootsOfUnity additive_;
};

// On-demand evaluation without tables.
ComplexValue mult_char_eval(const FieldContext& ctx, std::int64_t m, const FieldElement& x);
ComplexValue add_char_eval(const FieldContext& ctx, const FieldElement& x);

// Sum over z in F_q of theta(z v): q at v = 0, 0 otherwise.
ComplexValue indicator_sum(const FieldContext& ctx, const FieldElement& v);

struct IdentityCheck {
  ComplexValue lhs;
  ComplexValue rhs;
  double deviation = 0.0;
};

// theta(alpha) against (1/(q-1)) sum_m G_{-m} T^m(alpha), where
// gauss_values[m] = G_m for m in [0, q-1). Throws ZeroArgument at alpha = 0.
IdentityCheck theta_expansion_check(const Characters& chars,
                                    std::span<const ComplexValue> gauss_values,
                                    const FieldElement& alpha);

}  // namespace frobtrace
