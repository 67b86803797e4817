#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "frobtrace/error.hpp"

namespace frobtrace {

inline constexpr std::uint32_t kDefaultMaxQ = 1u << 20;

class FieldContext;

// An element of F_q. The index is the base-p packing of the coefficient
// vector (little-endian) of its polynomial representative mod the modulus.
// Elements hold a non-owning pointer to their context, which must outlive
// them.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldContext* ctx, std::uint32_t index)
      : ctx_(ctx), index_(index) {}

  std::uint32_t index() const noexcept { return index_; }
  const FieldContext& context() const;
  bool is_zero() const noexcept { return index_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement inv() const;
  // Negative exponents are allowed for nonzero elements.
  FieldElement pow(std::int64_t k) const;

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.ctx_ == y.ctx_ && x.index_ == y.index_;
  }

 private:
  const FieldContext& checked_peer(const FieldElement& rhs) const;

  const FieldContext* ctx_ = nullptr;
  std::uint32_t index_ = 0;
};

struct FieldOptions {
  std::uint32_t max_q = kDefaultMaxQ;
  // Index of the element to use as the generator of F_q^*. When unset the
  // smallest-index generator is chosen.
  std::optional<std::uint32_t> generator;
};

// F_{p^e} with eagerly built discrete-log and trace tables. Immutable after
// construction; share it through the pointer returned by build_field.
class FieldContext {
 public:
  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t order() const noexcept { return q_ - 1; }

  // Monic modulus, coefficients c_0..c_e.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  // Distinct primes dividing q-1, ascending.
  std::span<const std::uint32_t> order_factors() const noexcept { return order_factors_; }

  FieldElement element(std::uint32_t index) const;
  FieldElement zero() const noexcept { return {this, 0}; }
  FieldElement one() const noexcept { return {this, 1}; }
  FieldElement generator() const noexcept { return {this, exp_table_[1 % order()]}; }
  // Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t n) const noexcept;
  // F_p embedded in F_q as the constant polynomials.
  FieldElement embed_base(std::uint32_t v) const;

  std::vector<std::uint32_t> decode(std::uint32_t index) const;
  std::uint32_t encode(std::span<const std::uint32_t> coeffs) const;

  // Index-level kernels. Callers guarantee indices are < q.
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept;
  std::uint32_t neg(std::uint32_t x) const noexcept;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept;
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t pow(std::uint32_t x, std::int64_t k) const;
  // g^k for any integer k.
  std::uint32_t exp(std::int64_t k) const noexcept;
  std::uint32_t dlog(std::uint32_t x) const;
  std::uint32_t trace(std::uint32_t x) const noexcept { return trace_table_[x]; }

  // Multiplication by schoolbook polynomial product and reduction. Used
  // during construction and as a cross-check of the table-driven mul.
  std::uint32_t mul_poly(std::uint32_t x, std::uint32_t y) const;

 private:
  FieldContext() = default;
  friend std::shared_ptr<const FieldContext> build_field(std::uint32_t, std::uint32_t,
                                                         const FieldOptions&);

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> order_factors_;
  std::vector<std::uint32_t> pow_p_;  // p^k for k < e
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::uint32_t> dlog_table_;
  std::vector<std::uint32_t> trace_table_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

// Errors: NotPrime, TooLarge, NotAGenerator (bad FieldOptions::generator),
// NoIrreducible (search exhausted; unreachable for valid input).
FieldPtr build_field(std::uint32_t p, std::uint32_t e, const FieldOptions& options = {});

bool is_prime(std::uint64_t n) noexcept;
// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Returns {p, e} when q is a prime power, nullopt otherwise.
std::optional<std::pair<std::uint32_t, std::uint32_t>> as_prime_power(std::uint64_t q);

// Indices of every generator of F_q^*, ascending.
std::vector<std::uint32_t> all_generators(const FieldContext& ctx);

std::uint32_t dlog(const FieldElement& x);
// Field trace to F_p, as an integer in [0, p).
std::uint32_t trace_to_base(const FieldElement& x);
// The same value computed as x + x^p + ... + x^(p^(e-1)) by repeated
// Frobenius; the result is checked to lie in the prime subfield.
std::uint32_t trace_by_frobenius(const FieldElement& x);

}  // namespace frobtrace
