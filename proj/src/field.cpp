#include "frobtrace/field.hpp"

#include <algorithm>
#include <string>

namespace frobtrace {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoIrreducible: return "NoIrreducible";
    case ErrorCode::NotAGenerator: return "NotAGenerator";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadFieldCongruence: return "BadFieldCongruence";
    case ErrorCode::JInvariantZero: return "JInvariantZero";
    case ErrorCode::JInvariant1728: return "JInvariant1728";
    case ErrorCode::JInvariantExcluded: return "JInvariantExcluded";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::RoundingFailure: return "RoundingFailure";
    case ErrorCode::NotAPerfectSquare: return "NotAPerfectSquare";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, a != 0 mod p
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// r = a mod m, with m monic or at least nonzero leading coefficient.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = c * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
  Poly result{1};
  result = poly_mod(result, m, p);
  base = poly_mod(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    k >>= 1;
    if (k > 0) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// m irreducible of degree e iff x^(p^e) = x mod m and x^(p^k) - x is coprime
// to m for every 1 <= k < e.
bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t e = m.size() - 1;
  if (e == 1) return true;
  const Poly x = poly_mod(Poly{0, 1}, m, p);
  Poly frob = x;
  for (std::size_t k = 1; k <= e; ++k) {
    frob = poly_powmod(frob, p, m, p);
    const Poly diff = poly_sub(frob, x, p);
    if (k < e) {
      if (diff.empty()) return false;
      if (poly_gcd(m, diff, p).size() != 1) return false;
    } else if (!diff.empty()) {
      return false;
    }
  }
  return true;
}

Poly find_modulus(std::uint32_t p, std::uint32_t e, std::uint32_t q) {
  // Lower coefficients c_0..c_{e-1} enumerated as the base-p integer
  // c_0 + c_1 p + ..., ascending; x^e leads.
  for (std::uint32_t code = 0; code < q; ++code) {
    Poly m(e + 1, 0);
    std::uint32_t rest = code;
    for (std::uint32_t i = 0; i < e; ++i) {
      m[i] = rest % p;
      rest /= p;
    }
    m[e] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw Error(ErrorCode::NoIrreducible,
              "no irreducible polynomial of degree " + std::to_string(e) + " over F_" +
                  std::to_string(p));
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t e = 0;
  for (std::uint64_t r = q; r > 1; r /= factors[0]) ++e;
  return std::pair{static_cast<std::uint32_t>(factors[0]), e};
}

FieldPtr build_field(std::uint32_t p, std::uint32_t e, const FieldOptions& options) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorCode::BadArgument, "extension degree must be >= 1");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q64 *= p;
    if (q64 > options.max_q) {
      throw Error(ErrorCode::TooLarge, "q = " + std::to_string(p) + "^" + std::to_string(e) +
                                           " exceeds the maximum " +
                                           std::to_string(options.max_q));
    }
  }

  std::shared_ptr<FieldContext> ctx(new FieldContext());
  ctx->p_ = p;
  ctx->e_ = e;
  ctx->q_ = static_cast<std::uint32_t>(q64);
  const std::uint32_t q = ctx->q_;
  const std::uint32_t n = q - 1;
  for (std::uint64_t f : prime_factors(n)) ctx->order_factors_.push_back(static_cast<std::uint32_t>(f));
  for (std::uint32_t k = 0, pk = 1; k < e; ++k, pk *= p) ctx->pow_p_.push_back(pk);
  ctx->modulus_ = find_modulus(p, e, q);

  auto to_poly = [&](std::uint32_t index) {
    Poly out = ctx->decode(index);
    trim(out);
    return out;
  };
  auto is_generator = [&](std::uint32_t index) {
    if (index == 0) return false;
    const Poly c = to_poly(index);
    if (poly_powmod(c, n, ctx->modulus_, p) != Poly{1}) return false;
    for (std::uint32_t l : ctx->order_factors_) {
      if (poly_powmod(c, n / l, ctx->modulus_, p) == Poly{1}) return false;
    }
    return true;
  };

  std::uint32_t gen = 0;
  if (options.generator) {
    if (*options.generator >= q || !is_generator(*options.generator)) {
      throw Error(ErrorCode::NotAGenerator,
                  "element " + std::to_string(*options.generator) + " does not generate F_" +
                      std::to_string(q) + "^*");
    }
    gen = *options.generator;
  } else {
    for (std::uint32_t c = 1; c < q && gen == 0; ++c) {
      if (is_generator(c)) gen = c;
    }
    if (gen == 0) throw Error(ErrorCode::NotAGenerator, "no generator found");
  }

  ctx->exp_table_.assign(n, 0);
  ctx->dlog_table_.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    ctx->exp_table_[k] = cur;
    ctx->dlog_table_[cur] = k;
    cur = ctx->mul_poly(cur, gen);
  }

  ctx->trace_table_.assign(q, 0);
  for (std::uint32_t x = 1; x < q; ++x) {
    const std::uint64_t d = ctx->dlog_table_[x];
    std::uint32_t acc = 0;
    for (std::uint32_t k = 0; k < e; ++k) {
      acc = ctx->add(acc, ctx->exp_table_[d * ctx->pow_p_[k] % n]);
    }
    ctx->trace_table_[x] = acc;  // constant polynomial, so acc < p
  }
  return ctx;
}

std::vector<std::uint32_t> all_generators(const FieldContext& ctx) {
  const std::uint32_t n = ctx.order();
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < n; ++k) {
    bool coprime = true;
    for (std::uint32_t l : ctx.order_factors()) {
      if (k % l == 0) {
        coprime = false;
        break;
      }
    }
    if (coprime) out.push_back(ctx.exp(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldElement FieldContext::element(std::uint32_t index) const {
  if (index >= q_) {
    throw Error(ErrorCode::OutOfRange,
                "element index " + std::to_string(index) + " outside [0, " + std::to_string(q_) + ")");
  }
  return {this, index};
}

FieldElement FieldContext::from_int(std::int64_t n) const noexcept {
  const std::int64_t r = ((n % p_) + p_) % p_;
  return {this, static_cast<std::uint32_t>(r)};
}

FieldElement FieldContext::embed_base(std::uint32_t v) const {
  if (v >= p_) {
    throw Error(ErrorCode::OutOfRange, "base field value " + std::to_string(v) + " >= p");
  }
  return {this, v};
}

std::vector<std::uint32_t> FieldContext::decode(std::uint32_t index) const {
  std::vector<std::uint32_t> out(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    out[i] = index % p_;
    index /= p_;
  }
  return out;
}

std::uint32_t FieldContext::encode(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) throw Error(ErrorCode::OutOfRange, "too many coefficients");
  std::uint32_t out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(ErrorCode::OutOfRange, "coefficient >= p");
    out = out * p_ + coeffs[i];
  }
  return out;
}

std::uint32_t FieldContext::add(std::uint32_t x, std::uint32_t y) const noexcept {
  if (e_ == 1) {
    const std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return out;
}

std::uint32_t FieldContext::neg(std::uint32_t x) const noexcept {
  if (e_ == 1) return x == 0 ? 0 : p_ - x;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * pow_p_[i];
    x /= p_;
  }
  return out;
}

std::uint32_t FieldContext::sub(std::uint32_t x, std::uint32_t y) const noexcept {
  return add(x, neg(y));
}

std::uint32_t FieldContext::mul(std::uint32_t x, std::uint32_t y) const noexcept {
  if (x == 0 || y == 0) return 0;
  std::uint32_t k = dlog_table_[x] + dlog_table_[y];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_table_[k];
}

std::uint32_t FieldContext::inv(std::uint32_t x) const {
  if (x == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t d = dlog_table_[x];
  return exp_table_[d == 0 ? 0 : (q_ - 1) - d];
}

std::uint32_t FieldContext::pow(std::uint32_t x, std::int64_t k) const {
  if (x == 0) {
    if (k < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t d = dlog_table_[x];
  const std::int64_t kr = ((k % n) + n) % n;
  // d, kr < 2^20 so the product fits
  return exp_table_[static_cast<std::size_t>(d * kr % n)];
}

std::uint32_t FieldContext::exp(std::int64_t k) const noexcept {
  const std::int64_t n = q_ - 1;
  return exp_table_[static_cast<std::size_t>(((k % n) + n) % n)];
}

std::uint32_t FieldContext::dlog(std::uint32_t x) const {
  if (x == 0) throw Error(ErrorCode::LogOfZero, "discrete log of zero");
  return dlog_table_[x];
}

std::uint32_t FieldContext::mul_poly(std::uint32_t x, std::uint32_t y) const {
  Poly a = decode(x), b = decode(y);
  trim(a);
  trim(b);
  Poly c = poly_mulmod(a, b, modulus_, p_);
  c.resize(e_, 0);
  return encode(c);
}

const FieldContext& FieldElement::context() const {
  if (ctx_ == nullptr) throw Error(ErrorCode::ContextMismatch, "element has no field context");
  return *ctx_;
}

const FieldContext& FieldElement::checked_peer(const FieldElement& rhs) const {
  if (ctx_ == nullptr || ctx_ != rhs.ctx_) {
    throw Error(ErrorCode::ContextMismatch, "elements belong to different fields");
  }
  return *ctx_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  return {ctx_, checked_peer(rhs).add(index_, rhs.index_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  return {ctx_, checked_peer(rhs).sub(index_, rhs.index_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  return {ctx_, checked_peer(rhs).mul(index_, rhs.index_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  const FieldContext& ctx = checked_peer(rhs);
  return {ctx_, ctx.mul(index_, ctx.inv(rhs.index_))};
}

FieldElement FieldElement::operator-() const { return {ctx_, context().neg(index_)}; }

FieldElement FieldElement::inv() const { return {ctx_, context().inv(index_)}; }

FieldElement FieldElement::pow(std::int64_t k) const { return {ctx_, context().pow(index_, k)}; }

std::uint32_t dlog(const FieldElement& x) { return x.context().dlog(x.index()); }

std::uint32_t trace_to_base(const FieldElement& x) { return x.context().trace(x.index()); }

std::uint32_t trace_by_frobenius(const FieldElement& x) {
  const FieldContext& ctx = x.context();
  std::uint32_t acc = 0;
  std::uint32_t conj = x.index();
  for (std::uint32_t k = 0; k < ctx.e(); ++k) {
    acc = ctx.add(acc, conj);
    std::uint32_t next = 1;
    for (std::uint32_t i = 0; i < ctx.p(); ++i) next = ctx.mul_poly(next, conj);
    conj = next;
  }
  if (acc >= ctx.p()) {
    throw Error(ErrorCode::OutOfRange, "trace left the prime subfield");
  }
  return acc;
}

}  // namespace frobtrace
