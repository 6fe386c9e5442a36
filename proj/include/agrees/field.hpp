#pragma once

// Coefficient fields: exact rationals (GMP) and prime fields with a runtime
// modulus. Both satisfy the Field concept used by every polynomial template.

#include <gmpxx.h>

#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "agrees/errors.hpp"

namespace agrees {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t previous_prime(std::uint64_t n) {
  for (std::uint64_t c = n - 1; c > 2; --c) {
    if (is_prime(c)) return c;
  }
  throw BadFieldConfig("no prime below " + std::to_string(n));
}

/// Smallest admissible modulus for the prime-field backend.
inline constexpr std::uint64_t kMinPrime = (1ULL << 20) + 1;
/// Products of residues are formed in 128 bits, so the modulus must fit in 63.
inline constexpr std::uint64_t kMaxPrime = (1ULL << 62);

/// Which field an analysis runs over. Prime 0 means the rationals.
struct FieldConfig {
  std::uint64_t prime = 0;

  static FieldConfig rationals() { return {}; }
  static FieldConfig prime_field(std::uint64_t p) {
    if (p < kMinPrime || p > kMaxPrime || !is_prime(p)) {
      throw BadFieldConfig("fp modulus must be a prime in (2^20, 2^62], got " + std::to_string(p));
    }
    return FieldConfig{p};
  }

  /// Accepts "q" or "fp:<prime>".
  static FieldConfig parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.substr(0, 3) == "fp:") {
      std::string_view digits = text.substr(3);
      std::uint64_t p = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw BadFieldConfig("bad prime in field spec '" + std::string(text) + "'");
      }
      return prime_field(p);
    }
    throw BadFieldConfig("field must be 'q' or 'fp:<prime>', got '" + std::string(text) + "'");
  }

  bool is_rational() const noexcept { return prime == 0; }
  std::string to_string() const { return is_rational() ? "q" : "fp:" + std::to_string(prime); }

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

/// Arbitrary-precision rational kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw Error("zero denominator");
    value_.canonicalize();
  }

  static Rational from_rational(const Rational& q, const FieldConfig& /*cfg*/) { return q; }

  template <class Rng>
  static Rational random_nonzero(Rng& rng, const FieldConfig& /*cfg*/) {
    std::uniform_int_distribution<long> dist(1, 1L << 20);
    long v = dist(rng);
    return Rational((rng() & 1U) != 0 ? v : -v);
  }

  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  Rational inverse() const {
    if (is_zero()) throw Error("division by zero");
    return Rational(mpq_class(1) / value_);
  }

  /// Reduced fraction, e.g. "-3/2".
  std::string to_string() const { return value_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_;
};

/// Residue modulo a runtime prime p; value in [0, p).
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint64_t p) : value_(value % p), p_(p) {}

  static ModP from_rational(const Rational& q, const FieldConfig& cfg) {
    const std::uint64_t p = cfg.prime;
    if (p == 0) throw BadFieldConfig("prime field requested without a modulus");
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    mpz_class pm;
    mpz_set_ui(pm.get_mpz_t(), p);
    mpz_class n = q.value().get_num() % pm;
    if (n < 0) n += pm;
    mpz_class d = q.value().get_den() % pm;
    if (d == 0) throw BadFieldConfig("denominator vanishes modulo " + std::to_string(p));
    ModP num(n.get_ui(), p);
    ModP den(d.get_ui(), p);
    return num / den;
  }

  template <class Rng>
  static ModP random_nonzero(Rng& rng, const FieldConfig& cfg) {
    std::uniform_int_distribution<std::uint64_t> dist(1, cfg.prime - 1);
    return ModP(dist(rng), cfg.prime);
  }

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  ModP inverse() const {
    if (value_ == 0) throw Error("division by zero");
    return ModP(detail::pow_mod(value_, p_ - 2, p_), p_);
  }

  /// Symmetric representative in (-p/2, p/2], so that -1 prints as "-1".
  std::string to_string() const {
    if (value_ > p_ / 2) return "-" + std::to_string(p_ - value_);
    return std::to_string(value_);
  }

  friend ModP operator+(const ModP& a, const ModP& b) {
    std::uint64_t p = a.p_ | b.p_;
    std::uint64_t s = a.value_ + b.value_;
    if (s >= p) s -= p;
    return raw(s, p);
  }
  friend ModP operator-(const ModP& a, const ModP& b) {
    std::uint64_t p = a.p_ | b.p_;
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + p - b.value_, p);
  }
  friend ModP operator*(const ModP& a, const ModP& b) {
    std::uint64_t p = a.p_ | b.p_;
    return raw(detail::mul_mod(a.value_, b.value_, p), p);
  }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP operator-() const { return raw(value_ == 0 ? 0 : p_ - value_, p_); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.value_ == b.value_; }

 private:
  static ModP raw(std::uint64_t v, std::uint64_t p) {
    ModP r;
    r.value_ = v;
    r.p_ = p;
    return r;
  }

  std::uint64_t value_ = 0;
  std::uint64_t p_ = 0;
};

template <class F>
concept Field = std::regular<F> && requires(const F a, const F b, const Rational& q, const FieldConfig& cfg,
                                            std::mt19937_64& rng) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<F>;
  { a.to_string() } -> std::same_as<std::string>;
  { F::from_rational(q, cfg) } -> std::same_as<F>;
  { F::random_nonzero(rng, cfg) } -> std::same_as<F>;
};

static_assert(Field<Rational>);
static_assert(Field<ModP>);

template <Field F>
F field_int(long v, const FieldConfig& cfg) {
  return F::from_rational(Rational(v), cfg);
}

}  // namespace agrees
