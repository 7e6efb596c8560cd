#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfdy {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Small values (numerator and denominator below 2^62 in magnitude) live
/// inline as a pair of 64-bit integers; everything else spills to a GMP
/// rational. The representation is canonical: a value that fits inline is
/// never stored in the GMP form, so equality is a field comparison.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(long long n) noexcept;  // NOLINT(google-explicit-constructor)
  Rational(int n) noexcept : Rational(static_cast<long long>(n)) {}  // NOLINT
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p" or "p/q" (optional leading minus). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::string str() const;
  mpq_class to_mpq() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;

  /// Residue modulo the prime p. Returns false when p divides the denominator.
  bool residue(std::uint32_t p, std::uint32_t& out) const;

  Rational operator-() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& b);
  Rational& operator-=(const Rational& b);
  Rational& operator*=(const Rational& b);
  Rational& operator/=(const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  void assign_i128(__int128 n, __int128 d);
  void assign_mpq(mpq_class q);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace hopfdy
