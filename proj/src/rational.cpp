#include "hopfdy/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hopfdy {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    std::uint64_t x = static_cast<std::uint64_t>(a);
    std::uint64_t y = static_cast<std::uint64_t>(b);
    while (y != 0) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  while (b != 0) {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  }
  return a << shift;
}

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62 && mpz_fits_slong_p(z.get_mpz_t());
}

}  // namespace

Rational::Rational(long long n) noexcept : num_(n), den_(1) {
  if (n >= kSmallLimit || n <= -kSmallLimit) {
    big_ = std::make_unique<mpq_class>(static_cast<long>(n));
    num_ = 0;
  }
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  assign_i128(n, d);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 an = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = gcd_u128(an, static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (n < kSmallLimit && n > -kSmallLimit && d < kSmallLimit) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  q.canonicalize();
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

void Rational::assign_mpq(mpq_class q) {
  q.canonicalize();
  if (fits_small(q.get_num()) && fits_small(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::residue(std::uint32_t p, std::uint32_t& out) const {
  std::uint64_t n, d;
  if (big_) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), big_->get_num_mpz_t(), p);
    n = r.get_ui();
    mpz_fdiv_r_ui(r.get_mpz_t(), big_->get_den_mpz_t(), p);
    d = r.get_ui();
  } else {
    std::int64_t m = num_ % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    n = static_cast<std::uint64_t>(m);
    d = static_cast<std::uint64_t>(den_ % static_cast<std::int64_t>(p));
  }
  if (d == 0) return false;
  // d^(p-2) mod p
  std::uint64_t inv = 1, base = d, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  out = static_cast<std::uint32_t>(n * inv % p);
  return true;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.big_ = std::make_unique<mpq_class>(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  if (big_) {
    r.assign_mpq(1 / *big_);
  } else {
    r.assign_i128(den_, num_);
  }
  return r;
}

Rational& Rational::operator+=(const Rational& b) {
  if (!big_ && !b.big_) {
    if (b.num_ == 0) return *this;
    if (den_ == 1 && b.den_ == 1) {
      std::int64_t s = num_ + b.num_;
      if (s < kSmallLimit && s > -kSmallLimit) {
        num_ = s;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * b.den_ + static_cast<__int128>(b.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * b.den_;
    assign_i128(n, d);
    return *this;
  }
  assign_mpq(to_mpq() + b.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& b) {
  if (!big_ && !b.big_) {
    if (b.num_ == 0) return *this;
    if (den_ == 1 && b.den_ == 1) {
      std::int64_t s = num_ - b.num_;
      if (s < kSmallLimit && s > -kSmallLimit) {
        num_ = s;
        return *this;
      }
    }
    __int128 n = static_cast<__int128>(num_) * b.den_ - static_cast<__int128>(b.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * b.den_;
    assign_i128(n, d);
    return *this;
  }
  assign_mpq(to_mpq() - b.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& b) {
  if (!big_ && !b.big_) {
    if (num_ == 0) return *this;
    if (b.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    __int128 n = static_cast<__int128>(num_) * b.num_;
    __int128 d = static_cast<__int128>(den_) * b.den_;
    if (d == 1 && n < kSmallLimit && n > -kSmallLimit) {
      num_ = static_cast<std::int64_t>(n);
      return *this;
    }
    assign_i128(n, d);
    return *this;
  }
  assign_mpq(to_mpq() * b.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !b.big_) {
    __int128 n = static_cast<__int128>(num_) * b.den_;
    __int128 d = static_cast<__int128>(den_) * b.num_;
    assign_i128(n, d);
    return *this;
  }
  assign_mpq(to_mpq() / b.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hopfdy
