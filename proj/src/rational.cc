// Copyright 2026 The linspp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linspp/rational.h"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace linspp {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 Gcd(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t Gcd64(std::int64_t a, std::int64_t b) {
  // Callers guarantee |a|, |b| <= kMax, so negation is safe.
  std::uint64_t x = a < 0 ? static_cast<std::uint64_t>(-a) : a;
  std::uint64_t y = b < 0 ? static_cast<std::uint64_t>(-b) : b;
  while (y != 0) {
    const std::uint64_t r = x % y;
    x = y;
    y = r;
  }
  return static_cast<std::int64_t>(x);
}

u128 Abs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

// Small form excludes INT64_MIN so that negation never overflows.
bool FitsSmall(i128 v) { return v >= -static_cast<i128>(kMax) && v <= kMax; }

mpz_class WideToMpz(i128 v) {
  const bool negative = v < 0;
  u128 mag = Abs(v);
  mpz_class result(static_cast<unsigned long>(mag >> 64));  // NOLINT
  result <<= 64;
  result += mpz_class(static_cast<unsigned long>(mag));     // NOLINT
  if (negative) result = -result;
  return result;
}

bool MpzFitsSmall(const mpz_class& v) {
  return mpz_fits_slong_p(v.get_mpz_t()) != 0 &&
         v.get_si() != std::numeric_limits<long>::min();  // NOLINT
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    AssignMpq(mpq_class(static_cast<long>(value)));  // NOLINT
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  AssignWide(num, den);
}

Rational::Rational(const mpq_class& value) { AssignMpq(value); }

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

void Rational::AssignMpq(const mpq_class& value) {
  mpq_class canon(value);
  canon.canonicalize();
  if (MpzFitsSmall(canon.get_num()) && MpzFitsSmall(canon.get_den())) {
    num_ = canon.get_num().get_si();
    den_ = canon.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(canon));
}

void Rational::AssignWide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = Gcd(Abs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0) den = 1;
  if (FitsSmall(num) && FitsSmall(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class big(WideToMpz(num), WideToMpz(den));
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(big));
}

std::optional<Rational> Rational::FromString(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && s.front() == '-' && allow_sign) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  if (!valid_integer(num_text, true) || !valid_integer(den_text, false)) {
    return std::nullopt;
  }
  std::int64_t num = 0;
  std::int64_t den = 0;
  const auto [pn, en] =
      std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
  const auto [pd, ed] =
      std::from_chars(den_text.data(), den_text.data() + den_text.size(), den);
  if (en == std::errc() && ed == std::errc() &&
      pn == num_text.data() + num_text.size() &&
      pd == den_text.data() + den_text.size()) {
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  }
  mpz_class big_num{std::string(num_text)};
  mpz_class big_den{std::string(den_text)};
  if (big_den == 0) return std::nullopt;
  return Rational(mpq_class(big_num, big_den));
}

std::string Rational::ToString() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::ToMpq() const {
  if (big_) return *big_;
  mpq_class result;
  mpq_set_si(result.get_mpq_t(), num_, static_cast<unsigned long>(den_));  // NOLINT
  return result;
}

double Rational::ToDouble() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational& Rational::operator+=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(num_, other.num_, &sum) && FitsSmall(sum)) {
        num_ = sum;
        return *this;
      }
      AssignWide(static_cast<i128>(num_) + other.num_, 1);
      return *this;
    }
    AssignWide(static_cast<i128>(num_) * other.den_ +
                   static_cast<i128>(other.num_) * den_,
               static_cast<i128>(den_) * other.den_);
    return *this;
  }
  AssignMpq(ToMpq() + other.ToMpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_sub_overflow(num_, other.num_, &sum) && FitsSmall(sum)) {
        num_ = sum;
        return *this;
      }
      AssignWide(static_cast<i128>(num_) - other.num_, 1);
      return *this;
    }
    AssignWide(static_cast<i128>(num_) * other.den_ -
                   static_cast<i128>(other.num_) * den_,
               static_cast<i128>(den_) * other.den_);
    return *this;
  }
  AssignMpq(ToMpq() - other.ToMpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (num_ == 0 || other.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::int64_t g1 = Gcd64(num_, other.den_);
    const std::int64_t g2 = Gcd64(other.num_, den_);
    AssignWide(static_cast<i128>(num_ / g1) * (other.num_ / g2),
               static_cast<i128>(den_ / g2) * (other.den_ / g1));
    return *this;
  }
  AssignMpq(ToMpq() * other.ToMpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational division by zero");
  if (!big_ && !other.big_) {
    if (num_ == 0) return *this;
    const std::int64_t g1 = Gcd64(num_, other.num_);
    const std::int64_t g2 = Gcd64(den_, other.den_);
    AssignWide(static_cast<i128>(num_ / g1) * (other.den_ / g2),
               static_cast<i128>(den_ / g2) * (other.num_ / g1));
    return *this;
  }
  AssignMpq(ToMpq() / other.ToMpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational result(*this);
  if (result.big_) {
    *result.big_ = -*result.big_;
  } else {
    result.num_ = -result.num_;
  }
  return result;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(a.ToMpq(), b.ToMpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace linspp
