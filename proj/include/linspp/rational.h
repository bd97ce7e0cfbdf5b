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

#ifndef LINSPP_RATIONAL_H_
#define LINSPP_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace linspp {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in 64 bits are stored inline and
// operated on with 128-bit intermediates; anything larger is promoted to a GMP
// rational. A value is held in the big form only if it does not fit the small
// form, so equality never has to compare across representations.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error if `den` is zero.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts `p` or `p/q` with an optional leading minus sign.
  static std::optional<Rational> FromString(std::string_view text);

  // Canonical text: `p` when the denominator is 1, `p/q` otherwise.
  std::string ToString() const;
  mpq_class ToMpq() const;
  double ToDouble() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return !big_ && den_ == 1; }
  int sign() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  void AssignMpq(const mpq_class& value);
  void AssignWide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace linspp

#endif  // LINSPP_RATIONAL_H_
