#pragma once

// Exact rational scalars and vectors.
//
// Rational wraps a GMP mpq_class that is kept in canonical form (positive
// denominator, coprime numerator/denominator) after every operation, so
// equality is structural. Text form is "p/q", or "p" when q = 1.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "splitcut/error.hpp"

namespace splitcut {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}         // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v);

  // Accepts "p/q" or "p" with optional leading sign; rejects decimals.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

Integer floor(const Rational& a);
Integer ceil(const Rational& a);
std::pair<Integer, Integer> floor_ceil(const Rational& a);
// a - floor(a), always in [0, 1).
Rational frac(const Rational& a);
Rational abs(const Rational& a);
Integer lcm(const Integer& a, const Integer& b);

// Ordered sequence of exact scalars. Used both for rational points (f, r, q, x)
// and, with T = Integer, for integral normals such as alpha.
template <class T>
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  Vector(std::initializer_list<T> init) : entries_(init) {}
  explicit Vector(std::vector<T> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const T& operator[](std::size_t i) const { return entries_[i]; }
  T& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<T>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  void push_back(T v) { entries_.push_back(std::move(v)); }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (e != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }
  // Lexicographic; only meaningful between equal dimensions.
  friend bool operator<(const Vector& a, const Vector& b) {
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.entries_[i] < b.entries_[i]) return true;
      if (b.entries_[i] < a.entries_[i]) return false;
    }
    return a.dim() < b.dim();
  }

 private:
  std::vector<T> entries_;
};

using RationalVector = Vector<Rational>;
using IntVector = Vector<Integer>;
using IntMatrix = std::vector<IntVector>;

RationalVector to_rational(const IntVector& v);
bool is_integral(const RationalVector& v);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& t, const RationalVector& v);

// Exact inner products; throw InputError on dimension mismatch.
Rational dot(const RationalVector& u, const RationalVector& v);
Rational dot(const IntVector& u, const RationalVector& v);

// Appends one coordinate: (v, last).
RationalVector append(const RationalVector& v, const Rational& last);
IntVector append(const IntVector& v, const Integer& last);

// Comma- or whitespace-separated rationals.
RationalVector parse_vector(std::string_view text);
IntVector parse_int_vector(std::string_view text);

std::string str(const RationalVector& v, std::string_view sep = " ");
std::string str(const IntVector& v, std::string_view sep = " ");
std::ostream& operator<<(std::ostream& os, const RationalVector& v);
std::ostream& operator<<(std::ostream& os, const IntVector& v);

void require_same_dim(std::size_t a, std::size_t b, std::string_view what);

}  // namespace splitcut
