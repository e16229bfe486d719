#pragma once

/**
 * @file ratfunc.hpp
 * @brief Exact arithmetic in Q(q), the field of rational functions in one
 * variable with rational coefficients.
 *
 * A RatFunc is stored as a pair of integer polynomials in normal form:
 *  - gcd(numerator, denominator) = 1 as polynomials over Z,
 *  - the integer coefficients of the pair have joint gcd 1,
 *  - the denominator's leading coefficient is positive,
 *  - zero is 0/1.
 * Laurent input (q^-k) is cleared into the denominator on construction, so
 * equality of normal forms is equality in the field.
 */

#include <gmpxx.h>

#include <cmath>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "g2/errors.hpp"

namespace g2 {

template <typename T>
T mpz_to(const mpz_class& z) {
  if constexpr (std::is_arithmetic_v<T>) {
    return static_cast<T>(z.get_d());
  } else {
    return T(z.get_str());
  }
}

/// Dense integer polynomial in q, coefficients in ascending order, no
/// trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpz_class> ascending);
  Poly(long c);  // NOLINT(google-explicit-constructor)

  static Poly monomial(const mpz_class& c, int k);

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  [[nodiscard]] std::span<const mpz_class> coeffs() const { return c_; }
  [[nodiscard]] mpz_class coeff(int k) const;
  [[nodiscard]] const mpz_class& leading() const { return c_.back(); }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  [[nodiscard]] int valuation() const;

  /// gcd of the coefficients, nonnegative.
  [[nodiscard]] mpz_class content() const;
  [[nodiscard]] Poly primitive() const;
  [[nodiscard]] Poly scaled(const mpz_class& s) const;
  [[nodiscard]] Poly divexact(const mpz_class& s) const;
  /// Multiply by q^k (k >= 0) or divide by q^-k (k < 0, must be exact).
  [[nodiscard]] Poly shifted(int k) const;
  [[nodiscard]] Poly derivative() const;
  [[nodiscard]] mpz_class max_abs_coeff() const;

  [[nodiscard]] mpq_class eval(const mpq_class& x) const;
  [[nodiscard]] mpz_class eval(const mpz_class& x) const;
  template <typename T>
  [[nodiscard]] T eval_as(const T& x) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpz_to<T>(*it);
    return acc;
  }
  [[nodiscard]] double eval(double x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Renders as c*q^k terms in descending exponent order, e.g. "q^2-3*q+1".
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// a / b when b divides a exactly in Z[q]; nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor over Z[q] with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const mpq_class& c);
  /// num/den, normalized. Throws DivisionByZero when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc q() { return {Poly::monomial(1, 1), Poly(1)}; }
  /// Sum of c_k * q^k with possibly negative k.
  static RatFunc laurent(std::initializer_list<std::pair<int, long>> terms);
  static RatFunc parse(std::string_view text);

  [[nodiscard]] const Poly& numerator() const { return num_; }
  [[nodiscard]] const Poly& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }

  [[nodiscard]] RatFunc pow(int e) const;
  [[nodiscard]] RatFunc inverse() const;
  /// d/dq.
  [[nodiscard]] RatFunc derivative() const;

  /// Exact substitution q -> qval. Requires qval > 0 and a nonvanishing
  /// denominator; throws EvaluationError otherwise.
  [[nodiscard]] mpq_class eval_at(const mpq_class& qval) const;
  [[nodiscard]] double eval_at(double qval) const;
  template <typename T>
  [[nodiscard]] T eval_as(const T& qval) const {
    if (!(qval > T(0))) throw EvaluationError("q must be positive");
    T d = den_.eval_as(qval);
    if (d == T(0)) throw EvaluationError("denominator vanishes at q");
    return num_.eval_as(qval) / d;
  }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  /// Normal forms are unique, so this is field equality.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(<poly>)/(<poly>)", or "(<poly>)" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

/// Cross-multiplication test: x.num * y.den - y.num * x.den == 0. Independent
/// of representation, so it also holds for unnormalized inputs.
bool equals(const RatFunc& x, const RatFunc& y);

/// Decimal rendering of an exact rational with the given significant digits.
std::string to_decimal(const mpq_class& x, int significant = 12);

/// Parses "p/r", an integer, or a decimal such as "1.25" / "-3e-2" into an
/// exact rational. Throws ParseError.
mpq_class parse_rational(std::string_view text);

}  // namespace g2
