#pragma once

/**
 * @file spectrum.hpp
 * @brief The fusion-algebra corner as polynomials in h = Delta(H) and
 * x = Delta(X), the one-dimensional functionals gamma_{alpha,t}, the function
 * f(alpha, t) and the isolation certificate around the trivial point
 * (0, delta).
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "g2/mor22.hpp"

namespace g2 {

/// Polynomial in two commuting variables with Q(q) coefficients. Exponent
/// pairs are (first, second); for the fusion corner these are (h, x), for f
/// they are (alpha, t).
class FusionPoly {
 public:
  using Exponents = std::pair<int, int>;

  FusionPoly() = default;
  FusionPoly(const RatFunc& constant);  // NOLINT(google-explicit-constructor)
  static FusionPoly monomial(const RatFunc& c, int first, int second);
  static FusionPoly first() { return monomial(RatFunc(1), 1, 0); }
  static FusionPoly second() { return monomial(RatFunc(1), 0, 1); }

  [[nodiscard]] const std::map<Exponents, RatFunc>& terms() const { return terms_; }
  [[nodiscard]] RatFunc coeff(int first, int second) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int total_degree() const;

  [[nodiscard]] FusionPoly pow(int e) const;
  /// Formal partial derivative in the first (var = 0) or second variable.
  [[nodiscard]] FusionPoly derivative(int var) const;
  /// Replaces the first variable by `r`.
  [[nodiscard]] FusionPoly substitute_first(const FusionPoly& r) const;
  [[nodiscard]] RatFunc eval(const RatFunc& first, const RatFunc& second) const;
  [[nodiscard]] mpq_class eval(const mpq_class& qval, const mpq_class& first,
                               const mpq_class& second) const;

  friend FusionPoly operator+(const FusionPoly& a, const FusionPoly& b);
  friend FusionPoly operator-(const FusionPoly& a, const FusionPoly& b);
  friend FusionPoly operator*(const FusionPoly& a, const FusionPoly& b);
  friend bool operator==(const FusionPoly& a, const FusionPoly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string(const char* first = "h", const char* second = "x") const;

 private:
  void add(const Exponents& e, const RatFunc& c);
  std::map<Exponents, RatFunc> terms_;
};

/// Linear: id2 -> x^2, E -> delta, I -> x, H -> h.
FusionPoly delta_map(const Mor22Element& x);

/// kappa = q^4 (1+q^2)^2 / ((1+q^2+q^4)(1+q^8)), the inverse of the H
/// coordinate of y_plus.
RatFunc kappa();
/// Rewrites a polynomial in (Delta(y_plus), x) as one in (h, x).
FusionPoly h_basis(const FusionPoly& in_yplus);
/// Rewrites a polynomial in (h, x) as one in (Delta(y_plus), x).
FusionPoly yplus_basis(const FusionPoly& in_h);

/// f(alpha, t) from its closed formula, term by term.
FusionPoly f_poly_formula();
/// f(alpha, t) = gamma_{alpha,t}(Delta(rot(y_minus))).
FusionPoly f_poly_rotation();
/// The common value, after checking the two agree (Defect otherwise).
const FusionPoly& f_poly();

struct Partials {
  RatFunc f_alpha, f_t, f_tt;
};

/// Formal derivatives of f at (0, delta).
Partials partials();
/// Closed forms of the three derivatives.
Partials partials_closed_form();

/// Term-by-term sign argument: -f_alpha, f_t / (q^2-1)^2 and f_tt have
/// numerators and denominators with nonnegative coefficients and a positive
/// value at every q > 0.
struct SignProof {
  bool f_alpha_negative = false;
  bool f_t_positive_off_one = false;
  bool f_tt_positive = false;
  [[nodiscard]] bool holds() const {
    return f_alpha_negative && f_t_positive_off_one && f_tt_positive;
  }
};
SignProof sign_proof();

enum class CertificateStatus { certified, degenerate };

struct Certificate {
  mpq_class qval;
  mpq_class delta;
  mpq_class f_alpha, f_t, f_tt;
  mpq_class lambda;   // f_tt / 2
  mpq_class M;        // max(f_alpha, -f_t)
  mpq_class epsilon;  // |M| / lambda when M < 0, else 0
  CertificateStatus status = CertificateStatus::degenerate;
};

/// Exact at rational q. Throws EvaluationError for q <= 0.
Certificate certificate(const mpq_class& qval);

struct SampleReport {
  int samples = 0;
  int negative = 0;
  mpq_class worst;  // largest f value seen
  [[nodiscard]] bool all_negative() const { return samples > 0 && negative == samples; }
};

/// Evaluates f(x, delta + y) exactly on a polar grid of fourth-quadrant
/// points with 0 < |v| < epsilon (at least `count` of them).
SampleReport sample_quarter_disc(const Certificate& cert, int count);

std::string render(const Certificate& cert, int digits = 12);
std::string render_json(const Certificate& cert, int digits = 12);

struct ScanRow {
  mpq_class alpha, t, f;
  std::string prefilter;  // "pass" or reasons joined by ';'
};

struct ScanRange {
  mpq_class lo, hi;
};

/// f on a steps x steps grid, alpha outer. The trivial point (0, delta) is
/// added to the axes when it lies in range. Rows are independent and are
/// computed on `threads` threads; the order does not depend on scheduling.
std::vector<ScanRow> scan(const mpq_class& qval, const ScanRange& alpha, const ScanRange& t,
                          int steps, int threads = 1);
std::string scan_csv(const std::vector<ScanRow>& rows, int digits = 12);

}  // namespace g2
