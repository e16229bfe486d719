#pragma once

/**
 * @file mor22.hpp
 * @brief The commutative algebra Mor(2,2) in the basis (id2, E, I, H).
 */

#include <array>
#include <string>

#include "g2/skein.hpp"

namespace g2 {

enum class Basis22 { id2 = 0, E = 1, I = 2, H = 3 };

struct Mor22Element {
  std::array<RatFunc, 4> c{};

  Mor22Element() = default;
  Mor22Element(RatFunc id2, RatFunc e, RatFunc i, RatFunc h)
      : c{std::move(id2), std::move(e), std::move(i), std::move(h)} {}
  static Mor22Element basis(Basis22 b);

  RatFunc& operator[](Basis22 b) { return c[static_cast<int>(b)]; }
  const RatFunc& operator[](Basis22 b) const { return c[static_cast<int>(b)]; }
  [[nodiscard]] bool is_zero() const;

  friend Mor22Element operator+(const Mor22Element& x, const Mor22Element& y);
  friend Mor22Element operator-(const Mor22Element& x, const Mor22Element& y);
  friend Mor22Element operator*(const RatFunc& s, const Mor22Element& x);
  friend bool operator==(const Mor22Element& x, const Mor22Element& y) { return x.c == y.c; }

  [[nodiscard]] std::string to_string() const;
};

/// Diagram of a basis element.
Diagram basis_diagram(Basis22 b);
Morphism to_morphism(const Mor22Element& x);
/// Reduces m (in Mor(2,2)) and reads off its coordinates.
Mor22Element from_morphism(const Morphism& m);

/// table[i][j] = basis i composed after basis j.
using StructureTable = std::array<std::array<Mor22Element, 4>, 4>;

/// Products of basis diagrams by skein reduction, computed once.
const StructureTable& structure_constants();
/// The same table rebuilt from the idempotents alone: each basis element is
/// expanded over the four orthogonal idempotents (its eigenvalues), products
/// multiply eigenvalues, and the result is expanded back.
StructureTable spectral_structure_constants();

Mor22Element multiply(const Mor22Element& x, const Mor22Element& y);
/// Closure followed by evaluation; trace of (id2, E, I, H) is taken from the
/// skein evaluator once.
RatFunc trace(const Mor22Element& x);
/// Reflection; it fixes each basis diagram, so coordinates are unchanged.
Mor22Element adjoint(const Mor22Element& x);
/// One-click rotation, with the basis permutation read off the diagrams.
Mor22Element rotate(const Mor22Element& x);

struct IdempotentSet {
  Mor22Element p_triv;  // E / delta
  Mor22Element p_X;     // I
  Mor22Element y_plus;  // the one of trace 14 at q = 1
  Mor22Element y_minus;
};

/// Closed-form coefficients for the sign choice s = +1 or -1.
Mor22Element y_sign(int s);
/// Built once; idempotence, orthogonality, completeness and self-adjointness
/// are checked with skein products on first use (Defect on failure).
const IdempotentSet& idempotents();

struct GramReport {
  mpq_class qval;
  std::array<std::array<mpq_class, 4>, 4> entries;
  std::array<mpq_class, 4> leading_minors;
  bool positive_definite = false;
};

/// G_uv = trace(adjoint(u) v) at q = qval over the basis, with exact
/// leading principal minors. Throws EvaluationError for qval <= 0.
GramReport gram_positivity(const mpq_class& qval);

}  // namespace g2
