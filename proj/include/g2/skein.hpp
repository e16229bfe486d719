#pragma once

/**
 * @file skein.hpp
 * @brief Evaluation of closed G2 diagrams and reduction of small open ones by
 * the loop, pop, bigon, triangle, square and pentagon relations.
 *
 * A face of size n is replaced by templates glued to its n outgoing legs.
 * Templates are Mor(n,0) diagrams whose bottom points b1..bn run
 * counterclockwise around the face; the legs are matched starting from the
 * face's least half-edge.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "g2/diagram.hpp"

namespace g2 {

struct SkeinConstants {
  RatFunc delta, a, b, c, f, g, xi;
};

/// Symbolic constants, built once.
const SkeinConstants& constants();

/// The expression whose square root is xi:
/// delta^2 c^4 + 2 delta (c^4 - 2c^3 - c^2 + 4c + 2) + (c^2 - 2c - 1)^2.
RatFunc xi_radicand(const SkeinConstants& k);

/// One relation instance: the diagram with a face replaced, and its weight.
struct Rewrite {
  RatFunc coeff;
  Diagram diagram;
};

/// Replaces the face with half-edge orbit `face` (as from face_orbits(),
/// internal, simple, size 2..5) by its right-hand side. The orbit may start
/// anywhere; templates are anchored at its least half-edge.
std::vector<Rewrite> expand_face(const Diagram& d, const std::vector<int>& face);

struct EvalOptions {
  bool memoize = true;
  /// Memo keys treat a closed piece and its mirror image as the same.
  bool identify_mirror_images = true;
  /// Unset: smallest face first, ties by canonical labeling. Set: a random
  /// reducible face each step.
  std::optional<std::uint64_t> seed;
};

class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  [[nodiscard]] RatFunc eval(const Diagram& closed);
  /// Throws std::invalid_argument unless m is in Mor(0,0).
  [[nodiscard]] RatFunc eval(const Morphism& m);
  /// Rewrites faces that avoid the boundary until none of size <= 5 remain;
  /// needs k + m <= 4. A Mor(2,2) result off the basis {id2, E, I, H} throws
  /// IrreducibleResidue.
  [[nodiscard]] Morphism reduce(const Morphism& m);

  [[nodiscard]] std::size_t memo_size() const;
  [[nodiscard]] std::size_t rewrite_count() const;

 private:
  struct State;
  std::unique_ptr<State> s_;
};

/// Deterministic evaluation with a per-thread shared memo.
RatFunc eval_closed(const Morphism& m);
RatFunc eval_closed(const Diagram& d);
Morphism reduce(const Morphism& m);

/// Evaluates m `trials` times with independently randomized face choices and
/// fresh memos; true iff every run gives the same value.
bool confluence_check(const Morphism& m, int trials, std::uint64_t seed);

}  // namespace g2
