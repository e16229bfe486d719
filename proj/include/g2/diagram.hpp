#pragma once

/**
 * @file diagram.hpp
 * @brief Planar trivalent diagrams in Mor(k,m) as combinatorial maps, and
 * formal linear combinations of them.
 *
 * Half-edges are indexed 0..n-1. `rotation` cycles the half-edges around each
 * internal vertex counterclockwise (cycles of length 3); boundary half-edges
 * are its fixed points. `involution` pairs half-edges into edges. The k
 * bottom boundary points are listed left to right, the m top points left to
 * right. Going counterclockwise around the rectangle the boundary reads
 * bottom[0..k-1], top[m-1..0].
 *
 * For face enumeration the boundary is closed off by one extra "outer" vertex
 * whose rotation visits the boundary half-edges in the reverse of that
 * counterclockwise order (it sits outside the disc). Faces are the orbits of
 * rotation o involution on this closure, and every stored diagram satisfies
 * V - E + F = 2 on each connected component of the closure.
 *
 * Closed components floating in an open diagram are kept, but their position
 * (which face they sit in) is not; they only ever contribute a scalar.
 */

#include <map>
#include <span>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "g2/ratfunc.hpp"

namespace g2 {

using DiagramKey = std::vector<int>;

struct DiagramParts;

class Diagram {
 public:
  /// The empty closed diagram.
  Diagram() = default;
  /// Validates all structural invariants, including planarity.
  Diagram(std::vector<int> rotation, std::vector<int> involution, std::vector<int> bottom,
          std::vector<int> top, int free_loops = 0);

  static Diagram identity(int n);
  /// Mor(n, n+2): a cup whose ends are top positions i, i+1 (1-based).
  static Diagram cup(int n, int i);
  /// Mor(n+2, n): a cap on bottom positions i, i+1.
  static Diagram cap(int n, int i);
  /// Mor(n, n+1): a trivalent vertex on strand i, feeding top i and i+1.
  static Diagram split(int n, int i);
  /// Mor(n+1, n): adjoint of split.
  static Diagram merge(int n, int i);
  static Diagram loops(int count);

  [[nodiscard]] int source() const { return static_cast<int>(bottom_.size()); }
  [[nodiscard]] int target() const { return static_cast<int>(top_.size()); }
  [[nodiscard]] bool is_closed() const { return bottom_.empty() && top_.empty(); }
  [[nodiscard]] int half_edge_count() const { return static_cast<int>(rot_.size()); }
  [[nodiscard]] int vertex_count() const;
  [[nodiscard]] int edge_count() const { return half_edge_count() / 2; }
  [[nodiscard]] int free_loops() const { return loops_; }
  [[nodiscard]] std::span<const int> rotation() const { return rot_; }
  [[nodiscard]] std::span<const int> involution() const { return twin_; }
  [[nodiscard]] std::span<const int> bottom() const { return bottom_; }
  [[nodiscard]] std::span<const int> top() const { return top_; }

  [[nodiscard]] Diagram with_free_loops(int count) const;
  /// Reflection across a horizontal line: swaps bottom and top and reverses
  /// every vertex rotation.
  [[nodiscard]] Diagram adjoint() const;
  /// Reflection across a vertical line; for closed diagrams this is the
  /// mirror image.
  [[nodiscard]] Diagram mirrored() const;
  /// One counterclockwise click for k = m >= 1: the leftmost bottom point
  /// becomes the leftmost top point, the rightmost top point becomes the
  /// rightmost bottom point. Built from one cup and one cap.
  [[nodiscard]] Diagram rotated() const;
  /// Connects top i to bottom i around the right side; requires k = m.
  [[nodiscard]] Diagram trace_closed() const;
  /// Cyclic relabeling of the bottom points of a Mor(n, 0) diagram:
  /// new bottom j = old bottom (j + shift) mod n.
  [[nodiscard]] Diagram ports_shifted(int shift) const;

  /// Rotation of the closure (boundary half-edges cycled by the outer vertex).
  [[nodiscard]] std::vector<int> closure_rotation() const;
  /// Half-edge orbits of the faces of the closure.
  [[nodiscard]] std::vector<std::vector<int>> face_orbits() const;
  /// Face sizes (edge-sides per face) of a closed diagram, ascending. Free
  /// loops are not faces here. Throws std::invalid_argument when not closed.
  [[nodiscard]] std::vector<int> faces() const;
  /// Per half-edge: internal vertex id, or -1 for a boundary half-edge.
  [[nodiscard]] std::vector<int> vertex_ids() const;
  [[nodiscard]] bool is_boundary(int h) const { return rot_[h] == h; }

  /// True when the diagram is zero by the pop relation: some edge has both
  /// ends on one vertex, or some edge is a bridge of the closure (it cuts
  /// off a piece with no boundary, which factors through Mor(0,1) = 0).
  [[nodiscard]] bool has_tadpole() const;

  [[nodiscard]] DiagramParts split_components() const;

  /// Canonical key; equal keys iff the maps are isomorphic by a relabeling
  /// that fixes the boundary positions. For connected closed pieces the
  /// search runs over every root, and also over both orientations when
  /// identify_mirror_images is set.
  [[nodiscard]] DiagramKey key(bool identify_mirror_images = true) const;
  /// The same diagram relabeled into the labeling that produced key().
  [[nodiscard]] Diagram canonical(bool identify_mirror_images = true) const;

  /// Throws std::logic_error on any violated invariant.
  void validate() const;
  [[nodiscard]] std::string describe() const;

  friend Diagram compose(const Diagram& after, const Diagram& before);
  friend Diagram tensor(const Diagram& left, const Diagram& right);
  friend class DiagramAssembly;

 private:
  struct Unchecked {};
  Diagram(Unchecked, std::vector<int> rotation, std::vector<int> involution,
          std::vector<int> bottom, std::vector<int> top, int free_loops);

  std::vector<int> rot_;
  std::vector<int> twin_;
  std::vector<int> bottom_;
  std::vector<int> top_;
  int loops_ = 0;
};

struct DiagramParts {
  Diagram anchored;             // everything connected to the boundary, plus the free loops
  std::vector<Diagram> closed;  // connected closed pieces, without loops
};

/// `after` applied after `before` (vertical stacking, before below).
Diagram compose(const Diagram& after, const Diagram& before);
/// Horizontal juxtaposition, left then right.
Diagram tensor(const Diagram& left, const Diagram& right);

/// Builds a diagram from pieces: half-edges of appended diagrams can be
/// dropped outright or fused pairwise (two boundary points identified and
/// erased, their neighbours joined). Closed chains of fused points become
/// free loops.
class DiagramAssembly {
 public:
  /// Appends the half-edges of d; returns the index offset.
  int append(const Diagram& d);
  void fuse(int a, int b);
  void drop(int h);
  void set_boundary(std::vector<int> bottom, std::vector<int> top);
  void add_loops(int n) { loops_ += n; }
  [[nodiscard]] Diagram finish(bool validate = true) const;

 private:
  std::vector<int> rot_;
  std::vector<int> twin_;
  std::vector<int> fuse_;
  std::vector<char> dropped_;
  std::vector<int> bottom_;
  std::vector<int> top_;
  int loops_ = 0;
};

/// A finite formal linear combination of diagrams in one Mor(k,m), with
/// terms keyed by canonical diagram key and zero coefficients pruned.
class Morphism {
 public:
  struct Term {
    RatFunc coeff;
    Diagram diagram;
  };

  Morphism(int k, int m) : k_(k), m_(m) {}
  explicit Morphism(const Diagram& d, const RatFunc& coeff = RatFunc(1));

  [[nodiscard]] int source() const { return k_; }
  [[nodiscard]] int target() const { return m_; }
  [[nodiscard]] bool is_closed() const { return k_ == 0 && m_ == 0; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Terms in canonical key order.
  [[nodiscard]] std::vector<Term> terms() const;
  /// Coefficient of the term whose diagram has key `k` (zero when absent).
  [[nodiscard]] RatFunc coefficient(const DiagramKey& k) const;

  void add(const Diagram& d, const RatFunc& coeff);

  Morphism operator-() const;
  friend Morphism operator+(const Morphism& a, const Morphism& b);
  friend Morphism operator-(const Morphism& a, const Morphism& b);
  friend Morphism operator*(const RatFunc& s, const Morphism& a);
  friend bool operator==(const Morphism& a, const Morphism& b);

  [[nodiscard]] std::string to_string() const;

 private:
  int k_;
  int m_;
  std::map<DiagramKey, Term> terms_;
};

Morphism compose(const Morphism& after, const Morphism& before);
Morphism tensor(const Morphism& left, const Morphism& right);
Morphism adjoint(const Morphism& x);
Morphism rotate(const Morphism& x);
Morphism trace_close(const Morphism& x);

/// Parses the diagram expression language:
///   expr   := term (('+'|'-') term)*
///   term   := scalar? factor (('.'|'*') factor)*
///   factor := generator | '(' expr ')' | 'adj(' expr ')' | 'rot(' expr ')' | 'tr(' expr ')'
///   scalar := '[' RatFunc literal ']'
/// Generators: id(n) cup(n,i) cap(n,i) split(n,i) merge(n,i). '.' composes
/// (left after right), '*' tensors. Throws ParseError or ArityMismatch.
Morphism parse_expression(std::string_view text);

/// Named diagrams used throughout.
namespace catalog {
Diagram id2();
Diagram E();  ///< cap then cup
Diagram I();  ///< merge then split
Diagram H();  ///< two vertices side by side joined by a horizontal edge
Diagram loop();
Diagram theta();
Diagram tetrahedron();
/// Prism over an n-gon (n >= 2), the closure of n stacked H's; 2n vertices.
Diagram prism(int n);
/// A random word in split, merge, cup and cap from 2 strands to 2 strands,
/// with at most max_vertices + 1 vertices.
Diagram random_word(std::mt19937_64& rng, int max_vertices);
/// A traced random word, redrawn until it has vertices and no tadpole.
Diagram random_closed(std::mt19937_64& rng, int max_vertices);
}  // namespace catalog

}  // namespace g2
