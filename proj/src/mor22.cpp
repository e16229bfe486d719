#include "g2/mor22.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2 {

namespace {

constexpr Basis22 kBasis[4] = {Basis22::id2, Basis22::E, Basis22::I, Basis22::H};

using Matrix4 = std::array<std::array<RatFunc, 4>, 4>;

// Gauss-Jordan inverse over Q(q).
Matrix4 inverse(Matrix4 a) {
  Matrix4 inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = RatFunc(1);
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && a[piv][col].is_zero()) ++piv;
    if (piv == 4) throw Defect("idempotent matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    RatFunc s = a[col][col].inverse();
    for (int j = 0; j < 4; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      RatFunc m = a[r][col];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= m * a[col][j];
        inv[r][j] -= m * inv[col][j];
      }
    }
  }
  return inv;
}

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      mpq_class f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

const std::array<RatFunc, 4>& basis_traces() {
  static const std::array<RatFunc, 4> t = [] {
    std::array<RatFunc, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = eval_closed(basis_diagram(kBasis[i]).trace_closed());
    return out;
  }();
  return t;
}

// rotation_image[i] = index of the basis diagram that basis i rotates to
const std::array<int, 4>& rotation_image() {
  static const std::array<int, 4> img = [] {
    std::array<int, 4> out{};
    for (int i = 0; i < 4; ++i) {
      DiagramKey k = basis_diagram(kBasis[i]).rotated().key(false);
      int j = 0;
      while (j < 4 && basis_diagram(kBasis[j]).key(false) != k) ++j;
      if (j == 4) throw Defect("rotation leaves the Mor(2,2) basis");
      out[i] = j;
    }
    return out;
  }();
  return img;
}

}  // namespace

Mor22Element Mor22Element::basis(Basis22 b) {
  Mor22Element x;
  x[b] = RatFunc(1);
  return x;
}

bool Mor22Element::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const RatFunc& r) { return r.is_zero(); });
}

Mor22Element operator+(const Mor22Element& x, const Mor22Element& y) {
  Mor22Element out;
  for (int i = 0; i < 4; ++i) out.c[i] = x.c[i] + y.c[i];
  return out;
}

Mor22Element operator-(const Mor22Element& x, const Mor22Element& y) {
  Mor22Element out;
  for (int i = 0; i < 4; ++i) out.c[i] = x.c[i] - y.c[i];
  return out;
}

Mor22Element operator*(const RatFunc& s, const Mor22Element& x) {
  Mor22Element out;
  for (int i = 0; i < 4; ++i) out.c[i] = s * x.c[i];
  return out;
}

std::string Mor22Element::to_string() const {
  static const char* names[4] = {"id2", "E", "I", "H"};
  std::string s;
  for (int i = 0; i < 4; ++i) s += std::string(names[i]) + ": " + c[i].to_string() + "\n";
  return s;
}

Diagram basis_diagram(Basis22 b) {
  switch (b) {
    case Basis22::id2: return catalog::id2();
    case Basis22::E: return catalog::E();
    case Basis22::I: return catalog::I();
    case Basis22::H: return catalog::H();
  }
  throw std::invalid_argument("unknown basis element");
}

Morphism to_morphism(const Mor22Element& x) {
  Morphism m(2, 2);
  for (int i = 0; i < 4; ++i) m.add(basis_diagram(kBasis[i]), x.c[i]);
  return m;
}

Mor22Element from_morphism(const Morphism& m) {
  if (m.source() != 2 || m.target() != 2) throw ArityMismatch("expected a Mor(2,2) morphism");
  Morphism r = reduce(m);
  Mor22Element x;
  for (int i = 0; i < 4; ++i) x.c[i] = r.coefficient(basis_diagram(kBasis[i]).key(false));
  return x;
}

const StructureTable& structure_constants() {
  static const StructureTable table = [] {
    StructureTable t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        t[i][j] = from_morphism(
            Morphism(compose(basis_diagram(kBasis[i]), basis_diagram(kBasis[j]))));
    return t;
  }();
  return table;
}

StructureTable spectral_structure_constants() {
  const SkeinConstants& k = constants();
  const Mor22Element idem[4] = {k.delta.inverse() * Mor22Element::basis(Basis22::E),
                                Mor22Element::basis(Basis22::I), y_sign(+1), y_sign(-1)};
  Matrix4 p;
  for (int r = 0; r < 4; ++r) p[r] = idem[r].c;
  // basis u = sum_r eig[u][r] * idem[r]
  Matrix4 eig = inverse(p);
  StructureTable t;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      for (int r = 0; r < 4; ++r) t[u][v] = t[u][v] + (eig[u][r] * eig[v][r]) * idem[r];
  return t;
}

Mor22Element multiply(const Mor22Element& x, const Mor22Element& y) {
  const StructureTable& t = structure_constants();
  Mor22Element out;
  for (int i = 0; i < 4; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j)
      if (!y.c[j].is_zero()) out = out + (x.c[i] * y.c[j]) * t[i][j];
  }
  return out;
}

RatFunc trace(const Mor22Element& x) {
  const auto& t = basis_traces();
  RatFunc sum;
  for (int i = 0; i < 4; ++i) sum += x.c[i] * t[i];
  return sum;
}

Mor22Element adjoint(const Mor22Element& x) {
  static const bool self_adjoint = [] {
    for (Basis22 b : kBasis)
      if (basis_diagram(b).adjoint().key(false) != basis_diagram(b).key(false)) return false;
    return true;
  }();
  if (!self_adjoint) throw Defect("Mor(2,2) basis is not self-adjoint");
  return x;  // real coefficients
}

Mor22Element rotate(const Mor22Element& x) {
  const auto& img = rotation_image();
  Mor22Element out;
  for (int i = 0; i < 4; ++i) out.c[img[i]] = x.c[i];
  return out;
}

Mor22Element y_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
  const SkeinConstants& k = constants();
  const RatFunc &d = k.delta, &c = k.c;
  const RatFunc sxi = RatFunc(s) * k.xi;  // +-xi
  const RatFunc c2 = c * c;
  return {(-(d + 1) * c2 + sxi + 1) / (2 * sxi),
          (d * (c2 - 2 * c - 2) - sxi + c2 - 2 * c - 1) / (2 * d * sxi),
          -(d * (c + 2) * c + sxi + c2 + 1) / (2 * sxi),
          (d * c + d + c) / sxi};
}

const IdempotentSet& idempotents() {
  static const IdempotentSet set = [] {
    const SkeinConstants& k = constants();
    IdempotentSet s;
    s.p_triv = k.delta.inverse() * Mor22Element::basis(Basis22::E);
    s.p_X = Mor22Element::basis(Basis22::I);
    Mor22Element a = y_sign(+1), b = y_sign(-1);
    const mpq_class one(1);
    if (trace(a).eval_at(one) == 14) {
      s.y_plus = a, s.y_minus = b;
    } else if (trace(b).eval_at(one) == 14) {
      s.y_plus = b, s.y_minus = a;
    } else {
      throw Defect("neither sign choice has trace 14 at q = 1");
    }
    const Mor22Element all[4] = {s.p_triv, s.p_X, s.y_plus, s.y_minus};
    Mor22Element sum;
    for (int i = 0; i < 4; ++i) {
      sum = sum + all[i];
      if (!(multiply(all[i], all[i]) == all[i])) throw Defect("idempotent fails p*p = p");
      if (!(adjoint(all[i]) == all[i])) throw Defect("idempotent is not self-adjoint");
      for (int j = i + 1; j < 4; ++j)
        if (!multiply(all[i], all[j]).is_zero()) throw Defect("idempotents are not orthogonal");
    }
    if (!(sum == Mor22Element::basis(Basis22::id2))) throw Defect("idempotents do not sum to id2");
    return s;
  }();
  return set;
}

GramReport gram_positivity(const mpq_class& qval) {
  if (qval <= 0) throw EvaluationError("q must be positive");
  GramReport g;
  g.qval = qval;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      g.entries[u][v] = trace(multiply(adjoint(Mor22Element::basis(kBasis[u])),
                                       Mor22Element::basis(kBasis[v])))
                            .eval_at(qval);
  g.positive_definite = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = g.entries[i][j];
    g.leading_minors[n - 1] = determinant(std::move(m));
    if (g.leading_minors[n - 1] <= 0) g.positive_definite = false;
  }
  return g;
}

}  // namespace g2
