#include "g2/skein.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace g2 {

namespace {

SkeinConstants build_constants() {
  SkeinConstants k;
  RatFunc q = RatFunc::q();
  RatFunc qinv = q.inverse();
  RatFunc p1 = q + 1 + qinv;    // q + 1 + q^-1
  RatFunc m1 = q - 1 + qinv;    // q - 1 + q^-1
  RatFunc q4 = q.pow(4) + qinv.pow(4);
  k.delta = RatFunc::laurent({{10, 1}, {8, 1}, {2, 1}, {0, 1}, {-2, 1}, {-8, 1}, {-10, 1}});
  k.a = (q.pow(2) + qinv.pow(2)) / (p1 * m1 * q4);
  k.b = RatFunc(1) / (p1 * m1 * q4 * q4);
  k.c = -(q.pow(2) - 1 + qinv.pow(2)) / q4;
  k.f = -RatFunc(1) / (p1 * m1 * q4);
  k.g = -RatFunc(1) / (p1 * p1 * m1 * m1 * q4 * q4);
  RatFunc q2 = q.pow(2);
  k.xi = (1 + q2).pow(2) *
         (1 - q2 + q.pow(6) - q.pow(8) + q.pow(10) - q.pow(14) + q.pow(16)) /
         (q.pow(6) * (1 + q.pow(8)));
  if (!(k.xi * k.xi == xi_radicand(k))) throw Defect("xi does not square to its radicand");
  return k;
}

struct Template {
  RatFunc coeff;
  Diagram shape;  // Mor(n,0)
};

Diagram shape(const char* expr) { return parse_expression(expr).terms().front().diagram; }

std::vector<Template> build_templates(int n) {
  const SkeinConstants& k = constants();
  std::vector<Template> out;
  switch (n) {
    case 2:
      out.push_back({RatFunc(1), shape("cap(0,1)")});
      break;
    case 3:
      out.push_back({k.c, shape("cap(0,1) . (merge(1,1) * id(1))")});
      break;
    case 4: {
      Diagram tree = shape("cap(0,1) . (merge(1,1) * merge(1,1))");
      Diagram pairs = shape("cap(0,1) * cap(0,1)");
      out.push_back({k.a, tree});
      out.push_back({k.a, tree.ports_shifted(1)});
      out.push_back({k.b, pairs});
      out.push_back({k.b, pairs.ports_shifted(1)});
      break;
    }
    case 5: {
      Diagram tree =
          shape("cap(0,1) . (merge(1,1) * id(1)) . (merge(1,1) * id(1) * merge(1,1))");
      Diagram cup_vertex = shape("cap(0,1) * (cap(0,1) . (merge(1,1) * id(1)))");
      for (int r = 0; r < 5; ++r) out.push_back({k.f, tree.ports_shifted(r)});
      for (int r = 0; r < 5; ++r) out.push_back({k.g, cup_vertex.ports_shifted(r)});
      break;
    }
    default:
      throw std::invalid_argument("no relation for a face of size " + std::to_string(n));
  }
  return out;
}

const std::vector<Template>& templates(int n) {
  static const std::vector<Template> table[4] = {build_templates(2), build_templates(3),
                                                 build_templates(4), build_templates(5)};
  if (n < 2 || n > 5)
    throw std::invalid_argument("no relation for a face of size " + std::to_string(n));
  return table[n - 2];
}

// A face the relations apply to: size 2..5, no boundary half-edge, distinct
// vertices, and no edge with both sides on the face.
bool reducible(const Diagram& d, const std::vector<int>& face, const std::vector<int>& vid) {
  const int n = static_cast<int>(face.size());
  if (n < 2 || n > 5) return false;
  std::set<int> verts, hs(face.begin(), face.end());
  for (int h : face) {
    if (d.is_boundary(h)) return false;
    if (!verts.insert(vid[h]).second) return false;
    if (hs.count(d.involution()[h])) return false;
  }
  return true;
}

std::vector<int> from_least(std::vector<int> face) {
  std::rotate(face.begin(), std::min_element(face.begin(), face.end()), face.end());
  return face;
}

const std::vector<DiagramKey>& mor22_basis_keys() {
  static const std::vector<DiagramKey> keys = {catalog::id2().key(false), catalog::E().key(false),
                                               catalog::I().key(false), catalog::H().key(false)};
  return keys;
}

}  // namespace

const SkeinConstants& constants() {
  static const SkeinConstants k = build_constants();
  return k;
}

RatFunc xi_radicand(const SkeinConstants& k) {
  const RatFunc& d = k.delta;
  const RatFunc& c = k.c;
  RatFunc c2 = c * c, c3 = c2 * c, c4 = c3 * c;
  RatFunc tail = c2 - 2 * c - 1;
  return d * d * c4 + 2 * d * (c4 - 2 * c3 - c2 + 4 * c + 2) + tail * tail;
}

std::vector<Rewrite> expand_face(const Diagram& d, const std::vector<int>& orbit) {
  auto vid = d.vertex_ids();
  if (!reducible(d, orbit, vid)) throw Defect("expand_face: face is not reducible");
  const std::vector<int> face = from_least(orbit);
  const int n = static_cast<int>(face.size());
  auto rot = d.rotation();
  auto twin = d.involution();
  // Walking the orbit keeps the face on one side; the legs, read
  // counterclockwise from inside the face, come in the reverse order.
  std::vector<int> legs(n);
  for (int i = 0; i < n; ++i) legs[i] = rot[face[(n - i) % n]];

  std::vector<Rewrite> out;
  for (const Template& t : templates(n)) {
    DiagramAssembly as;
    as.append(d);
    for (int h : face) {
      as.drop(h);
      as.drop(twin[h]);
    }
    const int off = as.append(t.shape);
    for (int j = 0; j < n; ++j) as.fuse(legs[j], off + t.shape.bottom()[j]);
    as.set_boundary({d.bottom().begin(), d.bottom().end()}, {d.top().begin(), d.top().end()});
    out.push_back({t.coeff, as.finish()});
  }
  return out;
}

struct Evaluator::State {
  EvalOptions opt;
  std::mt19937_64 rng;
  std::map<DiagramKey, RatFunc> closed_memo;
  std::map<DiagramKey, Morphism> open_memo;
  std::size_t rewrites = 0;

  explicit State(EvalOptions o) : opt(o), rng(o.seed.value_or(0)) {}

  // Index into `faces` of the face to rewrite, or -1.
  int choose(const Diagram& d, const std::vector<std::vector<int>>& faces) {
    auto vid = d.vertex_ids();
    std::vector<int> candidates;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (reducible(d, faces[i], vid)) candidates.push_back(static_cast<int>(i));
    if (candidates.empty()) return -1;
    if (opt.seed) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      return candidates[pick(rng)];
    }
    auto rank = [&](int i) {
      return std::pair(faces[i].size(), *std::min_element(faces[i].begin(), faces[i].end()));
    };
    return *std::min_element(candidates.begin(), candidates.end(),
                             [&](int x, int y) { return rank(x) < rank(y); });
  }

  std::vector<Rewrite> step(const Diagram& d, const std::vector<int>& face) {
    ++rewrites;
    auto terms = expand_face(d, face);
    for (const auto& t : terms)
      if (t.diagram.vertex_count() >= d.vertex_count())
        throw Defect("rewrite did not lower the vertex count");
    return terms;
  }

  // Connected closed piece without free loops.
  RatFunc component(const Diagram& c) {
    if (c.half_edge_count() == 0) return RatFunc(1);
    DiagramKey key;
    if (opt.memoize) {
      key = c.key(opt.identify_mirror_images);
      if (auto it = closed_memo.find(key); it != closed_memo.end()) return it->second;
    }
    RatFunc value;
    if (!c.has_tadpole()) {
      Diagram w = opt.seed ? c : c.canonical(opt.identify_mirror_images);
      auto faces = w.face_orbits();
      int i = choose(w, faces);
      if (i < 0) throw Defect("no reducible face found in " + w.describe());
      for (const auto& t : step(w, faces[i])) value += t.coeff * closed(t.diagram);
    }
    if (opt.memoize) closed_memo.emplace(std::move(key), value);
    return value;
  }

  // Loops and floating pieces of any diagram, as a scalar.
  RatFunc scalar_part(const DiagramParts& parts, int loops) {
    RatFunc value = constants().delta.pow(loops);
    for (const auto& c : parts.closed) {
      if (value.is_zero()) break;
      value *= component(c);
    }
    return value;
  }

  RatFunc closed(const Diagram& d) {
    if (!d.is_closed()) throw std::invalid_argument("eval: diagram is not closed");
    return scalar_part(d.split_components(), d.free_loops());
  }

  Morphism open(const Diagram& d) {
    DiagramKey key;
    if (opt.memoize) {
      key = d.key(false);
      if (auto it = open_memo.find(key); it != open_memo.end()) return it->second;
    }
    Morphism out(d.source(), d.target());
    auto parts = d.split_components();
    RatFunc scalar = scalar_part(parts, d.free_loops());
    Diagram a = parts.anchored.with_free_loops(0);
    if (!scalar.is_zero() && !a.has_tadpole()) {
      Diagram w = a.canonical(false);
      auto faces = w.face_orbits();
      int i = choose(w, faces);
      if (i < 0) {
        out.add(w, scalar);
      } else {
        for (const auto& t : step(w, faces[i])) out = out + (scalar * t.coeff) * open(t.diagram);
      }
    }
    if (opt.memoize) open_memo.emplace(std::move(key), out);
    return out;
  }
};

Evaluator::Evaluator(EvalOptions options) : s_(std::make_unique<State>(options)) {}
Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

RatFunc Evaluator::eval(const Diagram& closed) { return s_->closed(closed); }

RatFunc Evaluator::eval(const Morphism& m) {
  if (!m.is_closed()) throw std::invalid_argument("eval: morphism is not in Mor(0,0)");
  RatFunc total;
  for (const auto& t : m.terms()) total += t.coeff * s_->closed(t.diagram);
  return total;
}

Morphism Evaluator::reduce(const Morphism& m) {
  if (m.source() + m.target() > 4)
    throw ArityMismatch("reduce handles Mor(k,m) with k + m <= 4, got Mor(" +
                        std::to_string(m.source()) + "," + std::to_string(m.target()) + ")");
  Morphism out(m.source(), m.target());
  for (const auto& t : m.terms()) out = out + t.coeff * s_->open(t.diagram);
  if (m.source() == 2 && m.target() == 2) {
    const auto& basis = mor22_basis_keys();
    for (const auto& t : out.terms())
      if (std::find(basis.begin(), basis.end(), t.diagram.key(false)) == basis.end())
        throw IrreducibleResidue("Mor(2,2) reduction left " + t.diagram.describe());
  }
  return out;
}

std::size_t Evaluator::memo_size() const { return s_->closed_memo.size() + s_->open_memo.size(); }
std::size_t Evaluator::rewrite_count() const { return s_->rewrites; }

namespace {
Evaluator& shared_evaluator() {
  thread_local Evaluator ev;
  return ev;
}
}  // namespace

RatFunc eval_closed(const Morphism& m) { return shared_evaluator().eval(m); }
RatFunc eval_closed(const Diagram& d) { return shared_evaluator().eval(d); }
Morphism reduce(const Morphism& m) { return shared_evaluator().reduce(m); }

bool confluence_check(const Morphism& m, int trials, std::uint64_t seed) {
  if (!m.is_closed()) throw std::invalid_argument("confluence_check: morphism is not closed");
  std::optional<RatFunc> first;
  std::mt19937_64 gen(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Evaluator ev(EvalOptions{.memoize = true, .identify_mirror_images = true, .seed = gen()});
    RatFunc v = ev.eval(m);
    if (!first) first = v;
    else if (!(v == *first)) return false;
  }
  return true;
}

}  // namespace g2
