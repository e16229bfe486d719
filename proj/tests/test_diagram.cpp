#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "g2/diagram.hpp"

using namespace g2;

namespace {

Diagram one(const char* expr) {
  Morphism m = parse_expression(expr);
  REQUIRE(m.size() == 1);
  return m.terms().front().diagram;
}

// Same map under a random permutation of half-edge labels.
Diagram relabeled(const Diagram& d, std::mt19937_64& rng) {
  const int n = d.half_edge_count();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<int> rot(n), twin(n), b, t;
  for (int h = 0; h < n; ++h) {
    rot[p[h]] = p[d.rotation()[h]];
    twin[p[h]] = p[d.involution()[h]];
  }
  for (int h : d.bottom()) b.push_back(p[h]);
  for (int h : d.top()) t.push_back(p[h]);
  return {rot, twin, b, t, d.free_loops()};
}

}  // namespace

TEST_CASE("generators are valid planar maps") {
  for (int n = 0; n <= 3; ++n) {
    Diagram::identity(n).validate();
    for (int i = 1; i <= n + 1; ++i) {
      Diagram::cup(n, i).validate();
      Diagram::cap(n, i).validate();
    }
    for (int i = 1; i <= n; ++i) {
      Diagram s = Diagram::split(n, i);
      s.validate();
      Diagram::merge(n, i).validate();
      CHECK(s.source() == n);
      CHECK(s.target() == n + 1);
      CHECK(s.vertex_count() == 1);
    }
  }
  CHECK_THROWS(Diagram::cup(1, 3));
  CHECK_THROWS(Diagram::split(0, 1));
}

TEST_CASE("basis diagrams from expressions") {
  Diagram E = one("cup(0,1) . cap(0,1)");
  Diagram I = one("split(1,1) . merge(1,1)");
  Diagram id2 = one("id(1) * id(1)");
  Diagram H = catalog::H();
  for (const Diagram* d : {&E, &I, &id2, &H}) {
    d->validate();
    CHECK(d->source() == 2);
    CHECK(d->target() == 2);
  }
  CHECK(E.vertex_count() == 0);
  CHECK(I.vertex_count() == 2);
  CHECK(H.vertex_count() == 2);
  CHECK(id2.key() == Diagram::identity(2).key());
  // E's strands join b1-b2 and t1-t2
  CHECK(E.involution()[E.bottom()[0]] == E.bottom()[1]);
  CHECK(E.involution()[E.top()[0]] == E.top()[1]);
  // the four are pairwise distinct
  std::vector<DiagramKey> keys = {id2.key(), E.key(), I.key(), H.key()};
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("other constructions of E and H give the same key") {
  CHECK(one("cup(0,1) . cap(0,1)").key() == one("(cup(0,1) . cap(0,1))").key());
  CHECK(one("(id(1) * merge(1,1)) . (split(1,1) * id(1))").key() == catalog::H().key());
  CHECK(one("cap(1,2) . cup(1,1)").key() == Diagram::identity(1).key());  // zigzag
  CHECK(one("cap(1,1) . cup(1,2)").key() == Diagram::identity(1).key());
}

TEST_CASE("canonical key is relabeling invariant") {
  std::mt19937_64 rng(99);
  std::vector<Diagram> cat = {catalog::id2(), catalog::E(), catalog::I(), catalog::H(),
                              catalog::theta(), catalog::tetrahedron(), catalog::prism(3),
                              catalog::prism(5), one("split(2,1) . merge(2,2)")};
  for (const auto& d : cat)
    for (int r = 0; r < 5; ++r) {
      Diagram e = relabeled(d, rng);
      CHECK(e.key() == d.key());
      CHECK(e.key(false) == d.key(false));
      CHECK(e.canonical().key() == d.key());
    }
}

TEST_CASE("canonical key is injective on the catalog") {
  std::vector<Diagram> cat = {catalog::id2(), catalog::E(), catalog::I(), catalog::H(),
                              catalog::theta(), catalog::tetrahedron(), catalog::loop(),
                              Diagram::loops(2), catalog::prism(3), catalog::prism(4)};
  std::vector<DiagramKey> keys;
  for (const auto& d : cat) keys.push_back(d.key());
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("faces") {
  CHECK(catalog::theta().faces() == std::vector<int>{2, 2, 2});
  CHECK(catalog::tetrahedron().faces() == std::vector<int>{3, 3, 3, 3});
  CHECK(catalog::loop().faces().empty());
  CHECK(catalog::loop().free_loops() == 1);
  CHECK(catalog::prism(5).faces() == std::vector<int>{4, 4, 4, 4, 4, 5, 5});
  CHECK(catalog::prism(4).faces() == std::vector<int>(6, 4));
  CHECK_THROWS_AS((void)catalog::H().faces(), std::invalid_argument);
  for (int n = 2; n <= 6; ++n) {
    Diagram p = catalog::prism(n);
    auto f = p.faces();
    CHECK(std::accumulate(f.begin(), f.end(), 0) == 2 * p.edge_count());
    CHECK(f.front() <= 5);
    CHECK(p.vertex_count() == 2 * n);
  }
}

TEST_CASE("rotation") {
  auto key = [](const Diagram& d) { return d.key(); };
  CHECK(key(catalog::I().rotated()) == key(catalog::H()));
  CHECK(key(catalog::H().rotated()) == key(catalog::I()));
  CHECK(key(catalog::id2().rotated()) == key(catalog::E()));
  CHECK(key(catalog::E().rotated()) == key(catalog::id2()));
  for (const Diagram& d : {catalog::id2(), catalog::E(), catalog::I(), catalog::H(),
                           one("split(2,1) . merge(2,2)"), Diagram::identity(1)}) {
    Diagram r = d;
    for (int j = 0; j < d.source() + d.target(); ++j) {
      r = r.rotated();
      r.validate();
    }
    CHECK(r.key() == d.key());
  }
  CHECK_THROWS_AS((void)Diagram::split(1, 1).rotated(), ArityMismatch);
}

TEST_CASE("adjoint") {
  CHECK(catalog::E().adjoint().key() == catalog::E().key());
  CHECK(catalog::I().adjoint().key() == catalog::I().key());
  CHECK(catalog::H().adjoint().key() == catalog::H().key());
  Morphism f = parse_expression("split(1,1) . merge(1,1) . (merge(1,1) * id(1)) . (id(1) * split(1,1))");
  Morphism g = parse_expression("(merge(1,1) * id(1)) . (id(1) * cup(0,1))");
  CHECK(adjoint(adjoint(f)) == f);
  CHECK(adjoint(compose(f, g)) == compose(adjoint(g), adjoint(f)));
  Diagram d = one("split(2,2) . merge(2,1)");
  CHECK(d.adjoint().adjoint().key() == d.key());
}

TEST_CASE("trace") {
  Diagram t = catalog::id2().trace_closed();
  CHECK(t.is_closed());
  CHECK(t.free_loops() == 2);
  CHECK(t.half_edge_count() == 0);
  CHECK(catalog::E().trace_closed().free_loops() == 1);
  Diagram th = catalog::theta();
  CHECK(th.vertex_count() == 2);
  CHECK(th.free_loops() == 0);
  CHECK(catalog::H().trace_closed().has_tadpole());
  CHECK(!catalog::tetrahedron().has_tadpole());
  CHECK(!catalog::prism(4).has_tadpole());
}

TEST_CASE("tadpoles and bridges") {
  // cap over a vertex: loop edge at the vertex
  CHECK(one("cap(0,1) . split(1,1)").has_tadpole());
  CHECK(compose(catalog::E(), catalog::I()).has_tadpole());
  // dumbbell: two lollipops joined by a bridge
  Diagram dumbbell = one("cap(0,1) . split(1,1) . merge(1,1) . cup(0,1)");
  CHECK(dumbbell.has_tadpole());
  CHECK(!catalog::I().has_tadpole());
  CHECK(!catalog::E().has_tadpole());
}

TEST_CASE("mirror") {
  Diagram k4 = catalog::tetrahedron();
  CHECK(k4.mirrored().key() == k4.key());
  Diagram d = one("cap(0,1) . (merge(1,1) * id(1)) . (id(1) * split(1,1))");
  CHECK(d.mirrored().mirrored().key() == d.key());
}

TEST_CASE("components") {
  Morphism m = tensor(parse_expression("tr(split(1,1) . merge(1,1))"), parse_expression("tr(id(1))"));
  REQUIRE(m.size() == 1);
  Diagram d = m.terms().front().diagram;
  CHECK(d.free_loops() == 1);
  auto parts = d.split_components();
  CHECK(parts.closed.size() == 1);
  Diagram two = tensor(catalog::theta(), catalog::tetrahedron());
  CHECK(two.split_components().closed.size() == 2);
  CHECK(tensor(catalog::theta(), catalog::tetrahedron()).key() ==
        tensor(catalog::tetrahedron(), catalog::theta()).key());
  // a closed piece floating beside a strand
  Diagram open = tensor(Diagram::identity(1), catalog::theta());
  auto op = open.split_components();
  CHECK(op.anchored.source() == 1);
  CHECK(op.anchored.vertex_count() == 0);
  CHECK(op.closed.size() == 1);
}

TEST_CASE("parser") {
  Morphism m = parse_expression("[2] id(1) * id(1) - [q] cup(0,1) . cap(0,1) + id(2)");
  CHECK(m.size() == 2);
  CHECK(m.coefficient(Diagram::identity(2).key(false)) == RatFunc(3));
  CHECK(m.coefficient(catalog::E().key(false)) == -RatFunc::q());
  CHECK(parse_expression("id(1) - id(1)").is_zero());
  CHECK(parse_expression("[ (q^2+1)/(q^4) ] tr(id(1))").is_closed());
  CHECK_THROWS_AS(parse_expression("cup(0,1) . cup(0,1)"), ArityMismatch);
  CHECK_THROWS_AS(parse_expression("id(1) + id(2)"), ArityMismatch);
  CHECK_THROWS_AS(parse_expression("tr(split(1,1))"), ArityMismatch);
  CHECK_THROWS_AS(parse_expression("foo(1)"), ParseError);
  CHECK_THROWS_AS(parse_expression("id(1"), ParseError);
  CHECK_THROWS_AS(parse_expression("[q id(1)"), ParseError);
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  try {
    parse_expression("id(1) . ");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 8);
  }
}

TEST_CASE("validation rejects nonplanar or malformed maps") {
  // two strands b1-t2 and b2-t1 must cross
  CHECK_THROWS_AS(Diagram({0, 1, 2, 3}, {3, 2, 1, 0}, {0, 1}, {2, 3}), std::logic_error);
  // a 4-valent vertex
  CHECK_THROWS_AS(Diagram({1, 2, 3, 0}, {2, 3, 0, 1}, {}, {}), std::logic_error);
  // theta with one vertex reversed sits on a torus
  Diagram th = catalog::theta();
  std::vector<int> rot(th.rotation().begin(), th.rotation().end());
  auto vid = th.vertex_ids();
  int a = 0;
  while (vid[a] != 0) ++a;
  int b = rot[a], c = rot[b];
  rot[a] = c;
  rot[c] = b;
  rot[b] = a;
  std::vector<int> twin(th.involution().begin(), th.involution().end());
  bool planar = true;
  try {
    Diagram bad(rot, twin, {}, {});
  } catch (const std::logic_error&) {
    planar = false;
  }
  CHECK_FALSE(planar);
}
