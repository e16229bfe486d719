#include "g2/diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace g2 {

namespace {

std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

// Component id per half-edge of the closure (boundary half-edges share one).
std::vector<int> closure_components(const std::vector<int>& crot, const std::vector<int>& twin) {
  const int n = static_cast<int>(crot.size());
  UnionFind uf(n);
  for (int h = 0; h < n; ++h) {
    uf.unite(h, crot[h]);
    uf.unite(h, twin[h]);
  }
  std::vector<int> comp(n);
  for (int h = 0; h < n; ++h) comp[h] = uf.find(h);
  return comp;
}

std::vector<std::vector<int>> orbits(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int h = 0; h < n; ++h) {
    if (seen[h]) continue;
    std::vector<int> orbit;
    for (int x = h; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

// Breadth-first labeling of the component containing `root`, following the
// given rotation and the involution. Returns the visiting order and writes
// the label of each visited half-edge.
std::vector<int> bfs_order(int root, const std::vector<int>& rot, const std::vector<int>& twin,
                           std::vector<int>& label) {
  std::vector<int> order;
  std::deque<int> queue{root};
  label[root] = 0;
  order.push_back(root);
  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    for (int nb : {rot[h], twin[h]}) {
      if (label[nb] >= 0) continue;
      label[nb] = static_cast<int>(order.size());
      order.push_back(nb);
      queue.push_back(nb);
    }
  }
  return order;
}

std::vector<int> code_of(const std::vector<int>& order, const std::vector<int>& label,
                         const std::vector<int>& rot, const std::vector<int>& twin) {
  std::vector<int> code;
  code.reserve(2 * order.size());
  for (int h : order) {
    code.push_back(label[rot[h]]);
    code.push_back(label[twin[h]]);
  }
  return code;
}

// Minimal code of a connected closed map over all roots (and orientations).
struct ClosedCanon {
  std::vector<int> code;
  std::vector<int> order;  // half-edges in label order
  bool reversed = false;
};

ClosedCanon canon_closed(const std::vector<int>& rot, const std::vector<int>& twin, bool both) {
  const int n = static_cast<int>(rot.size());
  ClosedCanon best;
  std::vector<int> rinv = inverse_permutation(rot);
  std::vector<int> label(n);
  for (int pass = 0; pass < (both ? 2 : 1); ++pass) {
    const std::vector<int>& r = pass == 0 ? rot : rinv;
    for (int root = 0; root < n; ++root) {
      std::fill(label.begin(), label.end(), -1);
      auto order = bfs_order(root, r, twin, label);
      auto code = code_of(order, label, r, twin);
      if (best.code.empty() || code < best.code) {
        best.code = std::move(code);
        best.order = std::move(order);
        best.reversed = pass == 1;
      }
    }
  }
  return best;
}

}  // namespace

Diagram::Diagram(std::vector<int> rotation, std::vector<int> involution, std::vector<int> bottom,
                 std::vector<int> top, int free_loops)
    : rot_(std::move(rotation)),
      twin_(std::move(involution)),
      bottom_(std::move(bottom)),
      top_(std::move(top)),
      loops_(free_loops) {
  validate();
}

Diagram::Diagram(Unchecked, std::vector<int> rotation, std::vector<int> involution,
                 std::vector<int> bottom, std::vector<int> top, int free_loops)
    : rot_(std::move(rotation)),
      twin_(std::move(involution)),
      bottom_(std::move(bottom)),
      top_(std::move(top)),
      loops_(free_loops) {}

void Diagram::validate() const {
  const int n = half_edge_count();
  auto fail = [](const std::string& what) { throw std::logic_error("invalid diagram: " + what); };
  if (static_cast<int>(twin_.size()) != n) fail("size mismatch");
  if (loops_ < 0) fail("negative loop count");
  std::vector<int> seen(n, 0);
  for (int h = 0; h < n; ++h) {
    if (rot_[h] < 0 || rot_[h] >= n || twin_[h] < 0 || twin_[h] >= n) fail("index out of range");
    if (seen[rot_[h]]++) fail("rotation is not a permutation");
    if (twin_[h] == h || twin_[twin_[h]] != h) fail("involution is not fixed-point free");
  }
  std::vector<char> bnd(n, 0);
  for (const auto* list : {&bottom_, &top_}) {
    for (int h : *list) {
      if (h < 0 || h >= n) fail("boundary index out of range");
      if (bnd[h]) fail("boundary half-edge listed twice");
      bnd[h] = 1;
    }
  }
  for (const auto& cyc : orbits(rot_)) {
    if (cyc.size() == 1) {
      if (!bnd[cyc[0]]) fail("unlisted fixed point of the rotation");
    } else if (cyc.size() == 3) {
      for (int h : cyc)
        if (bnd[h]) fail("boundary half-edge on a vertex");
    } else {
      fail("vertex of valence " + std::to_string(cyc.size()));
    }
  }
  // Euler characteristic per connected component of the closure.
  auto crot = closure_rotation();
  auto comp = closure_components(crot, twin_);
  std::vector<int> phi(n);
  for (int h = 0; h < n; ++h) phi[h] = crot[twin_[h]];
  std::map<int, long> chi;
  for (const auto& cyc : orbits(crot)) chi[comp[cyc[0]]] += 2;
  for (const auto& cyc : orbits(phi)) chi[comp[cyc[0]]] += 2;
  for (int h = 0; h < n; ++h) chi[comp[h]] -= 1;
  for (const auto& [c, twice] : chi)
    if (twice != 4) fail("not planar with the boundary on the outer face");
}

int Diagram::vertex_count() const {
  int fixed = 0;
  for (int h = 0; h < half_edge_count(); ++h)
    if (rot_[h] == h) ++fixed;
  return (half_edge_count() - fixed) / 3;
}

Diagram Diagram::identity(int n) {
  if (n < 0) throw std::invalid_argument("id: negative arity");
  std::vector<int> rot(2 * n), twin(2 * n), bottom(n), top(n);
  std::iota(rot.begin(), rot.end(), 0);
  for (int i = 0; i < n; ++i) {
    bottom[i] = i;
    top[i] = n + i;
    twin[i] = n + i;
    twin[n + i] = i;
  }
  return {Unchecked{}, rot, twin, bottom, top, 0};
}

namespace {

void check_position(const char* name, int n, int i, int slots) {
  if (n < 0 || i < 1 || i > slots)
    throw std::invalid_argument(std::string(name) + "(" + std::to_string(n) + "," +
                                std::to_string(i) + "): position out of range");
}

}  // namespace

Diagram Diagram::cup(int n, int i) {
  check_position("cup", n, i, n + 1);
  // bottoms 0..n-1, tops n..2n+1
  const int h = 2 * n + 2;
  std::vector<int> rot(h), twin(h), bottom(n), top(n + 2);
  std::iota(rot.begin(), rot.end(), 0);
  for (int j = 0; j < n; ++j) bottom[j] = j;
  for (int j = 0; j < n + 2; ++j) top[j] = n + j;
  auto link = [&](int a, int b) { twin[a] = b, twin[b] = a; };
  for (int j = 1; j <= n; ++j) link(bottom[j - 1], top[(j < i ? j : j + 2) - 1]);
  link(top[i - 1], top[i]);
  return {Unchecked{}, rot, twin, bottom, top, 0};
}

Diagram Diagram::cap(int n, int i) { return cup(n, i).adjoint(); }

Diagram Diagram::split(int n, int i) {
  check_position("split", n, i, n);
  // bottoms 0..n-1, tops n..2n, vertex (down, up-right, up-left) at 2n+1..2n+3
  const int h = 2 * n + 4;
  std::vector<int> rot(h), twin(h), bottom(n), top(n + 1);
  std::iota(rot.begin(), rot.end(), 0);
  for (int j = 0; j < n; ++j) bottom[j] = j;
  for (int j = 0; j <= n; ++j) top[j] = n + j;
  const int down = 2 * n + 1, upright = down + 1, upleft = down + 2;
  rot[down] = upright;
  rot[upright] = upleft;
  rot[upleft] = down;
  auto link = [&](int a, int b) { twin[a] = b, twin[b] = a; };
  for (int j = 1; j <= n; ++j) {
    if (j < i) link(bottom[j - 1], top[j - 1]);
    if (j > i) link(bottom[j - 1], top[j]);
  }
  link(down, bottom[i - 1]);
  link(upleft, top[i - 1]);
  link(upright, top[i]);
  return {Unchecked{}, rot, twin, bottom, top, 0};
}

Diagram Diagram::merge(int n, int i) { return split(n, i).adjoint(); }

Diagram Diagram::loops(int count) {
  if (count < 0) throw std::invalid_argument("negative loop count");
  return {Unchecked{}, {}, {}, {}, {}, count};
}

Diagram Diagram::with_free_loops(int count) const {
  Diagram d = *this;
  d.loops_ = count;
  return d;
}

Diagram Diagram::adjoint() const {
  return {Unchecked{}, inverse_permutation(rot_), twin_, top_, bottom_, loops_};
}

Diagram Diagram::mirrored() const {
  std::vector<int> b(bottom_.rbegin(), bottom_.rend()), t(top_.rbegin(), top_.rend());
  return {Unchecked{}, inverse_permutation(rot_), twin_, b, t, loops_};
}

Diagram Diagram::rotated() const {
  const int k = source();
  if (k != target() || k < 1)
    throw ArityMismatch("rotate needs Mor(k,k) with k >= 1, got Mor(" + std::to_string(k) + "," +
                        std::to_string(target()) + ")");
  Diagram lower = tensor(cup(0, 1), identity(k));
  Diagram middle = tensor(tensor(identity(1), *this), identity(1));
  Diagram upper = tensor(identity(k), cap(0, 1));
  return compose(upper, compose(middle, lower));
}

Diagram Diagram::trace_closed() const {
  if (source() != target())
    throw ArityMismatch("trace needs Mor(k,k), got Mor(" + std::to_string(source()) + "," +
                        std::to_string(target()) + ")");
  DiagramAssembly as;
  as.append(*this);
  for (int i = 0; i < source(); ++i) as.fuse(top_[i], bottom_[i]);
  return as.finish();
}

Diagram Diagram::ports_shifted(int shift) const {
  const int n = source();
  if (target() != 0 || n == 0) throw std::invalid_argument("ports_shifted needs Mor(n,0), n > 0");
  std::vector<int> b(n);
  for (int j = 0; j < n; ++j) b[j] = bottom_[((j + shift) % n + n) % n];
  return {Unchecked{}, rot_, twin_, b, {}, loops_};
}

std::vector<int> Diagram::closure_rotation() const {
  std::vector<int> crot = rot_;
  std::vector<int> ccw(bottom_);
  ccw.insert(ccw.end(), top_.rbegin(), top_.rend());
  const int n = static_cast<int>(ccw.size());
  for (int j = 0; j < n; ++j) crot[ccw[j]] = ccw[(j + n - 1) % n];
  return crot;
}

std::vector<std::vector<int>> Diagram::face_orbits() const {
  auto crot = closure_rotation();
  std::vector<int> phi(half_edge_count());
  for (int h = 0; h < half_edge_count(); ++h) phi[h] = crot[twin_[h]];
  return orbits(phi);
}

std::vector<int> Diagram::faces() const {
  if (!is_closed()) throw std::invalid_argument("faces: diagram is not closed");
  std::vector<int> sizes;
  for (const auto& f : face_orbits()) sizes.push_back(static_cast<int>(f.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<int> Diagram::vertex_ids() const {
  std::vector<int> id(half_edge_count(), -1);
  int next = 0;
  for (const auto& cyc : orbits(rot_))
    if (cyc.size() == 3) {
      for (int h : cyc) id[h] = next;
      ++next;
    }
  return id;
}

bool Diagram::has_tadpole() const {
  auto vid = vertex_ids();
  for (int h = 0; h < half_edge_count(); ++h)
    if (vid[h] >= 0 && vid[h] == vid[twin_[h]]) return true;
  std::vector<int> face(half_edge_count());
  int f = 0;
  for (const auto& orbit : face_orbits()) {
    for (int h : orbit) face[h] = f;
    ++f;
  }
  for (int h = 0; h < half_edge_count(); ++h)
    if (face[h] == face[twin_[h]]) return true;
  return false;
}

DiagramParts Diagram::split_components() const {
  auto crot = closure_rotation();
  auto comp = closure_components(crot, twin_);
  const int anchor = bottom_.empty() ? (top_.empty() ? -1 : comp[top_[0]]) : comp[bottom_[0]];
  std::map<int, std::vector<int>> members;
  for (int h = 0; h < half_edge_count(); ++h) members[comp[h]].push_back(h);

  auto extract = [&](const std::vector<int>& hs, bool with_boundary) {
    std::vector<int> idx(half_edge_count(), -1);
    for (std::size_t j = 0; j < hs.size(); ++j) idx[hs[j]] = static_cast<int>(j);
    std::vector<int> r(hs.size()), t(hs.size());
    for (std::size_t j = 0; j < hs.size(); ++j) {
      r[j] = idx[rot_[hs[j]]];
      t[j] = idx[twin_[hs[j]]];
    }
    std::vector<int> b, tp;
    if (with_boundary) {
      for (int h : bottom_) b.push_back(idx[h]);
      for (int h : top_) tp.push_back(idx[h]);
    }
    return Diagram(Unchecked{}, r, t, b, tp, 0);
  };

  DiagramParts out;
  if (anchor >= 0)
    out.anchored = extract(members[anchor], true);
  for (const auto& [c, hs] : members)
    if (c != anchor) out.closed.push_back(extract(hs, false));
  out.anchored.loops_ = loops_;
  return out;
}

DiagramKey Diagram::key(bool identify_mirror_images) const {
  auto parts = split_components();
  const Diagram& a = parts.anchored;
  DiagramKey key{source(), target(), loops_, a.half_edge_count()};
  if (!a.rot_.empty()) {
    auto crot = a.closure_rotation();
    std::vector<int> label(a.half_edge_count(), -1);
    int root = a.bottom_.empty() ? a.top_.back() : a.bottom_.front();
    auto order = bfs_order(root, crot, a.twin_, label);
    auto code = code_of(order, label, crot, a.twin_);
    key.insert(key.end(), code.begin(), code.end());
  }
  std::vector<std::vector<int>> closed;
  for (const auto& c : parts.closed)
    closed.push_back(canon_closed(c.rot_, c.twin_, identify_mirror_images).code);
  std::sort(closed.begin(), closed.end());
  for (const auto& c : closed) {
    key.push_back(static_cast<int>(c.size()));
    key.insert(key.end(), c.begin(), c.end());
  }
  return key;
}

Diagram Diagram::canonical(bool identify_mirror_images) const {
  // Relabel each piece in canonical order; floating closed pieces follow the
  // anchored part, sorted by their codes.
  auto parts = split_components();
  std::vector<std::pair<std::vector<int>, Diagram>> pieces;
  auto relabel = [](const Diagram& d, const std::vector<int>& order, bool reversed) {
    std::vector<int> label(d.half_edge_count());
    for (std::size_t j = 0; j < order.size(); ++j) label[order[j]] = static_cast<int>(j);
    std::vector<int> rot = reversed ? inverse_permutation(d.rot_) : d.rot_;
    std::vector<int> r(order.size()), t(order.size()), b, tp;
    for (std::size_t j = 0; j < order.size(); ++j) {
      r[j] = label[rot[order[j]]];
      t[j] = label[d.twin_[order[j]]];
    }
    for (int h : d.bottom_) b.push_back(label[h]);
    for (int h : d.top_) tp.push_back(label[h]);
    return Diagram(Unchecked{}, r, t, b, tp, d.loops_);
  };

  Diagram head = parts.anchored;
  if (!head.rot_.empty()) {
    auto crot = head.closure_rotation();
    std::vector<int> label(head.half_edge_count(), -1);
    int root = head.bottom_.empty() ? head.top_.back() : head.bottom_.front();
    head = relabel(head, bfs_order(root, crot, head.twin_, label), false);
  }
  for (const auto& c : parts.closed) {
    auto cc = canon_closed(c.rot_, c.twin_, identify_mirror_images);
    pieces.emplace_back(cc.code, relabel(c, cc.order, cc.reversed));
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Diagram out = head;
  for (const auto& [code, piece] : pieces) {
    const int off = out.half_edge_count();
    for (int h = 0; h < piece.half_edge_count(); ++h) {
      out.rot_.push_back(piece.rot_[h] + off);
      out.twin_.push_back(piece.twin_[h] + off);
    }
  }
  return out;
}

std::string Diagram::describe() const {
  std::ostringstream os;
  auto list = [&](const char* name, const std::vector<int>& v) {
    os << ' ' << name << "=[";
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v[j];
    os << ']';
  };
  os << "Mor(" << source() << ',' << target() << ") vertices=" << vertex_count()
     << " loops=" << loops_;
  list("rot", rot_);
  list("twin", twin_);
  list("bottom", bottom_);
  list("top", top_);
  return os.str();
}

Diagram compose(const Diagram& after, const Diagram& before) {
  if (before.target() != after.source())
    throw ArityMismatch("compose: Mor(" + std::to_string(after.source()) + "," +
                        std::to_string(after.target()) + ") after Mor(" +
                        std::to_string(before.source()) + "," + std::to_string(before.target()) +
                        ")");
  DiagramAssembly as;
  const int lo = as.append(before);
  const int hi = as.append(after);
  for (int i = 0; i < before.target(); ++i) as.fuse(lo + before.top_[i], hi + after.bottom_[i]);
  std::vector<int> b, t;
  for (int h : before.bottom_) b.push_back(lo + h);
  for (int h : after.top_) t.push_back(hi + h);
  as.set_boundary(b, t);
  return as.finish(false);
}

Diagram tensor(const Diagram& left, const Diagram& right) {
  DiagramAssembly as;
  const int l = as.append(left);
  const int r = as.append(right);
  std::vector<int> b, t;
  for (int h : left.bottom_) b.push_back(l + h);
  for (int h : right.bottom_) b.push_back(r + h);
  for (int h : left.top_) t.push_back(l + h);
  for (int h : right.top_) t.push_back(r + h);
  as.set_boundary(b, t);
  return as.finish(false);
}

int DiagramAssembly::append(const Diagram& d) {
  const int off = static_cast<int>(rot_.size());
  for (int h = 0; h < d.half_edge_count(); ++h) {
    rot_.push_back(d.rot_[h] + off);
    twin_.push_back(d.twin_[h] + off);
    fuse_.push_back(-1);
    dropped_.push_back(0);
  }
  loops_ += d.loops_;
  return off;
}

void DiagramAssembly::fuse(int a, int b) {
  if (a == b || fuse_.at(a) >= 0 || fuse_.at(b) >= 0)
    throw std::logic_error("assembly: half-edge fused twice");
  fuse_[a] = b;
  fuse_[b] = a;
}

void DiagramAssembly::drop(int h) { dropped_.at(h) = 1; }

void DiagramAssembly::set_boundary(std::vector<int> bottom, std::vector<int> top) {
  bottom_ = std::move(bottom);
  top_ = std::move(top);
}

Diagram DiagramAssembly::finish(bool validate) const {
  const int n = static_cast<int>(rot_.size());
  std::vector<int> idx(n, -1);
  int m = 0;
  for (int h = 0; h < n; ++h)
    if (!dropped_[h] && fuse_[h] < 0) idx[h] = m++;
  std::vector<char> used(n, 0);
  std::vector<int> rot(m), twin(m);
  for (int h = 0; h < n; ++h) {
    if (idx[h] < 0) continue;
    if (idx[rot_[h]] < 0) throw std::logic_error("assembly: vertex lost a half-edge");
    rot[idx[h]] = idx[rot_[h]];
    int t = twin_[h];
    while (fuse_[t] >= 0) {
      used[t] = 1;
      used[fuse_[t]] = 1;
      t = twin_[fuse_[t]];
    }
    if (dropped_[t]) throw std::logic_error("assembly: edge runs into a dropped half-edge");
    twin[idx[h]] = idx[t];
  }
  int loops = loops_;
  for (int p = 0; p < n; ++p) {
    if (fuse_[p] < 0 || used[p]) continue;
    int t = p;
    do {
      used[t] = 1;
      used[fuse_[t]] = 1;
      t = twin_[fuse_[t]];
      if (fuse_[t] < 0) throw std::logic_error("assembly: open chain of fused points");
    } while (t != p);
    ++loops;
  }
  std::vector<int> b, tp;
  for (int h : bottom_) b.push_back(idx.at(h));
  for (int h : top_) tp.push_back(idx.at(h));
  if (validate) return {rot, twin, b, tp, loops};
  return {Diagram::Unchecked{}, rot, twin, b, tp, loops};
}

Morphism::Morphism(const Diagram& d, const RatFunc& coeff) : k_(d.source()), m_(d.target()) {
  add(d, coeff);
}

std::vector<Morphism::Term> Morphism::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [k, t] : terms_) out.push_back(t);
  return out;
}

RatFunc Morphism::coefficient(const DiagramKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFunc() : it->second.coeff;
}

void Morphism::add(const Diagram& d, const RatFunc& coeff) {
  if (d.source() != k_ || d.target() != m_)
    throw ArityMismatch("sum of morphisms in different Mor(k,m)");
  if (coeff.is_zero()) return;
  DiagramKey k = d.key(false);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), Term{coeff, d.canonical(false)});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

Morphism Morphism::operator-() const {
  Morphism out(k_, m_);
  for (const auto& [k, t] : terms_) out.terms_.emplace(k, Term{-t.coeff, t.diagram});
  return out;
}

Morphism operator+(const Morphism& a, const Morphism& b) {
  if (a.k_ != b.k_ || a.m_ != b.m_) throw ArityMismatch("sum of morphisms in different Mor(k,m)");
  Morphism out = a;
  for (const auto& [k, t] : b.terms_) out.add(t.diagram, t.coeff);
  return out;
}

Morphism operator-(const Morphism& a, const Morphism& b) { return a + (-b); }

Morphism operator*(const RatFunc& s, const Morphism& a) {
  Morphism out(a.k_, a.m_);
  if (s.is_zero()) return out;
  for (const auto& [k, t] : a.terms_) out.terms_.emplace(k, Morphism::Term{s * t.coeff, t.diagram});
  return out;
}

bool operator==(const Morphism& a, const Morphism& b) {
  if (a.k_ != b.k_ || a.m_ != b.m_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second.coeff == j->second.coeff)) return false;
  return true;
}

std::string Morphism::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, t] : terms_) {
    if (!s.empty()) s += "\n";
    s += t.coeff.to_string() + " * " + t.diagram.describe();
  }
  return s;
}

namespace {

template <typename F>
Morphism bilinear(const Morphism& x, const Morphism& y, int k, int m, F op) {
  Morphism out(k, m);
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) out.add(op(a.diagram, b.diagram), a.coeff * b.coeff);
  return out;
}

template <typename F>
Morphism linear(const Morphism& x, int k, int m, F op) {
  Morphism out(k, m);
  for (const auto& a : x.terms()) out.add(op(a.diagram), a.coeff);
  return out;
}

}  // namespace

Morphism compose(const Morphism& after, const Morphism& before) {
  if (before.target() != after.source())
    throw ArityMismatch("compose: source " + std::to_string(after.source()) +
                        " does not match target " + std::to_string(before.target()));
  return bilinear(after, before, before.source(), after.target(),
                  [](const Diagram& a, const Diagram& b) { return compose(a, b); });
}

Morphism tensor(const Morphism& left, const Morphism& right) {
  return bilinear(left, right, left.source() + right.source(), left.target() + right.target(),
                  [](const Diagram& a, const Diagram& b) { return tensor(a, b); });
}

Morphism adjoint(const Morphism& x) {
  return linear(x, x.target(), x.source(), [](const Diagram& d) { return d.adjoint(); });
}

Morphism rotate(const Morphism& x) {
  if (x.source() != x.target() || x.source() < 1)
    throw ArityMismatch("rotate needs Mor(k,k) with k >= 1");
  return linear(x, x.source(), x.target(), [](const Diagram& d) { return d.rotated(); });
}

Morphism trace_close(const Morphism& x) {
  if (x.source() != x.target()) throw ArityMismatch("trace needs Mor(k,k)");
  return linear(x, 0, 0, [](const Diagram& d) { return d.trace_closed(); });
}

namespace catalog {

namespace {
Diagram single(const char* expr) { return parse_expression(expr).terms().front().diagram; }
}  // namespace

Diagram id2() { return Diagram::identity(2); }
Diagram E() { return single("cup(0,1) . cap(0,1)"); }
Diagram I() { return single("split(1,1) . merge(1,1)"); }
Diagram H() { return single("(merge(1,1) * id(1)) . (id(1) * split(1,1))"); }
Diagram loop() { return Diagram::loops(1); }
Diagram theta() { return I().trace_closed(); }
Diagram tetrahedron() { return compose(I(), H()).trace_closed(); }
Diagram prism(int n) {
  if (n < 2) throw std::invalid_argument("prism needs n >= 2");
  Diagram d = H();
  for (int j = 1; j < n; ++j) d = compose(H(), d);
  return d.trace_closed();
}

Diagram random_word(std::mt19937_64& rng, int max_vertices) {
  Diagram d = Diagram::identity(2);
  int n = 2, vertices = 0;
  auto apply = [&](int op) {
    std::uniform_int_distribution<int> pos(1, op == 2 ? n + 1 : (op == 0 ? n : n - 1));
    const int i = pos(rng);
    switch (op) {
      case 0: d = compose(Diagram::split(n, i), d), ++n, ++vertices; break;
      case 1: d = compose(Diagram::merge(n - 1, i), d), --n, ++vertices; break;
      case 2: d = compose(Diagram::cup(n, i), d), n += 2; break;
      default: d = compose(Diagram::cap(n - 2, i), d), n -= 2; break;
    }
  };
  std::uniform_int_distribution<int> len(2, 12);
  const int steps = len(rng);
  for (int s = 0; s < steps; ++s) {
    std::vector<int> ops;
    const bool budget = vertices < max_vertices;
    if (budget && n >= 1 && n < 4) ops.push_back(0);
    if (budget && n >= 2) ops.push_back(1);
    if (n <= 2) ops.push_back(2);
    if (n >= 2) ops.push_back(3);
    std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
    apply(ops[pick(rng)]);
  }
  while (n != 2) {
    if (n == 3) apply(1);
    else if (n > 3) apply(3);
    else if (n == 1) apply(0);
    else apply(2);
  }
  return d;
}

Diagram random_closed(std::mt19937_64& rng, int max_vertices) {
  for (;;) {
    Diagram c = random_word(rng, max_vertices).trace_closed();
    if (c.vertex_count() > 0 && !c.has_tadpole()) return c;
  }
}

}  // namespace catalog

}  // namespace g2
