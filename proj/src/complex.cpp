#include "augtopo/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace augtopo {

namespace {

void add_submasks(std::uint64_t mask, std::vector<std::uint64_t>& out) {
  // Enumerates every subset of mask, including 0 and mask itself.
  std::uint64_t sub = mask;
  while (true) {
    out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::map<int, std::string> restrict_labels(const std::map<int, std::string>& labels, std::uint64_t vertex_mask) {
  std::map<int, std::string> out;
  for (const auto& [id, text] : labels)
    if (id >= 0 && id <= kMaxVertexId && (vertex_mask >> id) & 1U) out.emplace(id, text);
  return out;
}

Complex carry_labels(Complex result, const Complex& source) {
  if (source.labels().empty() || result.is_void()) return result;
  return result.with_labels(restrict_labels(source.labels(), result.vertex_mask()));
}

template <typename Pred>
Complex filter_faces(const Complex& c, Pred keep) {
  std::vector<std::uint64_t> masks;
  for (Simplex s : c.faces())
    if (keep(s)) masks.push_back(s.mask());
  if (masks.empty()) return Complex::void_complex();
  return carry_labels(Complex::from_closed_masks(std::move(masks)), c);
}

}  // namespace

std::string to_string(ExtendedDim d) { return d.is_neg_infinity() ? "-inf" : std::to_string(d.value()); }

// Complex --------------------------------------------------------------------

Complex Complex::empty_simplex() { return from_closed_masks({0}); }

Complex Complex::from_facets(const std::vector<std::vector<int>>& facets, bool void_flag) {
  if (void_flag) {
    if (!facets.empty()) throw TopologyError("the void complex cannot have facets");
    return Complex();
  }
  std::vector<Simplex> gens;
  gens.reserve(facets.size());
  for (const auto& f : facets) gens.emplace_back(f);
  return from_simplices(gens);
}

Complex Complex::from_simplices(std::span<const Simplex> generators) {
  std::vector<std::uint64_t> masks{0};
  for (Simplex s : generators) add_submasks(s.mask(), masks);
  return from_closed_masks(std::move(masks));
}

Complex Complex::from_closed_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  Complex c;
  if (masks.empty()) return c;
  c.void_ = false;
  c.sorted_masks_ = std::move(masks);
  c.faces_.reserve(c.sorted_masks_.size());
  for (std::uint64_t m : c.sorted_masks_) {
    c.faces_.push_back(Simplex::from_mask(m));
    c.vertex_mask_ |= m;
  }
  std::sort(c.faces_.begin(), c.faces_.end());
  for (Simplex s : c.faces_) {
    bool maximal = true;
    for (std::uint64_t rest = c.vertex_mask_ & ~s.mask(); rest != 0 && maximal; rest &= rest - 1) {
      const std::uint64_t up = s.mask() | (rest & (~rest + 1));
      if (std::binary_search(c.sorted_masks_.begin(), c.sorted_masks_.end(), up)) maximal = false;
    }
    if (maximal) c.facets_.push_back(s);
  }
  return c;
}

ExtendedDim Complex::dim() const {
  if (void_) return ExtendedDim::neg_infinity();
  return ExtendedDim::of(faces_.back().dim());
}

bool Complex::contains(Simplex s) const {
  return std::binary_search(sorted_masks_.begin(), sorted_masks_.end(), s.mask());
}

std::vector<Simplex> Complex::faces_of_dim(int d) const {
  std::vector<Simplex> out;
  for (Simplex s : faces_)
    if (s.dim() == d) out.push_back(s);
  return out;
}

std::ptrdiff_t Complex::index_of(Simplex s) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
  if (it == faces_.end() || *it != s) return -1;
  return it - faces_.begin();
}

int Complex::num_vertices() const { return std::popcount(vertex_mask_); }

Complex Complex::with_labels(std::map<int, std::string> labels) const {
  Complex out = *this;
  out.labels_ = std::move(labels);
  return out;
}

// Constructors ----------------------------------------------------------------

Complex closure(Simplex s) {
  const Simplex gens[] = {s};
  return Complex::from_simplices(gens);
}

Complex simplex_boundary(Simplex s) {
  if (s.is_empty()) return Complex::void_complex();
  std::vector<Simplex> gens;
  for (int v : s.vertices()) gens.push_back(s.without_vertex(v));
  return Complex::from_simplices(gens);
}

Complex link(const Complex& c, Simplex s) {
  if (!c.contains(s)) return Complex::void_complex();
  return filter_faces(c, [&](Simplex t) { return !t.intersects(s) && c.contains(t | s); });
}

Complex costar(const Complex& c, Simplex s) {
  return filter_faces(c, [&](Simplex t) { return !s.is_subset_of(t); });
}

Complex star_closed(const Complex& c, Simplex s) {
  if (!c.contains(s)) return Complex::void_complex();
  return filter_faces(c, [&](Simplex t) { return c.contains(t | s); });
}

int join_offset(const Complex& left) { return Simplex::from_mask(left.vertex_mask()).max_vertex() + 1; }

Complex join(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return Complex::void_complex();
  const int offset = join_offset(a);
  const int top = Simplex::from_mask(b.vertex_mask()).max_vertex();
  if (top >= 0 && top + offset > kMaxVertexId)
    throw TopologyError("join needs vertex id " + std::to_string(top + offset) + " beyond the supported range");
  std::vector<std::uint64_t> masks;
  masks.reserve(a.num_faces() * b.num_faces());
  for (Simplex s : a.faces())
    for (Simplex t : b.faces()) masks.push_back(s.mask() | (t.mask() << offset));
  Complex out = Complex::from_closed_masks(std::move(masks));
  if (a.labels().empty() && b.labels().empty()) return out;
  std::map<int, std::string> labels = a.labels();
  for (const auto& [id, text] : b.labels()) labels[id + offset] = text;
  return out.with_labels(std::move(labels));
}

Complex join_disjoint(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return Complex::void_complex();
  if ((a.vertex_mask() & b.vertex_mask()) != 0) throw TopologyError("join_disjoint: vertex sets overlap");
  std::vector<std::uint64_t> masks;
  masks.reserve(a.num_faces() * b.num_faces());
  for (Simplex s : a.faces())
    for (Simplex t : b.faces()) masks.push_back(s.mask() | t.mask());
  return Complex::from_closed_masks(std::move(masks));
}

Complex product_ordered(const Complex& a, const Complex& b) {
  const auto fa = a.vertices();
  const auto fb = b.vertices();
  return product_ordered(a, b, fa, fb);
}

Complex product_ordered(const Complex& a, const Complex& b, std::span<const int> frame_a,
                        std::span<const int> frame_b) {
  if (a.is_void() || b.is_void()) return Complex::void_complex();
  for (int v : a.vertices())
    if (std::find(frame_a.begin(), frame_a.end(), v) == frame_a.end())
      throw TopologyError("product frame misses a vertex of the left factor");
  for (int v : b.vertices())
    if (std::find(frame_b.begin(), frame_b.end(), v) == frame_b.end())
      throw TopologyError("product frame misses a vertex of the right factor");
  if (!std::is_sorted(frame_a.begin(), frame_a.end()) || !std::is_sorted(frame_b.begin(), frame_b.end()))
    throw TopologyError("product frames must be sorted");
  const std::size_t na = frame_a.size();
  const std::size_t nb = frame_b.size();
  if (na * nb > static_cast<std::size_t>(kMaxVertexId) + 1)
    throw TopologyError("ordered product needs " + std::to_string(na * nb) + " vertices; at most 64 are supported");

  std::vector<std::uint64_t> masks{0};
  // Depth-first enumeration of chains in the grid order; each chain is visited once.
  struct Frame {
    std::size_t i, j;
    std::uint64_t left, right, prod;
  };
  std::vector<Frame> stack;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const Simplex l = Simplex::from_mask(Simplex::bit(frame_a[i]));
      const Simplex r = Simplex::from_mask(Simplex::bit(frame_b[j]));
      if (a.contains(l) && b.contains(r)) stack.push_back({i, j, l.mask(), r.mask(), Simplex::bit(int(i * nb + j))});
    }
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    masks.push_back(f.prod);
    for (std::size_t i = f.i; i < na; ++i)
      for (std::size_t j = f.j; j < nb; ++j) {
        if (i == f.i && j == f.j) continue;
        const std::uint64_t l = f.left | Simplex::bit(frame_a[i]);
        const std::uint64_t r = f.right | Simplex::bit(frame_b[j]);
        if (!a.contains(Simplex::from_mask(l)) || !b.contains(Simplex::from_mask(r))) continue;
        stack.push_back({i, j, l, r, f.prod | Simplex::bit(int(i * nb + j))});
      }
  }
  Complex out = Complex::from_closed_masks(std::move(masks));
  std::map<int, std::string> labels;
  auto name = [](const Complex& c, int v) {
    auto it = c.labels().find(v);
    return it == c.labels().end() ? std::to_string(v) : it->second;
  };
  for (int id : out.vertices())
    labels[id] = "(" + name(a, frame_a[std::size_t(id) / nb]) + "," + name(b, frame_b[std::size_t(id) % nb]) + ")";
  return out.with_labels(std::move(labels));
}

Complex shift_vertices(const Complex& c, int offset) {
  if (c.is_void() || offset == 0) return c;
  const int top = Simplex::from_mask(c.vertex_mask()).max_vertex();
  const int low = Simplex::from_mask(c.vertex_mask()).min_vertex();
  if (top >= 0 && (top + offset > kMaxVertexId || low + offset < 0))
    throw TopologyError("shifted vertex ids leave the supported range");
  std::vector<std::uint64_t> masks;
  masks.reserve(c.num_faces());
  for (Simplex s : c.faces()) masks.push_back(offset > 0 ? s.mask() << offset : s.mask() >> -offset);
  Complex out = Complex::from_closed_masks(std::move(masks));
  if (c.labels().empty()) return out;
  std::map<int, std::string> labels;
  for (const auto& [id, text] : c.labels()) labels[id + offset] = text;
  return out.with_labels(std::move(labels));
}

Complex skeleton(const Complex& c, int p) {
  if (c.is_void()) throw TopologyError("skeleton of the void complex");
  if (p < -1) throw TopologyError("skeleton dimension must be >= -1");
  return filter_faces(c, [&](Simplex s) { return s.dim() <= p; });
}

Complex delete_vertices(const Complex& c, Simplex vertices) {
  if (c.is_void()) throw TopologyError("vertex deletion from the void complex");
  return filter_faces(c, [&](Simplex s) { return !s.intersects(vertices); });
}

Complex union_of(const Complex& a, const Complex& b) {
  if (a.is_void()) return b;
  if (b.is_void()) return a;
  std::vector<std::uint64_t> masks;
  for (Simplex s : a.faces()) masks.push_back(s.mask());
  for (Simplex s : b.faces()) masks.push_back(s.mask());
  Complex out = Complex::from_closed_masks(std::move(masks));
  if (a.labels().empty() && b.labels().empty()) return out;
  std::map<int, std::string> labels = b.labels();
  for (const auto& kv : a.labels()) labels[kv.first] = kv.second;
  return out.with_labels(std::move(labels));
}

Complex intersection_of(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return Complex::void_complex();
  return filter_faces(a, [&](Simplex s) { return b.contains(s); });
}

Simplex cone_points(const Complex& c) {
  if (c.is_void()) throw TopologyError("cone points of the void complex");
  std::uint64_t common = c.vertex_mask();
  for (Simplex f : c.facets()) common &= f.mask();
  return Simplex::from_mask(common);
}

Complex core(const Complex& c) { return link(c, cone_points(c)); }

// Predicates ------------------------------------------------------------------

bool is_subcomplex(const Complex& sub, const Complex& c) {
  if (sub.is_void()) return true;
  if (c.is_void()) return false;
  return std::all_of(sub.faces().begin(), sub.faces().end(), [&](Simplex s) { return c.contains(s); });
}

bool is_full_subcomplex(const Complex& sub, const Complex& c) {
  if (!is_subcomplex(sub, c)) return false;
  if (sub.is_void()) return c.is_void();
  const Simplex span = Simplex::from_mask(sub.vertex_mask());
  return std::all_of(c.faces().begin(), c.faces().end(),
                     [&](Simplex s) { return !s.is_subset_of(span) || sub.contains(s); });
}

bool is_pure(const Complex& c) {
  if (c.is_void()) return true;
  const int d = c.facets().front().dim();
  return std::all_of(c.facets().begin(), c.facets().end(), [d](Simplex f) { return f.dim() == d; });
}

namespace {

bool strongly_adjacent(Simplex a, Simplex b) {
  return a.cardinality() == b.cardinality() && (a & b).cardinality() == a.cardinality() - 1;
}

std::vector<std::vector<Simplex>> facet_classes(const Complex& c) {
  const auto& facets = c.facets();
  DisjointSets sets(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t k = i + 1; k < facets.size(); ++k)
      if (strongly_adjacent(facets[i], facets[k])) sets.unite(i, k);
  std::map<std::size_t, std::vector<Simplex>> groups;
  for (std::size_t i = 0; i < facets.size(); ++i) groups[sets.find(i)].push_back(facets[i]);
  std::vector<std::vector<Simplex>> out;
  for (auto& kv : groups) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace

bool is_strongly_connected(const Complex& c) {
  if (c.is_void()) return true;
  return facet_classes(c).size() == 1;
}

std::vector<Complex> strongly_connected_components(const Complex& c) {
  std::vector<Complex> out;
  if (c.is_void()) return out;
  for (const auto& group : facet_classes(c)) out.push_back(carry_labels(Complex::from_simplices(group), c));
  return out;
}

bool is_poset_connected(const Complex& c, const Complex& sub) {
  if (!is_subcomplex(sub, c)) throw TopologyError("is_poset_connected: not a subcomplex");
  std::vector<Simplex> rest;
  for (Simplex s : c.faces())
    if (sub.is_void() || !sub.contains(s)) rest.push_back(s);
  if (rest.empty()) return true;
  // rest is upward closed in c, so cover relations inside rest suffice.
  DisjointSets sets(rest.size());
  auto position = [&](Simplex s) -> std::ptrdiff_t {
    auto it = std::lower_bound(rest.begin(), rest.end(), s);
    return (it != rest.end() && *it == s) ? it - rest.begin() : -1;
  };
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (int v : rest[i].vertices()) {
      const std::ptrdiff_t k = position(rest[i].without_vertex(v));
      if (k >= 0) sets.unite(i, std::size_t(k));
    }
  for (std::size_t i = 1; i < rest.size(); ++i)
    if (sets.find(i) != sets.find(0)) return false;
  return true;
}

std::vector<std::size_t> f_vector(const Complex& c) {
  std::vector<std::size_t> f;
  if (c.is_void()) return f;
  f.assign(std::size_t(c.dim().value() + 2), 0);
  for (Simplex s : c.faces()) ++f[std::size_t(s.dim() + 1)];
  return f;
}

// Isomorphism -------------------------------------------------------------------

namespace {

/// Per-vertex invariant: number of facets of each cardinality containing the vertex.
std::vector<std::size_t> vertex_signature(const Complex& c, int v) {
  std::vector<std::size_t> sig(66, 0);
  for (Simplex f : c.facets())
    if (f.contains(v)) ++sig[std::size_t(f.cardinality())];
  for (Simplex s : c.faces())
    if (s.contains(v)) ++sig[65];
  return sig;
}

struct IsoSearch {
  const Complex& a;
  const Complex& b;
  std::vector<int> va, vb;
  std::vector<std::vector<std::size_t>> sa, sb;
  std::vector<int> image;  // indexed by vertex id of a
  std::uint64_t used = 0;

  bool facets_consistent(std::uint64_t assigned) const {
    for (Simplex f : a.facets()) {
      if ((f.mask() & ~assigned) != 0) continue;
      std::uint64_t m = 0;
      for (int v : f.vertices()) m |= Simplex::bit(image[std::size_t(v)]);
      const Simplex g = Simplex::from_mask(m);
      if (!b.contains(g)) return false;
      if (std::find(b.facets().begin(), b.facets().end(), g) == b.facets().end()) return false;
    }
    return true;
  }

  bool search(std::size_t k, std::uint64_t assigned) {
    if (k == va.size()) return true;
    for (std::size_t t = 0; t < vb.size(); ++t) {
      if ((used >> vb[t]) & 1U) continue;
      if (sa[k] != sb[t]) continue;
      image[std::size_t(va[k])] = vb[t];
      used |= Simplex::bit(vb[t]);
      const std::uint64_t next = assigned | Simplex::bit(va[k]);
      if (facets_consistent(next) && search(k + 1, next)) return true;
      used &= ~Simplex::bit(vb[t]);
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const Complex& a, const Complex& b) {
  if (a.is_void() || b.is_void()) return a.is_void() && b.is_void();
  if (f_vector(a) != f_vector(b) || a.facets().size() != b.facets().size()) return false;
  IsoSearch s{a, b, a.vertices(), b.vertices(), {}, {}, std::vector<int>(64, -1)};
  for (int v : s.va) s.sa.push_back(vertex_signature(a, v));
  for (int v : s.vb) s.sb.push_back(vertex_signature(b, v));
  auto sorted_a = s.sa, sorted_b = s.sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;
  return s.search(0, 0);
}

}  // namespace augtopo
