#include "origami/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "origami/error.hpp"

namespace origami {

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm Perm::from_images(std::vector<Point> images) {
  std::vector<bool> hit(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || hit[v]) {
      throw ValidationError("image list is not a bijection");
    }
    hit[v] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, std::span<const Cycle> cycles) {
  Perm p(degree);
  std::vector<bool> seen(degree, false);
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i];
      if (a >= degree) throw ValidationError("cycle point out of range");
      if (seen[a]) throw ValidationError("cycles are not disjoint");
      seen[a] = true;
      p.images_[a] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (Point i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

bool Perm::is_identity() const noexcept {
  for (Point i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Perm::is_involution() const noexcept {
  for (Point i = 0; i < degree(); ++i) {
    if (images_[images_[i]] != i) return false;
  }
  return true;
}

bool Perm::fixed_point_free() const noexcept {
  for (Point i = 0; i < degree(); ++i) {
    if (images_[i] == i) return false;
  }
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t l = 1;
  for (std::size_t len : cycle_type(*this)) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  }
  std::vector<Point> img(p.degree());
  for (Point i = 0; i < img.size(); ++i) img[i] = p(q(i));
  return Perm::from_images(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& g) {
  if (p.degree() != g.degree()) throw DegreeMismatch("conjugate: degree mismatch");
  std::vector<Point> img(p.degree());
  for (Point i = 0; i < img.size(); ++i) img[g(i)] = g(p(i));
  return Perm::from_images(std::move(img));
}

std::vector<Cycle> cycles(const Perm& p) {
  std::vector<Cycle> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    Cycle c;
    for (Point j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> lens;
  for (const Cycle& c : cycles(p)) lens.push_back(c.size());
  std::sort(lens.begin(), lens.end());
  return lens;
}

namespace {

void check_same_degree(std::span<const Perm> gens, std::size_t degree) {
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree mismatch");
  }
}

// Orbit of <gens> with a BFS spanning tree: `parent[k]` is (index into
// points of the predecessor, generator) for points[k], k > 0.
struct OrbitTree {
  std::vector<Point> points;
  std::vector<std::pair<std::size_t, std::size_t>> parent;
};

OrbitTree orbit_tree(std::span<const Perm> gens, Point base, std::vector<int>& owner, int id) {
  OrbitTree t;
  t.points.push_back(base);
  t.parent.emplace_back(0, 0);
  owner[base] = id;
  for (std::size_t k = 0; k < t.points.size(); ++k) {
    Point q = t.points[k];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Point r = gens[g](q);
      if (owner[r] == -1) {
        owner[r] = id;
        t.points.push_back(r);
        t.parent.emplace_back(k, g);
      }
    }
  }
  return t;
}

// Tries to extend base -> target to a map phi on the orbit with
// phi(a_g(p)) = b_g(phi(p)). Writes phi into `image` (indexed by point) and
// returns false if the map is inconsistent or collides with `used`.
bool propagate(std::span<const Perm> a, std::span<const Perm> b, const OrbitTree& t,
               Point target, std::vector<Point>& image, const std::vector<bool>& used) {
  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Point> local(t.points.size());
  local[0] = target;
  for (std::size_t k = 1; k < t.points.size(); ++k) {
    auto [pk, g] = t.parent[k];
    local[k] = b[g](local[pk]);
  }
  for (std::size_t k = 0; k < t.points.size(); ++k) image[t.points[k]] = local[k];
  std::vector<bool> hit(image.size(), false);
  for (std::size_t k = 0; k < t.points.size(); ++k) {
    Point v = local[k];
    if (used[v] || hit[v]) {
      for (Point p : t.points) image[p] = unset;
      return false;
    }
    hit[v] = true;
  }
  for (Point p : t.points) {
    for (std::size_t g = 0; g < a.size(); ++g) {
      if (image[a[g](p)] != b[g](image[p])) {
        for (Point q : t.points) image[q] = unset;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<Point>> orbits(std::span<const Perm> gens, std::size_t degree) {
  check_same_degree(gens, degree);
  std::vector<int> owner(degree, -1);
  std::vector<std::vector<Point>> out;
  for (Point i = 0; i < degree; ++i) {
    if (owner[i] != -1) continue;
    OrbitTree t = orbit_tree(gens, i, owner, static_cast<int>(out.size()));
    std::sort(t.points.begin(), t.points.end());
    out.push_back(std::move(t.points));
  }
  return out;
}

bool is_transitive(std::span<const Perm> gens, std::size_t degree) {
  if (degree == 0) return true;
  return orbits(gens, degree).size() == 1;
}

std::optional<Perm> simultaneous_conjugacy(std::span<const Perm> a, std::span<const Perm> b) {
  if (a.size() != b.size()) throw DegreeMismatch("tuples of different length");
  if (a.empty()) return Perm{};
  const std::size_t n = a[0].degree();
  check_same_degree(a, n);
  check_same_degree(b, n);

  // Orbit sizes of <b> prune candidates; matching A-orbits greedily is
  // complete because isomorphism of labelled orbits is an equivalence.
  std::vector<std::size_t> b_orbit_size(n);
  for (const auto& o : orbits(b, n)) {
    for (Point p : o) b_orbit_size[p] = o.size();
  }

  constexpr Point unset = static_cast<Point>(-1);
  std::vector<int> owner(n, -1);
  std::vector<Point> image(n, unset);
  std::vector<bool> used(n, false);
  int id = 0;
  for (Point base = 0; base < n; ++base) {
    if (owner[base] != -1) continue;
    OrbitTree t = orbit_tree(a, base, owner, id++);
    bool matched = false;
    for (Point c = 0; c < n && !matched; ++c) {
      if (used[c] || b_orbit_size[c] != t.points.size()) continue;
      if (propagate(a, b, t, c, image, used)) {
        for (Point p : t.points) used[image[p]] = true;
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  return Perm::from_images(std::move(image));
}

std::vector<Perm> transitive_conjugacy_witnesses(std::span<const Perm> a, std::span<const Perm> b) {
  if (a.size() != b.size()) throw DegreeMismatch("tuples of different length");
  std::vector<Perm> out;
  if (a.empty()) return out;
  const std::size_t n = a[0].degree();
  check_same_degree(a, n);
  check_same_degree(b, n);
  std::vector<int> owner(n, -1);
  OrbitTree t = orbit_tree(a, 0, owner, 0);
  if (t.points.size() != n) throw ValidationError("transitive_conjugacy_witnesses: not transitive");
  std::vector<bool> used(n, false);
  std::vector<Point> image(n, static_cast<Point>(-1));
  for (Point c = 0; c < n; ++c) {
    if (propagate(a, b, t, c, image, used)) out.push_back(Perm::from_images(image));
  }
  return out;
}

std::vector<Perm> group_elements(std::span<const Perm> gens, std::size_t degree, std::size_t limit) {
  check_same_degree(gens, degree);
  std::set<Perm> seen{Perm(degree)};
  std::deque<Perm> queue{Perm(degree)};
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm q = g * p;
      if (seen.insert(q).second) {
        if (seen.size() > limit) throw ValidationError("group_elements: limit exceeded");
        queue.push_back(std::move(q));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> centralizer(std::span<const Perm> gens, std::size_t degree) {
  check_same_degree(gens, degree);
  std::vector<int> owner(degree, -1);
  std::vector<OrbitTree> trees;
  for (Point i = 0; i < degree; ++i) {
    if (owner[i] == -1) trees.push_back(orbit_tree(gens, i, owner, static_cast<int>(trees.size())));
  }

  constexpr Point unset = static_cast<Point>(-1);
  const std::vector<bool> none_used(degree, false);

  // Isomorphism from the orbit tree `from` onto the orbit containing
  // `target`, as a full-degree map (unset outside the orbit).
  auto iso = [&](const OrbitTree& from, Point target) -> std::optional<std::vector<Point>> {
    std::vector<Point> image(degree, unset);
    if (!propagate(gens, gens, from, target, image, none_used)) return std::nullopt;
    return image;
  };

  // Group orbits into isomorphism classes; classes[c] lists (orbit id, map
  // from the class representative's orbit onto this orbit).
  std::vector<std::vector<std::pair<std::size_t, std::vector<Point>>>> classes;
  for (std::size_t o = 0; o < trees.size(); ++o) {
    bool placed = false;
    for (auto& cls : classes) {
      const OrbitTree& rep = trees[cls.front().first];
      if (rep.points.size() != trees[o].points.size()) continue;
      for (Point c : trees[o].points) {
        if (auto m = iso(rep, c)) {
          cls.emplace_back(o, std::move(*m));
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) {
      std::vector<Point> id(degree, unset);
      for (Point p : trees[o].points) id[p] = p;
      classes.push_back({{o, std::move(id)}});
    }
  }

  auto extend_identity = [&](std::vector<Point> partial) {
    for (Point p = 0; p < degree; ++p) {
      if (partial[p] == unset) partial[p] = p;
    }
    return Perm::from_images(std::move(partial));
  };

  std::vector<Perm> out;
  for (const auto& cls : classes) {
    const OrbitTree& rep = trees[cls.front().first];
    // Self-isomorphisms of the representative orbit; keep those that enlarge
    // the group generated so far.
    std::vector<Perm> local;
    std::set<Perm> generated{Perm(degree)};
    for (Point c : rep.points) {
      if (c == rep.points.front()) continue;
      auto m = iso(rep, c);
      if (!m) continue;
      Perm g = extend_identity(std::move(*m));
      if (generated.count(g)) continue;
      local.push_back(g);
      auto elems = group_elements(local, degree);
      generated = std::set<Perm>(elems.begin(), elems.end());
    }
    out.insert(out.end(), local.begin(), local.end());

    // Block permutations of the isomorphic orbits: a transposition of the
    // first two and a full cycle.
    const std::size_t k = cls.size();
    auto block_map = [&](std::size_t from, std::size_t to) {
      // orbit(from) -> orbit(to) via rep: m_to o m_from^-1
      std::vector<Point> partial(degree, unset);
      const auto& mf = cls[from].second;
      const auto& mt = cls[to].second;
      for (Point p : rep.points) partial[mf[p]] = mt[p];
      return partial;
    };
    auto merge = [&](std::vector<Point>& into, const std::vector<Point>& part) {
      for (Point p = 0; p < degree; ++p) {
        if (part[p] != unset) into[p] = part[p];
      }
    };
    if (k >= 2) {
      std::vector<Point> swap(degree, unset);
      merge(swap, block_map(0, 1));
      merge(swap, block_map(1, 0));
      out.push_back(extend_identity(std::move(swap)));
    }
    if (k >= 3) {
      std::vector<Point> cyc(degree, unset);
      for (std::size_t i = 0; i < k; ++i) merge(cyc, block_map(i, (i + 1) % k));
      out.push_back(extend_identity(std::move(cyc)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SPerm

SPerm::SPerm(std::size_t d) : perm_(2 * d) {}

SPerm SPerm::from_perm(Perm p) {
  if (p.degree() % 2 != 0) throw ValidationError("signed permutation needs an even number of points");
  SPerm s;
  s.perm_ = std::move(p);
  return s;
}

SPerm SPerm::from_images(std::size_t d, std::span<const Label> images) {
  if (images.size() != 2 * d) throw DegreeMismatch("signed image list has wrong length");
  std::vector<Point> img(2 * d);
  for (std::size_t i = 0; i < 2 * d; ++i) {
    Label v = images[i];
    if (v == 0 || static_cast<std::size_t>(abs_label(v)) > d) throw ValidationError("label out of range");
    img[i] = label_index(v);
  }
  return from_perm(Perm::from_images(std::move(img)));
}

SPerm SPerm::from_cycles(std::size_t d, std::span<const std::vector<Label>> cycles) {
  std::vector<Cycle> plain;
  plain.reserve(cycles.size());
  for (const auto& c : cycles) {
    Cycle pc;
    for (Label k : c) {
      if (k == 0 || static_cast<std::size_t>(abs_label(k)) > d) throw ValidationError("label out of range");
      pc.push_back(label_index(k));
    }
    plain.push_back(std::move(pc));
  }
  return from_perm(Perm::from_cycles(2 * d, plain));
}

SPerm SPerm::sign_inversion(std::size_t d) {
  std::vector<Point> img(2 * d);
  for (Point i = 0; i < 2 * d; ++i) img[i] = i ^ 1u;
  return from_perm(Perm::from_images(std::move(img)));
}

bool SPerm::odd() const noexcept {
  for (Point i = 0; i < perm_.degree(); ++i) {
    if (perm_(i ^ 1u) != (perm_(i) ^ 1u)) return false;
  }
  return true;
}

bool SPerm::sign_preserving() const noexcept {
  for (Point i = 0; i < perm_.degree(); i += 2) {
    if (perm_(i) % 2 != 0) return false;
  }
  return true;
}

SPerm compose(const SPerm& p, const SPerm& q) { return SPerm::from_perm(compose(p.perm(), q.perm())); }

SPerm conjugate(const SPerm& p, const SPerm& g) { return SPerm::from_perm(conjugate(p.perm(), g.perm())); }

std::vector<std::vector<Label>> cycles(const SPerm& p) {
  std::vector<std::vector<Label>> out;
  for (const Cycle& c : cycles(p.perm())) {
    std::vector<Label> lc;
    lc.reserve(c.size());
    for (Point i : c) lc.push_back(index_label(i));
    out.push_back(std::move(lc));
  }
  return out;
}

namespace {

std::vector<Perm> plain(std::span<const SPerm> gens) {
  std::vector<Perm> out;
  out.reserve(gens.size());
  for (const SPerm& g : gens) out.push_back(g.perm());
  return out;
}

}  // namespace

bool is_transitive(std::span<const SPerm> gens) {
  if (gens.empty()) return false;
  auto p = plain(gens);
  return is_transitive(p, p[0].degree());
}

std::vector<SPerm> centralizer(std::span<const SPerm> gens, std::size_t d, Ambient ambient) {
  auto p = plain(gens);
  if (ambient == Ambient::odd) p.push_back(SPerm::sign_inversion(d).perm());
  std::vector<SPerm> out;
  for (Perm& g : centralizer(p, 2 * d)) out.push_back(SPerm::from_perm(std::move(g)));
  return out;
}

std::optional<SPerm> simultaneous_conjugacy(std::span<const SPerm> a, std::span<const SPerm> b,
                                            ConjugacyConstraint constraint) {
  if (a.size() != b.size()) throw DegreeMismatch("tuples of different length");
  auto pa = plain(a);
  auto pb = plain(b);
  if (constraint == ConjugacyConstraint::odd) {
    std::size_t d = a.empty() ? 0 : a[0].degree();
    if (a.empty()) return std::nullopt;
    pa.push_back(SPerm::sign_inversion(d).perm());
    pb.push_back(SPerm::sign_inversion(d).perm());
  }
  if (pa.empty()) return std::nullopt;
  auto w = simultaneous_conjugacy(pa, pb);
  if (!w) return std::nullopt;
  return SPerm::from_perm(std::move(*w));
}

}  // namespace origami
