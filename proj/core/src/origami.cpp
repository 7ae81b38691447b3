#include "origami/origami.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "origami/error.hpp"

namespace origami {

Origami::Origami(SPerm mu, SPerm nu, bool allow_disconnected) : mu_(std::move(mu)), nu_(std::move(nu)) {
  if (mu_.degree() != nu_.degree()) throw DegreeMismatch("mu and nu have different degrees");
  if (mu_.degree() == 0) throw ValidationError("an origami needs at least one square");
  if (!mu_.is_involution() || !nu_.is_involution()) throw ValidationError("mu and nu must be involutions");
  if (!mu_.fixed_point_free() || !nu_.fixed_point_free()) {
    throw ValidationError("mu and nu must be fixed-point-free");
  }
  if (!allow_disconnected && !connected()) throw Disconnected("<mu, nu, n> is not transitive");
}

Origami Origami::torus() {
  SPerm flip = SPerm::sign_inversion(1);
  return Origami(flip, flip);
}

bool Origami::connected() const {
  std::array<SPerm, 3> gens{mu_, nu_, SPerm::sign_inversion(degree())};
  return is_transitive(gens);
}

Origami relabel(const Origami& o, const SPerm& tau) {
  if (!tau.odd()) throw ValidationError("relabeling must be an odd permutation");
  return Origami(conjugate(o.mu(), tau), conjugate(o.nu(), tau), !o.connected());
}

namespace {

// Involution pairing +l with -f(l), in label order.
SPerm translation_involution(const Perm& f) {
  const std::size_t d = f.degree();
  std::vector<Label> img(2 * d);
  for (Point l = 0; l < d; ++l) {
    Label pl = static_cast<Label>(l + 1);
    Label to = -static_cast<Label>(f(l) + 1);
    img[label_index(pl)] = to;
    img[label_index(to)] = pl;
  }
  return SPerm::from_images(d, img);
}

// The odd involution l -> s[l] * l.
SPerm sign_change(std::span<const std::int8_t> s) {
  const std::size_t d = s.size();
  std::vector<Label> img(2 * d);
  for (std::size_t l = 0; l < d; ++l) {
    Label k = static_cast<Label>(l + 1);
    img[label_index(k)] = s[l] * k;
    img[label_index(-k)] = -s[l] * k;
  }
  return SPerm::from_images(d, img);
}

Label sign_of(Point idx) { return idx % 2 == 0 ? 1 : -1; }

}  // namespace

Origami from_xye(const XYE& t, bool allow_disconnected) {
  const std::size_t d = t.x.degree();
  if (t.y.degree() != d || t.eps.size() != d) throw DegreeMismatch("x, y and eps must have the same degree");
  for (auto e : t.eps) {
    if (e != 1 && e != -1) throw ValidationError("eps entries must be +1 or -1");
  }
  SPerm mu = translation_involution(t.x);
  SPerm tau = sign_change(t.eps);
  SPerm nu = tau * translation_involution(t.y) * tau;
  return Origami(std::move(mu), std::move(nu), allow_disconnected);
}

XYE to_xye(const Origami& o) {
  if (!o.connected()) throw Disconnected("to_xye needs a connected origami");
  const std::size_t d = o.degree();
  const DoubleCover c = double_cover(o);
  const Perm Yinv = c.Y.inverse();

  // Orient every horizontal cylinder so that the chosen sheets are closed
  // under X. New cylinders are entered through vertical crossings.
  std::vector<std::int8_t> s(d, 0);
  std::vector<Point> queue;
  auto orient = [&](Point a) {
    Point b = a;
    do {
      s[b / 2] = static_cast<std::int8_t>(sign_of(b));
      queue.push_back(b);
      b = c.X(b);
    } while (b != a);
  };
  orient(0);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Point next : {c.Y(queue[k]), Yinv(queue[k])}) {
      if (s[next / 2] == 0) orient(next);
    }
  }

  const SPerm ts = sign_change(s);
  const SPerm mu1 = ts * o.mu() * ts;
  const SPerm nu1 = ts * o.nu() * ts;

  std::vector<Point> x(d);
  for (std::size_t l = 0; l < d; ++l) {
    Label m = mu1(static_cast<Label>(l + 1));
    if (m > 0) throw NormalizationFailure("to_xye: horizontal cylinder not oriented");
    x[l] = static_cast<Point>(-m - 1);
  }

  // Per vertical cylinder, keep its smallest square upright.
  const Perm Y1 = (SPerm::sign_inversion(d) * nu1).perm();
  std::vector<std::int8_t> eps(d, 0);
  for (std::size_t l = 0; l < d; ++l) {
    if (eps[l] != 0) continue;
    Point a = label_index(static_cast<Label>(l + 1));
    Point b = a;
    do {
      eps[b / 2] = static_cast<std::int8_t>(sign_of(b));
      b = Y1(b);
    } while (b != a);
  }
  const SPerm te = sign_change(eps);
  const SPerm nu0 = te * nu1 * te;
  std::vector<Point> y(d);
  for (std::size_t l = 0; l < d; ++l) {
    Label m = nu0(static_cast<Label>(l + 1));
    if (m > 0) throw NormalizationFailure("to_xye: vertical cylinder not oriented");
    y[l] = static_cast<Point>(-m - 1);
  }
  return XYE{Perm::from_images(std::move(x)), Perm::from_images(std::move(y)), std::move(eps)};
}

std::size_t DoubleCover::components() const {
  std::array<Perm, 2> gens{X, Y};
  return orbits(gens, X.degree()).size();
}

DoubleCover double_cover(const Origami& o) {
  const SPerm n = SPerm::sign_inversion(o.degree());
  return DoubleCover{(n * o.mu()).perm(), (n * o.nu()).perm(), n.perm()};
}

Origami theta_inverse(const Perm& X, const Perm& Y, const Perm& n, bool allow_disconnected) {
  const std::size_t m = X.degree();
  if (Y.degree() != m || n.degree() != m || m == 0 || m % 2 != 0) {
    throw InvalidInvolution("theta_inverse: inconsistent sheet counts");
  }
  if (!n.is_involution() || !n.fixed_point_free()) {
    throw InvalidInvolution("theta_inverse: n must be a fixed-point-free involution");
  }
  if (n * X * n != X.inverse() || n * Y * n != Y.inverse()) {
    throw InvalidInvolution("theta_inverse: n does not reverse X and Y");
  }
  // Relabel so that n becomes the sign inversion: the smallest unassigned
  // sheet becomes +k and its partner -k.
  constexpr Point unset = static_cast<Point>(-1);
  std::vector<Point> pi(m, unset);
  Label next = 1;
  for (Point p = 0; p < m; ++p) {
    if (pi[p] != unset) continue;
    pi[p] = label_index(next);
    pi[n(p)] = label_index(-next);
    ++next;
  }
  const Perm mu0 = n * X;
  const Perm nu0 = n * Y;
  std::vector<Point> mu(m), nu(m);
  for (Point p = 0; p < m; ++p) {
    if (mu0(p) == p || nu0(p) == p) throw InvalidInvolution("theta_inverse: a side would be glued to itself");
    mu[pi[p]] = pi[mu0(p)];
    nu[pi[p]] = pi[nu0(p)];
  }
  return Origami(SPerm::from_perm(Perm::from_images(std::move(mu))),
                 SPerm::from_perm(Perm::from_images(std::move(nu))), allow_disconnected);
}

bool is_abelian(const Origami& o) { return double_cover(o).components() > 1; }

Monodromy monodromy(const Origami& o) {
  const Point m = static_cast<Point>(2 * o.degree());
  std::vector<Point> iota(2 * m), sigma(2 * m);
  for (Point i = 0; i < m; ++i) {
    iota[i] = m + i;
    iota[m + i] = i ^ 1u;
    sigma[i] = o.mu().perm()(i);
    sigma[m + i] = m + o.nu().perm()(i);
  }
  return Monodromy{Perm::from_images(std::move(iota)), Perm::from_images(std::move(sigma))};
}

std::vector<Corner> corners(const Origami& o) {
  Monodromy mon = monodromy(o);
  std::vector<Corner> out;
  for (Cycle& c : cycles(mon.iota * mon.sigma)) {
    if (c.size() % 2 != 0) throw NormalizationFailure("odd corner cycle");
    int k = static_cast<int>(c.size() / 2);
    out.push_back(Corner{std::move(c), k, k - 2});
  }
  return out;
}

SingularityProfile singularity_profile(const Origami& o) {
  if (!o.connected()) throw Disconnected("singularity_profile needs a connected origami");
  SingularityProfile p;
  int total = 0;
  for (const Corner& c : corners(o)) {
    p.valency4.push_back(c.valency);
    total += c.order;
    if (c.order != 0) p.orders.push_back(c.order);
    if (c.order == -1) ++p.poles;
  }
  std::sort(p.orders.begin(), p.orders.end());
  std::sort(p.valency4.begin(), p.valency4.end());
  if ((total + 4) % 4 != 0) throw NormalizationFailure("orders do not sum to 4g-4");
  p.genus = (total + 4) / 4;
  return p;
}

Dessin dessin(const Origami& o) {
  Dessin ds;
  ds.degree = o.degree();
  const Point m = static_cast<Point>(2 * o.degree());
  std::vector<std::size_t> hv(m), vv(m);
  for (Point i = 0; i < m; ++i) {
    Point j = o.mu().perm()(i);
    if (i < j) {
      hv[i] = hv[j] = ds.h_vertices.size();
      ds.h_vertices.emplace_back(index_label(i), index_label(j));
    }
    j = o.nu().perm()(i);
    if (i < j) {
      vv[i] = vv[j] = ds.v_vertices.size();
      ds.v_vertices.emplace_back(index_label(i), index_label(j));
    }
  }
  for (std::size_t s = 0; s < o.degree(); ++s) {
    for (Point i : {static_cast<Point>(2 * s), static_cast<Point>(2 * s + 1)}) {
      ds.edges.push_back({s, Dessin::Kind::h, hv[i], index_label(i)});
    }
    for (Point i : {static_cast<Point>(2 * s), static_cast<Point>(2 * s + 1)}) {
      ds.edges.push_back({s, Dessin::Kind::v, vv[i], index_label(i)});
    }
  }
  return ds;
}

std::optional<SPerm> is_equivalent(const Origami& a, const Origami& b) {
  if (a.degree() != b.degree()) return std::nullopt;
  std::array<SPerm, 2> ta{a.mu(), a.nu()};
  std::array<SPerm, 2> tb{b.mu(), b.nu()};
  return simultaneous_conjugacy(ta, tb, ConjugacyConstraint::odd);
}

}  // namespace origami
