#include "origami/veech.hpp"

#include "origami/error.hpp"
#include "origami/schreier.hpp"

namespace origami {

AbelianPair act_abelian(Gen g, const AbelianPair& p) {
  switch (g) {
    case Gen::T: return {p.x, p.y * p.x};
    case Gen::Ti: return {p.x, p.y * p.x.inverse()};
    case Gen::S: return {p.y.inverse(), p.x};
    case Gen::Si: return {p.y, p.x.inverse()};
  }
  return p;
}

AbelianPair act_abelian(const GroupWord& w, const AbelianPair& p) {
  AbelianPair q = p;
  for (Gen g : w.letters()) q = act_abelian(g, q);
  return q;
}

Origami act(Gen g, const Origami& o) {
  const DoubleCover c = double_cover(o);
  const AbelianPair moved = act_abelian(g, AbelianPair{c.X, c.Y});
  // The half-turn of the recut surface, in the sheets of the old one.
  Perm n1;
  switch (g) {
    case Gen::T: n1 = c.X.inverse() * c.n; break;
    case Gen::Ti: n1 = c.X * c.n; break;
    case Gen::S:
    case Gen::Si: n1 = c.n; break;
  }
  try {
    return theta_inverse(moved.x, moved.y, n1);
  } catch (const InvalidInvolution& e) {
    throw NormalizationFailure(std::string("act: ") + e.what());
  } catch (const Disconnected& e) {
    throw NormalizationFailure(std::string("act: ") + e.what());
  }
}

Origami act(const GroupWord& w, const Origami& o) {
  Origami r = o;
  for (Gen g : w.letters()) r = act(g, r);
  return r;
}

AbelianPair abelian_pair(const Origami& o) {
  if (!is_abelian(o)) throw ValidationError("linear mode needs an abelian origami");
  XYE t = to_xye(o);
  return AbelianPair{std::move(t.x), std::move(t.y)};
}

Origami origami_of(const AbelianPair& p) {
  return from_xye(XYE{p.x, p.y, std::vector<std::int8_t>(p.x.degree(), 1)});
}

VeechResult orbit_stabilizer(const Origami& o, Mode mode) {
  if (!o.connected()) throw Disconnected("orbit_stabilizer needs a connected origami");
  VeechResult r;
  r.mode = mode;
  if (mode == Mode::projective) {
    auto graph = schreier_graph(
        canonical_form(o), [](Gen g, const Origami& s) { return canonical_form(act(g, s)); }, Side::right);
    r.orbit = std::move(graph.orbit);
    r.coset_reps = std::move(graph.reps);
    r.stabilizer_gens = std::move(graph.stabilizer);
  } else {
    auto graph = schreier_graph(
        canonical_pair(abelian_pair(o)),
        [](Gen g, const AbelianPair& s) { return canonical_pair(act_abelian(g, s)); }, Side::right);
    for (const AbelianPair& p : graph.orbit) r.orbit.push_back(origami_of(p));
    r.linear_orbit = std::move(graph.orbit);
    r.coset_reps = std::move(graph.reps);
    r.stabilizer_gens = std::move(graph.stabilizer);
    for (const GroupWord& w : r.stabilizer_gens) r.stabilizer_matrices.push_back(matrix(w));
  }
  r.index = r.coset_reps.size();
  return r;
}

bool contains(const Origami& o, const Matrix2& m, Mode mode) {
  if (!o.connected()) throw Disconnected("contains needs a connected origami");
  const GroupWord w = matrix_to_word(m, mode);
  if (mode == Mode::projective) return canonical_form(act(w, o)) == canonical_form(o);
  const AbelianPair p = abelian_pair(o);
  return canonical_pair(act_abelian(w, p)) == canonical_pair(p);
}

}  // namespace origami
