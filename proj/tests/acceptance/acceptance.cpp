// Acceptance runner: one PASS/FAIL line per criterion with its wall time.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "origami/cover.hpp"
#include "origami/error.hpp"
#include "origami/moduli.hpp"
#include "origami/veech.hpp"
#include "support.hpp"

using namespace origami;
namespace ts = testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) {
    std::ostringstream msg;
    msg << "over budget (" << budget_s << " s)";
    o.require(false, msg.str());
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d  %-44s %10.4f s  %s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs, o.note.str().c_str());
  std::fflush(stdout);
}

bool equiv(const Origami& a, const Origami& b) { return canonical_form(a) == canonical_form(b); }

bool pair_equiv(const AbelianPair& a, const AbelianPair& b) { return canonical_pair(a) == canonical_pair(b); }

Origami four_square() { return parse_origami("x=(2 3 4); y=(1 2)(3 4); eps=+++-"); }
Origami origami_D() { return parse_origami("x=(1 2 3 4 5 6); y=(1 2 5 6 3 4); eps=-+-+-+"); }

std::vector<Origami> enumerate_upto(std::size_t d) {
  std::vector<Origami> all;
  for (std::size_t k = 1; k <= d; ++k) {
    auto e = enumerate(k);
    all.insert(all.end(), e.begin(), e.end());
  }
  return all;
}

/// Components of <X, Y> as abelian pairs on their own points.
std::vector<AbelianPair> components(const DoubleCover& c) {
  std::vector<Perm> gens{c.X, c.Y};
  std::vector<AbelianPair> out;
  for (const auto& orbit : orbits(gens, c.sheet_count())) {
    std::vector<Point> local(c.sheet_count());
    for (std::size_t i = 0; i < orbit.size(); ++i) local[orbit[i]] = static_cast<Point>(i);
    std::vector<Point> x, y;
    for (Point p : orbit) {
      x.push_back(local[c.X(p)]);
      y.push_back(local[c.Y(p)]);
    }
    out.push_back({Perm::from_images(x), Perm::from_images(y)});
  }
  return out;
}

ModuliList kernel_sample(const ModuliSystem& sys, std::size_t d, std::mt19937_64& rng) {
  ModuliList m(d, Rational(1));
  for (const auto& v : sys.kernel_basis) {
    const Rational r(1 + rng() % 9, 1 + rng() % 9);
    for (std::size_t l = 0; l < d; ++l) {
      const long e = static_cast<long>(v[l]);
      for (long k = 0; k < std::labs(e); ++k) m[l] = e > 0 ? Rational(m[l] * r) : Rational(m[l] / r);
    }
  }
  return m;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20261019);

  criterion(1, "four-square valency, orders, genus", 1e-3, [](Outcome& o) {
    const Origami f = four_square();
    const auto start = std::chrono::steady_clock::now();
    const auto p = singularity_profile(f);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(p.valency4 == std::vector<int>{1, 1, 3, 3}, "valency");
    o.require(p.orders == std::vector<int>{-1, -1, 1, 1}, "orders");
    o.require(p.genus == 1, "genus");
    o.note << "profile " << secs * 1e6 << " us";
  });

  criterion(2, "D: projective index 1, |C_D| = 3", 1.0, [](Outcome& o) {
    const Origami d = origami_D();
    const auto r = orbit_stabilizer(d, Mode::projective);
    o.require(r.index == 1, "index " + std::to_string(r.index));
    const auto sys = moduli_system(d);
    const auto order = ts::group_order(sys.C_O_gens, 6);
    o.require(order == 3, "|C_D| = " + std::to_string(order));
  });

  criterion(3, "no D-like index-1 origami below degree 6", 300.0, [](Outcome& o) {
    // D-like: non-abelian, index 1, with poles and at least one zero. The
    // pillowcase (four poles, no zero) is listed but does not count.
    auto d_like = [](const Origami& x, const SingularityProfile& p) {
      return !is_abelian(x) && p.poles > 0 && std::any_of(p.orders.begin(), p.orders.end(), [](int k) { return k > 0; });
    };
    std::vector<std::string> found;
    std::size_t offending = 0;
    for (const Origami& x : enumerate_upto(5)) {
      if (orbit_stabilizer(x, Mode::projective).index != 1) continue;
      const auto p = singularity_profile(x);
      std::ostringstream line;
      line << "d=" << x.degree() << (is_abelian(x) ? " abelian" : " non-abelian") << " genus=" << p.genus
           << " poles=" << p.poles << " [" << to_string(to_xye(x)) << "]";
      found.push_back(line.str());
      if (d_like(x, p)) ++offending;
    }
    o.require(offending == 0, std::to_string(offending) + " D-like origamis below degree 6");

    std::size_t at_six = 0;
    bool d_found = false;
    const Origami d = canonical_form(origami_D());
    for (const Origami& x : enumerate(6)) {
      if (orbit_stabilizer(x, Mode::projective).index != 1 || !d_like(x, singularity_profile(x))) continue;
      ++at_six;
      d_found = d_found || x == d;
    }
    o.require(d_found, "D not found among degree-6 index-1 origamis");
    o.note << found.size() << " index-1 origamis for d <= 5:";
    for (const auto& s : found) o.note << " {" << s << "}";
    o.note << "; degree 6: " << at_six << " D-like, D among them: " << (d_found ? "yes" : "no");
  });

  criterion(4, "double covers for d <= 4", 10.0, [](Outcome& o) {
    std::size_t checked = 0;
    for (const Origami& x : enumerate_upto(4)) {
      const DoubleCover c = double_cover(x);
      o.require(c.sheet_count() == 2 * x.degree(), "sheet count");
      if (is_abelian(x)) {
        const auto comps = components(c);
        o.require(comps.size() == 2, "abelian cover with " + std::to_string(comps.size()) + " components");
        for (const auto& p : comps)
          o.require(p.x.degree() == x.degree() && equiv(origami_of(p), x), "component differs from " + to_string(x));
      } else {
        o.require(c.components() == 1, "non-abelian cover disconnected");
      }
      ++checked;
    }
    o.note << checked << " origamis";
  });

  criterion(5, "moduli kernel properties for d <= 4", 30.0, [&rng](Outcome& o) {
    std::size_t lists = 0, compatible = 0;
    for (const Origami& x : enumerate_upto(4)) {
      const std::size_t d = x.degree();
      const auto sys = moduli_system(x);
      o.require(!sys.kernel_basis.empty(), "empty kernel");
      for (const auto& row : sys.A) {
        std::int64_t s = 0;
        for (auto v : row) s += v;
        o.require(s == 0, "all-ones not in kernel of " + to_string(x));
      }
      for (int i = 0; i < 100; ++i) {
        ModuliList m = kernel_sample(sys, d, rng);
        if (i % 2) m[rng() % d] *= Rational(1 + rng() % 5, 1 + rng() % 5);
        bool realized = true;
        try {
          realize_geometry(x, m);
        } catch (const Incompatible&) {
          realized = false;
        }
        const bool comp = is_compatible(x, m);
        o.require(realized == comp, "compatibility disagrees with realization");
        if (i % 2 == 0) o.require(comp, "kernel sample incompatible");
        compatible += comp;
        ++lists;
      }
    }
    o.note << lists << " lists, " << compatible << " compatible";
  });

  criterion(6, "2-square horizontal torus geometry", 0, [](Outcome& o) {
    const Origami t = parse_origami("x=(1 2); y=(); eps=++");
    o.require(moduli_system(t).kernel_basis.size() == 2, "kernel dimension");
    const auto g = realize_geometry(t, {Rational(2), Rational(3)});
    o.require(g.h == std::vector<Rational>{1, 1}, "h");
    o.require(g.w == std::vector<Rational>{Rational(1, 2), Rational(1, 3)}, "w");
    o.require(g.area == Rational(5, 6), "area");
  });

  criterion(7, "action well-defined, group relations", 120.0, [&rng](Outcome& o) {
    const GroupWord ss = GroupWord::parse("SS"), st3 = GroupWord::parse("STSTST");
    const GroupWord s4 = GroupWord::parse("SSSS"), st6 = GroupWord::parse("STSTSTSTSTST");
    std::size_t relabelings = 0, abelian = 0;
    for (const Origami& x : enumerate_upto(4)) {
      std::vector<Origami> images;
      for (Gen g : kGenerators) images.push_back(canonical_form(act(g, x)));
      for (int i = 0; i < 50; ++i) {
        const Origami r = relabel(x, ts::random_odd(x.degree(), rng));
        for (std::size_t g = 0; g < 4; ++g)
          o.require(canonical_form(act(kGenerators[g], r)) == images[g], "action depends on labels: " + to_string(x));
        ++relabelings;
      }
      o.require(equiv(act(ss, x), x), "S^2 moves " + to_string(x));
      o.require(equiv(act(st3, x), x), "(ST)^3 moves " + to_string(x));
      if (is_abelian(x)) {
        const AbelianPair p = abelian_pair(x);
        o.require(pair_equiv(act_abelian(s4, p), p), "S^4 moves a pair");
        o.require(pair_equiv(act_abelian(st6, p), p), "(ST)^6 moves a pair");
        ++abelian;
      }
    }
    o.note << relabelings << " relabelings, " << abelian << " abelian pairs";
  });

  criterion(8, "L-origami linear index 3 (independent oracle)", 0, [](Outcome& o) {
    const AbelianPair l{parse_perm("(1 2)", 3), parse_perm("(1 3)", 3)};
    const auto r = orbit_stabilizer(origami_of(l), Mode::linear);
    const std::size_t oracle = ts::brute_force_linear_orbit({1, 0, 2}, {2, 1, 0});
    o.require(r.index == 3, "index " + std::to_string(r.index));
    o.require(oracle == 3, "oracle " + std::to_string(oracle));
  });

  criterion(9, "cover Veech groups over D", 120.0, [&rng](Outcome& o) {
    const BaseMarking& b = marking_D();
    MonodromyTuple id{1, std::vector<Perm>(7, Perm(1))};
    o.require(cover_veech_group(b, id).index == 1, "identity tuple index");

    // Slot formulas on a generic tuple of S_12, where distinct words give
    // distinct permutations with overwhelming probability.
    MonodromyTuple g{12, {}};
    for (int i = 0; i < 7; ++i) g.perms.push_back(ts::random_perm(12, rng));
    const auto& s = g.perms;
    auto inv = [](const Perm& p) { return p.inverse(); };
    const auto t = act_on_tuple(b, Gen::T, g, false);
    o.require(t.perms == std::vector<Perm>{s[0], s[1], s[2], s[3], s[5], s[6], inv(s[4]) * inv(s[0])}, "T slots");
    const auto q = act_on_tuple(b, Gen::S, g, false);
    const Perm pre = s[1] * s[5] * s[3];
    const std::vector<Perm> expected_s{s[4] * inv(s[2]) * s[6] * inv(s[3]) * inv(s[5]) * inv(s[1]),
                                       pre * inv(s[6]) * s[2] * s[6] * inv(s[3]) * inv(s[5]) * inv(s[1]),
                                       pre * inv(s[5]) * inv(s[1]),
                                       s[1],
                                       pre * inv(s[6]) * s[2] * inv(s[5]) * inv(s[1]),
                                       pre * inv(s[6]) * inv(s[1]),
                                       pre * s[0]};
    o.require(q.perms == expected_s, "S slots");

    const GroupWord ss = GroupWord::parse("SS"), st3 = GroupWord::parse("STSTST");
    std::size_t max_index = 0;
    for (int i = 0; i < 100; ++i) {
      const MonodromyTuple u = ts::random_valid_tuple(2 + rng() % 2, rng);
      o.require(tuple_equivalent(b, act_on_tuple(b, ss, u), u), "S^2 moves " + to_string(u));
      o.require(tuple_equivalent(b, act_on_tuple(b, st3, u), u), "(ST)^3 moves " + to_string(u));
      const auto r = cover_veech_group(b, u);
      o.require(r.index >= 1 && r.orbit.size() == r.index, "index bookkeeping");
      for (const auto& w : r.stabilizer_gens)
        o.require(tuple_equivalent(b, act_on_tuple(b, w, u), u), "unsound generator " + to_string(w));
      max_index = std::max(max_index, r.index);
    }
    o.note << "100 tuples, largest index " << max_index << "; slot 2 of S uses the corrected word";
  });

  criterion(10, "rho values", 0, [](Outcome& o) {
    o.require(std::abs(rho(Matrix2d{1, 0, 0, 1}, 0.0, M_PI / 2) - 1.0) <= 1e-12, "rho(I)");
    o.require(std::abs(rho(Matrix2d{1, 0, 0, 1}, 0.4, 2.0) - 1.0) <= 1e-12, "rho(I) other angles");
    o.require(std::abs(rho(Matrix2d{1, 1, 0, 1}, 0.0, M_PI / 2) - 1.0 / std::sqrt(2.0)) <= 1e-12, "rho(T)");
    o.require(std::abs(rho(Matrix2d{0, 1, -1, 0}, 0.0, M_PI / 2) - 1.0) <= 1e-12, "rho(S)");
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
