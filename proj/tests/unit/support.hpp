#pragma once

// Random generators and brute-force oracles shared by the unit tests and
// the acceptance runner. The oracles work on plain vectors and do not call
// the library's search code.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "origami/cover.hpp"
#include "origami/origami.hpp"

namespace testing_support {

using namespace origami;

inline Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(std::move(img));
}

inline SPerm random_sperm(std::size_t d, std::mt19937_64& rng) { return SPerm::from_perm(random_perm(2 * d, rng)); }

/// Uniform odd permutation of the signed labels.
inline SPerm random_odd(std::size_t d, std::mt19937_64& rng) {
  Perm p = random_perm(d, rng);
  std::vector<Label> img(2 * d);
  for (std::size_t l = 0; l < d; ++l) {
    Label s = (rng() & 1) ? 1 : -1;
    Label to = s * static_cast<Label>(p(static_cast<Point>(l)) + 1);
    img[label_index(static_cast<Label>(l + 1))] = to;
    img[label_index(-static_cast<Label>(l + 1))] = -to;
  }
  return SPerm::from_images(d, img);
}

inline SPerm random_fpf_involution(std::size_t d, std::mt19937_64& rng) {
  std::vector<Point> pts(2 * d);
  std::iota(pts.begin(), pts.end(), Point{0});
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Point> img(2 * d);
  for (std::size_t i = 0; i < pts.size(); i += 2) {
    img[pts[i]] = pts[i + 1];
    img[pts[i + 1]] = pts[i];
  }
  return SPerm::from_perm(Perm::from_images(std::move(img)));
}

inline Origami random_origami(std::size_t d, std::mt19937_64& rng) {
  for (;;) {
    Origami o(random_fpf_involution(d, rng), random_fpf_involution(d, rng), true);
    if (o.connected()) return o;
  }
}

inline XYE random_xye(std::size_t d, std::mt19937_64& rng) {
  XYE t{random_perm(d, rng), random_perm(d, rng), std::vector<std::int8_t>(d)};
  for (auto& e : t.eps) e = (rng() & 1) ? 1 : -1;
  return t;
}

/// Random connected (x, y, eps).
inline XYE random_connected_xye(std::size_t d, std::mt19937_64& rng) {
  for (;;) {
    XYE t = random_xye(d, rng);
    if (from_xye(t, true).connected()) return t;
  }
}

/// Order of the group generated by signed permutations.
inline std::size_t group_order(const std::vector<SPerm>& gens, std::size_t d) {
  std::vector<Perm> plain;
  for (const auto& g : gens) plain.push_back(g.perm());
  return group_elements(plain, 2 * d).size();
}

// ---------------------------------------------------------------------------
// Plain-vector oracles.

using Vec = std::vector<int>;

inline Vec vcompose(const Vec& p, const Vec& q) {
  Vec r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Vec vinverse(const Vec& p) {
  Vec r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline Vec vconj(const Vec& p, const Vec& g) { return vcompose(vcompose(g, p), vinverse(g)); }

inline bool vtransitive(const std::vector<Vec>& gens, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const Vec& g : gens) {
      if (!seen[g[p]]) {
        seen[g[p]] = true;
        ++count;
        stack.push_back(g[p]);
      }
    }
  }
  return count == n;
}

inline std::vector<Vec> all_perms(std::size_t n) {
  std::vector<Vec> out;
  Vec p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Odd permutations of 2d points under the encoding +k -> 2(k-1), -k -> 2k-1.
inline std::vector<Vec> all_odd(std::size_t d) {
  std::vector<Vec> out;
  for (const Vec& p : all_perms(d)) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      Vec g(2 * d);
      for (std::size_t l = 0; l < d; ++l) {
        const int flip = (mask >> l) & 1;
        g[2 * l] = 2 * p[l] + flip;
        g[2 * l + 1] = 2 * p[l] + (1 - flip);
      }
      out.push_back(g);
    }
  }
  return out;
}

inline std::vector<Vec> all_fpf_involutions(std::size_t m) {
  std::vector<Vec> out;
  Vec img(m, -1);
  std::function<void()> rec = [&] {
    std::size_t first = 0;
    while (first < m && img[first] != -1) ++first;
    if (first == m) {
      out.push_back(img);
      return;
    }
    for (std::size_t j = first + 1; j < m; ++j) {
      if (img[j] != -1) continue;
      img[first] = static_cast<int>(j);
      img[j] = static_cast<int>(first);
      rec();
      img[first] = img[j] = -1;
    }
  };
  rec();
  return out;
}

/// Number of connected origamis of degree d up to conjugation by odd
/// permutations, by brute force over all (mu, nu) and all odd relabelings.
inline std::size_t brute_force_origami_count(std::size_t d) {
  const auto inv = all_fpf_involutions(2 * d);
  const auto odd = all_odd(d);
  Vec n(2 * d);
  for (std::size_t i = 0; i < 2 * d; ++i) n[i] = static_cast<int>(i ^ 1u);
  std::set<std::pair<Vec, Vec>> seen;
  std::size_t classes = 0;
  for (const Vec& mu : inv) {
    for (const Vec& nu : inv) {
      if (!vtransitive({mu, nu, n}, 2 * d) || seen.count({mu, nu})) continue;
      ++classes;
      for (const Vec& g : odd) seen.insert({vconj(mu, g), vconj(nu, g)});
    }
  }
  return classes;
}

/// Transitive pairs (x, y) in S_d x S_d up to simultaneous conjugation and
/// (x, y) ~ (x^-1, y^-1).
inline std::size_t brute_force_abelian_count(std::size_t d) {
  const auto perms = all_perms(d);
  std::set<std::pair<Vec, Vec>> seen;
  std::size_t classes = 0;
  for (const Vec& x : perms) {
    for (const Vec& y : perms) {
      if (!vtransitive({x, y}, d) || seen.count({x, y})) continue;
      ++classes;
      for (const Vec& g : perms) {
        seen.insert({vconj(x, g), vconj(y, g)});
        seen.insert({vconj(vinverse(x), g), vconj(vinverse(y), g)});
      }
    }
  }
  return classes;
}

/// Orbit size of the abelian pair (x, y) under T: (x, y x), S: (y^-1, x)
/// and their inverses, classes by brute-force simultaneous conjugation.
inline std::size_t brute_force_linear_orbit(const Vec& x, const Vec& y) {
  const std::size_t d = x.size();
  const auto perms = all_perms(d);
  auto key = [&](const Vec& a, const Vec& b) {
    std::pair<Vec, Vec> best{a, b};
    for (const Vec& g : perms) best = std::min(best, std::make_pair(vconj(a, g), vconj(b, g)));
    return best;
  };
  std::set<std::pair<Vec, Vec>> seen{key(x, y)};
  std::vector<std::pair<Vec, Vec>> todo{key(x, y)};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    const std::vector<std::pair<Vec, Vec>> next = {{a, vcompose(b, a)},
                                                   {a, vcompose(b, vinverse(a))},
                                                   {vinverse(b), a},
                                                   {b, vinverse(a)}};
    for (const auto& [p, q] : next) {
      auto k = key(p, q);
      if (seen.insert(k).second) todo.push_back(k);
    }
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Covers of D of degree 2. S_2 is abelian, so a tuple is a bit vector and a
// word evaluates to the parity of its exponent sum per generator.

using Bits = std::array<int, 7>;

/// Images of the slots under T, S and the twist c, as lists of generator
/// indices (inverses do not matter mod 2).
inline Bits apply_mod2(const std::vector<std::vector<int>>& rule, const Bits& t) {
  Bits r{};
  for (std::size_t i = 0; i < 7; ++i) {
    int s = 0;
    for (int k : rule[i]) s ^= t[k];
    r[i] = s;
  }
  return r;
}

inline const std::vector<std::vector<int>>& rule_T() {
  static const std::vector<std::vector<int>> r = {{0}, {1}, {2}, {3}, {5}, {6}, {4, 0}};
  return r;
}
inline const std::vector<std::vector<int>>& rule_T_inv() {
  static const std::vector<std::vector<int>> r = {{0}, {1}, {2}, {3}, {0, 6}, {4}, {5}};
  return r;
}
inline const std::vector<std::vector<int>>& rule_S() {
  static const std::vector<std::vector<int>> r = {{4, 2, 6, 3, 5, 1}, {1, 5, 3, 6, 2, 6, 3, 5, 1}, {1, 5, 3, 5, 1},
                                                  {1},                {1, 5, 3, 6, 2, 5, 1},       {1, 5, 3, 6, 1},
                                                  {1, 5, 3, 0}};
  return r;
}
inline const std::vector<std::vector<int>>& rule_c() {
  static const std::vector<std::vector<int>> r = {{0}, {0, 3, 0}, {1}, {2}, {0, 5}, {0, 6}, {4}};
  return r;
}

inline Bits class_key_mod2(const Bits& t) {
  Bits c1 = apply_mod2(rule_c(), t);
  Bits c2 = apply_mod2(rule_c(), c1);
  return std::min({t, c1, c2});
}

/// Orbit size of the class of t under T, S, T^-1 (S^-1 acts like S).
inline std::size_t brute_force_cover_orbit_n2(const Bits& t) {
  std::set<Bits> seen{class_key_mod2(t)};
  std::vector<Bits> todo{class_key_mod2(t)};
  while (!todo.empty()) {
    Bits u = todo.back();
    todo.pop_back();
    for (const auto* rule : {&rule_T(), &rule_S(), &rule_T_inv()}) {
      Bits k = class_key_mod2(apply_mod2(*rule, u));
      if (seen.insert(k).second) todo.push_back(k);
    }
  }
  return seen.size();
}

inline MonodromyTuple tuple_from_bits(const Bits& b) {
  MonodromyTuple t{2, {}};
  for (int v : b) t.perms.push_back(v ? Perm::from_images({1, 0}) : Perm(2));
  return t;
}

/// Random tuple of degree N passing validate() over D.
inline MonodromyTuple random_valid_tuple(std::size_t N, std::mt19937_64& rng) {
  for (;;) {
    MonodromyTuple t{N, {}};
    for (int i = 0; i < 7; ++i) t.perms.push_back(random_perm(N, rng));
    if (validate(marking_D(), t).empty()) return t;
  }
}

}  // namespace testing_support
