#include <algorithm>
#include <array>

#include "origami/error.hpp"
#include "origami/origami.hpp"

namespace origami {

namespace {

constexpr Point unset = static_cast<Point>(-1);

// BFS relabeling from signed start index `start`. Returns false as soon as
// the running code is known to be larger than `best` (when `best` is not
// empty). On success `code` holds the full code and `pi` the relabeling.
bool traverse(const Origami& o, Point start, const std::vector<Point>& best, std::vector<Point>& code,
              std::vector<Point>& pi) {
  const std::size_t d = o.degree();
  const Perm& mu = o.mu().perm();
  const Perm& nu = o.nu().perm();
  std::fill(pi.begin(), pi.end(), unset);
  code.clear();
  std::vector<Point> rep;
  rep.reserve(d);
  pi[start] = 0;
  pi[start ^ 1u] = 1;
  rep.push_back(start);
  bool smaller = best.empty();
  for (std::size_t k = 0; k < rep.size(); ++k) {
    const Point p = rep[k];
    for (Point q : {mu(p), mu(p ^ 1u), nu(p), nu(p ^ 1u)}) {
      if (pi[q] == unset) {
        Point fresh = static_cast<Point>(2 * rep.size());
        pi[q] = fresh;
        pi[q ^ 1u] = fresh + 1;
        rep.push_back(q);
      }
      Point v = pi[q];
      if (!smaller) {
        Point b = best[code.size()];
        if (v > b) return false;
        if (v < b) smaller = true;
      }
      code.push_back(v);
    }
  }
  if (rep.size() != d) throw Disconnected("canonical form needs a connected origami");
  return smaller || code == best;
}

}  // namespace

std::pair<Origami, SPerm> canonical_form_with_witness(const Origami& o) {
  const std::size_t m = 2 * o.degree();
  std::vector<Point> best, code, pi(m), best_pi;
  for (Point a = 0; a < m; ++a) {
    if (traverse(o, a, best, code, pi) && (best.empty() || code < best)) {
      best = code;
      best_pi = pi;
    }
  }
  SPerm tau = SPerm::from_perm(Perm::from_images(std::move(best_pi)));
  return {relabel(o, tau), tau};
}

Origami canonical_form(const Origami& o) { return canonical_form_with_witness(o).first; }

std::vector<Point> canonical_code(const Origami& o) {
  const Origami c = canonical_form(o);
  std::vector<Point> code;
  code.reserve(4 * c.degree());
  for (Point i = 0; i < 2 * c.degree(); i += 2) {
    code.push_back(c.mu().perm()(i));
    code.push_back(c.mu().perm()(i + 1));
    code.push_back(c.nu().perm()(i));
    code.push_back(c.nu().perm()(i + 1));
  }
  return code;
}

AbelianPair canonical_pair(const AbelianPair& p) {
  const std::size_t d = p.x.degree();
  if (p.y.degree() != d) throw DegreeMismatch("canonical_pair: degree mismatch");
  std::vector<Point> best, best_pi;
  std::vector<Point> code, pi(d), rep;
  for (Point a = 0; a < d; ++a) {
    std::fill(pi.begin(), pi.end(), unset);
    code.clear();
    rep.assign(1, a);
    pi[a] = 0;
    bool smaller = best.empty();
    bool worse = false;
    for (std::size_t k = 0; k < rep.size() && !worse; ++k) {
      for (Point q : {p.x(rep[k]), p.y(rep[k])}) {
        if (pi[q] == unset) {
          pi[q] = static_cast<Point>(rep.size());
          rep.push_back(q);
        }
        if (!smaller) {
          if (pi[q] > best[code.size()]) {
            worse = true;
            break;
          }
          if (pi[q] < best[code.size()]) smaller = true;
        }
        code.push_back(pi[q]);
      }
    }
    if (worse) continue;
    if (rep.size() != d) throw Disconnected("canonical_pair needs a transitive pair");
    if (smaller) {
      best = code;
      best_pi = pi;
    }
  }
  Perm g = Perm::from_images(std::move(best_pi));
  return AbelianPair{conjugate(p.x, g), conjugate(p.y, g)};
}

}  // namespace origami
