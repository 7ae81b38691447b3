#include "origami/moduli.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>

#include "origami/error.hpp"

namespace origami {

namespace {

Rational parse_rational(std::string_view s, std::size_t offset) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  auto digits = [&](BigInt& v, std::size_t& count) {
    count = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      ++count;
    }
  };
  BigInt num = 0, den = 1;
  std::size_t n = 0;
  digits(num, n);
  if (n == 0) throw SyntaxError("expected a number", offset + i);
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t frac = 0;
    BigInt f = 0;
    digits(f, frac);
    if (frac == 0) throw SyntaxError("expected digits after '.'", offset + i);
    for (std::size_t k = 0; k < frac; ++k) {
      num *= 10;
      den *= 10;
    }
    num += f;
  } else {
    skip();
    if (i < s.size() && s[i] == '/') {
      ++i;
      skip();
      den = 0;
      digits(den, n);
      if (n == 0) throw SyntaxError("expected a denominator", offset + i);
      if (den == 0) throw SyntaxError("zero denominator", offset + i);
    }
  }
  skip();
  if (i != s.size()) throw SyntaxError("unexpected character", offset + i);
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

void require_list(const Origami& o, const ModuliList& m) {
  if (m.size() != o.degree()) {
    throw DegreeMismatch("moduli list has " + std::to_string(m.size()) + " entries, degree is " +
                         std::to_string(o.degree()));
  }
  for (const Rational& r : m) {
    if (r <= 0) throw ValidationError("moduli must be positive");
  }
}

const SPerm& gluing(const Origami& o, Direction dir) { return dir == Direction::horizontal ? o.mu() : o.nu(); }

std::size_t square_of(Label k) { return static_cast<std::size_t>(abs_label(k) - 1); }

// Squares grouped by connectivity through the gluings of one direction.
std::vector<std::vector<std::size_t>> cylinders(const Origami& o, Direction dir) {
  std::array<Perm, 2> gens{gluing(o, dir).perm(), SPerm::sign_inversion(o.degree()).perm()};
  std::vector<std::vector<std::size_t>> out;
  for (const auto& orb : orbits(gens, 2 * o.degree())) {
    std::vector<std::size_t> sq;
    for (Point p : orb) {
      if (p % 2 == 0) sq.push_back(p / 2);
    }
    out.push_back(std::move(sq));
  }
  return out;
}

}  // namespace

ModuliList parse_moduli(std::string_view text) {
  ModuliList out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    Rational r = parse_rational(text.substr(pos, end - pos), pos);
    if (r <= 0) throw ValidationError("moduli must be positive");
    out.push_back(r);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string to_string(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1) s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

std::string to_string(const ModuliList& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += to_string(m[i]);
  }
  return s;
}

Directions parse_directions(std::string_view text) {
  std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) throw SyntaxError("expected two directions 'theta1,theta2'", text.size());
  Directions d{parse_rational(text.substr(0, comma), 0), parse_rational(text.substr(comma + 1), comma + 1)};
  if (d.theta1 == d.theta2) throw ValidationError("directions must differ");
  return d;
}

LoopBasis loop_basis(const Origami& o) {
  if (!o.connected()) throw Disconnected("loop_basis needs a connected origami");
  const std::size_t d = o.degree();
  LoopBasis b;
  b.parent.resize(d);
  std::vector<Loop> path(d);
  std::vector<bool> seen(d, false);
  std::set<std::pair<int, Point>> tree_keys;
  seen[0] = true;
  b.order.push_back(0);
  for (std::size_t k = 0; k < b.order.size(); ++k) {
    const std::size_t s = b.order[k];
    for (Direction dir : {Direction::horizontal, Direction::vertical}) {
      for (Label side : {static_cast<Label>(s + 1), -static_cast<Label>(s + 1)}) {
        const Label entry = gluing(o, dir)(side);
        const std::size_t t = square_of(entry);
        if (seen[t]) continue;
        seen[t] = true;
        Crossing c{s, t, dir, side, entry};
        b.parent[t] = c;
        path[t] = path[s];
        path[t].push_back(c);
        b.order.push_back(t);
        tree_keys.insert({static_cast<int>(dir), std::min(label_index(side), label_index(entry))});
        Label lo = label_index(side) < label_index(entry) ? side : entry;
        Label hi = lo == side ? entry : side;
        b.tree.push_back(DualEdge{dir, lo, hi});
      }
    }
  }
  for (Direction dir : {Direction::horizontal, Direction::vertical}) {
    const Perm& g = gluing(o, dir).perm();
    for (Point i = 0; i < 2 * d; ++i) {
      const Point j = g(i);
      if (j < i || tree_keys.count({static_cast<int>(dir), i})) continue;
      const Label a = index_label(i), c = index_label(j);
      b.chords.push_back(DualEdge{dir, a, c});
      Loop loop = path[square_of(a)];
      loop.push_back(Crossing{square_of(a), square_of(c), dir, a, c});
      Loop back = reverse(path[square_of(c)]);
      loop.insert(loop.end(), back.begin(), back.end());
      b.loops.push_back(std::move(loop));
    }
  }
  return b;
}

Loop reverse(const Loop& loop) {
  Loop out;
  out.reserve(loop.size());
  for (auto it = loop.rbegin(); it != loop.rend(); ++it) out.push_back(Crossing{it->to, it->from, it->dir, it->entry, it->side});
  return out;
}

Loop concat(const Loop& a, const Loop& b) {
  if (!a.empty() && !b.empty() && a.front().from != b.front().from) {
    throw NotClosed("loops are based at different squares");
  }
  Loop out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Rational K_eval(const Origami& o, const Loop& loop, const ModuliList& m) {
  require_list(o, m);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Crossing& c = loop[i];
    if (c.from >= o.degree() || c.to >= o.degree() || square_of(c.side) != c.from || square_of(c.entry) != c.to ||
        gluing(o, c.dir)(c.side) != c.entry) {
      throw NotClosed("crossing " + std::to_string(i) + " is not a gluing of this origami");
    }
    if (loop[(i + 1) % loop.size()].from != c.to) throw NotClosed("path is not closed at crossing " + std::to_string(i));
  }
  Rational k = 1;
  for (const Crossing& c : loop) {
    if (c.dir == Direction::horizontal) {
      k *= m[c.from] / m[c.to];
    } else {
      k *= m[c.to] / m[c.from];
    }
  }
  return k;
}

std::vector<std::int64_t> exponent_row(const Loop& loop, std::size_t d) {
  std::vector<std::int64_t> row(d, 0);
  for (const Crossing& c : loop) {
    const std::int64_t s = c.dir == Direction::horizontal ? 1 : -1;
    row[c.from] += s;
    row[c.to] -= s;
  }
  return row;
}

std::vector<std::vector<BigInt>> rational_kernel(const std::vector<std::vector<std::int64_t>>& A, std::size_t cols) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : A) {
    if (row.size() != cols) throw DegreeMismatch("rational_kernel: ragged matrix");
    r.emplace_back(row.begin(), row.end());
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < r.size(); ++c) {
    std::size_t p = rank;
    while (p < r.size() && r[p][c] == 0) ++p;
    if (p == r.size()) continue;
    std::swap(r[p], r[rank]);
    const Rational inv = 1 / r[rank][c];
    for (auto& v : r[rank]) v *= inv;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i == rank || r[i][c] == 0) continue;
      const Rational f = r[i][c];
      for (std::size_t j = 0; j < cols; ++j) r[i][j] -= f * r[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < rank; ++k) v[pivot_col[k]] = -r[k][f];
    BigInt l = 1;
    for (const Rational& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    std::vector<BigInt> iv;
    BigInt g = 0;
    for (const Rational& x : v) {
      BigInt e = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
      g = boost::multiprecision::gcd(g, e);
      iv.push_back(e);
    }
    if (g != 0) {
      for (BigInt& e : iv) e /= g;
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

ModuliSystem moduli_system(const Origami& o) {
  ModuliSystem s;
  s.basis = loop_basis(o);
  for (const Loop& loop : s.basis.loops) s.A.push_back(exponent_row(loop, o.degree()));
  s.kernel_basis = rational_kernel(s.A, o.degree());
  std::array<SPerm, 2> gens{o.mu(), o.nu()};
  s.C_O_gens = centralizer(gens, o.degree(), Ambient::odd);
  return s;
}

bool is_compatible(const Origami& o, const ModuliList& m) {
  require_list(o, m);
  for (const Loop& loop : loop_basis(o).loops) {
    if (K_eval(o, loop, m) != 1) return false;
  }
  return true;
}

GeometryRealization realize_geometry(const Origami& o, const ModuliList& m, Directions dirs) {
  require_list(o, m);
  const LoopBasis b = loop_basis(o);
  const std::size_t d = o.degree();
  GeometryRealization g;
  g.dirs = dirs;
  g.w.assign(d, 0);
  g.h.assign(d, 0);
  g.h[0] = 1;
  g.w[0] = 1 / m[0];
  for (std::size_t k = 1; k < b.order.size(); ++k) {
    const std::size_t t = b.order[k];
    const Crossing& c = b.parent[t];
    if (c.dir == Direction::horizontal) {
      g.h[t] = g.h[c.from];
      g.w[t] = g.h[t] / m[t];
    } else {
      g.w[t] = g.w[c.from];
      g.h[t] = m[t] * g.w[t];
    }
  }
  for (const DualEdge& e : b.chords) {
    const std::size_t a = square_of(e.a), c = square_of(e.b);
    const bool ok = e.dir == Direction::horizontal ? g.h[a] == g.h[c] : g.w[a] == g.w[c];
    if (!ok) throw Incompatible("moduli list is not compatible: chord at side " + std::to_string(e.a) + " does not close");
  }
  g.area = 0;
  for (std::size_t i = 0; i < d; ++i) g.area += g.w[i] * g.h[i];
  g.horizontal_cylinders = cylinders(o, Direction::horizontal);
  g.vertical_cylinders = cylinders(o, Direction::vertical);
  return g;
}

std::vector<Rational> cylinder_moduli(const Origami& o, const ModuliList& m, Direction dir) {
  const GeometryRealization g = realize_geometry(o, m);
  std::vector<Rational> out;
  const auto& cyls = dir == Direction::horizontal ? g.horizontal_cylinders : g.vertical_cylinders;
  for (const auto& cyl : cyls) {
    Rational around = 0;
    for (std::size_t s : cyl) around += dir == Direction::horizontal ? g.w[s] : g.h[s];
    const Rational across = dir == Direction::horizontal ? g.h[cyl.front()] : g.w[cyl.front()];
    out.push_back(across / around);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

double norm_sq(const Matrix2d& a, double theta) {
  const double x = std::cos(theta), y = std::sin(theta);
  const double re = a.a * x + a.c * y, im = a.b * x + a.d * y;
  return re * re + im * im;
}

}  // namespace

double rho(const Matrix2d& a, double theta1, double theta2) {
  if (a.a * a.d - a.b * a.c == 0) throw SingularMatrix("rho needs an invertible matrix");
  if (theta1 == theta2) throw ValidationError("rho needs two different directions");
  return std::sqrt(norm_sq(a, theta2) / norm_sq(a, theta1));
}

double rho(const Matrix2& a, const Directions& dirs) {
  if (auto exact = rho_squared_exact(a, dirs)) return std::sqrt(exact->convert_to<double>());
  const Matrix2d m{static_cast<double>(a.a), static_cast<double>(a.b), static_cast<double>(a.c),
                   static_cast<double>(a.d)};
  return rho(m, dirs.theta1.convert_to<double>() * std::numbers::pi, dirs.theta2.convert_to<double>() * std::numbers::pi);
}

std::optional<Rational> rho_squared_exact(const Matrix2& a, const Directions& dirs) {
  if (a.det() == 0) throw SingularMatrix("rho needs an invertible matrix");
  if (dirs.theta1 == dirs.theta2) throw ValidationError("rho needs two different directions");
  auto quarter = [](const Rational& t) -> std::optional<int> {
    const Rational q = 2 * t;
    if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
    BigInt k = boost::multiprecision::numerator(q) % 4;
    if (k < 0) k += 4;
    return k.convert_to<int>();
  };
  auto n = [&](int k) {
    static constexpr int cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const BigInt x = cs[k][0], y = cs[k][1];
    const BigInt re = a.a * x + a.c * y, im = a.b * x + a.d * y;
    return Rational(re * re + im * im);
  };
  const auto k1 = quarter(dirs.theta1), k2 = quarter(dirs.theta2);
  if (!k1 || !k2) return std::nullopt;
  return n(*k2) / n(*k1);
}

namespace {

std::vector<SPerm> odd_witnesses(const Origami& a, const Origami& b) {
  std::vector<SPerm> out;
  if (a.degree() != b.degree()) return out;
  const Perm n = SPerm::sign_inversion(a.degree()).perm();
  std::array<Perm, 3> ta{a.mu().perm(), a.nu().perm(), n};
  std::array<Perm, 3> tb{b.mu().perm(), b.nu().perm(), n};
  for (Perm& p : transitive_conjugacy_witnesses(ta, tb)) out.push_back(SPerm::from_perm(std::move(p)));
  return out;
}

// Witness tau such that `match(l, |tau(l)|)` holds for every square l.
template <class Match>
std::optional<SPerm> matching_witness(const Origami& a, const Origami& b, Match&& match) {
  for (SPerm& tau : odd_witnesses(a, b)) {
    bool ok = true;
    for (std::size_t l = 0; l < a.degree() && ok; ++l) {
      ok = match(l, square_of(tau(static_cast<Label>(l + 1))));
    }
    if (ok) return std::move(tau);
  }
  return std::nullopt;
}

}  // namespace

std::optional<SPerm> weighted_equivalent(const Origami& o1, const ModuliList& m1, const Origami& o2,
                                         const ModuliList& m2) {
  if (!is_compatible(o1, m1)) throw Incompatible("first moduli list is not compatible");
  if (!is_compatible(o2, m2)) throw Incompatible("second moduli list is not compatible");
  return matching_witness(o1, o2, [&](std::size_t l, std::size_t t) { return m1[l] == m2[t]; });
}

bool affine_membership_condition_squared(const Origami& o, const ModuliList& m, const Origami& o_a,
                                         const ModuliList& m_a_squared, const Matrix2& a, const Directions& dirs) {
  if (!is_compatible(o, m)) throw Incompatible("moduli list of P is not compatible");
  // K is multiplicative, so the squares are compatible iff the moduli are.
  if (!is_compatible(o_a, m_a_squared)) throw Incompatible("moduli list of P_A is not compatible");
  if (const auto r2 = rho_squared_exact(a, dirs)) {
    return matching_witness(o, o_a, [&](std::size_t l, std::size_t t) { return m[l] * m[l] * *r2 == m_a_squared[t]; })
        .has_value();
  }
  const double r = rho(a, dirs);
  return matching_witness(o, o_a,
                          [&](std::size_t l, std::size_t t) {
                            const double lhs = (m[l] * m[l]).convert_to<double>() * r * r;
                            const double rhs = m_a_squared[t].convert_to<double>();
                            return std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), std::abs(rhs));
                          })
      .has_value();
}

bool affine_membership_condition(const Origami& o, const ModuliList& m, const Origami& o_a, const ModuliList& m_a,
                                 const Matrix2& a, const Directions& dirs) {
  ModuliList sq;
  for (const Rational& x : m_a) sq.push_back(x * x);
  return affine_membership_condition_squared(o, m, o_a, sq, a, dirs);
}

}  // namespace origami
