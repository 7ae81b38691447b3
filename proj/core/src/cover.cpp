#include "origami/cover.hpp"

#include <algorithm>
#include <cctype>

#include "origami/error.hpp"
#include "origami/schreier.hpp"

namespace origami {

FreeWord FreeWord::parse(std::string_view text) {
  FreeWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw SyntaxError("expected a generator index", i);
    std::size_t k = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) k = k * 10 + (text[i++] - '0');
    int e = 1;
    if (i < text.size() && text[i] == '\'') {
      e = -1;
      ++i;
    }
    w.letters.emplace_back(k, e);
  }
  return w;
}

std::string to_string(const FreeWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (auto [k, e] : w.letters) {
    if (!s.empty()) s += ' ';
    s += "tau" + std::to_string(k);
    if (e < 0) s += "^-1";
  }
  return s;
}

namespace {

FreeWord reduce(std::vector<std::pair<std::size_t, int>> letters) {
  FreeWord w;
  for (auto l : letters) {
    if (!w.letters.empty() && w.letters.back().first == l.first && w.letters.back().second == -l.second) {
      w.letters.pop_back();
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

// Substitution applying `inner` first and then `outer` to a tuple.
Substitution then(const Substitution& inner, const Substitution& outer) {
  Substitution out;
  for (const FreeWord& w : outer) {
    std::vector<std::pair<std::size_t, int>> letters;
    for (auto [k, e] : w.letters) {
      const auto& sub = inner.at(k).letters;
      if (e > 0) {
        letters.insert(letters.end(), sub.begin(), sub.end());
      } else {
        for (auto it = sub.rbegin(); it != sub.rend(); ++it) letters.emplace_back(it->first, -it->second);
      }
    }
    out.push_back(reduce(std::move(letters)));
  }
  return out;
}

Substitution words(std::initializer_list<const char*> texts) {
  Substitution s;
  for (const char* t : texts) s.push_back(FreeWord::parse(t));
  return s;
}

BaseMarking build_marking_D() {
  BaseMarking b;
  b.base = from_xye(XYE{parse_perm("(1 2 3 4 5 6)", 6), parse_perm("(1 2 5 6 3 4)", 6), {-1, 1, -1, 1, -1, 1}});
  for (int i = 0; i < 7; ++i) b.generator_names.push_back("tau" + std::to_string(i));
  b.punctures = {
      {FreeWord::parse("1"), -1, "pole 1"},
      {FreeWord::parse("2"), -1, "pole 2"},
      {FreeWord::parse("3"), -1, "pole 3"},
      {FreeWord::parse("0 1 2 3"), 1, "zero 1"},
      {FreeWord::parse("4 6 5'"), 1, "zero 2"},
      {FreeWord::parse("0' 6' 5 4'"), 1, "zero 3"},
  };
  const Substitution t = words({"0", "1", "2", "3", "5", "6", "4' 0'"});
  const Substitution t_inv = words({"0", "1", "2", "3", "0' 6'", "4", "5"});
  const Substitution s = words({"4 2' 6 3' 5' 1'", "1 5 3 6' 2 6 3' 5' 1'", "1 5 3 5' 1'", "1", "1 5 3 6' 2 5' 1'",
                                "1 5 3 6' 1'", "1 5 3 0"});
  b.action = {t, s, t_inv, s};
  const Substitution id = words({"0", "1", "2", "3", "4", "5", "6"});
  const Substitution c = words({"0", "0' 3 0", "1", "2", "0' 5'", "0' 6'", "4"});
  b.twists = {id, c, then(c, c)};
  return b;
}

}  // namespace

const BaseMarking& marking_D() {
  static const BaseMarking b = build_marking_D();
  return b;
}

Perm evaluate(const FreeWord& w, const MonodromyTuple& t) {
  Perm r(t.N);
  for (auto [k, e] : w.letters) {
    if (k >= t.perms.size()) throw InvalidTuple("word refers to generator " + std::to_string(k));
    r = r * (e > 0 ? t.perms[k] : t.perms[k].inverse());
  }
  return r;
}

MonodromyTuple substitute(const Substitution& s, const MonodromyTuple& t) {
  MonodromyTuple out{t.N, {}};
  out.perms.reserve(s.size());
  for (const FreeWord& w : s) out.perms.push_back(evaluate(w, t));
  return out;
}

std::vector<Violation> validate(const BaseMarking& b, const MonodromyTuple& t) {
  std::vector<Violation> out;
  if (t.perms.size() != b.generator_names.size()) {
    out.push_back({"degree", "expected " + std::to_string(b.generator_names.size()) + " permutations, got " +
                                 std::to_string(t.perms.size())});
    return out;
  }
  for (std::size_t i = 0; i < t.perms.size(); ++i) {
    if (t.perms[i].degree() != t.N) {
      out.push_back({"degree", b.generator_names[i] + " has degree " + std::to_string(t.perms[i].degree()) +
                                   ", expected " + std::to_string(t.N)});
    }
  }
  if (!out.empty()) return out;
  if (!is_transitive(t.perms, t.N)) {
    out.push_back({"disconnected", "the monodromy group has " + std::to_string(orbits(t.perms, t.N).size()) +
                                       " orbits"});
  }
  for (const PunctureWord& p : b.punctures) {
    const Perm m = evaluate(p.word, t);
    for (const Cycle& c : cycles(m)) {
      const std::size_t k = c.size();
      if (p.order == -1 && k == 2) {
        out.push_back({"pole cancellation", p.name + " (" + to_string(p.word) + ") has a 2-cycle through sheet " +
                                                std::to_string(c.front() + 1)});
      } else if (p.order == 0 && k > 1) {
        out.push_back({"branching over a regular point", p.name + " has a " + std::to_string(k) +
                                                             "-cycle through sheet " + std::to_string(c.front() + 1)});
      }
    }
  }
  return out;
}

namespace {

void require_valid(const BaseMarking& b, const MonodromyTuple& t) {
  auto v = validate(b, t);
  if (!v.empty()) throw InvalidTuple(v.front().kind + ": " + v.front().detail);
}

std::size_t gen_index(Gen g) {
  for (std::size_t i = 0; i < kGenerators.size(); ++i) {
    if (kGenerators[i] == g) return i;
  }
  return 0;
}

}  // namespace

MonodromyTuple act_on_tuple(const BaseMarking& b, Gen g, const MonodromyTuple& t, bool check) {
  if (check) require_valid(b, t);
  return substitute(b.action[gen_index(g)], t);
}

MonodromyTuple act_on_tuple_D(Gen g, const MonodromyTuple& t) { return act_on_tuple(marking_D(), g, t); }

MonodromyTuple act_on_tuple(const BaseMarking& b, const GroupWord& w, const MonodromyTuple& t, bool check) {
  if (check) require_valid(b, t);
  MonodromyTuple r = t;
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) r = act_on_tuple(b, *it, r, false);
  return r;
}

MonodromyTuple canonical_tuple(const MonodromyTuple& t) {
  constexpr Point unset = static_cast<Point>(-1);
  const std::size_t n = t.N;
  struct Component {
    std::vector<Point> code;
    std::vector<Point> points;  ///< points[k] gets local label k
  };
  std::vector<Component> comps;
  std::vector<Point> pi(n, unset);
  for (const auto& orb : orbits(t.perms, n)) {
    Component best;
    for (Point a : orb) {
      Component cur;
      for (Point p : orb) pi[p] = unset;
      pi[a] = 0;
      cur.points.push_back(a);
      bool smaller = best.code.empty();
      bool worse = false;
      for (std::size_t k = 0; k < cur.points.size() && !worse; ++k) {
        for (const Perm& g : t.perms) {
          const Point q = g(cur.points[k]);
          if (pi[q] == unset) {
            pi[q] = static_cast<Point>(cur.points.size());
            cur.points.push_back(q);
          }
          if (!smaller) {
            const Point b = best.code[cur.code.size()];
            if (pi[q] > b) {
              worse = true;
              break;
            }
            if (pi[q] < b) smaller = true;
          }
          cur.code.push_back(pi[q]);
        }
      }
      if (!worse && smaller) best = std::move(cur);
    }
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end(), [](const Component& x, const Component& y) {
    if (x.points.size() != y.points.size()) return x.points.size() < y.points.size();
    return x.code < y.code;
  });
  std::vector<Point> relabel(n);
  Point offset = 0;
  for (const Component& c : comps) {
    for (std::size_t k = 0; k < c.points.size(); ++k) relabel[c.points[k]] = offset + static_cast<Point>(k);
    offset += static_cast<Point>(c.points.size());
  }
  const Perm g = Perm::from_images(std::move(relabel));
  MonodromyTuple out{n, {}};
  for (const Perm& p : t.perms) out.perms.push_back(conjugate(p, g));
  return out;
}

MonodromyTuple tuple_key(const BaseMarking& b, const MonodromyTuple& t) {
  MonodromyTuple best;
  bool first = true;
  for (const Substitution& tw : b.twists) {
    MonodromyTuple c = canonical_tuple(substitute(tw, t));
    if (first || c < best) {
      best = std::move(c);
      first = false;
    }
  }
  return best;
}

bool tuple_equivalent(const BaseMarking& b, const MonodromyTuple& t1, const MonodromyTuple& t2) {
  if (t1.N != t2.N || t1.perms.size() != t2.perms.size()) throw DegreeMismatch("tuples of different shape");
  for (const Substitution& tw : b.twists) {
    const MonodromyTuple c = substitute(tw, t1);
    if (simultaneous_conjugacy(c.perms, t2.perms)) return true;
  }
  return false;
}

CoverVeechResult cover_veech_group(const BaseMarking& b, const MonodromyTuple& t) {
  require_valid(b, t);
  auto graph = schreier_graph(
      tuple_key(b, t), [&](Gen g, const MonodromyTuple& s) { return tuple_key(b, act_on_tuple(b, g, s, false)); },
      Side::left);
  CoverVeechResult r;
  r.orbit = std::move(graph.orbit);
  r.coset_reps = std::move(graph.reps);
  r.stabilizer_gens = std::move(graph.stabilizer);
  r.index = r.coset_reps.size();
  return r;
}

MonodromyTuple parse_tuple(std::string_view text, std::size_t slots) {
  struct Field {
    std::string_view value;
    std::size_t offset;
  };
  std::vector<std::optional<Field>> taus(slots);
  std::optional<std::size_t> n;
  std::size_t pos = 0;
  auto trim = [](std::string_view s, std::size_t& off) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
      ++off;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t off = pos;
    std::string_view part = trim(text.substr(pos, end - pos), off);
    if (!part.empty()) {
      const std::size_t eq = part.find('=');
      if (eq == std::string_view::npos) throw SyntaxError("expected key=value", off);
      std::size_t koff = off;
      const std::string_view key = trim(part.substr(0, eq), koff);
      std::size_t voff = off + eq + 1;
      const std::string_view value = trim(part.substr(eq + 1), voff);
      if (key == "N") {
        std::size_t v = 0;
        if (value.empty()) throw SyntaxError("expected a degree", voff);
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(value[i]))) throw SyntaxError("expected a degree", voff + i);
          v = v * 10 + static_cast<std::size_t>(value[i] - '0');
          if (v > 1'000'000) throw SyntaxError("degree too large", voff);
        }
        if (v == 0) throw SyntaxError("degree must be positive", voff);
        if (n) throw SyntaxError("duplicate key 'N'", koff);
        n = v;
      } else if (key.size() > 3 && key.substr(0, 3) == "tau" &&
                 std::all_of(key.begin() + 3, key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const std::size_t idx = std::stoul(std::string(key.substr(3)));
        if (idx >= slots) throw SyntaxError("no generator " + std::string(key), koff);
        if (taus[idx]) throw SyntaxError("duplicate key '" + std::string(key) + "'", koff);
        taus[idx] = Field{value, voff};
      } else {
        throw SyntaxError("unknown key '" + std::string(key) + "'", koff);
      }
    }
    pos = end + 1;
  }
  auto at = [](std::size_t offset, auto&& f) {
    try {
      return f();
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.detail(), offset + e.position());
    }
  };
  if (!n) {
    std::size_t m = 1;
    for (const auto& f : taus) {
      if (f) m = std::max(m, at(f->offset, [&] { return parse_perm(f->value).degree(); }));
    }
    n = m;
  }
  MonodromyTuple t{*n, {}};
  for (const auto& f : taus) {
    t.perms.push_back(f ? at(f->offset, [&] { return parse_perm(f->value, *n); }) : Perm(*n));
  }
  return t;
}

std::string to_string(const MonodromyTuple& t) {
  std::string s = "N=" + std::to_string(t.N);
  for (std::size_t i = 0; i < t.perms.size(); ++i) s += "; tau" + std::to_string(i) + "=" + to_string(t.perms[i]);
  return s;
}

}  // namespace origami
