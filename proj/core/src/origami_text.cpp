#include <cctype>
#include <map>

#include "origami/error.hpp"
#include "origami/origami.hpp"

namespace origami {

std::string to_string(const Origami& o) { return "mu=" + to_string(o.mu()) + "; nu=" + to_string(o.nu()); }

std::string to_string(const XYE& t) {
  std::string eps;
  for (auto e : t.eps) eps += e > 0 ? '+' : '-';
  return "x=" + to_string(t.x) + "; y=" + to_string(t.y) + "; eps=" + eps;
}

namespace {

struct Field {
  std::string_view value;
  std::size_t offset;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class F>
auto at_offset(std::size_t offset, F&& f) {
  try {
    return f();
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.detail(), offset + e.position());
  }
}

std::size_t max_point(std::string_view text, std::size_t offset) {
  return at_offset(offset, [&] { return parse_perm(text).degree(); });
}

}  // namespace

std::variant<Origami, XYE> parse_origami_text(std::string_view text) {
  std::map<std::string, Field> fields;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t off = pos;
    std::string_view part = trim(text.substr(pos, end - pos), off);
    if (!part.empty()) {
      std::size_t eq = part.find('=');
      if (eq == std::string_view::npos) throw SyntaxError("expected key=value", off);
      std::size_t koff = off;
      std::string key(trim(part.substr(0, eq), koff));
      std::size_t voff = off + eq + 1;
      std::string_view value = trim(part.substr(eq + 1), voff);
      if (key != "d" && key != "x" && key != "y" && key != "eps" && key != "mu" && key != "nu") {
        throw SyntaxError("unknown key '" + key + "'", koff);
      }
      if (fields.count(key)) throw SyntaxError("duplicate key '" + key + "'", koff);
      fields[key] = Field{value, voff};
    }
    pos = end + 1;
  }

  std::size_t d = 0;
  if (auto it = fields.find("d"); it != fields.end()) {
    const Field& f = it->second;
    if (f.value.empty()) throw SyntaxError("expected a degree", f.offset);
    for (std::size_t i = 0; i < f.value.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(f.value[i]))) throw SyntaxError("expected a degree", f.offset + i);
      d = d * 10 + static_cast<std::size_t>(f.value[i] - '0');
      if (d > 1'000'000) throw SyntaxError("degree too large", f.offset);
    }
    if (d == 0) throw SyntaxError("degree must be positive", f.offset);
  }

  const bool xye = fields.count("x") || fields.count("y") || fields.count("eps");
  const bool munu = fields.count("mu") || fields.count("nu");
  if (xye && munu) throw SyntaxError("cannot mix x/y/eps with mu/nu", 0);
  if (!xye && !munu) throw SyntaxError("expected x=...; y=...; eps=... or mu=...; nu=...", 0);

  if (munu) {
    for (const char* k : {"mu", "nu"}) {
      if (!fields.count(k)) throw SyntaxError(std::string("missing ") + k, text.size());
    }
    const Field& fm = fields["mu"];
    const Field& fn = fields["nu"];
    std::size_t n = d;
    if (n == 0) {
      n = std::max(at_offset(fm.offset, [&] { return parse_sperm(fm.value).degree(); }),
                   at_offset(fn.offset, [&] { return parse_sperm(fn.value).degree(); }));
    }
    SPerm mu = at_offset(fm.offset, [&] { return parse_sperm(fm.value, n); });
    SPerm nu = at_offset(fn.offset, [&] { return parse_sperm(fn.value, n); });
    return Origami(std::move(mu), std::move(nu));
  }

  std::vector<std::int8_t> eps;
  bool has_eps = false;
  if (auto it = fields.find("eps"); it != fields.end()) {
    has_eps = true;
    const Field& f = it->second;
    for (std::size_t i = 0; i < f.value.size(); ++i) {
      char c = f.value[i];
      if (c == '+') {
        eps.push_back(1);
      } else if (c == '-') {
        eps.push_back(-1);
      } else if (!(std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')')) {
        throw SyntaxError("expected '+' or '-'", f.offset + i);
      }
    }
  }
  Field fx = fields.count("x") ? fields["x"] : Field{"", 0};
  Field fy = fields.count("y") ? fields["y"] : Field{"", 0};
  std::size_t n = d;
  if (n == 0) n = std::max({eps.size(), max_point(fx.value, fx.offset), max_point(fy.value, fy.offset)});
  if (n == 0) throw SyntaxError("cannot infer the degree", 0);
  if (!has_eps) eps.assign(n, 1);
  if (eps.size() != n) throw DegreeMismatch("eps has " + std::to_string(eps.size()) + " entries, degree is " + std::to_string(n));
  Perm x = at_offset(fx.offset, [&] { return parse_perm(fx.value, n); });
  Perm y = at_offset(fy.offset, [&] { return parse_perm(fy.value, n); });
  return XYE{std::move(x), std::move(y), std::move(eps)};
}

Origami parse_origami(std::string_view text) {
  auto parsed = parse_origami_text(text);
  if (auto* o = std::get_if<Origami>(&parsed)) return *o;
  return from_xye(std::get<XYE>(parsed));
}

}  // namespace origami
