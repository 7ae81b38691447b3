#include <cctype>
#include <string>
#include <string_view>

#include "origami/error.hpp"
#include "origami/perm.hpp"

namespace origami {

std::string to_string(const Perm& p) {
  if (p.degree() == 0) return "()";
  std::string out;
  for (const Cycle& c : cycles(p)) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::string to_string(const SPerm& p) {
  if (p.degree() == 0) return "()";
  std::string out;
  for (const auto& c : cycles(p)) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += c[i] > 0 ? "+" : "-";
      out += std::to_string(abs_label(c[i]));
    }
    out += ')';
  }
  return out;
}

namespace {

struct Token {
  long value;
  std::size_t pos;
};

// Splits cycle notation into groups of integers. Signs are kept; callers
// decide whether they are allowed.
std::vector<std::vector<Token>> scan_cycles(std::string_view text, bool allow_sign) {
  std::vector<std::vector<Token>> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "id") return out;
  while (i < text.size()) {
    if (text[i] != '(') throw SyntaxError("expected '('", i);
    ++i;
    std::vector<Token> cyc;
    for (;;) {
      skip();
      if (i >= text.size()) throw SyntaxError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      int sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        if (!allow_sign) throw SyntaxError("unexpected sign", i);
        sign = text[i] == '-' ? -1 : 1;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw SyntaxError("expected a number", i);
      }
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000'000L) throw SyntaxError("number too large", start);
        ++i;
      }
      if (v == 0) throw SyntaxError("points are numbered from 1", start);
      cyc.push_back({sign * v, start});
    }
    out.push_back(std::move(cyc));
    skip();
  }
  return out;
}

}  // namespace

Perm parse_perm(std::string_view text, std::size_t degree) {
  auto groups = scan_cycles(text, false);
  std::size_t n = degree;
  if (n == 0) {
    for (const auto& g : groups) {
      for (const Token& t : g) n = std::max<std::size_t>(n, static_cast<std::size_t>(t.value));
    }
  }
  std::vector<Cycle> cycs;
  std::vector<bool> seen(n, false);
  for (const auto& g : groups) {
    Cycle c;
    for (const Token& t : g) {
      if (static_cast<std::size_t>(t.value) > n) throw SyntaxError("point exceeds degree", t.pos);
      Point p = static_cast<Point>(t.value - 1);
      if (seen[p]) throw SyntaxError("point repeated", t.pos);
      seen[p] = true;
      c.push_back(p);
    }
    cycs.push_back(std::move(c));
  }
  return Perm::from_cycles(n, cycs);
}

SPerm parse_sperm(std::string_view text, std::size_t d) {
  auto groups = scan_cycles(text, true);
  std::size_t n = d;
  if (n == 0) {
    for (const auto& g : groups) {
      for (const Token& t : g) n = std::max<std::size_t>(n, static_cast<std::size_t>(std::labs(t.value)));
    }
  }
  std::vector<std::vector<Label>> cycs;
  std::vector<bool> seen(2 * n, false);
  for (const auto& g : groups) {
    std::vector<Label> c;
    for (const Token& t : g) {
      if (static_cast<std::size_t>(std::labs(t.value)) > n) throw SyntaxError("label exceeds degree", t.pos);
      Label k = static_cast<Label>(t.value);
      if (seen[label_index(k)]) throw SyntaxError("label repeated", t.pos);
      seen[label_index(k)] = true;
      c.push_back(k);
    }
    cycs.push_back(std::move(c));
  }
  return SPerm::from_cycles(n, cycs);
}

}  // namespace origami
