#include "origami/word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "origami/error.hpp"

namespace origami {

char to_char(Gen g) noexcept {
  switch (g) {
    case Gen::T: return 'T';
    case Gen::S: return 'S';
    case Gen::Ti: return 't';
    case Gen::Si: return 's';
  }
  return '?';
}

GroupWord::GroupWord(std::vector<Gen> letters) {
  for (Gen g : letters) {
    if (!letters_.empty() && letters_.back() == origami::inverse(g)) {
      letters_.pop_back();
    } else {
      letters_.push_back(g);
    }
  }
}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<Gen> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'T': out.push_back(Gen::T); break;
      case 'S': out.push_back(Gen::S); break;
      case 't': out.push_back(Gen::Ti); break;
      case 's': out.push_back(Gen::Si); break;
      case '1':
        if (text.size() != 1) throw SyntaxError("'1' only denotes the empty word", i);
        break;
      default:
        if (!std::isspace(static_cast<unsigned char>(text[i]))) throw SyntaxError("expected T, S, t or s", i);
    }
  }
  return GroupWord(std::move(out));
}

GroupWord GroupWord::inverse() const {
  std::vector<Gen> out(letters_.rbegin(), letters_.rend());
  for (Gen& g : out) g = origami::inverse(g);
  return GroupWord(std::move(out));
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<Gen> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(std::move(out));
}

std::string to_string(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Gen g : w.letters()) s += to_char(g);
  return s;
}

namespace {

std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

}  // namespace

std::int64_t Matrix2::det() const { return add(mul(a, d), -mul(b, c)); }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
          add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

Matrix2 matrix(Gen g) {
  switch (g) {
    case Gen::T: return {1, 1, 0, 1};
    case Gen::Ti: return {1, -1, 0, 1};
    case Gen::S: return {0, 1, -1, 0};
    case Gen::Si: return {0, -1, 1, 0};
  }
  return {};
}

Matrix2 matrix(const GroupWord& w) {
  Matrix2 m;
  for (Gen g : w.letters()) m = m * matrix(g);
  return m;
}

std::string to_string(const Matrix2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

Matrix2 parse_matrix(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char ch) {
    skip();
    if (i >= text.size() || text[i] != ch) throw SyntaxError(std::string("expected '") + ch + "'", i);
    ++i;
  };
  auto number = [&] {
    skip();
    std::size_t start = i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw SyntaxError("expected an integer", i);
    }
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (v > 100'000'000'000'000'000LL) throw SyntaxError("integer too large", start);
      v = v * 10 + (text[i++] - '0');
    }
    return neg ? -v : v;
  };
  Matrix2 m;
  expect('[');
  expect('[');
  m.a = number();
  expect(',');
  m.b = number();
  expect(']');
  expect(',');
  expect('[');
  m.c = number();
  expect(',');
  m.d = number();
  expect(']');
  expect(']');
  skip();
  if (i != text.size()) throw SyntaxError("trailing input", i);
  return m;
}

namespace {

void append_power(std::vector<Gen>& out, Gen g, std::int64_t q) {
  Gen use = q >= 0 ? g : inverse(g);
  for (std::int64_t k = 0; k < std::llabs(q); ++k) out.push_back(use);
}

// Floor division for the Euclidean step.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

GroupWord matrix_to_word(const Matrix2& m, Mode mode) {
  if (m.det() != 1) throw NotUnimodular("determinant of " + to_string(m) + " is not 1");
  // Invariant: m = matrix(left) * r.
  std::vector<Gen> left;
  Matrix2 r = m;
  const Matrix2 s_inv = matrix(Gen::Si);
  while (r.c != 0) {
    std::int64_t q = floor_div(r.a, r.c);
    // r = T^q r', r' = T^-q r
    r = Matrix2{1, -q, 0, 1} * r;
    append_power(left, Gen::T, q);
    // r' = S r'', r'' = S^-1 r'
    r = s_inv * r;
    left.push_back(Gen::S);
  }
  if (r.a == 1) {
    append_power(left, Gen::T, r.b);
  } else {
    // r = -T^-b = S^2 T^-b
    if (mode == Mode::linear) {
      left.push_back(Gen::S);
      left.push_back(Gen::S);
    }
    append_power(left, Gen::T, -r.b);
  }
  GroupWord w(std::move(left));
  Matrix2 p = matrix(w);
  if (!(p == m || (mode == Mode::projective && p == -m))) {
    throw std::logic_error("matrix_to_word: verification failed for " + to_string(m));
  }
  return w;
}

}  // namespace origami
