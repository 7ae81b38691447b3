#pragma once

// Words in the generators T, S of SL(2,Z) and 2x2 integer matrices.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace origami {

enum class Gen : std::uint8_t { T, S, Ti, Si };

/// Exploration order used by every orbit search.
inline constexpr std::array<Gen, 4> kGenerators{Gen::T, Gen::S, Gen::Ti, Gen::Si};

constexpr Gen inverse(Gen g) noexcept {
  switch (g) {
    case Gen::T: return Gen::Ti;
    case Gen::Ti: return Gen::T;
    case Gen::S: return Gen::Si;
    case Gen::Si: return Gen::S;
  }
  return g;
}

char to_char(Gen g) noexcept;

/// Freely reduced word. "T", "S" and their inverses "t", "s".
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Gen> letters);
  static GroupWord letter(Gen g) { return GroupWord({g}); }
  /// Accepts letters T, S, t, s; "" and "1" are the empty word. Throws
  /// SyntaxError.
  static GroupWord parse(std::string_view text);

  const std::vector<Gen>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  GroupWord inverse() const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Gen> letters_;
};

/// Compact form such as "TTsT"; the empty word prints as "1".
std::string to_string(const GroupWord& w);

struct Matrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Matrix2 identity() { return {}; }
  std::int64_t det() const;
  Matrix2 operator-() const { return {-a, -b, -c, -d}; }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Throws std::overflow_error if an entry leaves the 64-bit range.
Matrix2 operator*(const Matrix2& x, const Matrix2& y);

/// T = [[1,1],[0,1]], S = [[0,1],[-1,0]].
Matrix2 matrix(Gen g);
/// Product of the letter matrices in reading order.
Matrix2 matrix(const GroupWord& w);

/// "[[a,b],[c,d]]".
std::string to_string(const Matrix2& m);
/// Parses "[[a,b],[c,d]]" (whitespace ignored). Throws SyntaxError.
Matrix2 parse_matrix(std::string_view text);

enum class Mode {
  projective,  ///< PSL(2,Z): words are equal up to -I
  linear,      ///< SL(2,Z)
};

/// A word whose product is m (linear) or +-m (projective), found by the
/// Euclidean algorithm on the first column and verified before return.
/// Throws NotUnimodular.
GroupWord matrix_to_word(const Matrix2& m, Mode mode);

}  // namespace origami
