#pragma once

// Permutations of plain index sets {0..n-1} and of signed index sets
// {+-1..+-d}, composed as (p*q)(i) = p(q(i)).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace origami {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

class Perm {
 public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);

  /// Throws ValidationError unless `images` is a bijection of {0..n-1}.
  static Perm from_images(std::vector<Point> images);
  /// Disjoint cycles on {0..degree-1}; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree, std::span<const Cycle> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  bool is_involution() const noexcept;
  bool fixed_point_free() const noexcept;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

/// p*q applies q first. Throws DegreeMismatch.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// g p g^-1.
Perm conjugate(const Perm& p, const Perm& g);

/// Disjoint cycles, each starting at its smallest point, sorted by that
/// point. Fixed points are emitted as length-1 cycles.
std::vector<Cycle> cycles(const Perm& p);

/// Sorted cycle lengths.
std::vector<std::size_t> cycle_type(const Perm& p);

/// Orbits of the group generated by `gens` on {0..degree-1}, each sorted,
/// ordered by smallest point.
std::vector<std::vector<Point>> orbits(std::span<const Perm> gens, std::size_t degree);

bool is_transitive(std::span<const Perm> gens, std::size_t degree);

/// Generating set of {g in Sym(n) : g commutes with every generator}. Built
/// from the orbit structure of <gens>: the self-isomorphisms of one orbit in
/// each isomorphism class, plus block swaps between isomorphic orbits.
std::vector<Perm> centralizer(std::span<const Perm> gens, std::size_t degree);

/// Some tau with tau * a[i] * tau^-1 == b[i] for all i, or nullopt. The
/// search propagates a candidate image of each orbit base point along the
/// generators; candidates are tried in increasing order and the first
/// consistent one is returned.
std::optional<Perm> simultaneous_conjugacy(std::span<const Perm> a, std::span<const Perm> b);

/// All tau conjugating `a` onto `b`, assuming <a> is transitive. At most
/// degree() many; returned in order of tau(0).
std::vector<Perm> transitive_conjugacy_witnesses(std::span<const Perm> a, std::span<const Perm> b);

/// Elements of the group generated by `gens` (identity included), by
/// closure. Only meant for small groups.
std::vector<Perm> group_elements(std::span<const Perm> gens, std::size_t degree,
                                 std::size_t limit = 1'000'000);

// ---------------------------------------------------------------------------
// Signed index sets.

using Label = std::int32_t;

/// Index of a signed label in the underlying plain permutation:
/// +k -> 2(k-1), -k -> 2(k-1)+1.
constexpr Point label_index(Label k) noexcept {
  return k > 0 ? static_cast<Point>(2 * (k - 1)) : static_cast<Point>(2 * (-k - 1) + 1);
}
constexpr Label index_label(Point i) noexcept {
  Label k = static_cast<Label>(i / 2) + 1;
  return (i % 2 == 0) ? k : -k;
}
constexpr Label abs_label(Label k) noexcept { return k < 0 ? -k : k; }

/// Bijection of {+-1..+-d}.
class SPerm {
 public:
  SPerm() = default;
  /// Identity on {+-1..+-d}.
  explicit SPerm(std::size_t d);
  /// Wraps a permutation of 2d points under the label_index encoding.
  static SPerm from_perm(Perm p);
  /// Images given as a list over labels +1,-1,+2,-2,...
  static SPerm from_images(std::size_t d, std::span<const Label> images);
  /// Disjoint cycles over signed labels.
  static SPerm from_cycles(std::size_t d, std::span<const std::vector<Label>> cycles);
  /// The sign inversion k -> -k.
  static SPerm sign_inversion(std::size_t d);

  std::size_t degree() const noexcept { return perm_.degree() / 2; }
  Label operator()(Label k) const { return index_label(perm_(label_index(k))); }
  const Perm& perm() const noexcept { return perm_; }

  SPerm inverse() const { return SPerm::from_perm(perm_.inverse()); }
  bool is_identity() const noexcept { return perm_.is_identity(); }
  bool is_involution() const noexcept { return perm_.is_involution(); }
  bool fixed_point_free() const noexcept { return perm_.fixed_point_free(); }
  /// f(-k) = -f(k) for every k.
  bool odd() const noexcept;
  /// Maps positive labels to positive labels.
  bool sign_preserving() const noexcept;

  friend bool operator==(const SPerm&, const SPerm&) = default;
  friend auto operator<=>(const SPerm&, const SPerm&) = default;

 private:
  Perm perm_;
};

SPerm compose(const SPerm& p, const SPerm& q);
inline SPerm operator*(const SPerm& p, const SPerm& q) { return compose(p, q); }
SPerm conjugate(const SPerm& p, const SPerm& g);

/// Cycles over signed labels, ordered by their first label in the order
/// +1,-1,+2,-2,...; each cycle starts at that label.
std::vector<std::vector<Label>> cycles(const SPerm& p);

bool is_transitive(std::span<const SPerm> gens);

enum class Ambient {
  full,  ///< Sym({+-1..+-d})
  odd,   ///< odd permutations only
};

std::vector<SPerm> centralizer(std::span<const SPerm> gens, std::size_t d, Ambient ambient);

enum class ConjugacyConstraint { none, odd };

std::optional<SPerm> simultaneous_conjugacy(std::span<const SPerm> a, std::span<const SPerm> b,
                                            ConjugacyConstraint constraint);

// ---------------------------------------------------------------------------
// Cycle-notation text codec. Plain points print 1-based: "(1 2 3)(4)".
// Signed labels print with explicit sign: "(+1 -2)(-1 +2)". Fixed points
// may be omitted on input and are always printed.

std::string to_string(const Perm& p);
std::string to_string(const SPerm& p);

/// Parses "(1 2)(3 4)" or "()" into a permutation of the given degree. If
/// `degree` is 0 the largest point mentioned is used. Throws SyntaxError.
Perm parse_perm(std::string_view text, std::size_t degree = 0);
SPerm parse_sperm(std::string_view text, std::size_t d = 0);

}  // namespace origami
