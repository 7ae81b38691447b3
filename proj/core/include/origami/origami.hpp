#pragma once

// Origamis as pairs (mu, nu) of fixed-point-free involutions on the signed
// index set {+-1..+-d}.
//
// Side labels: +l is the right side of square l and -l its left side when
// read through mu; +l is the top and -l the bottom when read through nu.
// mu pairs glued vertical edges (horizontal neighbours), nu pairs glued
// horizontal edges (vertical neighbours). A pair of labels with opposite
// signs is a translation gluing, equal signs mean a half-turn.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "origami/perm.hpp"

namespace origami {

class Origami {
 public:
  Origami() = default;
  /// Throws ValidationError if mu or nu is not a fixed-point-free
  /// involution, DegreeMismatch on unequal degrees, and Disconnected when
  /// <mu, nu, n> is not transitive unless `allow_disconnected` is set.
  Origami(SPerm mu, SPerm nu, bool allow_disconnected = false);

  /// The one-square torus.
  static Origami torus();

  std::size_t degree() const noexcept { return mu_.degree(); }
  const SPerm& mu() const noexcept { return mu_; }
  const SPerm& nu() const noexcept { return nu_; }

  bool connected() const;

  friend bool operator==(const Origami&, const Origami&) = default;
  friend auto operator<=>(const Origami&, const Origami&) = default;

 private:
  SPerm mu_;
  SPerm nu_;
};

/// tau mu tau^-1, tau nu tau^-1 for an odd tau.
Origami relabel(const Origami& o, const SPerm& tau);

/// Abelian origami data (x, y) on plain points together with a sign per
/// square; square l is drawn half-turned when eps[l] < 0.
struct XYE {
  Perm x;
  Perm y;
  std::vector<std::int8_t> eps;

  friend bool operator==(const XYE&, const XYE&) = default;
};

/// Horizontal gluings follow x in the square's own chart, vertical gluings
/// follow y after turning the squares with eps = -1:
///   mu(+l) = -x(l),  nu = t nu0 t  with nu0(+l) = -y(l), t(l) = eps(l) l.
Origami from_xye(const XYE& t, bool allow_disconnected = false);

/// A section of from_xye: from_xye(to_xye(o)) is a relabeling of o by a
/// sign change of squares. Abelian origamis come back with eps all +.
XYE to_xye(const Origami& o);

/// Plain pair of permutations (right neighbour, top neighbour).
struct AbelianPair {
  Perm x;
  Perm y;

  friend bool operator==(const AbelianPair&, const AbelianPair&) = default;
  friend auto operator<=>(const AbelianPair&, const AbelianPair&) = default;
};

/// Canonical double cover on 2d sheets. Sheet label_index(+l) is square l
/// upright, label_index(-l) is square l turned by a half-turn.
struct DoubleCover {
  Perm X;  ///< right neighbour
  Perm Y;  ///< top neighbour
  Perm n;  ///< deck involution

  std::size_t sheet_count() const noexcept { return X.degree(); }
  /// Number of connected components of <X, Y>.
  std::size_t components() const;
};

DoubleCover double_cover(const Origami& o);

/// Quotient of an abelian pair by a deck involution. Throws
/// InvalidInvolution unless n is a fixed-point-free involution reversing X
/// and Y and no square gets glued to itself.
Origami theta_inverse(const Perm& X, const Perm& Y, const Perm& n, bool allow_disconnected = false);

/// Double cover is disconnected.
bool is_abelian(const Origami& o);

/// Monodromy of the corner structure on 4d labels. Index of the horizontal copy of a
/// signed label k is label_index(k), the vertical copy is 2d + label_index(k).
struct Monodromy {
  Perm iota;
  Perm sigma;
};

Monodromy monodromy(const Origami& o);

/// A corner point: one cycle of iota*sigma (sigma applied first).
struct Corner {
  std::vector<Point> cycle;  ///< monodromy indices
  int valency;               ///< half the cycle length
  int order;                 ///< valency - 2
};

/// Corners in the order their cycles are listed by `cycles`.
std::vector<Corner> corners(const Origami& o);

struct SingularityProfile {
  std::vector<int> orders;    ///< non-zero orders, ascending
  std::vector<int> valency4;  ///< valencies over the fourth branch point, ascending
  int genus = 0;
  int poles = 0;
};

SingularityProfile singularity_profile(const Origami& o);

/// Tripartite dessin: square vertices, glued vertical-edge pairs (mu) and
/// glued horizontal-edge pairs (nu).
struct Dessin {
  enum class Kind { h, v };
  struct Edge {
    std::size_t square;  ///< 0-based
    Kind kind;
    std::size_t vertex;  ///< index into h_vertices or v_vertices
    Label side;          ///< the side of `square` this edge stands for
  };
  std::size_t degree = 0;
  std::vector<std::pair<Label, Label>> h_vertices;
  std::vector<std::pair<Label, Label>> v_vertices;
  std::vector<Edge> edges;
};

Dessin dessin(const Origami& o);

/// Odd tau with tau mu1 tau^-1 = mu2 and tau nu1 tau^-1 = nu2.
std::optional<SPerm> is_equivalent(const Origami& a, const Origami& b);

/// Traversal code used by canonical_form: mu(+1), mu(-1), nu(+1), nu(-1),
/// mu(+2), ... as label indices.
std::vector<Point> canonical_code(const Origami& o);

/// Least relabeling over all BFS traversals from a signed start label.
Origami canonical_form(const Origami& o);

/// Canonical form together with the relabeling that produces it.
std::pair<Origami, SPerm> canonical_form_with_witness(const Origami& o);

/// Canonical representative of an abelian pair under simultaneous
/// conjugation in S_d.
AbelianPair canonical_pair(const AbelianPair& p);

/// All connected origamis of degree d up to equivalence, canonical and
/// sorted. `threads` shards the partitions of d.
std::vector<Origami> enumerate(std::size_t d, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Text format: "x=(2 3 4); y=(1 2)(3 4); eps=+++-" or "mu=...; nu=...",
// optionally with "d=<n>". Whitespace is ignored.

std::string to_string(const Origami& o);
std::string to_string(const XYE& t);

/// Parses either syntax. Throws SyntaxError, ValidationError, Disconnected.
std::variant<Origami, XYE> parse_origami_text(std::string_view text);
Origami parse_origami(std::string_view text);

}  // namespace origami
