#pragma once

// Compatible moduli lists: loops of the punctured origami, the exponent
// matrix, its rational kernel, and the flat geometry a compatible list
// determines. A modulus is height over width of a square's rectangle.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "origami/origami.hpp"
#include "origami/word.hpp"

namespace origami {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using ModuliList = std::vector<Rational>;

/// "2/3,1,5/2". Throws SyntaxError; entries must be positive
/// (ValidationError).
ModuliList parse_moduli(std::string_view text);
std::string to_string(const ModuliList& m);
std::string to_string(const Rational& r);

enum class Direction { horizontal, vertical };

/// Crossing from square `from` through its side `side` into square `to`,
/// entering through `entry`. Squares are 0-based.
struct Crossing {
  std::size_t from;
  std::size_t to;
  Direction dir;  ///< horizontal: a mu gluing, vertical: a nu gluing
  Label side;
  Label entry;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

using Loop = std::vector<Crossing>;

/// One edge of the dual multigraph: a glued pair of sides.
struct DualEdge {
  Direction dir;
  Label a;  ///< the side with the smaller label index
  Label b;
};

struct LoopBasis {
  std::vector<std::size_t> order;   ///< squares in BFS order from square 1
  std::vector<Crossing> parent;     ///< tree crossing into each square (unused at the root)
  std::vector<DualEdge> tree;    ///< d-1 edges
  std::vector<DualEdge> chords;  ///< d+1 edges
  std::vector<Loop> loops;       ///< one closed loop per chord, based at square 1
};

LoopBasis loop_basis(const Origami& o);

/// Reverse traversal of a loop.
Loop reverse(const Loop& loop);
/// Concatenation; both loops must be closed at the same square.
Loop concat(const Loop& a, const Loop& b);

/// Product of M_a/M_b over horizontal crossings a->b and M_b/M_a over
/// vertical ones. Throws NotClosed, DegreeMismatch.
Rational K_eval(const Origami& o, const Loop& loop, const ModuliList& m);

/// Exponent vector of K_eval in log M.
std::vector<std::int64_t> exponent_row(const Loop& loop, std::size_t d);

struct ModuliSystem {
  LoopBasis basis;
  std::vector<std::vector<std::int64_t>> A;  ///< one row per chord loop, d columns
  std::vector<std::vector<BigInt>> kernel_basis;  ///< integer-cleared, primitive
  std::vector<SPerm> C_O_gens;
};

ModuliSystem moduli_system(const Origami& o);

/// Rational basis of {v : A v = 0} via reduced row echelon form, one vector
/// per free column in ascending column order, cleared to coprime integers
/// with a positive entry in its free column.
std::vector<std::vector<BigInt>> rational_kernel(const std::vector<std::vector<std::int64_t>>& A, std::size_t cols);

/// K_eval = 1 on every chord loop. Throws DegreeMismatch on a wrong
/// length and ValidationError on non-positive entries.
bool is_compatible(const Origami& o, const ModuliList& m);

/// Directions as rational multiples of pi.
struct Directions {
  Rational theta1 = 0;
  Rational theta2 = Rational(1, 2);
};

/// "0,1/2" in units of pi.
Directions parse_directions(std::string_view text);

struct GeometryRealization {
  std::vector<Rational> w;
  std::vector<Rational> h;
  Rational area;
  std::vector<std::vector<std::size_t>> horizontal_cylinders;  ///< squares per row, each sorted
  std::vector<std::vector<std::size_t>> vertical_cylinders;
  Directions dirs;
};

/// Throws Incompatible exactly when is_compatible is false.
GeometryRealization realize_geometry(const Origami& o, const ModuliList& m, Directions dirs = {});

/// Height over circumference (horizontal) or width over total height
/// (vertical) of each cylinder, ascending. Throws Incompatible.
std::vector<Rational> cylinder_moduli(const Origami& o, const ModuliList& m, Direction dir);

struct Matrix2d {
  double a, b, c, d;
};

/// |T_A(e^{i theta2})| / |T_A(e^{i theta1})| with
/// T_A(x+iy) = (ax+cy) + i(bx+dy). Angles in radians. Throws
/// SingularMatrix, ValidationError if theta1 == theta2.
double rho(const Matrix2d& a, double theta1, double theta2);
double rho(const Matrix2& a, const Directions& dirs);

/// rho^2 as an exact rational when both directions are multiples of pi/2.
std::optional<Rational> rho_squared_exact(const Matrix2& a, const Directions& dirs);

/// Odd tau with tau mu1 tau^-1 = mu2, tau nu1 tau^-1 = nu2 and
/// M1[l] = M2[|tau(l)|]. Throws Incompatible.
std::optional<SPerm> weighted_equivalent(const Origami& o1, const ModuliList& m1, const Origami& o2,
                                         const ModuliList& m2);

/// (O, M) equivalent to (O_A, rho^-1 M_A). Compared through squares:
/// M[l]^2 rho^2 = M_A[|tau(l)|]^2, exactly when rho^2 is rational and
/// within a relative 1e-12 otherwise.
bool affine_membership_condition(const Origami& o, const ModuliList& m, const Origami& o_a, const ModuliList& m_a,
                                 const Matrix2& a, const Directions& dirs = {});

/// Same test with the squares of the moduli of P_A given, so that P_A may
/// carry irrational moduli with rational squares.
bool affine_membership_condition_squared(const Origami& o, const ModuliList& m, const Origami& o_a,
                                         const ModuliList& m_a_squared, const Matrix2& a,
                                         const Directions& dirs = {});

}  // namespace origami
