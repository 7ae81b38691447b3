#pragma once

#include <vector>

#include "origami/origami.hpp"
#include "origami/word.hpp"

namespace origami {

/// (x, y) -> T: (x, y x), S: (y^-1, x), with the formal inverses for t, s.
/// Products follow the composition convention of Perm, so "y x" applies x
/// first.
AbelianPair act_abelian(Gen g, const AbelianPair& p);
/// Letters act from left to right.
AbelianPair act_abelian(const GroupWord& w, const AbelianPair& p);

/// Generator action on a general origami through its double cover.
/// Throws NormalizationFailure if the deck involution cannot be carried
/// along, which would be a bug.
Origami act(Gen g, const Origami& o);
Origami act(const GroupWord& w, const Origami& o);

struct VeechResult {
  Mode mode = Mode::projective;
  std::size_t index = 0;
  std::vector<GroupWord> coset_reps;
  std::vector<GroupWord> stabilizer_gens;
  std::vector<Matrix2> stabilizer_matrices;  ///< linear mode only
  std::vector<Origami> orbit;                ///< canonical forms
  std::vector<AbelianPair> linear_orbit;     ///< linear mode only, canonical pairs
};

/// Linear mode requires an abelian origami (ValidationError otherwise).
VeechResult orbit_stabilizer(const Origami& o, Mode mode);

/// Whether the class of o is fixed by the word of m.
bool contains(const Origami& o, const Matrix2& m, Mode mode);

/// The abelian pair of an abelian origami (x, y from to_xye).
AbelianPair abelian_pair(const Origami& o);

/// Abelian origami of a pair.
Origami origami_of(const AbelianPair& p);

}  // namespace origami
