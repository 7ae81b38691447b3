#pragma once

// Unbranched coverings of a marked base origami, encoded by the monodromy
// of a fixed generating system of the punctured base.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "origami/origami.hpp"
#include "origami/word.hpp"

namespace origami {

/// Word in the base generators tau_0, tau_1, ...; letter (i, +1) is tau_i
/// and (i, -1) its inverse. Evaluated as tau_{g1} * tau_{g2} * ... in the
/// composition convention of Perm.
struct FreeWord {
  std::vector<std::pair<std::size_t, int>> letters;

  /// "4 2' 6" means tau_4 tau_2^-1 tau_6.
  static FreeWord parse(std::string_view text);
};

std::string to_string(const FreeWord& w);

struct MonodromyTuple {
  std::size_t N = 1;
  std::vector<Perm> perms;

  friend bool operator==(const MonodromyTuple&, const MonodromyTuple&) = default;
  friend auto operator<=>(const MonodromyTuple&, const MonodromyTuple&) = default;
};

/// Substitution applied to every slot of a tuple.
using Substitution = std::vector<FreeWord>;

struct PunctureWord {
  FreeWord word;
  int order;  ///< order of the corner: -1 pole, 0 regular, k > 0 zero
  std::string name;
};

struct BaseMarking {
  Origami base;
  std::vector<std::string> generator_names;
  std::vector<PunctureWord> punctures;
  /// Action of T, S, T^-1, S^-1 (indexed like kGenerators).
  std::array<Substitution, 4> action;
  /// Automorphism twists, the identity first.
  std::vector<Substitution> twists;
};

/// The origami D with the fixed marking tau_0..tau_6.
const BaseMarking& marking_D();

Perm evaluate(const FreeWord& w, const MonodromyTuple& t);
MonodromyTuple substitute(const Substitution& s, const MonodromyTuple& t);

struct Violation {
  std::string kind;    ///< "degree", "disconnected", "pole cancellation", "branching over a regular point"
  std::string detail;
};

/// Empty when the tuple describes a connected unbranched cover.
std::vector<Violation> validate(const BaseMarking& b, const MonodromyTuple& t);

/// Action of one generator. Throws InvalidTuple when `check` is set and
/// the input is not valid.
MonodromyTuple act_on_tuple(const BaseMarking& b, Gen g, const MonodromyTuple& t, bool check = true);
MonodromyTuple act_on_tuple_D(Gen g, const MonodromyTuple& t);
/// Left action: the last letter acts first.
MonodromyTuple act_on_tuple(const BaseMarking& b, const GroupWord& w, const MonodromyTuple& t, bool check = true);

/// Slotwise relabeling to a canonical representative, per orbit, with the
/// orbits sorted. Not twisted.
MonodromyTuple canonical_tuple(const MonodromyTuple& t);
/// Least canonical_tuple over all twists; a complete invariant of the
/// equivalence.
MonodromyTuple tuple_key(const BaseMarking& b, const MonodromyTuple& t);

/// Simultaneous S_N-conjugacy combined with a twist. Throws DegreeMismatch.
bool tuple_equivalent(const BaseMarking& b, const MonodromyTuple& t1, const MonodromyTuple& t2);

struct CoverVeechResult {
  std::size_t index = 0;
  std::vector<GroupWord> coset_reps;
  std::vector<GroupWord> stabilizer_gens;
  std::vector<MonodromyTuple> orbit;
  std::size_t orbit_size() const noexcept { return orbit.size(); }
};

/// Throws InvalidTuple when validate reports violations.
CoverVeechResult cover_veech_group(const BaseMarking& b, const MonodromyTuple& t);

/// "N=3; tau0=(1 2); tau1=(); ..."; missing slots are the identity.
MonodromyTuple parse_tuple(std::string_view text, std::size_t slots = 7);
std::string to_string(const MonodromyTuple& t);

}  // namespace origami
