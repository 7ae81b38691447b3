#pragma once

// Orbit enumeration and Reidemeister-Schreier generators for an action of
// the free group on T, S on a finite set of hashable states.

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "origami/word.hpp"

namespace origami {

/// Right: a word acts letter by letter from left to right.
/// Left: a word acts from its last letter to its first.
enum class Side { right, left };

template <class State>
struct SchreierGraph {
  std::vector<State> orbit;            ///< BFS order, orbit[0] is the start
  std::vector<GroupWord> reps;         ///< reps[i] carries the start to orbit[i]
  std::vector<std::array<std::size_t, 4>> edges;  ///< edges[i][g]: image of orbit[i] under kGenerators[g]
  std::vector<GroupWord> stabilizer;   ///< Schreier generators, reduced, no repeats or inverse repeats
};

/// `step(g, s)` must return the canonical key of the image of s under g.
template <class State, class Step>
SchreierGraph<State> schreier_graph(const State& start, Step&& step, Side side) {
  SchreierGraph<State> out;
  std::map<State, std::size_t> index;
  index.emplace(start, 0);
  out.orbit.push_back(start);
  out.reps.emplace_back();
  for (std::size_t u = 0; u < out.orbit.size(); ++u) {
    std::array<std::size_t, 4> row{};
    for (std::size_t gi = 0; gi < kGenerators.size(); ++gi) {
      const Gen g = kGenerators[gi];
      State image = step(g, out.orbit[u]);
      auto [it, fresh] = index.emplace(std::move(image), out.orbit.size());
      if (fresh) {
        out.orbit.push_back(it->first);
        out.reps.push_back(side == Side::right ? out.reps[u] * GroupWord::letter(g)
                                               : GroupWord::letter(g) * out.reps[u]);
      }
      row[gi] = it->second;
    }
    out.edges.push_back(row);
  }

  std::set<std::string> seen;
  for (std::size_t u = 0; u < out.orbit.size(); ++u) {
    for (std::size_t gi = 0; gi < kGenerators.size(); ++gi) {
      const std::size_t v = out.edges[u][gi];
      const GroupWord g = GroupWord::letter(kGenerators[gi]);
      GroupWord w = side == Side::right ? out.reps[u] * g * out.reps[v].inverse()
                                        : out.reps[v].inverse() * g * out.reps[u];
      if (w.empty()) continue;
      std::string key = to_string(w);
      if (seen.count(key) || seen.count(to_string(w.inverse()))) continue;
      seen.insert(key);
      out.stabilizer.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace origami
