#pragma once

#include <vector>

#include "smallrep/reps.hpp"

namespace smallrep {
namespace squares {

// Multiset of irreducible constituents plus the count of trivial summands.
// Weight-zero even constituents are absorbed into delta.
struct Decomposition {
  std::vector<std::pair<IrrepLabel, long long>> constituents;  // sorted by label
  long long delta = 0;

  std::string str() const;
  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.constituents == b.constituents && a.delta == b.delta;
  }
};

// Thrown when peeling drives a multiplicity negative: the input was not a
// nonnegative sum of irreducible characters (an internal consistency bug,
// not a user error).
struct DecompositionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Graded character of T_eps(V): S^2 for eps=+1, Lambda^2 for eps=-1, with
// the super commutativity constraint (the odd-odd symmetric block lands in
// Lambda^2 and vice versa).
GradedCharacter square_character(const RootSystem& rs, const GradedCharacter& ch,
                                 int eps);

enum class TieBreak { LexHigh, LexLow };

// Greedy highest-weight peeling. Deterministic regardless of the tie-break
// used to pick among maximal weights.
Decomposition decompose(const RootSystem& rs, const GradedCharacter& ch,
                        TieBreak tie = TieBreak::LexHigh);

Decomposition square_decompose(const RootSystem& rs, const DominantWeight& lambda,
                               int eps);

// True iff 2*lambda - alpha_i occurs as a constituent highest weight of
// Lambda^2(V_lambda). Requires a_i(lambda) > 0. For BC, alpha_i is taken
// from the super simple system (the odd root eps_m at i = m).
bool contains_highest_weight(const RootSystem& rs, const DominantWeight& lambda,
                             int i);

}  // namespace squares
}  // namespace smallrep
