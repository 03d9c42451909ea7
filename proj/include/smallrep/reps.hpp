#pragma once

#include <vector>

#include "smallrep/character.hpp"
#include "smallrep/rootsystem.hpp"

namespace smallrep {

enum class Parity { V, W };  // W = parity flip applied to V

struct IrrepLabel {
  DominantWeight weight;
  Parity parity = Parity::V;

  std::string str() const;
  friend bool operator==(const IrrepLabel& x, const IrrepLabel& y) {
    return x.weight == y.weight && x.parity == y.parity;
  }
  friend bool operator<(const IrrepLabel& x, const IrrepLabel& y) {
    if (!(x.weight == y.weight)) return x.weight < y.weight;
    return x.parity < y.parity;
  }
};

namespace reps {

// Classical Weyl dimension formula; ordinary types only.
long long weyl_dim(const RootSystem& rs, const DominantWeight& lambda);

// Kac-Weyl super dimension product over 1 <= i < j <= m; BC only.
// Positive for every dominant lambda.
long long kacweyl_superdim(const RootSystem& rs, const DominantWeight& lambda);

// (Super) dimension of V_lambda in the uniform sense used throughout:
// weyl_dim for ordinary types, kacweyl_superdim for BC.
long long dim_of(const RootSystem& rs, const DominantWeight& lambda);

// True iff dim_of(lambda) > bound, computed in big-integer arithmetic so it
// stays safe for weights whose dimension overflows 64 bits.
bool dim_exceeds(const RootSystem& rs, const DominantWeight& lambda, long long bound);

enum class CharAlgorithm { WeylSum, Freudenthal };

// Graded character of the irreducible with the given label. The default
// algorithm is the alternating-sum division (Weyl/Kac-Weyl numerator divided
// by the even Weyl denominator, orbit-compressed); Freudenthal recursion is
// the independent second algorithm for ordinary types.
GradedCharacter character(const RootSystem& rs, const IrrepLabel& label,
                          CharAlgorithm algo = CharAlgorithm::WeylSum);

long long dim_total(const RootSystem& rs, const IrrepLabel& label);
long long superdim(const RootSystem& rs, const IrrepLabel& label);

// All dominant lambda != 0 with dim_of(lambda) <= bound, in lexicographic
// order of coefficients. Exhaustive by per-coefficient monotonicity of the
// dimension formulas; rejects BC_1, where every superdimension is 1.
std::vector<DominantWeight> enumerate_dominant_up_to_dim(const RootSystem& rs,
                                                         long long bound);

// Dominant weights mu <= lambda in the root order (the support of the
// character, by saturation), as embedded vectors.
std::vector<Weight> dominant_weights_below(const RootSystem& rs,
                                           const DominantWeight& lambda);

}  // namespace reps
}  // namespace smallrep
