#pragma once

#include <map>

#include "smallrep/rootsystem.hpp"

namespace smallrep {

struct GradedMult {
  long long even = 0;
  long long odd = 0;
  friend bool operator==(const GradedMult& a, const GradedMult& b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

// Finite map weight -> (even mult, odd mult), stored on dominant
// representatives only; the full W_0-invariant function is recovered by
// orbit expansion on demand. Entries with both multiplicities zero are
// never stored.
class GradedCharacter {
 public:
  const std::map<Weight, GradedMult>& dominant_entries() const { return entries_; }

  void add(const Weight& dominant_rep, long long even, long long odd);
  GradedMult at(const Weight& dominant_rep) const;

  long long dim_total(const RootSystem& rs) const;
  long long superdim(const RootSystem& rs) const;

  // Parity flip: swaps the graded pieces everywhere.
  GradedCharacter parity_flipped() const;

  // Full weight -> multiplicity map over the whole Weyl orbit.
  std::map<Weight, GradedMult> expand(const RootSystem& rs) const;

  bool empty() const { return entries_.empty(); }

 private:
  std::map<Weight, GradedMult> entries_;
};

}  // namespace smallrep
