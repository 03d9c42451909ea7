#pragma once

#include <string>
#include <vector>

namespace smallrep {

enum class Family { A, B, C, D, E, F, G, BC };

// Dynkin type of a simple Lie algebra, plus BC_m for osp(1|2m).
struct DynkinType {
  Family family;
  int rank;

  bool is_super() const { return family == Family::BC; }
  std::string name() const;

  // Throws std::invalid_argument naming the admissible range when the rank
  // is out of range for the family.
  void validate() const;

  // Parses "A".."G", "E6", "BC", ... together with an explicit rank.
  static DynkinType make(const std::string& family, int rank);

  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator<(const DynkinType& a, const DynkinType& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

std::string family_name(Family f);

// All admissible types with rank <= max_rank per family (BC capped
// separately since the super search spaces grow faster).
std::vector<DynkinType> admissible_types(int max_rank, int max_rank_bc);

}  // namespace smallrep
