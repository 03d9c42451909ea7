#include "smallrep/dynkin.hpp"

#include <stdexcept>

namespace smallrep {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

std::string DynkinType::name() const {
  return family_name(family) + std::to_string(rank);
}

void DynkinType::validate() const {
  auto fail = [&](const std::string& range) {
    throw std::invalid_argument("inadmissible rank " + std::to_string(rank) +
                                " for family " + family_name(family) +
                                " (admissible: " + range + ")");
  };
  switch (family) {
    case Family::A: if (rank < 1) fail("m >= 1"); break;
    case Family::B: if (rank < 2) fail("m >= 2"); break;
    case Family::C: if (rank < 2) fail("m >= 2"); break;
    case Family::D: if (rank < 4) fail("m >= 4"); break;
    case Family::E: if (rank < 6 || rank > 8) fail("m in {6,7,8}"); break;
    case Family::F: if (rank != 4) fail("m = 4"); break;
    case Family::G: if (rank != 2) fail("m = 2"); break;
    case Family::BC: if (rank < 1) fail("m >= 1"); break;
  }
}

DynkinType DynkinType::make(const std::string& family, int rank) {
  Family f;
  std::string fam = family;
  // accept "E6" style tokens
  if (fam.size() > 1 && fam != "BC" && isdigit(static_cast<unsigned char>(fam.back()))) {
    rank = std::stoi(fam.substr(1));
    fam = fam.substr(0, 1);
  }
  if (fam == "A") f = Family::A;
  else if (fam == "B") f = Family::B;
  else if (fam == "C") f = Family::C;
  else if (fam == "D") f = Family::D;
  else if (fam == "E") f = Family::E;
  else if (fam == "F") f = Family::F;
  else if (fam == "G") f = Family::G;
  else if (fam == "BC") f = Family::BC;
  else throw std::invalid_argument("unknown family '" + family + "'");
  DynkinType t{f, rank};
  t.validate();
  return t;
}

std::vector<DynkinType> admissible_types(int max_rank, int max_rank_bc) {
  std::vector<DynkinType> out;
  for (int m = 1; m <= max_rank; ++m) out.push_back({Family::A, m});
  for (int m = 2; m <= max_rank; ++m) out.push_back({Family::B, m});
  for (int m = 2; m <= max_rank; ++m) out.push_back({Family::C, m});
  for (int m = 4; m <= max_rank; ++m) out.push_back({Family::D, m});
  for (int m = 1; m <= max_rank_bc; ++m) out.push_back({Family::BC, m});
  for (int m = 6; m <= 8 && m <= max_rank; ++m) out.push_back({Family::E, m});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace smallrep
