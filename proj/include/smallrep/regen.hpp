#pragma once

#include <string>
#include <vector>

#include "smallrep/classify.hpp"
#include "smallrep/fixtures.hpp"

namespace smallrep {
namespace regen {

struct CellDiff {
  std::string where;     // e.g. "table2:BC4 b4 S^2"
  std::string expected;  // fixture (printed) value
  std::string computed;  // engine value
  std::string note;      // extra diagnostics, may be empty
};

// Regenerates Table 1 via classify_all over the criterion's type list and
// diffs against the fixture rows. C_2 has no printed rows; its expected
// cells are the B_2 rows read through the isomorphism B_2 = C_2 (which
// swaps beta_1 and beta_2).
std::vector<CellDiff> diff_table1(const std::vector<fixtures::TableRow>& rows,
                                  int max_rank, int max_rank_bc, bool include_e8);

// Regenerates every row of table 2 or 3 at every admissible rank <= max_rank
// (BC capped at max_rank_bc) and diffs the decomposition multisets.
std::vector<CellDiff> diff_table23(int table_id,
                                   const std::vector<fixtures::TableRow>& rows,
                                   int max_rank, int max_rank_bc);

// Diffs |rho|^2, R^2, dim(g), r_i and |Out| against the table 4 fixture.
std::vector<CellDiff> diff_table4(const std::vector<fixtures::TableRow>& rows);

// Ranks at which a parameterized row is instantiated.
std::vector<int> applicable_ranks(const fixtures::TableRow& row, int max_rank,
                                  int max_rank_bc);

std::string describe(const CellDiff& d);

}  // namespace regen
}  // namespace smallrep
