#pragma once

#include <string>
#include <vector>

#include "smallrep/reps.hpp"
#include "smallrep/squares.hpp"

namespace smallrep {
namespace fixtures {

// Rank condition of a parameterized table row: m = k, m >= k, or m in a list.
struct RankCond {
  enum class Kind { Eq, Ge, In, None } kind = Kind::None;  // None: rank fixed by type
  std::vector<int> vals;

  bool matches(int m) const;
  std::string str() const;
  static RankCond parse(const std::string& s);
};

// Weight as a formal sum of terms c * b[index], index either absolute (k)
// or counted from the top (m - k).
struct WeightExpr {
  struct Term {
    long long coeff = 1;
    bool from_top = false;  // index = m - offset when true
    long long offset = 0;   // absolute index when !from_top (1-based)
  };
  std::vector<Term> terms;

  DominantWeight instantiate(int rank) const;
  std::string str() const;
  static WeightExpr parse(const std::string& s);
};

struct ConstituentExpr {
  long long mult = 1;
  Parity parity = Parity::V;
  WeightExpr weight;
};

struct ColumnExpr {
  std::vector<ConstituentExpr> constituents;
  long long delta = 0;

  // Concrete expectation at the given rank, sorted like Decomposition.
  squares::Decomposition instantiate(int rank) const;
  std::string str() const;
  static ColumnExpr parse(const std::string& s, int line_no);
};

struct TableRow {
  int table = 0;
  Family family = Family::A;
  int fixed_rank = 0;  // for exceptional families (cond.kind == None)
  RankCond cond;
  int line_no = 0;

  // tables 1-3
  WeightExpr lambda;
  // table 1
  std::string label_plus, label_minus;
  // tables 2-3
  ColumnExpr sym, alt;
  // table 4 (instantiated rows)
  Rat rho2, R2;
  long long dim = 0, out = 0;
  std::vector<Rat> r;

  bool applies_to(const DynkinType& t) const;
};

std::vector<TableRow> load(int table_id, const std::string& data_dir);
std::vector<TableRow> parse(int table_id, const std::string& text);
std::string serialize(const std::vector<TableRow>& rows);

// FNV-1a 64-bit checksum of the canonical serialization.
unsigned long long checksum(const std::vector<TableRow>& rows);

// Compile-time default location of the fixture files.
std::string default_data_dir();

}  // namespace fixtures
}  // namespace smallrep
