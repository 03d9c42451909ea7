#include "smallrep/regen.hpp"

#include <algorithm>
#include <map>

namespace smallrep {
namespace regen {

namespace {

int family_min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::BC: return 1;
    default: return 0;
  }
}

std::string verdict_pair(classify::Label p, classify::Label m) {
  return classify::label_str(p) + " " + classify::label_str(m);
}

}  // namespace

std::vector<int> applicable_ranks(const fixtures::TableRow& row, int max_rank,
                                  int max_rank_bc) {
  using Kind = fixtures::RankCond::Kind;
  int cap = row.family == Family::BC ? max_rank_bc : max_rank;
  std::vector<int> out;
  switch (row.cond.kind) {
    case Kind::None:
      out.push_back(row.fixed_rank);
      break;
    case Kind::Eq:
    case Kind::In:
      for (int m : row.cond.vals)
        if (m <= cap) out.push_back(m);
      break;
    case Kind::Ge:
      for (int m = std::max(row.cond.vals[0], family_min_rank(row.family)); m <= cap; ++m)
        out.push_back(m);
      break;
  }
  return out;
}

std::vector<CellDiff> diff_table1(const std::vector<fixtures::TableRow>& rows,
                                  int max_rank, int max_rank_bc, bool include_e8) {
  std::vector<CellDiff> diffs;
  for (const auto& type : admissible_types(max_rank, max_rank_bc)) {
    if (!include_e8 && type.family == Family::E && type.rank == 8) continue;
    RootSystem rs = RootSystem::build(type);

    // expected rows for this type
    std::map<DominantWeight, std::pair<classify::Label, classify::Label>> expected;
    auto to_label = [](const std::string& s) {
      if (s == "star") return classify::Label::Star;
      if (s == "circle") return classify::Label::Circle;
      return classify::Label::NotSmall;
    };
    if (type.family == Family::C && type.rank == 2) {
      // No printed C_2 rows; read the B_2 rows through B_2 = C_2, which
      // exchanges the two beta coordinates.
      for (const auto& row : rows) {
        if (!(row.family == Family::B && row.cond.matches(2))) continue;
        DominantWeight lam = row.lambda.instantiate(2);
        std::swap(lam.a[0], lam.a[1]);
        expected[lam] = {to_label(row.label_plus), to_label(row.label_minus)};
      }
    } else {
      for (const auto& row : rows) {
        if (!row.applies_to(type)) continue;
        DominantWeight lam = row.lambda.instantiate(type.rank);
        auto labels = std::make_pair(to_label(row.label_plus), to_label(row.label_minus));
        auto it = expected.find(lam);
        if (it != expected.end() && !(it->second == labels)) {
          diffs.push_back({"table1:" + type.name() + " " + lam.str(),
                           "consistent duplicate rows", "conflicting instantiation", ""});
          continue;
        }
        expected[lam] = labels;
      }
    }

    classify::ClassifyResult res = classify::classify_all(rs);
    std::map<DominantWeight, std::pair<classify::Label, classify::Label>> got;
    for (const auto& row : res.rows) got[row.lambda] = {row.plus, row.minus};

    for (const auto& [lam, labels] : expected) {
      auto it = got.find(lam);
      if (it == got.end()) {
        diffs.push_back({"table1:" + type.name() + " " + lam.str(),
                         verdict_pair(labels.first, labels.second), "(no row)", ""});
      } else if (!(it->second == labels)) {
        diffs.push_back({"table1:" + type.name() + " " + lam.str(),
                         verdict_pair(labels.first, labels.second),
                         verdict_pair(it->second.first, it->second.second), ""});
      }
    }
    for (const auto& [lam, labels] : got)
      if (!expected.count(lam))
        diffs.push_back({"table1:" + type.name() + " " + lam.str(), "(no row)",
                         verdict_pair(labels.first, labels.second), ""});
  }
  return diffs;
}

std::vector<CellDiff> diff_table23(int table_id,
                                   const std::vector<fixtures::TableRow>& rows,
                                   int max_rank, int max_rank_bc) {
  std::vector<CellDiff> diffs;
  for (const auto& row : rows) {
    for (int m : applicable_ranks(row, max_rank, max_rank_bc)) {
      DynkinType type{row.family, m};
      RootSystem rs = RootSystem::build(type);
      DominantWeight lam = row.lambda.instantiate(m);
      long long sdim = reps::dim_of(rs, lam);
      for (int eps : {+1, -1}) {
        squares::Decomposition expected =
            (eps > 0 ? row.sym : row.alt).instantiate(m);
        squares::Decomposition computed = squares::square_decompose(rs, lam, eps);
        if (expected == computed) continue;
        // Check the printed multiset against the forced superdimension of
        // T_eps; a violation means the printed cell cannot be correct.
        long long printed_sdim = expected.delta;
        for (const auto& [label, mult] : expected.constituents) {
          long long d = reps::dim_of(rs, label.weight);
          printed_sdim += mult * (label.parity == Parity::V ? d : -d);
        }
        long long forced = sdim * (sdim + eps) / 2;
        std::string note;
        if (printed_sdim != forced)
          note = "printed cell violates superdimension additivity: sum " +
                 std::to_string(printed_sdim) + " != sdim T_eps = " +
                 std::to_string(forced);
        diffs.push_back({"table" + std::to_string(table_id) + ":" + type.name() +
                             " " + lam.str() + (eps > 0 ? " S^2" : " L^2"),
                         expected.str(), computed.str(), note});
      }
    }
  }
  return diffs;
}

std::vector<CellDiff> diff_table4(const std::vector<fixtures::TableRow>& rows) {
  std::vector<CellDiff> diffs;
  for (const auto& row : rows) {
    DynkinType type{row.family, row.fixed_rank};
    RootSystem rs = RootSystem::build(type);
    std::string where = "table4:" + type.name();
    Rat rho2 = rs.inner(rs.rho(), rs.rho());
    if (rho2 != row.rho2)
      diffs.push_back({where + " rho2", row.rho2.str(), rho2.str(), ""});
    if (rs.coroot_norm_max_sq() != row.R2)
      diffs.push_back({where + " R2", row.R2.str(), rs.coroot_norm_max_sq().str(), ""});
    if (rs.dim_g() != row.dim)
      diffs.push_back({where + " dim", std::to_string(row.dim),
                       std::to_string(rs.dim_g()), ""});
    long long out = static_cast<long long>(rs.diagram_automorphisms().size());
    if (out != row.out)
      diffs.push_back({where + " out", std::to_string(row.out), std::to_string(out), ""});
    for (int i = 1; i <= rs.rank(); ++i) {
      if (i > static_cast<int>(row.r.size())) {
        diffs.push_back({where + " r" + std::to_string(i), "(missing)",
                         rs.r_ratio(i).str(), ""});
        continue;
      }
      if (rs.r_ratio(i) != row.r[i - 1])
        diffs.push_back({where + " r" + std::to_string(i), row.r[i - 1].str(),
                         rs.r_ratio(i).str(), ""});
    }
  }
  return diffs;
}

std::string describe(const CellDiff& d) {
  std::string s = d.where + ": expected [" + d.expected + "] computed [" + d.computed + "]";
  if (!d.note.empty()) s += "\n    " + d.note;
  return s;
}

}  // namespace regen
}  // namespace smallrep
