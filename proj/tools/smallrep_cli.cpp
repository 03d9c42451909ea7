// Command-line front end: dimensions, characters, square decompositions,
// the smallness classification, table regeneration and the consistency
// check suites.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "smallrep/classify.hpp"
#include "smallrep/regen.hpp"

using namespace smallrep;
using nlohmann::json;

namespace {

constexpr int kUsageError = 2;
constexpr int kMismatch = 1;

struct Options {
  std::string emit = "text";
  std::string data_dir;
};

DominantWeight parse_lambda(const std::string& s, int rank) {
  DominantWeight w;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) w.a.push_back(std::stoll(tok));
  if (static_cast<int>(w.a.size()) != rank)
    throw CLI::ValidationError("lambda", "expected " + std::to_string(rank) +
                                             " comma-separated coefficients");
  for (long long c : w.a)
    if (c < 0) throw CLI::ValidationError("lambda", "coefficients must be >= 0");
  return w;
}

int parse_eps(const std::string& s) {
  if (s == "+1" || s == "s" || s == "+") return +1;
  if (s == "-1" || s == "a" || s == "-") return -1;
  throw CLI::ValidationError("eps", "use +1/-1 or s/a");
}

json lambda_json(const DominantWeight& w) { return json(w.a); }

json decomposition_json(const DynkinType& t, const DominantWeight& lam, int eps,
                        const squares::Decomposition& dec) {
  json cons = json::array();
  for (const auto& [label, mult] : dec.constituents)
    cons.push_back({{"lambda", lambda_json(label.weight)},
                    {"parity", label.parity == Parity::V ? "V" : "W"},
                    {"mult", mult}});
  return {{"type", family_name(t.family)}, {"rank", t.rank},
          {"lambda", lambda_json(lam)},    {"epsilon", eps},
          {"constituents", cons},          {"delta", dec.delta}};
}

int cmd_dim(const Options& opt, const DynkinType& t, const DominantWeight& lam) {
  RootSystem rs = RootSystem::build(t);
  IrrepLabel label{lam, Parity::V};
  long long total = reps::dim_total(rs, label);
  long long sup = reps::superdim(rs, label);
  if (opt.emit == "structured") {
    json out = {{"type", family_name(t.family)}, {"rank", t.rank},
                {"lambda", lambda_json(lam)},    {"dim_total", total},
                {"superdim", sup}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.name() << " V(" << lam.str() << "): dim_total = " << total
              << ", superdim = " << sup << "\n";
  }
  return 0;
}

int cmd_char(const Options& opt, const DynkinType& t, const DominantWeight& lam) {
  RootSystem rs = RootSystem::build(t);
  GradedCharacter ch = reps::character(rs, IrrepLabel{lam, Parity::V});
  if (opt.emit == "structured") {
    json entries = json::array();
    for (const auto& [w, gm] : ch.dominant_entries()) {
      json coords = json::array();
      for (const auto& c : w) coords.push_back(c.str());
      entries.push_back({{"weight", coords},
                         {"orbit", rs.orbit_size(w)},
                         {"even", gm.even},
                         {"odd", gm.odd}});
    }
    json out = {{"type", family_name(t.family)},  {"rank", t.rank},
                {"lambda", lambda_json(lam)},     {"dominant_weights", entries},
                {"dim_total", ch.dim_total(rs)},  {"superdim", ch.superdim(rs)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.name() << " character of V(" << lam.str() << ") by dominant orbit:\n";
    for (const auto& [w, gm] : ch.dominant_entries())
      std::cout << "  " << weight_str(w) << "  orbit " << rs.orbit_size(w)
                << "  even " << gm.even << "  odd " << gm.odd << "\n";
    std::cout << "dim_total = " << ch.dim_total(rs)
              << ", superdim = " << ch.superdim(rs) << "\n";
  }
  return 0;
}

int cmd_square(const Options& opt, const DynkinType& t, const DominantWeight& lam,
               int eps) {
  RootSystem rs = RootSystem::build(t);
  squares::Decomposition dec = squares::square_decompose(rs, lam, eps);
  if (opt.emit == "structured") {
    std::cout << decomposition_json(t, lam, eps, dec).dump(2) << "\n";
  } else {
    std::cout << (eps > 0 ? "S^2" : "L^2") << "(V(" << lam.str() << ")) over "
              << t.name() << " = " << dec.str() << "\n";
  }
  return 0;
}

int cmd_classify(const Options& opt, const DynkinType& t) {
  RootSystem rs = RootSystem::build(t);
  classify::ClassifyResult res = classify::classify_all(rs);
  if (opt.emit == "structured") {
    json rows = json::array();
    for (const auto& row : res.rows)
      rows.push_back({{"lambda", lambda_json(row.lambda)},
                      {"plus", classify::label_str(row.plus)},
                      {"minus", classify::label_str(row.minus)}});
    json cands = json::array();
    for (const auto& c : res.candidates)
      cands.push_back({{"lambda", lambda_json(c.lambda)},
                       {"dim", c.dim},
                       {"plus", classify::label_str(c.plus)},
                       {"minus", classify::label_str(c.minus)},
                       {"pruned_plus", c.pruned_plus},
                       {"pruned_minus", c.pruned_minus}});
    json out = {{"type", family_name(t.family)},
                {"rank", t.rank},
                {"rows", rows},
                {"candidates", cands}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "small representations of " << t.name() << " (eps=+1, eps=-1):\n";
    for (const auto& row : res.rows)
      std::cout << "  " << row.lambda.str() << "  " << classify::label_str(row.plus)
                << "  " << classify::label_str(row.minus) << "\n";
    std::cout << "candidates examined (dim <= dim g = " << rs.dim_g() << "):\n";
    for (const auto& c : res.candidates) {
      std::cout << "  " << c.lambda.str() << " dim " << c.dim << "  +:"
                << classify::label_str(c.plus) << " -:" << classify::label_str(c.minus);
      if (!c.pruned_plus.empty()) {
        std::cout << "  [+ pruned by";
        for (const auto& s : c.pruned_plus) std::cout << " " << s;
        std::cout << "]";
      }
      if (!c.pruned_minus.empty()) {
        std::cout << "  [- pruned by";
        for (const auto& s : c.pruned_minus) std::cout << " " << s;
        std::cout << "]";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_identify(const Options& opt, long long d, const std::string& p1,
                 const std::string& p2) {
  auto pat = [](const std::string& s) {
    if (s == "star") return classify::Pattern::Star;
    if (s == "circle") return classify::Pattern::Circle;
    if (s == "notsmall" || s == "dash") return classify::Pattern::NotSmall;
    if (s == "any") return classify::Pattern::Any;
    throw CLI::ValidationError("pattern", "use star|circle|notsmall|any");
  };
  auto found = classify::identify_tannaka_candidates(d, pat(p1), pat(p2));
  if (opt.emit == "structured") {
    json out = json::array();
    for (const auto& [t, lam] : found)
      out.push_back({{"type", family_name(t.family)},
                     {"rank", t.rank},
                     {"lambda", lambda_json(lam)}});
    std::cout << out.dump(2) << "\n";
  } else {
    if (found.empty()) std::cout << "no candidates of dimension " << d << "\n";
    for (const auto& [t, lam] : found)
      std::cout << t.name() << "  " << lam.str() << "\n";
  }
  return 0;
}

int report_diffs(const std::vector<regen::CellDiff>& diffs, const std::string& what) {
  if (diffs.empty()) {
    std::cout << what << ": all cells match\n";
    return 0;
  }
  std::cout << what << ": " << diffs.size() << " mismatching cell(s)\n";
  for (const auto& d : diffs) {
    std::cout << "--- " << d.where << "\n";
    std::cout << "-" << d.expected << "\n";
    std::cout << "+" << d.computed << "\n";
    if (!d.note.empty()) std::cout << "  note: " << d.note << "\n";
  }
  return kMismatch;
}

int cmd_table(const Options& opt, int id, int max_rank) {
  std::string dir = opt.data_dir.empty() ? fixtures::default_data_dir() : opt.data_dir;
  auto rows = fixtures::load(id, dir);
  int bc_cap = std::min(max_rank, 6);
  std::vector<regen::CellDiff> diffs;
  if (id == 1) diffs = regen::diff_table1(rows, max_rank, bc_cap, max_rank >= 8);
  else if (id == 4) diffs = regen::diff_table4(rows);
  else diffs = regen::diff_table23(id, rows, max_rank, bc_cap);
  return report_diffs(diffs, "table " + std::to_string(id));
}

int cmd_check(const Options& opt, const std::string& tier) {
  if (tier != "fast" && tier != "slow")
    throw CLI::ValidationError("tier", "use fast or slow");
  bool slow = tier == "slow";
  std::string dir = opt.data_dir.empty() ? fixtures::default_data_dir() : opt.data_dir;
  auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  rc |= report_diffs(regen::diff_table4(fixtures::load(4, dir)), "table 4");
  rc |= report_diffs(regen::diff_table1(fixtures::load(1, dir), 8, 6, slow), "table 1");
  rc |= report_diffs(regen::diff_table23(2, fixtures::load(2, dir), 8, 6), "table 2");
  rc |= report_diffs(regen::diff_table23(3, fixtures::load(3, dir), 8, 6), "table 3");
  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << "check " << tier << " finished in " << dt << " ms, "
            << (rc ? "with mismatches reported above" : "all clean") << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with squares of irreducible representations "
               "of the simple Lie algebras and osp(1|2m)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--emit", opt.emit, "output format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--data", opt.data_dir, "fixture directory (default: built-in path)");

  std::string family, lambda_s, eps_s, p1, p2, tier;
  int rank = 0, table_id = 0, max_rank = 8;
  long long d = 0;

  auto add_type = [&](CLI::App* c) {
    c->add_option("family", family, "A,B,C,D,E,F,G or BC")->required();
    c->add_option("rank", rank, "rank m")->required();
  };

  auto* dim = app.add_subcommand("dim", "dimension of an irreducible");
  add_type(dim);
  dim->add_option("lambda", lambda_s, "comma-separated beta coefficients")->required();

  auto* chr = app.add_subcommand("char", "graded character by dominant orbits");
  add_type(chr);
  chr->add_option("lambda", lambda_s)->required();

  auto* sq = app.add_subcommand("square", "decompose S^2 or L^2 of an irreducible");
  add_type(sq);
  sq->add_option("lambda", lambda_s)->required();
  sq->add_option("eps", eps_s, "+1|-1|s|a")->required();

  auto* cl = app.add_subcommand("classify", "small representations of one type");
  add_type(cl);

  auto* tb = app.add_subcommand("table", "regenerate a table and diff against fixtures");
  tb->add_option("id", table_id, "table 1..4")->required()->check(CLI::Range(1, 4));
  tb->add_option("max_rank", max_rank, "largest family rank (default 8)");

  auto* idf = app.add_subcommand("identify", "scan the classification for candidates");
  idf->add_option("d", d, "(super)dimension")->required();
  idf->add_option("plus", p1, "label pattern for eps=+1")->required();
  idf->add_option("minus", p2, "label pattern for eps=-1")->required();

  auto* ck = app.add_subcommand("check", "run the table consistency suites");
  ck->add_option("tier", tier, "fast (skips E8) or slow")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (dim->parsed() || chr->parsed() || sq->parsed() || cl->parsed()) {
      DynkinType type = DynkinType::make(family, rank);
      if (cl->parsed()) return cmd_classify(opt, type);
      DominantWeight lam = parse_lambda(lambda_s, type.rank);
      if (dim->parsed()) return cmd_dim(opt, type, lam);
      if (chr->parsed()) return cmd_char(opt, type, lam);
      return cmd_square(opt, type, lam, parse_eps(eps_s));
    }
    if (tb->parsed()) return cmd_table(opt, table_id, max_rank);
    if (idf->parsed()) return cmd_identify(opt, d, p1, p2);
    if (ck->parsed()) return cmd_check(opt, tier);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsageError;
}
