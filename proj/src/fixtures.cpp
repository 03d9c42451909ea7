#include "smallrep/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace smallrep {
namespace fixtures {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw std::runtime_error("fixture parse error at line " + std::to_string(line_no) +
                           ": " + what);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Rat parse_rat(const std::string& s, int line_no) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    parse_fail(line_no, "bad rational '" + s + "'");
  }
}

std::pair<Family, int> parse_family(const std::string& tok, int line_no) {
  if (tok == "A") return {Family::A, 0};
  if (tok == "B") return {Family::B, 0};
  if (tok == "C") return {Family::C, 0};
  if (tok == "D") return {Family::D, 0};
  if (tok == "BC") return {Family::BC, 0};
  if (tok == "E6") return {Family::E, 6};
  if (tok == "E7") return {Family::E, 7};
  if (tok == "E8") return {Family::E, 8};
  if (tok == "F4") return {Family::F, 4};
  if (tok == "G2") return {Family::G, 2};
  parse_fail(line_no, "bad family token '" + tok + "'");
}

std::string family_token(Family f, int fixed_rank) {
  if (f == Family::E || f == Family::F || f == Family::G)
    return family_name(f) + std::to_string(fixed_rank);
  return family_name(f);
}

}  // namespace

bool RankCond::matches(int m) const {
  switch (kind) {
    case Kind::Eq: return m == vals[0];
    case Kind::Ge: return m >= vals[0];
    case Kind::In: return std::find(vals.begin(), vals.end(), m) != vals.end();
    case Kind::None: return true;
  }
  return false;
}

std::string RankCond::str() const {
  switch (kind) {
    case Kind::Eq: return "m=" + std::to_string(vals[0]);
    case Kind::Ge: return "m>=" + std::to_string(vals[0]);
    case Kind::In: {
      std::string s = "m=";
      for (size_t i = 0; i < vals.size(); ++i)
        s += (i ? "," : "") + std::to_string(vals[i]);
      return s;
    }
    case Kind::None: return "-";
  }
  return "?";
}

RankCond RankCond::parse(const std::string& s) {
  RankCond c;
  if (s == "-") {
    c.kind = Kind::None;
    return c;
  }
  if (s.rfind("m>=", 0) == 0) {
    c.kind = Kind::Ge;
    c.vals = {std::stoi(s.substr(3))};
    return c;
  }
  if (s.rfind("m=", 0) == 0) {
    std::string rest = s.substr(2);
    c.kind = rest.find(',') == std::string::npos ? Kind::Eq : Kind::In;
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) c.vals.push_back(std::stoi(tok));
    return c;
  }
  throw std::runtime_error("bad rank condition '" + s + "'");
}

DominantWeight WeightExpr::instantiate(int rank) const {
  DominantWeight w;
  w.a.assign(rank, 0);
  for (const auto& t : terms) {
    long long idx = t.from_top ? rank - t.offset : t.offset;
    if (idx < 1 || idx > rank)
      throw std::runtime_error("weight index b" + std::to_string(idx) +
                               " out of range at rank " + std::to_string(rank));
    w.a[idx - 1] += t.coeff;
  }
  return w;
}

std::string WeightExpr::str() const {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += "+";
    if (t.coeff != 1) s += std::to_string(t.coeff);
    s += "b";
    if (t.from_top) {
      s += "m";
      if (t.offset) s += "-" + std::to_string(t.offset);
    } else {
      s += std::to_string(t.offset);
    }
  }
  return s;
}

WeightExpr WeightExpr::parse(const std::string& s) {
  WeightExpr e;
  size_t i = 0;
  auto bad = [&]() { throw std::runtime_error("bad weight expression '" + s + "'"); };
  while (i < s.size()) {
    Term t;
    size_t j = i;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) t.coeff = std::stoll(s.substr(i, j - i));
    if (j >= s.size() || s[j] != 'b') bad();
    ++j;
    if (j < s.size() && s[j] == 'm') {
      t.from_top = true;
      ++j;
      if (j < s.size() && s[j] == '-') {
        ++j;
        size_t k = j;
        while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) bad();
        t.offset = std::stoll(s.substr(j, k - j));
        j = k;
      }
    } else {
      size_t k = j;
      while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == j) bad();
      t.offset = std::stoll(s.substr(j, k - j));
      j = k;
    }
    e.terms.push_back(t);
    if (j < s.size()) {
      if (s[j] != '+' || j + 1 == s.size()) bad();
      ++j;
    }
    i = j;
  }
  if (e.terms.empty()) bad();
  return e;
}

squares::Decomposition ColumnExpr::instantiate(int rank) const {
  squares::Decomposition dec;
  dec.delta = delta;
  std::map<IrrepLabel, long long> acc;
  for (const auto& c : constituents)
    acc[IrrepLabel{c.weight.instantiate(rank), c.parity}] += c.mult;
  for (const auto& [label, mult] : acc) dec.constituents.push_back({label, mult});
  std::sort(dec.constituents.begin(), dec.constituents.end());
  return dec;
}

std::string ColumnExpr::str() const {
  std::string s;
  for (const auto& c : constituents) {
    if (!s.empty()) s += " ";
    if (c.mult != 1) s += std::to_string(c.mult);
    s += c.parity == Parity::V ? "V(" : "W(";
    s += c.weight.str();
    s += ")";
  }
  for (long long k = 0; k < delta; ++k) s += (s.empty() ? "1" : " 1");
  return s;
}

ColumnExpr ColumnExpr::parse(const std::string& s, int line_no) {
  ColumnExpr col;
  for (const auto& tok : split_ws(s)) {
    size_t i = 0;
    long long mult = 1;
    size_t j = i;
    while (j < tok.size() && isdigit(static_cast<unsigned char>(tok[j]))) ++j;
    if (j > i && j == tok.size()) {
      // bare integer: that many trivial summands
      col.delta += std::stoll(tok);
      continue;
    }
    if (j > i) mult = std::stoll(tok.substr(i, j - i));
    if (j >= tok.size() || (tok[j] != 'V' && tok[j] != 'W'))
      parse_fail(line_no, "bad constituent '" + tok + "'");
    ConstituentExpr c;
    c.mult = mult;
    c.parity = tok[j] == 'V' ? Parity::V : Parity::W;
    ++j;
    if (j >= tok.size() || tok[j] != '(' || tok.back() != ')')
      parse_fail(line_no, "bad constituent '" + tok + "'");
    c.weight = WeightExpr::parse(tok.substr(j + 1, tok.size() - j - 2));
    col.constituents.push_back(c);
  }
  return col;
}

bool TableRow::applies_to(const DynkinType& t) const {
  if (t.family != family) return false;
  if (cond.kind == RankCond::Kind::None) return t.rank == fixed_rank;
  return cond.matches(t.rank);
}

namespace {

std::string serialize_row(const TableRow& row) {
  if (row.table == 4) {
    std::string s = family_name(row.family) + std::to_string(row.fixed_rank);
    s += " rho2=" + row.rho2.str() + " R2=" + row.R2.str() +
         " dim=" + std::to_string(row.dim) + " out=" + std::to_string(row.out) + " r=";
    for (size_t i = 0; i < row.r.size(); ++i) s += (i ? "," : "") + row.r[i].str();
    return s;
  }
  std::string s = family_token(row.family, row.fixed_rank) + " " + row.cond.str() +
                  " " + row.lambda.str();
  if (row.table == 1) return s + " " + row.label_plus + " " + row.label_minus;
  return s + " | " + row.sym.str() + " | " + row.alt.str();
}

}  // namespace

std::vector<TableRow> parse(int table_id, const std::string& text) {
  std::vector<TableRow> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    TableRow row;
    row.table = table_id;
    row.line_no = line_no;
    if (table_id == 4) {
      auto toks = split_ws(line);
      if (toks.size() != 6) parse_fail(line_no, "expected 6 fields");
      // family token carries the rank, e.g. B3, BC4, E7
      std::string fam = toks[0];
      size_t d = 0;
      while (d < fam.size() && !isdigit(static_cast<unsigned char>(fam[d]))) ++d;
      if (d == fam.size()) parse_fail(line_no, "missing rank in '" + fam + "'");
      auto [f, r0] = parse_family(fam.substr(0, d) == "E" || fam.substr(0, d) == "F" ||
                                          fam.substr(0, d) == "G"
                                      ? fam
                                      : fam.substr(0, d),
                                  line_no);
      row.family = f;
      row.fixed_rank = r0 ? r0 : std::stoi(fam.substr(d));
      row.cond.kind = RankCond::Kind::None;
      for (int k = 1; k <= 5; ++k) {
        const std::string& t = toks[k];
        auto eq = t.find('=');
        if (eq == std::string::npos) parse_fail(line_no, "bad field '" + t + "'");
        std::string key = t.substr(0, eq), val = t.substr(eq + 1);
        if (key == "rho2") row.rho2 = parse_rat(val, line_no);
        else if (key == "R2") row.R2 = parse_rat(val, line_no);
        else if (key == "dim") row.dim = std::stoll(val);
        else if (key == "out") row.out = std::stoll(val);
        else if (key == "r") {
          std::istringstream rin(val);
          std::string tok;
          while (std::getline(rin, tok, ',')) row.r.push_back(parse_rat(tok, line_no));
        } else parse_fail(line_no, "unknown field '" + key + "'");
      }
      rows.push_back(row);
      continue;
    }
    if (table_id == 1) {
      auto toks = split_ws(line);
      if (toks.size() != 5) parse_fail(line_no, "expected 5 fields");
      auto [f, r0] = parse_family(toks[0], line_no);
      row.family = f;
      row.fixed_rank = r0;
      try {
        row.cond = RankCond::parse(toks[1]);
        row.lambda = WeightExpr::parse(toks[2]);
      } catch (const std::exception& e) {
        parse_fail(line_no, e.what());
      }
      for (const std::string* lbl : {&toks[3], &toks[4]})
        if (*lbl != "star" && *lbl != "circle" && *lbl != "dash")
          parse_fail(line_no, "bad label '" + *lbl + "'");
      row.label_plus = toks[3];
      row.label_minus = toks[4];
      rows.push_back(row);
      continue;
    }
    // tables 2 and 3: "<family> <cond> <lambda> | <sym> | <alt>"
    auto bar1 = line.find('|');
    auto bar2 = line.find('|', bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos)
      parse_fail(line_no, "expected two column separators");
    auto head = split_ws(line.substr(0, bar1));
    if (head.size() != 3) parse_fail(line_no, "expected family, condition, lambda");
    auto [f, r0] = parse_family(head[0], line_no);
    row.family = f;
    row.fixed_rank = r0;
    try {
      row.cond = RankCond::parse(head[1]);
      row.lambda = WeightExpr::parse(head[2]);
    } catch (const std::exception& e) {
      parse_fail(line_no, e.what());
    }
    row.sym = ColumnExpr::parse(line.substr(bar1 + 1, bar2 - bar1 - 1), line_no);
    row.alt = ColumnExpr::parse(line.substr(bar2 + 1), line_no);
    rows.push_back(row);
  }
  return rows;
}

std::vector<TableRow> load(int table_id, const std::string& data_dir) {
  if (table_id < 1 || table_id > 4)
    throw std::invalid_argument("table id must be 1..4");
  std::string path = data_dir + "/table" + std::to_string(table_id) + ".txt";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(table_id, buf.str());
}

std::string serialize(const std::vector<TableRow>& rows) {
  std::string out;
  for (const auto& r : rows) out += serialize_row(r) + "\n";
  return out;
}

unsigned long long checksum(const std::vector<TableRow>& rows) {
  std::string s = serialize(rows);
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string default_data_dir() {
#ifdef SMALLREP_DATA_DIR
  return SMALLREP_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace fixtures
}  // namespace smallrep
