#include "smallrep/squares.hpp"

#include <algorithm>

namespace smallrep {
namespace squares {

std::string Decomposition::str() const {
  std::string s;
  for (const auto& [label, mult] : constituents) {
    if (!s.empty()) s += " + ";
    if (mult > 1) s += std::to_string(mult);
    s += label.str();
  }
  for (long long k = 0; k < delta; ++k) s += s.empty() ? "1" : " + 1";
  return s.empty() ? "0" : s;
}

GradedCharacter square_character(const RootSystem& rs, const GradedCharacter& ch,
                                 int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
  auto full = ch.expand(rs);
  std::vector<std::pair<Weight, GradedMult>> v(full.begin(), full.end());
  std::map<Weight, GradedMult> acc;
  auto put = [&](const Weight& w, long long e, long long o) {
    if (e == 0 && o == 0) return;
    auto& gm = acc[w];
    gm.even += e;
    gm.odd += o;
  };
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& [wi, gi] = v[i];
    // diagonal: symmetric pairs from one block, alternating from the other
    long long e = gi.even, o = gi.odd;
    Weight w2 = wi + wi;
    if (eps > 0)
      put(w2, e * (e + 1) / 2 + o * (o - 1) / 2, e * o);
    else
      put(w2, e * (e - 1) / 2 + o * (o + 1) / 2, e * o);
    for (size_t j = i + 1; j < n; ++j) {
      const auto& [wj, gj] = v[j];
      put(wi + wj, e * gj.even + o * gj.odd, e * gj.odd + o * gj.even);
    }
  }
  GradedCharacter out;
  for (const auto& [w, gm] : acc)
    if (rs.is_dominant(w)) out.add(w, gm.even, gm.odd);
  return out;
}

Decomposition decompose(const RootSystem& rs, const GradedCharacter& ch,
                        TieBreak tie) {
  std::map<Weight, GradedMult> rem(ch.dominant_entries());
  std::map<Weight, std::vector<Rat>> coords;
  auto coord_of = [&](const Weight& w) -> const std::vector<Rat>& {
    auto it = coords.find(w);
    if (it == coords.end()) it = coords.emplace(w, rs.root_coords(w)).first;
    return it->second;
  };
  auto dominates = [&](const Weight& x, const Weight& y) {
    // x >= y in the root order
    const auto &cx = coord_of(x), &cy = coord_of(y);
    for (size_t k = 0; k < cx.size(); ++k)
      if (cx[k] < cy[k]) return false;
    return true;
  };

  Decomposition dec;
  while (!rem.empty()) {
    std::vector<const Weight*> keys;
    for (const auto& [w, gm] : rem) keys.push_back(&w);
    const Weight* pick = nullptr;
    for (const Weight* u : keys) {
      bool maximal = true;
      for (const Weight* v : keys)
        if (v != u && dominates(*v, *u)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      if (!pick || (tie == TieBreak::LexHigh ? *pick < *u : *u < *pick)) pick = u;
    }
    if (!pick) throw DecompositionError("peeling: no maximal weight");
    Weight mu = *pick;
    if (!rs.is_dominant(mu))
      throw DecompositionError("peeling: maximal weight not dominant: " + weight_str(mu));
    GradedMult gm = rem[mu];
    if (is_zero(mu)) {
      if (gm.even > 0) dec.delta += gm.even;
      if (gm.odd > 0)
        dec.constituents.push_back({IrrepLabel{rs.coefficients_of(mu), Parity::W}, gm.odd});
      rem.erase(mu);
      continue;
    }
    DominantWeight dw = rs.coefficients_of(mu);
    GradedCharacter chv = reps::character(rs, IrrepLabel{dw, Parity::V});
    if (gm.even > 0) dec.constituents.push_back({IrrepLabel{dw, Parity::V}, gm.even});
    if (gm.odd > 0) dec.constituents.push_back({IrrepLabel{dw, Parity::W}, gm.odd});
    for (const auto& [w, c] : chv.dominant_entries()) {
      auto& r = rem[w];
      r.even -= gm.even * c.even + gm.odd * c.odd;
      r.odd -= gm.even * c.odd + gm.odd * c.even;
      if (r.even < 0 || r.odd < 0)
        throw DecompositionError("peeling: negative multiplicity at " + weight_str(w));
      if (r.even == 0 && r.odd == 0) rem.erase(w);
    }
  }
  std::sort(dec.constituents.begin(), dec.constituents.end());
  return dec;
}

Decomposition square_decompose(const RootSystem& rs, const DominantWeight& lambda,
                               int eps) {
  if (lambda.is_zero())
    throw std::invalid_argument("square_decompose: lambda must be nonzero");
  GradedCharacter ch = reps::character(rs, IrrepLabel{lambda, Parity::V});
  return decompose(rs, square_character(rs, ch, eps));
}

bool contains_highest_weight(const RootSystem& rs, const DominantWeight& lambda,
                             int i) {
  if (i < 1 || i > rs.rank()) throw std::out_of_range("index out of range");
  if (lambda.a[i - 1] <= 0)
    throw std::invalid_argument("contains_highest_weight: requires a_i > 0");
  Weight target = Rat(2) * rs.weight_of(lambda) - rs.simple_roots()[i - 1];
  Decomposition dec = square_decompose(rs, lambda, -1);
  if (is_zero(target)) return dec.delta > 0;
  for (const auto& [label, mult] : dec.constituents)
    if (rs.weight_of(label.weight) == target) return true;
  return false;
}

}  // namespace squares
}  // namespace smallrep
