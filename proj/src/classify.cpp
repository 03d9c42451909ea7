#include "smallrep/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace smallrep {
namespace classify {

std::string label_str(Label l) {
  switch (l) {
    case Label::Star: return "star";
    case Label::Circle: return "circle";
    case Label::NotSmall: return "-";
  }
  return "?";
}

Rat casimir_c(const RootSystem& rs, const DominantWeight& mu) {
  Weight w = rs.weight_of(mu);
  return dot(w, w) + Rat(2) * dot(w, rs.rho());
}

Rat kappa(const RootSystem& rs) {
  DominantWeight ad = rs.adjoint_weight();
  return Rat(reps::dim_of(rs, ad)) * casimir_c(rs, ad);
}

Rat index_of(const RootSystem& rs, const IrrepLabel& label) {
  if (label.weight.is_zero() && label.parity == Parity::V) return Rat(0);
  return Rat(reps::superdim(rs, label)) * casimir_c(rs, label.weight) / kappa(rs);
}

IndexReport check_index_identity(const RootSystem& rs, const DominantWeight& lambda,
                                 int eps) {
  if (lambda.is_zero())
    throw std::invalid_argument("check_index_identity: lambda must be nonzero");
  IndexReport rep;
  rep.n = reps::dim_of(rs, lambda);
  rep.c_lambda = casimir_c(rs, lambda);
  squares::Decomposition dec = squares::square_decompose(rs, lambda, eps);
  rep.delta = dec.delta;
  rep.lhs = Rat(rep.n + 2 * eps) * Rat(rep.n) * rep.c_lambda;
  rep.rhs = Rat(0);
  std::set<Rat> casimirs;
  for (const auto& [label, mult] : dec.constituents) {
    IndexReport::Piece p;
    p.label = label;
    p.mult = mult;
    p.dim = reps::superdim(rs, label);
    p.c_mu = casimir_c(rs, label.weight);
    rep.rhs += Rat(mult) * Rat(p.dim) * p.c_mu;
    casimirs.insert(p.c_mu);
    rep.pieces.push_back(p);
  }
  rep.consistent = rep.lhs == rep.rhs;
  if (casimirs.size() <= 1) {
    rep.star_applicable = true;
    Rat c_mu = casimirs.empty() ? Rat(0) : *casimirs.begin();
    rep.star_lhs = rep.lhs;
    rep.star_rhs = Rat(rep.n * (rep.n + eps) - 2 * dec.delta) / Rat(2) * c_mu;
    rep.star_holds = rep.star_lhs == rep.star_rhs;
  }
  return rep;
}

namespace {

// All images of lambda under the stabilizer of lambda... the stabilizer is
// what acts on constituents, so this computes the orbit of w under
// { sigma in diagram automorphisms : sigma(lambda) = lambda }.
std::set<DominantWeight> stabilizer_orbit(const RootSystem& rs,
                                          const DominantWeight& lambda,
                                          const DominantWeight& w) {
  std::set<DominantWeight> orb;
  for (const auto& p : rs.diagram_automorphisms()) {
    if (!(rs.apply_automorphism(p, lambda) == lambda)) continue;
    orb.insert(rs.apply_automorphism(p, w));
  }
  return orb;
}

SmallnessVerdict verdict_from(const RootSystem& rs, const DominantWeight& lambda,
                              squares::Decomposition dec, Mode mode) {
  SmallnessVerdict v;
  v.witness = std::move(dec);
  const auto& cons = v.witness.constituents;
  if (cons.empty()) {
    // T_eps(V) is a multiple of the trivial module. A single copy is itself
    // irreducible, which Table 1 records as a star.
    v.label = v.witness.delta == 1 ? Label::Star : Label::NotSmall;
    return v;
  }
  if (v.witness.delta > 1) {
    v.label = Label::NotSmall;
    return v;
  }
  bool one_class = false;
  if (cons.size() == 1 && cons[0].second == 1) {
    one_class = true;
    v.orbit_note = {cons[0].first};
  } else if (mode == Mode::Relaxed) {
    // all constituents conjugate under the lambda-stabilizer, same parity,
    // equal multiplicities
    bool ok = true;
    for (const auto& [label, mult] : cons)
      if (label.parity != cons[0].first.parity || mult != cons[0].second) ok = false;
    if (ok) {
      auto orb = stabilizer_orbit(rs, lambda, cons[0].first.weight);
      for (const auto& [label, mult] : cons)
        if (!orb.count(label.weight)) ok = false;
    }
    if (ok) {
      one_class = true;
      for (const auto& [label, mult] : cons) v.orbit_note.push_back(label);
    }
  }
  if (!one_class)
    v.label = Label::NotSmall;
  else
    v.label = v.witness.delta == 0 ? Label::Star : Label::Circle;
  return v;
}

std::vector<std::string> prune_diagnostics(const RootSystem& rs,
                                           const DominantWeight& lambda,
                                           long long n, int eps) {
  // Necessary conditions from the proof of the classification; failure of
  // any of them rules out eps-smallness (for n > 2).
  std::vector<std::string> failed;
  if (n <= 2) return failed;
  Weight lw = rs.weight_of(lambda);
  Rat l2 = dot(lw, lw);
  Rat lr = dot(lw, rs.rho());
  if (eps == +1) {
    bool star_some_delta = false;
    for (long long delta = 0; delta <= 1; ++delta)
      if (Rat(n - 2 * delta) * l2 == Rat(2) * lr) star_some_delta = true;
    if (!star_some_delta) failed.push_back("star-identity");
    bool cauchy_some_delta = false;
    Rat rho2 = dot(rs.rho(), rs.rho());
    for (long long delta = 0; delta <= 1; ++delta)
      if (Rat((n - 2 * delta) * (n - 2 * delta)) * l2 <= Rat(4) * rho2)
        cauchy_some_delta = true;
    if (!cauchy_some_delta) failed.push_back("cauchy-schwarz");
  } else {
    // lambda = r (beta_{i1} + ... + beta_{is})
    long long r = 0, s = 0;
    bool shape = true;
    Rat min_ri;
    for (int i = 0; i < rs.rank(); ++i) {
      long long c = lambda.a[i];
      if (c == 0) continue;
      if (r == 0) r = c;
      if (c != r) shape = false;
      ++s;
      Rat ri = rs.r_ratio(i + 1);
      if (s == 1 || ri < min_ri) min_ri = ri;
    }
    if (!shape) {
      failed.push_back("shape");
    } else if (!(min_ri > Rat(r * s))) {
      failed.push_back("r-condition");
    }
  }
  return failed;
}

ClassifyResult classify_rank1(const RootSystem& rs, Mode mode) {
  // A_1 and BC_1 closed forms; component counts only grow with n, so all
  // small representations occur for n <= 3 and the scan below is complete.
  ClassifyResult res;
  for (long long n = 1; n <= 6; ++n) {
    DominantWeight lam{{n}};
    CandidateReport cr;
    cr.lambda = lam;
    cr.dim = reps::dim_of(rs, lam);
    SmallnessVerdict vp = verdict_from(rs, lam, rank1_square(rs.type(), n, +1), mode);
    SmallnessVerdict vm = verdict_from(rs, lam, rank1_square(rs.type(), n, -1), mode);
    cr.plus = vp.label;
    cr.minus = vm.label;
    cr.pruned_plus = prune_diagnostics(rs, lam, cr.dim, +1);
    cr.pruned_minus = prune_diagnostics(rs, lam, cr.dim, -1);
    res.candidates.push_back(cr);
    if (vp.label != Label::NotSmall || vm.label != Label::NotSmall)
      res.rows.push_back({lam, vp.label, vm.label, vp, vm});
  }
  return res;
}

}  // namespace

squares::Decomposition rank1_square(const DynkinType& type, long long n, int eps) {
  squares::Decomposition dec;
  auto push = [&](long long k, Parity p) {
    if (k < 0) return;
    if (k == 0) {
      // V_0 is the trivial module; W_0 never occurs in these series
      // (the W indices are odd).
      dec.delta += 1;
      return;
    }
    dec.constituents.push_back({IrrepLabel{DominantWeight{{k}}, p}, 1});
  };
  if (type.family == Family::A) {
    // S^2(S^n) = S^{2n} + S^{2n-4} + ..., L^2(S^n) = S^{2n-2} + S^{2n-6} + ...
    long long top = eps > 0 ? 2 * n : 2 * n - 2;
    for (long long k = top; k >= 0; k -= 4) push(k, Parity::V);
  } else if (type.family == Family::BC) {
    // T_+(V_n) = V_{2n} + W_{2n-3} + V_{2n-4} + W_{2n-7} + ...
    // T_-(V_n) = W_{2n-1} + V_{2n-2} + W_{2n-5} + V_{2n-6} + ...
    long long v_top = eps > 0 ? 2 * n : 2 * n - 2;
    long long w_top = eps > 0 ? 2 * n - 3 : 2 * n - 1;
    for (long long k = v_top; k >= 0; k -= 4) push(k, Parity::V);
    for (long long k = w_top; k >= 1; k -= 4) push(k, Parity::W);
  } else {
    throw std::invalid_argument("rank1_square: A_1 or BC_1 only");
  }
  std::sort(dec.constituents.begin(), dec.constituents.end());
  return dec;
}

ClassifyResult classify_all(const RootSystem& rs, Mode mode) {
  if (rs.rank() == 1) return classify_rank1(rs, mode);
  ClassifyResult res;
  auto cands = reps::enumerate_dominant_up_to_dim(rs, rs.dim_g());
  for (const auto& lam : cands) {
    CandidateReport cr;
    cr.lambda = lam;
    cr.dim = reps::dim_of(rs, lam);
    SmallnessVerdict vp = smallness(rs, lam, +1, mode);
    SmallnessVerdict vm = smallness(rs, lam, -1, mode);
    cr.plus = vp.label;
    cr.minus = vm.label;
    cr.pruned_plus = prune_diagnostics(rs, lam, cr.dim, +1);
    cr.pruned_minus = prune_diagnostics(rs, lam, cr.dim, -1);
    res.candidates.push_back(cr);
    if (vp.label != Label::NotSmall || vm.label != Label::NotSmall)
      res.rows.push_back({lam, vp.label, vm.label, vp, vm});
  }
  return res;
}

SmallnessVerdict smallness(const RootSystem& rs, const DominantWeight& lambda,
                           int eps, Mode mode) {
  if (lambda.is_zero())
    throw std::invalid_argument("smallness: lambda must be nonzero");
  if (rs.rank() == 1)
    return verdict_from(rs, lambda, rank1_square(rs.type(), lambda.a[0], eps), mode);
  return verdict_from(rs, lambda, squares::square_decompose(rs, lambda, eps), mode);
}

namespace {

struct RowCache {
  std::mutex mtx;
  std::map<DynkinType, ClassifyResult> map;
};

const ClassifyResult& classified(const DynkinType& t) {
  static RowCache cache;
  std::lock_guard lock(cache.mtx);
  auto it = cache.map.find(t);
  if (it == cache.map.end()) {
    RootSystem rs = RootSystem::build(t);
    it = cache.map.emplace(t, classify_all(rs, Mode::Relaxed)).first;
  }
  return it->second;
}

bool matches(Pattern p, Label l) {
  switch (p) {
    case Pattern::Any: return true;
    case Pattern::Star: return l == Label::Star;
    case Pattern::Circle: return l == Label::Circle;
    case Pattern::NotSmall: return l == Label::NotSmall;
  }
  return false;
}

}  // namespace

std::vector<std::pair<DynkinType, DominantWeight>> identify_tannaka_candidates(
    long long d, Pattern plus, Pattern minus) {
  if (d < 1) throw std::invalid_argument("identify: d must be >= 1");
  std::vector<std::pair<DynkinType, DominantWeight>> out;
  for (const auto& t : admissible_types(8, 6)) {
    const ClassifyResult& res = classified(t);
    RootSystem rs = RootSystem::build(t);
    for (const auto& row : res.rows) {
      if (reps::dim_of(rs, row.lambda) != d) continue;
      if (matches(plus, row.plus) && matches(minus, row.minus))
        out.push_back({t, row.lambda});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace classify
}  // namespace smallrep
