#include "smallrep/reps.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace smallrep {

std::string IrrepLabel::str() const {
  if (weight.is_zero() && parity == Parity::V) return "1";
  return std::string(parity == Parity::V ? "V(" : "W(") + weight.str() + ")";
}

namespace reps {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace {

long long to_ll(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
    throw std::overflow_error("dimension exceeds 64 bits");
  return static_cast<long long>(v);
}

BigInt big_dim(const RootSystem& rs, const DominantWeight& lambda) {
  if (static_cast<int>(lambda.a.size()) != rs.rank())
    throw std::invalid_argument("dimension: coefficient count != rank");
  for (long long c : lambda.a)
    if (c < 0) throw std::invalid_argument("dimension: weight not dominant");
  if (!rs.is_super()) {
    Weight lr = rs.weight_of(lambda) + rs.rho();
    BigRat p(1);
    for (const auto& a : rs.positive_even_roots()) {
      Rat x = dot(lr, a), y = dot(rs.rho(), a);
      p *= BigRat(BigInt(x.num()) * y.den(), BigInt(x.den()) * y.num());
    }
    assert(denominator(p) == 1);
    return numerator(p);
  }
  // Kac-Weyl product in the eps coordinates lambda_i = a_i + ... + a_m.
  const int m = rs.rank();
  std::vector<long long> le(m, 0);
  for (int i = m - 1; i >= 0; --i)
    le[i] = lambda.a[i] + (i + 1 < m ? le[i + 1] : 0);
  BigRat p(1);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      p *= BigRat(le[i - 1] - le[j - 1] + (j - i), j - i);
      p *= BigRat(le[i - 1] + le[j - 1] + (2 * m + 1 - i - j), 2 * m + 1 - i - j);
    }
  assert(denominator(p) == 1);
  return numerator(p);
}

}  // namespace

long long weyl_dim(const RootSystem& rs, const DominantWeight& lambda) {
  if (rs.is_super())
    throw std::invalid_argument("weyl_dim: super type; use kacweyl_superdim");
  return to_ll(big_dim(rs, lambda));
}

long long kacweyl_superdim(const RootSystem& rs, const DominantWeight& lambda) {
  if (!rs.is_super())
    throw std::invalid_argument("kacweyl_superdim: ordinary type; use weyl_dim");
  return to_ll(big_dim(rs, lambda));
}

long long dim_of(const RootSystem& rs, const DominantWeight& lambda) {
  return to_ll(big_dim(rs, lambda));
}

bool dim_exceeds(const RootSystem& rs, const DominantWeight& lambda, long long bound) {
  return big_dim(rs, lambda) > BigInt(bound);
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs,
                                           const DominantWeight& lambda) {
  const Weight lam = rs.weight_of(lambda);
  auto in_support = [&](const Weight& x) {
    // x is a weight of V_lambda iff its dominant image is <= lambda in the
    // root order (saturation of weight diagrams).
    Weight d = rs.to_dominant(x).first;
    for (const auto& c : rs.root_coords(lam - d))
      if (c < Rat(0)) return false;
    return true;
  };
  std::vector<Weight> dom;
  std::set<Weight> seen;
  std::deque<Weight> queue;
  seen.insert(lam);
  queue.push_back(lam);
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    if (rs.is_dominant(v)) dom.push_back(v);
    for (const auto& a : rs.simple_roots()) {
      Weight w = v - a;
      if (seen.count(w)) continue;
      if (!in_support(w)) continue;
      seen.insert(w);
      queue.push_back(w);
    }
  }
  return dom;
}

namespace {

// Alternating-sum division: the Weyl (or Kac-Weyl) numerator divided by the
// even Weyl denominator, carried out on dominant orbit representatives in
// height order. For BC the numerator picks up the odd-root factor
// prod(e^{b/2} + e^{-b/2}), i.e. 2^m half-integer shifts of lambda + rho.
std::map<Weight, long long> divide_by_denominator(const RootSystem& rs,
                                                  const DominantWeight& lambda) {
  const Weight lam = rs.weight_of(lambda);
  const Weight& rho0 = rs.rho_even();

  std::map<Weight, long long> rhs;
  {
    std::vector<Weight> shifts;
    if (!rs.is_super()) {
      shifts.push_back(Weight(rs.embedding_dim(), Rat(0)));
    } else {
      const int m = rs.rank();
      for (int mask = 0; mask < (1 << m); ++mask) {
        Weight s(m, Rat(0));
        for (int i = 0; i < m; ++i) s[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        shifts.push_back(s);
      }
    }
    for (const auto& s : shifts) {
      auto [d, sign] = rs.to_dominant(lam + rs.rho() + s);
      if (!sign) continue;  // numerator term on a wall
      rhs[d - rho0] += *sign;
    }
  }

  std::vector<Weight> cands = dominant_weights_below(rs, lambda);
  std::sort(cands.begin(), cands.end(), [&](const Weight& x, const Weight& y) {
    Rat nx = dot(x + rho0, x + rho0), ny = dot(y + rho0, y + rho0);
    if (nx != ny) return ny < nx;
    return x < y;
  });

  std::map<Weight, long long> acc, mult;
  for (const auto& mu : cands) {
    long long m = 0;
    if (auto it = rhs.find(mu); it != rhs.end()) m += it->second;
    if (auto it = acc.find(mu); it != acc.end()) m -= it->second;
    if (m <= 0)
      throw std::logic_error("character division: nonpositive multiplicity at " +
                             weight_str(mu));
    mult[mu] = m;
    for (const auto& v : rs.orbit(mu)) {
      if (v == mu) continue;
      auto [d, sign] = rs.to_dominant(v + rho0);
      if (!sign) continue;
      acc[d - rho0] += m * *sign;
    }
  }

  // Every numerator bucket must be consumed exactly by the recursion.
  for (const auto& [w, c] : rhs) {
    long long residue = c;
    if (auto it = acc.find(w); it != acc.end()) residue -= it->second;
    if (auto it = mult.find(w); it != mult.end()) residue -= it->second;
    if (residue != 0)
      throw std::logic_error("character division: unconsumed numerator bucket at " +
                             weight_str(w));
  }
  return mult;
}

std::map<Weight, long long> freudenthal_mults(const RootSystem& rs,
                                              const DominantWeight& lambda) {
  const Weight lam = rs.weight_of(lambda);
  const Weight& rho = rs.rho();
  const Rat lr2 = dot(lam + rho, lam + rho);

  std::vector<Weight> cands = dominant_weights_below(rs, lambda);
  std::sort(cands.begin(), cands.end(), [&](const Weight& x, const Weight& y) {
    Rat hx = dot(rho, x), hy = dot(rho, y);
    if (hx != hy) return hy < hx;
    return x < y;
  });

  std::map<Weight, long long> mult;
  for (const auto& mu : cands) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Rat num(0);
    for (const auto& a : rs.positive_even_roots()) {
      for (long long k = 1;; ++k) {
        Weight w = mu + Rat(k) * a;
        auto it = mult.find(rs.to_dominant(w).first);
        if (it == mult.end()) break;  // root strings through the support are contiguous
        num += Rat(it->second) * dot(w, a);
      }
    }
    Rat den = lr2 - dot(mu + rho, mu + rho);
    long long m = (Rat(2) * num / den).as_integer();
    if (m <= 0) throw std::logic_error("freudenthal: nonpositive multiplicity");
    mult[mu] = m;
  }
  return mult;
}

GradedCharacter grade(const RootSystem& rs, const DominantWeight& lambda,
                      const std::map<Weight, long long>& mults) {
  GradedCharacter ch;
  if (!rs.is_super()) {
    for (const auto& [w, m] : mults) ch.add(w, m, 0);
    return ch;
  }
  // Parity of a weight space: odd root vectors shift the coordinate sum by
  // one and flip the parity, even root vectors shift it by an even amount.
  Rat lsum(0);
  for (const auto& c : rs.weight_of(lambda)) lsum += c;
  for (const auto& [w, m] : mults) {
    Rat s(0);
    for (const auto& c : w) s += c;
    long long diff = (lsum - s).as_integer();
    if (diff % 2 == 0)
      ch.add(w, m, 0);
    else
      ch.add(w, 0, m);
  }
  return ch;
}

struct CharCache {
  std::shared_mutex mtx;
  std::map<std::pair<std::string, std::vector<long long>>, GradedCharacter> map;
};
CharCache& char_cache() {
  static CharCache c;
  return c;
}

}  // namespace

GradedCharacter character(const RootSystem& rs, const IrrepLabel& label,
                          CharAlgorithm algo) {
  if (label.parity == Parity::W && !rs.is_super())
    throw std::invalid_argument("parity flip W only exists for super types");
  if (algo == CharAlgorithm::Freudenthal) {
    if (rs.is_super())
      throw std::invalid_argument("freudenthal: ordinary types only");
    return grade(rs, label.weight, freudenthal_mults(rs, label.weight));
  }
  auto key = std::make_pair(rs.type().name(), label.weight.a);
  auto& cache = char_cache();
  {
    std::shared_lock lock(cache.mtx);
    if (auto it = cache.map.find(key); it != cache.map.end())
      return label.parity == Parity::V ? it->second : it->second.parity_flipped();
  }
  GradedCharacter ch = grade(rs, label.weight, divide_by_denominator(rs, label.weight));
  {
    std::unique_lock lock(cache.mtx);
    cache.map.emplace(key, ch);
  }
  return label.parity == Parity::V ? ch : ch.parity_flipped();
}

long long dim_total(const RootSystem& rs, const IrrepLabel& label) {
  if (!rs.is_super()) return weyl_dim(rs, label.weight);
  return character(rs, label).dim_total(rs);
}

long long superdim(const RootSystem& rs, const IrrepLabel& label) {
  long long d = dim_of(rs, label.weight);
  return label.parity == Parity::V ? d : -d;
}

std::vector<DominantWeight> enumerate_dominant_up_to_dim(const RootSystem& rs,
                                                         long long bound) {
  if (bound < 1) throw std::invalid_argument("enumerate: bound must be >= 1");
  if (rs.is_super() && rs.rank() == 1)
    throw std::invalid_argument(
        "enumerate: BC_1 has superdimension 1 in every degree; the search "
        "would not terminate");
  const int m = rs.rank();
  std::set<std::vector<long long>> visited;
  std::deque<std::vector<long long>> queue;
  std::vector<DominantWeight> out;
  std::vector<long long> zero(m, 0);
  visited.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    for (int i = 0; i < m; ++i) {
      auto b = a;
      ++b[i];
      if (visited.count(b)) continue;
      visited.insert(b);
      // dimensions grow strictly in every coefficient, so prune here
      if (big_dim(rs, DominantWeight{b}) > bound) continue;
      out.push_back(DominantWeight{b});
      queue.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reps
}  // namespace smallrep
