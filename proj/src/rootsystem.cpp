#include "smallrep/rootsystem.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace smallrep {

namespace {

Weight unit(int i, int n) {
  Weight w(n, Rat(0));
  w[i] = Rat(1);
  return w;
}

}  // namespace

bool DominantWeight::is_zero() const {
  for (long long c : a)
    if (c) return false;
  return true;
}

std::string DominantWeight::str() const {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    if (!s.empty()) s += "+";
    if (a[i] != 1) s += std::to_string(a[i]);
    s += "b" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

RootSystem RootSystem::build(DynkinType type) {
  type.validate();
  RootSystem rs;
  rs.type_ = type;
  const int m = type.rank;
  const Rat h(1, 2);

  switch (type.family) {
    case Family::A: {
      const int n = m + 1;
      rs.dim_emb_ = n;
      for (int i = 0; i < m; ++i) rs.simple_.push_back(unit(i, n) - unit(i + 1, n));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rs.pos_even_.push_back(unit(i, n) - unit(j, n));
      break;
    }
    case Family::B: {
      rs.dim_emb_ = m;
      for (int i = 0; i + 1 < m; ++i) rs.simple_.push_back(unit(i, m) - unit(i + 1, m));
      rs.simple_.push_back(unit(m - 1, m));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          rs.pos_even_.push_back(unit(i, m) - unit(j, m));
          rs.pos_even_.push_back(unit(i, m) + unit(j, m));
        }
      for (int i = 0; i < m; ++i) rs.pos_even_.push_back(unit(i, m));
      break;
    }
    case Family::C:
    case Family::BC: {
      rs.dim_emb_ = m;
      for (int i = 0; i + 1 < m; ++i) rs.simple_.push_back(unit(i, m) - unit(i + 1, m));
      if (type.family == Family::C)
        rs.simple_.push_back(Rat(2) * unit(m - 1, m));
      else
        rs.simple_.push_back(unit(m - 1, m));  // odd simple root eps_m
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          rs.pos_even_.push_back(unit(i, m) - unit(j, m));
          rs.pos_even_.push_back(unit(i, m) + unit(j, m));
        }
      for (int i = 0; i < m; ++i) rs.pos_even_.push_back(Rat(2) * unit(i, m));
      if (type.family == Family::BC)
        for (int i = 0; i < m; ++i) rs.pos_odd_.push_back(unit(i, m));
      break;
    }
    case Family::D: {
      rs.dim_emb_ = m;
      for (int i = 0; i + 1 < m; ++i) rs.simple_.push_back(unit(i, m) - unit(i + 1, m));
      rs.simple_.push_back(unit(m - 2, m) + unit(m - 1, m));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          rs.pos_even_.push_back(unit(i, m) - unit(j, m));
          rs.pos_even_.push_back(unit(i, m) + unit(j, m));
        }
      break;
    }
    case Family::G: {
      rs.dim_emb_ = 3;
      Weight a1 = {Rat(1), Rat(-1), Rat(0)};
      Weight a2 = {Rat(-2), Rat(1), Rat(1)};
      rs.simple_ = {a1, a2};
      auto lin = [&](long long p, long long q) { return Rat(p) * a1 + Rat(q) * a2; };
      rs.pos_even_ = {lin(1, 0), lin(0, 1), lin(1, 1), lin(2, 1), lin(3, 1), lin(3, 2)};
      break;
    }
    case Family::F: {
      rs.dim_emb_ = 4;
      rs.simple_ = {unit(1, 4) - unit(2, 4), unit(2, 4) - unit(3, 4), unit(3, 4),
                    Weight{h, -h, -h, -h}};
      for (int i = 0; i < 4; ++i) rs.pos_even_.push_back(unit(i, 4));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          rs.pos_even_.push_back(unit(i, 4) - unit(j, 4));
          rs.pos_even_.push_back(unit(i, 4) + unit(j, 4));
        }
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2)
          for (int s3 = -1; s3 <= 1; s3 += 2)
            rs.pos_even_.push_back(Weight{h, Rat(s1) * h, Rat(s2) * h, Rat(s3) * h});
      break;
    }
    case Family::E: {
      rs.dim_emb_ = 8;
      Weight a1 = {h, -h, -h, -h, -h, -h, -h, h};
      Weight a2 = unit(0, 8) + unit(1, 8);
      std::vector<Weight> simple = {a1, a2};
      for (int i = 0; i < 6; ++i) simple.push_back(unit(i + 1, 8) - unit(i, 8));
      simple.resize(m);
      rs.simple_ = simple;
      auto half_sum = [&](int upto, const Weight& tail, int parity) {
        // half-integer roots 1/2(sum s_i eps_i) + tail with fixed sign parity
        for (int mask = 0; mask < (1 << upto); ++mask) {
          if (__builtin_popcount(mask) % 2 != parity) continue;
          Weight w(8, Rat(0));
          for (int i = 0; i < upto; ++i) w[i] = (mask >> i) & 1 ? -h : h;
          rs.pos_even_.push_back(w + tail);
        }
      };
      if (m == 8) {
        for (int i = 0; i < 8; ++i)
          for (int j = i + 1; j < 8; ++j) {
            rs.pos_even_.push_back(unit(j, 8) + unit(i, 8));
            rs.pos_even_.push_back(unit(j, 8) - unit(i, 8));
          }
        Weight tail(8, Rat(0));
        tail[7] = h;
        half_sum(7, tail, 0);
      } else if (m == 7) {
        for (int i = 0; i < 6; ++i)
          for (int j = i + 1; j < 6; ++j) {
            rs.pos_even_.push_back(unit(j, 8) + unit(i, 8));
            rs.pos_even_.push_back(unit(j, 8) - unit(i, 8));
          }
        rs.pos_even_.push_back(unit(7, 8) - unit(6, 8));
        Weight tail(8, Rat(0));
        tail[6] = -h;
        tail[7] = h;
        half_sum(6, tail, 1);
      } else {  // E6
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j) {
            rs.pos_even_.push_back(unit(j, 8) + unit(i, 8));
            rs.pos_even_.push_back(unit(j, 8) - unit(i, 8));
          }
        Weight tail(8, Rat(0));
        tail[5] = -h;
        tail[6] = -h;
        tail[7] = h;
        half_sum(5, tail, 0);
      }
      break;
    }
  }

  // Delta_0: for BC the even subalgebra sp(2m) replaces eps_m by 2 eps_m.
  rs.even_simple_ = rs.simple_;
  if (type.family == Family::BC) rs.even_simple_[m - 1] = Rat(2) * rs.simple_[m - 1];

  auto coroot_of = [&](const Weight& a) { return (Rat(2) / dot(a, a)) * a; };
  for (const auto& a : rs.simple_) rs.simple_coroots_.push_back(coroot_of(a));
  for (const auto& a : rs.even_simple_) rs.even_simple_coroots_.push_back(coroot_of(a));

  // Fundamental weights within span(simple roots): w_j = sum_k c_k alpha_k
  // with (alpha_i^vee, w_j) = delta_ij.
  {
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) M[i][k] = dot(rs.simple_coroots_[i], rs.simple_[k]);
    for (int j = 0; j < m; ++j) {
      std::vector<Rat> rhs(m, Rat(0));
      rhs[j] = Rat(1);
      auto c = solve_linear(M, rhs);
      Weight w(rs.dim_emb_, Rat(0));
      for (int k = 0; k < m; ++k) w = w + c[k] * rs.simple_[k];
      rs.fund_.push_back(w);
    }
  }
  rs.beta_ = rs.fund_;
  if (type.family == Family::BC) rs.beta_[m - 1] = Rat(2) * rs.fund_[m - 1];
  for (int i = 0; i < m; ++i)
    rs.dual_simple_.push_back((Rat(2) / dot(rs.simple_[i], rs.simple_[i])) * rs.fund_[i]);

  Weight sum_even(rs.dim_emb_, Rat(0)), sum_odd(rs.dim_emb_, Rat(0));
  for (const auto& a : rs.pos_even_) sum_even = sum_even + a;
  for (const auto& a : rs.pos_odd_) sum_odd = sum_odd + a;
  rs.rho_even_ = h * sum_even;
  rs.rho_ = h * (sum_even - sum_odd);

  rs.dim_g_ = 2 * static_cast<long long>(rs.pos_even_.size()) + m -
              2 * static_cast<long long>(rs.pos_odd_.size());
  return rs;
}

Rat RootSystem::inner(const Weight& u, const Weight& v) const {
  if (static_cast<int>(u.size()) != dim_emb_ || static_cast<int>(v.size()) != dim_emb_)
    throw std::invalid_argument("inner: dimension mismatch");
  return dot(u, v);
}

Weight RootSystem::coroot(const Weight& root) const {
  return (Rat(2) / dot(root, root)) * root;
}

Rat RootSystem::r_ratio(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("r_ratio: index out of range");
  const Weight& a = even_simple_[i - 1];
  const Weight& b = beta_[i - 1];
  return dot(a, a) / dot(b, b);
}

Rat RootSystem::coroot_norm_max_sq() const {
  Rat best(0);
  for (const auto& a : even_simple_) {
    Weight cv = coroot(a);
    Rat n = dot(cv, cv);
    if (n > best) best = n;
  }
  return best;
}

std::vector<std::vector<int>> RootSystem::diagram_automorphisms() const {
  const int m = rank();
  std::vector<int> id(m);
  for (int i = 0; i < m; ++i) id[i] = i;
  std::vector<std::vector<int>> out = {id};
  switch (type_.family) {
    case Family::A:
      if (m >= 2) {
        std::vector<int> rev(m);
        for (int i = 0; i < m; ++i) rev[i] = m - 1 - i;
        out.push_back(rev);
      }
      break;
    case Family::D:
      if (m == 4) {
        // S_3 on the outer nodes {1,3,4} (1-based), fixing node 2
        const int nodes[3] = {0, 2, 3};
        int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        out.clear();
        for (auto& p3 : perm3) {
          std::vector<int> p = id;
          for (int k = 0; k < 3; ++k) p[nodes[k]] = nodes[p3[k]];
          out.push_back(p);
        }
      } else {
        std::vector<int> sw = id;
        std::swap(sw[m - 2], sw[m - 1]);
        out.push_back(sw);
      }
      break;
    case Family::E:
      if (m == 6) {
        std::vector<int> sw = id;  // (1 6)(3 5) in Bourbaki numbering
        std::swap(sw[0], sw[5]);
        std::swap(sw[2], sw[4]);
        out.push_back(sw);
      }
      break;
    default:
      break;
  }
  return out;
}

DominantWeight RootSystem::apply_automorphism(const std::vector<int>& perm,
                                              const DominantWeight& w) const {
  DominantWeight out;
  out.a.assign(w.a.size(), 0);
  for (size_t i = 0; i < w.a.size(); ++i) out.a[perm[i]] = w.a[i];
  return out;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (const auto& cv : even_simple_coroots_)
    if (dot(cv, w) < Rat(0)) return false;
  return true;
}

std::pair<Weight, std::optional<int>> RootSystem::to_dominant(const Weight& w) const {
  Weight v = w;
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < even_simple_coroots_.size(); ++i) {
      Rat t = dot(even_simple_coroots_[i], v);
      if (t < Rat(0)) {
        v = v - t * even_simple_[i];
        sign = -sign;
        changed = true;
      }
    }
  }
  for (const auto& cv : even_simple_coroots_)
    if (dot(cv, v).is_zero()) return {v, std::nullopt};
  return {v, sign};
}

std::set<Weight> RootSystem::orbit(const Weight& w) const {
  std::set<Weight> seen;
  std::vector<Weight> stack;
  Weight d = to_dominant(w).first;
  seen.insert(d);
  stack.push_back(d);
  while (!stack.empty()) {
    Weight u = stack.back();
    stack.pop_back();
    for (size_t i = 0; i < even_simple_coroots_.size(); ++i) {
      Rat t = dot(even_simple_coroots_[i], u);
      if (t.is_zero()) continue;
      Weight v = u - t * even_simple_[i];
      if (seen.insert(v).second) stack.push_back(v);
    }
  }
  return seen;
}

long long RootSystem::orbit_size(const Weight& w) const {
  return static_cast<long long>(orbit(w).size());
}

Weight RootSystem::weight_of(const DominantWeight& dw) const {
  if (static_cast<int>(dw.a.size()) != rank())
    throw std::invalid_argument("weight_of: coefficient count != rank");
  Weight w(dim_emb_, Rat(0));
  for (int i = 0; i < rank(); ++i)
    if (dw.a[i]) w = w + Rat(dw.a[i]) * beta_[i];
  return w;
}

DominantWeight RootSystem::coefficients_of(const Weight& w) const {
  DominantWeight dw;
  dw.a.resize(rank());
  for (int i = 0; i < rank(); ++i) {
    Rat c = dot(simple_coroots_[i], w);
    if (type_.family == Family::BC && i == rank() - 1) c = c / Rat(2);
    dw.a[i] = c.as_integer();
    if (dw.a[i] < 0)
      throw std::domain_error("coefficients_of: weight not dominant integral");
  }
  return dw;
}

std::vector<Rat> RootSystem::root_coords(const Weight& v) const {
  std::vector<Rat> c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = dot(dual_simple_[i], v);
  return c;
}

DominantWeight RootSystem::adjoint_weight() const {
  // The highest root is the unique dominant even root of maximal height.
  const Weight* best = nullptr;
  Rat best_h;
  for (const auto& a : pos_even_) {
    if (!is_dominant(a)) continue;
    Rat hgt = dot(rho_even_, a);
    if (!best || hgt > best_h) {
      best = &a;
      best_h = hgt;
    }
  }
  assert(best);
  return coefficients_of(*best);
}

}  // namespace smallrep
