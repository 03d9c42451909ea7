#pragma once

#include <optional>
#include <set>
#include <vector>

#include "smallrep/dynkin.hpp"
#include "smallrep/weight.hpp"

namespace smallrep {

// Highest weight in beta-basis coordinates (nonnegative integers). The zero
// vector is the trivial representation.
struct DominantWeight {
  std::vector<long long> a;

  bool is_zero() const;
  std::string str() const;  // e.g. "b1+2b3", "0"
  friend bool operator==(const DominantWeight& x, const DominantWeight& y) { return x.a == y.a; }
  friend bool operator<(const DominantWeight& x, const DominantWeight& y) { return x.a < y.a; }
};

// Immutable bundle of the Euclidean root and weight data of one Dynkin type,
// in the Bourbaki embedding (A_m sits in the sum-zero hyperplane of R^{m+1};
// BC_m uses an orthonormal eps basis with beta_i = eps_1 + ... + eps_i).
// The bilinear form is the ambient dot product; this normalization makes
// every tabulated value (|rho|^2, r_i, R^2) come out on the nose.
class RootSystem {
 public:
  static RootSystem build(DynkinType type);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int embedding_dim() const { return dim_emb_; }
  bool is_super() const { return type_.is_super(); }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& even_simple_roots() const { return even_simple_; }
  const std::vector<Weight>& positive_even_roots() const { return pos_even_; }
  const std::vector<Weight>& positive_odd_roots() const { return pos_odd_; }
  const std::vector<Weight>& fundamental_weights() const { return fund_; }
  const std::vector<Weight>& beta_basis() const { return beta_; }
  const Weight& rho() const { return rho_; }        // rho_0 - rho_1
  const Weight& rho_even() const { return rho_even_; }
  long long dim_g() const { return dim_g_; }        // super dimension for BC

  Rat inner(const Weight& u, const Weight& v) const;
  Weight coroot(const Weight& root) const;          // 2a/(a,a)

  // r_i = |alpha_i|^2 / |beta_i|^2 with alpha_i from Delta_0 (1-based i).
  Rat r_ratio(int i) const;
  // R^2 for R = max |alpha^vee| over the even simple roots.
  Rat coroot_norm_max_sq() const;

  // The full group of Dynkin-diagram automorphisms as permutations p of
  // {0..m-1} acting on beta-coordinates by a'_{p[i]} = a_i.
  std::vector<std::vector<int>> diagram_automorphisms() const;
  DominantWeight apply_automorphism(const std::vector<int>& perm,
                                    const DominantWeight& w) const;

  bool is_dominant(const Weight& w) const;
  // Unique dominant W_0-image. sign is the parity of the reflecting word,
  // or nullopt when w lies on a wall (stabilizer nontrivial).
  std::pair<Weight, std::optional<int>> to_dominant(const Weight& w) const;

  std::set<Weight> orbit(const Weight& w) const;
  long long orbit_size(const Weight& w) const;

  Weight weight_of(const DominantWeight& dw) const;
  // Inverse of weight_of for integral dominant weights; throws otherwise.
  DominantWeight coefficients_of(const Weight& w) const;

  // Coordinates of v in the full simple-root basis (rationals). Only valid
  // for v in the span of the simple roots.
  std::vector<Rat> root_coords(const Weight& v) const;

  // Highest (even) root in beta coordinates; labels the adjoint module.
  DominantWeight adjoint_weight() const;

 private:
  RootSystem() = default;

  DynkinType type_{};
  int dim_emb_ = 0;
  std::vector<Weight> simple_, even_simple_, pos_even_, pos_odd_;
  std::vector<Weight> simple_coroots_, even_simple_coroots_;
  std::vector<Weight> fund_, beta_, dual_simple_;  // (dual_i, alpha_j) = delta_ij
  Weight rho_, rho_even_;
  long long dim_g_ = 0;
};

}  // namespace smallrep
