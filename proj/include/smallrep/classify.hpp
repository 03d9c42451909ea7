#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallrep/squares.hpp"

namespace smallrep {
namespace classify {

// Casimir scalar c(mu) = (mu, mu) + 2 (mu, rho).
Rat casimir_c(const RootSystem& rs, const DominantWeight& mu);

// kappa = dim(Ad) * c(Ad) for the adjoint module (dimension in the super
// sense; for BC the adjoint is V_{2 beta_1}).
Rat kappa(const RootSystem& rs);

// Index l(V) with tr(phi(X) phi(Y)) = l(V) (X, Y); l = dim * c / kappa,
// super-signed (parity flip negates it).
Rat index_of(const RootSystem& rs, const IrrepLabel& label);

// Both sides of the index identity for T_eps(V_lambda), cleared of kappa:
// lhs = (n + 2 eps) n c(lambda), rhs = sum over constituents of
// mult * superdim(mu) * c(mu). When all constituents share one Casimir
// value (the small shape) this is the printed form of equation (star).
struct IndexReport {
  long long n = 0;  // super dimension of V_lambda
  Rat c_lambda;
  struct Piece {
    IrrepLabel label;
    long long mult;
    long long dim;  // super-signed
    Rat c_mu;
  };
  std::vector<Piece> pieces;
  long long delta = 0;
  Rat lhs, rhs;
  bool consistent = false;
  // Printed equation (star), instantiable when every constituent has the
  // same Casimir scalar:
  bool star_applicable = false;
  Rat star_lhs, star_rhs;
  bool star_holds = false;
};

IndexReport check_index_identity(const RootSystem& rs, const DominantWeight& lambda,
                                 int eps);

enum class Label { Star, Circle, NotSmall };
enum class Mode { Strict, Relaxed };

std::string label_str(Label l);

struct SmallnessVerdict {
  Label label = Label::NotSmall;
  squares::Decomposition witness;
  // For Star/Circle in relaxed mode: the grouping of the nontrivial
  // constituents into one orbit of the lambda-stabilizer.
  std::vector<IrrepLabel> orbit_note;
};

SmallnessVerdict smallness(const RootSystem& rs, const DominantWeight& lambda,
                           int eps, Mode mode);

struct CandidateReport {
  DominantWeight lambda;
  long long dim = 0;
  Label plus = Label::NotSmall, minus = Label::NotSmall;
  // Necessary-condition diagnostics per epsilon (empty = none failed):
  std::vector<std::string> pruned_plus, pruned_minus;
};

struct ClassifyResult {
  // Rows small for at least one epsilon, in lexicographic lambda order;
  // this is the regenerated table slice for the type.
  struct Row {
    DominantWeight lambda;
    Label plus, minus;
    SmallnessVerdict verdict_plus, verdict_minus;
  };
  std::vector<Row> rows;
  std::vector<CandidateReport> candidates;
};

ClassifyResult classify_all(const RootSystem& rs, Mode mode = Mode::Relaxed);

// Rank-one closed forms: the components of T_eps(S^n st) for A_1 and of
// T_eps(V_{n beta_1}) for BC_1, written down directly.
squares::Decomposition rank1_square(const DynkinType& type, long long n, int eps);

// Scans the regenerated classification over all admissible types (ranks up
// to 8; BC up to 6) for rows of (super)dimension d whose labels match the
// patterns. "Any" matches every label.
enum class Pattern { Star, Circle, NotSmall, Any };
std::vector<std::pair<DynkinType, DominantWeight>> identify_tannaka_candidates(
    long long d, Pattern plus, Pattern minus);

}  // namespace classify
}  // namespace smallrep
