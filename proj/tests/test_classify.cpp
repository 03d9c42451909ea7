#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smallrep/classify.hpp"

using namespace smallrep;
using classify::Label;
using classify::Mode;
using classify::Pattern;

namespace {

RootSystem make(Family f, int m) { return RootSystem::build({f, m}); }
DominantWeight dw(std::vector<long long> a) { return DominantWeight{std::move(a)}; }

}  // namespace

TEST_CASE("casimir scalar") {
  RootSystem a1 = make(Family::A, 1);
  CHECK(classify::casimir_c(a1, dw({0})) == Rat(0));
  CHECK(classify::casimir_c(a1, dw({1})) == Rat(3, 2));
  // positivity for nonzero dominant weights
  for (const auto& t : admissible_types(5, 3)) {
    RootSystem rs = RootSystem::build(t);
    DominantWeight lam;
    lam.a.assign(rs.rank(), 1);
    CHECK(classify::casimir_c(rs, lam) > Rat(0));
  }
}

TEST_CASE("index normalization") {
  for (const auto& t : std::vector<DynkinType>{{Family::A, 1},
                                               {Family::B, 3},
                                               {Family::BC, 2},
                                               {Family::G, 2}}) {
    RootSystem rs = RootSystem::build(t);
    // kappa = dim(Ad) c(Ad) makes l(Ad) = 1, and l(1) = 0
    CHECK(classify::index_of(rs, {rs.adjoint_weight(), Parity::V}) == Rat(1));
    DominantWeight zero;
    zero.a.assign(rs.rank(), 0);
    CHECK(classify::index_of(rs, {zero, Parity::V}) == Rat(0));
  }
  // kappa for A_1: Ad = V_{2 b1}, kappa = 3 c(2 b1)
  RootSystem a1 = make(Family::A, 1);
  CHECK(classify::kappa(a1) == Rat(3) * classify::casimir_c(a1, dw({2})));
  // parity flip negates the index
  RootSystem bc2 = make(Family::BC, 2);
  CHECK(classify::index_of(bc2, {dw({1, 0}), Parity::W}) ==
        -classify::index_of(bc2, {dw({1, 0}), Parity::V}));
}

TEST_CASE("index identity for squares") {
  // (A_1, b1, -1): both sides vanish
  auto rep = classify::check_index_identity(make(Family::A, 1), dw({1}), -1);
  CHECK(rep.consistent);
  CHECK(rep.lhs == Rat(0));
  CHECK(rep.rhs == Rat(0));

  // (B_3, b1, +1): 9 l(V_b1) = l(V_2b1); kappa-cleared both sides are 378
  rep = classify::check_index_identity(make(Family::B, 3), dw({1, 0, 0}), +1);
  CHECK(rep.consistent);
  CHECK(rep.lhs == Rat(378));
  CHECK(rep.n == 7);
  CHECK(rep.delta == 1);

  // (BC_2, b1, +1): n = 3 super, (3+2) l = l(V_2b1)
  rep = classify::check_index_identity(make(Family::BC, 2), dw({1, 0}), +1);
  CHECK(rep.consistent);
  CHECK(rep.n == 3);
  CHECK(rep.lhs == Rat(60));
  CHECK(rep.star_applicable);
  CHECK(rep.star_holds);

  // a decomposition with several distinct Casimir values still satisfies
  // the additive identity
  rep = classify::check_index_identity(make(Family::B, 3), dw({0, 0, 1}), -1);
  CHECK(rep.consistent);
  CHECK(!rep.star_applicable);
}

TEST_CASE("smallness verdicts") {
  RootSystem c3 = make(Family::C, 3);
  CHECK(classify::smallness(c3, dw({1, 0, 0}), +1, Mode::Relaxed).label == Label::Star);
  CHECK(classify::smallness(c3, dw({1, 0, 0}), -1, Mode::Relaxed).label == Label::Circle);
  auto v = classify::smallness(make(Family::B, 3), dw({0, 0, 1}), -1, Mode::Relaxed);
  CHECK(v.label == Label::NotSmall);
  REQUIRE(v.witness.constituents.size() == 2);
  CHECK(v.witness.constituents[0].first.weight == dw({0, 1, 0}));
  CHECK(v.witness.constituents[1].first.weight == dw({1, 0, 0}));
}

TEST_CASE("strict and relaxed modes agree on the small representations") {
  for (const auto& t : std::vector<DynkinType>{{Family::A, 3},
                                               {Family::B, 2},
                                               {Family::C, 3},
                                               {Family::D, 4},
                                               {Family::BC, 2},
                                               {Family::G, 2}}) {
    RootSystem rs = RootSystem::build(t);
    auto relaxed = classify::classify_all(rs, Mode::Relaxed);
    auto strict = classify::classify_all(rs, Mode::Strict);
    REQUIRE(relaxed.rows.size() == strict.rows.size());
    for (size_t i = 0; i < relaxed.rows.size(); ++i) {
      CHECK(relaxed.rows[i].lambda == strict.rows[i].lambda);
      CHECK(relaxed.rows[i].plus == strict.rows[i].plus);
      CHECK(relaxed.rows[i].minus == strict.rows[i].minus);
    }
  }
}

TEST_CASE("classification of A_1") {
  auto res = classify::classify_all(make(Family::A, 1));
  REQUIRE(res.rows.size() == 3);
  CHECK(res.rows[0].lambda == dw({1}));
  CHECK(res.rows[0].plus == Label::Star);
  CHECK(res.rows[0].minus == Label::Star);
  CHECK(res.rows[1].lambda == dw({2}));
  CHECK(res.rows[1].plus == Label::Circle);
  CHECK(res.rows[1].minus == Label::Star);
  CHECK(res.rows[2].lambda == dw({3}));
  CHECK(res.rows[2].plus == Label::NotSmall);
  CHECK(res.rows[2].minus == Label::Circle);
}

TEST_CASE("classification of BC_1") {
  auto res = classify::classify_all(make(Family::BC, 1));
  REQUIRE(res.rows.size() == 1);
  CHECK(res.rows[0].lambda == dw({1}));
  CHECK(res.rows[0].plus == Label::Star);
  CHECK(res.rows[0].minus == Label::Circle);
}

TEST_CASE("rank-1 closed forms match the generic pipeline") {
  for (Family f : {Family::A, Family::BC}) {
    RootSystem rs = make(f, 1);
    for (long long n = 1; n <= 4; ++n)
      for (int eps : {+1, -1})
        CHECK(classify::rank1_square(rs.type(), n, eps) ==
              squares::square_decompose(rs, dw({n}), eps));
  }
}

TEST_CASE("classification of D_4") {
  auto res = classify::classify_all(make(Family::D, 4));
  REQUIRE(res.rows.size() == 3);
  for (const auto& row : res.rows) {
    CHECK(row.plus == Label::Circle);
    CHECK(row.minus == Label::Star);
  }
  CHECK(res.rows[0].lambda == dw({0, 0, 0, 1}));
  CHECK(res.rows[1].lambda == dw({0, 0, 1, 0}));
  CHECK(res.rows[2].lambda == dw({1, 0, 0, 0}));
}

TEST_CASE("F_4 has no small representations") {
  CHECK(classify::classify_all(make(Family::F, 4)).rows.empty());
}

TEST_CASE("small candidates pass every necessary condition") {
  for (const auto& t : std::vector<DynkinType>{{Family::A, 5},
                                               {Family::B, 4},
                                               {Family::C, 4},
                                               {Family::D, 5},
                                               {Family::BC, 2},
                                               {Family::BC, 3},
                                               {Family::E, 6},
                                               {Family::G, 2}}) {
    RootSystem rs = RootSystem::build(t);
    for (const auto& c : classify::classify_all(rs).candidates) {
      if (c.plus != Label::NotSmall) CHECK(c.pruned_plus.empty());
      if (c.minus != Label::NotSmall) CHECK(c.pruned_minus.empty());
    }
  }
}

TEST_CASE("identify_tannaka_candidates") {
  using P = std::pair<DynkinType, DominantWeight>;
  // g = 5: the 8-dimensional symplectic standard module
  auto found = classify::identify_tannaka_candidates(8, Pattern::Star, Pattern::Circle);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == P{{Family::C, 4}, dw({1, 0, 0, 0})});

  // g = 3 goes through the isomorphism B_2 = C_2
  found = classify::identify_tannaka_candidates(4, Pattern::Star, Pattern::Circle);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == P{{Family::B, 2}, dw({0, 1})});
  CHECK(found[1] == P{{Family::C, 2}, dw({1, 0})});

  // dimension m+1 with stars on both sides: the two A_m standards
  found = classify::identify_tannaka_candidates(6, Pattern::Star, Pattern::Star);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == P{{Family::A, 5}, dw({0, 0, 0, 0, 1})});
  CHECK(found[1] == P{{Family::A, 5}, dw({1, 0, 0, 0, 0})});

  // a dimension no family reaches: empty, not an error
  CHECK(classify::identify_tannaka_candidates(97, Pattern::Any, Pattern::Any).empty());
}
