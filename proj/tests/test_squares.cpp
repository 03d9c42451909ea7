#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smallrep/squares.hpp"

using namespace smallrep;
using squares::Decomposition;
using squares::TieBreak;

namespace {

RootSystem make(Family f, int m) { return RootSystem::build({f, m}); }
DominantWeight dw(std::vector<long long> a) { return DominantWeight{std::move(a)}; }

Decomposition expect(std::vector<std::pair<IrrepLabel, long long>> cons,
                     long long delta) {
  Decomposition d;
  d.constituents = std::move(cons);
  std::sort(d.constituents.begin(), d.constituents.end());
  d.delta = delta;
  return d;
}

IrrepLabel V(std::vector<long long> a) { return {dw(std::move(a)), Parity::V}; }
IrrepLabel W(std::vector<long long> a) { return {dw(std::move(a)), Parity::W}; }

}  // namespace

TEST_CASE("alternating square of the sl_2 standard module is trivial") {
  RootSystem rs = make(Family::A, 1);
  Decomposition dec = squares::square_decompose(rs, dw({1}), -1);
  CHECK(dec.constituents.empty());
  CHECK(dec.delta == 1);
  CHECK(squares::square_decompose(rs, dw({1}), +1) == expect({{V({2}), 1}}, 0));
}

TEST_CASE("superdimension and total-dimension bookkeeping") {
  std::vector<std::pair<DynkinType, DominantWeight>> samples = {
      {{Family::BC, 2}, dw({1, 0})}, {{Family::BC, 2}, dw({1, 1})},
      {{Family::BC, 3}, dw({0, 0, 1})}, {{Family::A, 2}, dw({1, 1})},
      {{Family::B, 2}, dw({0, 1})}};
  for (const auto& [t, lam] : samples) {
    RootSystem rs = RootSystem::build(t);
    GradedCharacter ch = reps::character(rs, {lam, Parity::V});
    long long s = ch.superdim(rs), tot = ch.dim_total(rs);
    GradedCharacter sq = squares::square_character(rs, ch, +1);
    GradedCharacter alt = squares::square_character(rs, ch, -1);
    CHECK(sq.superdim(rs) == s * (s + 1) / 2);
    CHECK(alt.superdim(rs) == s * (s - 1) / 2);
    CHECK(sq.dim_total(rs) + alt.dim_total(rs) == tot * tot);
  }
  // spec's numeric instance: s = 3 for the BC_2 standard module
  RootSystem bc2 = make(Family::BC, 2);
  GradedCharacter ch = reps::character(bc2, {dw({1, 0}), Parity::V});
  CHECK(squares::square_character(bc2, ch, +1).superdim(bc2) == 6);
}

TEST_CASE("square decompositions against table rows") {
  CHECK(squares::square_decompose(make(Family::B, 3), dw({1, 0, 0}), -1) ==
        expect({{V({0, 1, 0}), 1}}, 0));
  CHECK(squares::square_decompose(make(Family::A, 5), dw({0, 0, 1, 0, 0}), -1) ==
        expect({{V({0, 1, 0, 1, 0}), 1}}, 1));
  CHECK(squares::square_decompose(make(Family::C, 3), dw({0, 0, 1}), +1) ==
        expect({{V({0, 0, 2}), 1}, {V({2, 0, 0}), 1}}, 0));
  CHECK(squares::square_decompose(make(Family::BC, 3), dw({0, 0, 1}), -1) ==
        expect({{V({0, 2, 0}), 1},
                {V({0, 1, 0}), 1},
                {W({1, 0, 0}), 1},
                {W({0, 1, 1}), 1},
                {W({0, 0, 1}), 1}},
               1));
}

TEST_CASE("squares of the ten-dimensional osp(1|4) module") {
  // The printed table carries the trivial summand of this row under L^2;
  // the dimension bookkeeping (51 = 35 + 10 + 5 + 1, 49 = 14 + 35) forces
  // it into S^2.
  RootSystem rs = make(Family::BC, 2);
  CHECK(squares::square_decompose(rs, dw({0, 1}), +1) ==
        expect({{V({0, 2}), 1}, {V({0, 1}), 1}, {W({1, 0}), 1}}, 1));
  CHECK(squares::square_decompose(rs, dw({0, 1}), -1) ==
        expect({{V({2, 0}), 1}, {W({1, 1}), 1}}, 0));
}

TEST_CASE("multiplicity-two constituents in the BC_2 b1+b2 row") {
  RootSystem rs = make(Family::BC, 2);
  CHECK(squares::square_decompose(rs, dw({1, 1}), +1) ==
        expect({{V({2, 2}), 1},
                {V({2, 1}), 2},
                {V({2, 0}), 2},
                {W({3, 0}), 1},
                {W({1, 2}), 1},
                {W({1, 1}), 2}},
               0));
  CHECK(squares::square_decompose(rs, dw({1, 1}), -1) ==
        expect({{V({4, 0}), 1},
                {V({2, 1}), 1},
                {V({0, 3}), 1},
                {V({0, 2}), 2},
                {V({0, 1}), 2},
                {W({3, 1}), 1},
                {W({1, 2}), 1},
                {W({1, 1}), 1},
                {W({1, 0}), 1}},
               1));
}

TEST_CASE("peeling is deterministic across tie-breaking orders") {
  std::vector<std::pair<DynkinType, DominantWeight>> samples = {
      {{Family::B, 5}, dw({0, 0, 0, 0, 1})},
      {{Family::BC, 3}, dw({0, 0, 1})},
      {{Family::A, 3}, dw({1, 0, 1})},
      {{Family::D, 4}, dw({0, 1, 0, 0})}};
  for (const auto& [t, lam] : samples) {
    RootSystem rs = RootSystem::build(t);
    GradedCharacter ch = reps::character(rs, {lam, Parity::V});
    for (int eps : {+1, -1}) {
      GradedCharacter sq = squares::square_character(rs, ch, eps);
      CHECK(squares::decompose(rs, sq, TieBreak::LexHigh) ==
            squares::decompose(rs, sq, TieBreak::LexLow));
    }
  }
}

TEST_CASE("reconstruction identity") {
  std::vector<std::pair<DynkinType, DominantWeight>> samples = {
      {{Family::G, 2}, dw({1, 0})},
      {{Family::BC, 2}, dw({1, 1})},
      {{Family::C, 3}, dw({0, 1, 0})}};
  for (const auto& [t, lam] : samples) {
    RootSystem rs = RootSystem::build(t);
    GradedCharacter ch = reps::character(rs, {lam, Parity::V});
    for (int eps : {+1, -1}) {
      GradedCharacter sq = squares::square_character(rs, ch, eps);
      Decomposition dec = squares::decompose(rs, sq);
      GradedCharacter sum;
      for (const auto& [label, mult] : dec.constituents) {
        GradedCharacter c = reps::character(rs, label);
        for (const auto& [w, gm] : c.dominant_entries())
          sum.add(w, mult * gm.even, mult * gm.odd);
      }
      if (dec.delta) sum.add(Weight(rs.embedding_dim(), Rat(0)), dec.delta, 0);
      CHECK(sum.dominant_entries() == sq.dominant_entries());
    }
  }
}

TEST_CASE("contains_highest_weight") {
  CHECK(squares::contains_highest_weight(make(Family::A, 2), dw({1, 0}), 1));
  CHECK(squares::contains_highest_weight(make(Family::A, 1), dw({1}), 1));
  CHECK(squares::contains_highest_weight(make(Family::BC, 3), dw({0, 0, 1}), 3));
  CHECK(squares::contains_highest_weight(make(Family::B, 2), dw({0, 2}), 2));
  CHECK_THROWS_AS(squares::contains_highest_weight(make(Family::A, 2), dw({1, 0}), 2),
                  std::invalid_argument);
}

TEST_CASE("corrupt characters are rejected, not decomposed") {
  RootSystem rs = make(Family::A, 2);
  GradedCharacter bogus;
  // the adjoint highest weight without its zero-weight space
  bogus.add(rs.weight_of(dw({1, 1})), 1, 0);
  CHECK_THROWS_AS(squares::decompose(rs, bogus), squares::DecompositionError);
}

TEST_CASE("square_decompose rejects the zero weight and bad eps") {
  RootSystem rs = make(Family::A, 2);
  CHECK_THROWS_AS(squares::square_decompose(rs, dw({0, 0}), +1), std::invalid_argument);
  GradedCharacter ch = reps::character(rs, {dw({1, 0}), Parity::V});
  CHECK_THROWS_AS(squares::square_character(rs, ch, 0), std::invalid_argument);
}
