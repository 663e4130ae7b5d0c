#include "doctest.h"
#include "superquant/errors.hpp"
#include "superquant/hadic.hpp"

using namespace superquant;

TEST_CASE("order-h^2 quantization checks pass on every seed double") {
  for (const LieSBA& g : seed_bialgebras()) {
    CAPTURE(g.name);
    HadicContext ctx(make_double(g), 4);
    HadicReport rep = ctx.verify(g.name);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.j_matches_lemma);
    CHECK(rep.r_matches);
    CHECK(rep.cobracket_matches);
    CHECK(rep.intertwiner_matches);
    CHECK(rep.gauge_ok);
    CHECK(rep.ok());
  }
}

TEST_CASE("abelian seeds quantize trivially") {
  // For an abelian double everything commutes, so conjugating by J leaves
  // the primitive coproduct untouched.
  HadicContext ctx(make_double(seed_even_abelian()), 4);
  TruncPair J = ctx.compute_J();
  for (int letter = 0; letter < ctx.dd().g.dim; ++letter) {
    TruncPair delta = ctx.twisted_coproduct(letter, J);
    CHECK(delta.c1.empty());
    // c0 = x (x) 1 + 1 (x) x
    PairElem expect;
    expect[{Word{letter}, Word{}}] = Rat(1);
    expect[{Word{}, Word{letter}}] = Rat(1);
    CHECK(delta.c0 == expect);
  }
}

TEST_CASE("normal form sorts letters and kills odd squares") {
  // double of the 1-dim odd abelian seed: two anticommuting odd letters
  DoubleData dd = make_double(seed_odd_abelian());
  HadicContext ctx(dd, 4);
  CHECK(ctx.parity_of(Word{0}) == 1);
  CHECK(ctx.parity_of(Word{0, 1}) == 0);
  CHECK(ctx.normal_form(Word{0, 0}).empty());  // x^2 = [x,x]/2 = 0 here
  PBWElem swapped = ctx.normal_form(Word{1, 0});
  // p and m anticommute up to the bracket term; the bracket part is [m,p]
  CHECK(swapped.count(Word{0, 1}));
  CHECK(swapped.at(Word{0, 1}) == Rat(-1));
}

TEST_CASE("enveloping multiplication is associative") {
  DoubleData dd = make_double(seed_sl2_borel());
  HadicContext ctx(dd, 4);
  PBWElem a = ctx.normal_form(Word{0});
  PBWElem b = ctx.normal_form(Word{1});
  PBWElem c = ctx.normal_form(Word{2});
  CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
}

TEST_CASE("r and omega agree with the double data") {
  DoubleData dd = make_double(seed_sl2_borel());
  HadicContext ctx(dd, 4);
  PairElem r = ctx.r_pair();
  for (const auto& [k, v] : r) {
    REQUIRE(k.first.size() == 1);
    REQUIRE(k.second.size() == 1);
    CHECK(v == dd.r[k.first[0]][k.second[0]]);
  }
  PairElem omega = ctx.omega_pair();
  for (const auto& [k, v] : omega) CHECK(v == dd.omega[k.first[0]][k.second[0]]);
}

TEST_CASE("degree cap is enforced") {
  DoubleData dd = make_double(seed_even_abelian());
  HadicContext ctx(dd, 2);
  CHECK_THROWS_AS(ctx.normal_form(Word{0, 0, 0, 0}), CapExceeded);
}
