#include <fstream>

#include "doctest.h"
#include "superquant/config.hpp"
#include "superquant/errors.hpp"

using namespace superquant;

TEST_CASE("scalar and list values parse") {
  ConfigTable t = parse_config_text(
      "# a comment\n"
      "rank = 2\n"
      "name = \"demo\"\n"
      "d = [1, -1/2]\n"
      "matrix = [\n"
      "  [2, -1],\n"
      "  [-1, 0],\n"  // trailing comma inside a list is fine
      "]\n");
  CHECK(t.at("rank").num == Rat(2));
  CHECK(t.at("name").str == "demo");
  REQUIRE(t.at("d").kind == ConfigValue::Kind::List);
  CHECK(t.at("d").list[1].num == rat(-1, 2));
  CHECK(t.at("matrix").list.size() == 2);
  CHECK(t.at("matrix").list[1].list[1].num == Rat(0));
}

TEST_CASE("malformed input raises ParseError") {
  CHECK_THROWS_AS(parse_config_text("rank 2\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("d = [1, 2\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("name = \"unterminated\n"), ParseError);
  CHECK_THROWS_AS(parse_config_text("x = @\n"), ParseError);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/path.toml"), ParseError);
}

TEST_CASE("cartan datum round-trips through its config rendering") {
  for (CartanDatum d : {builtin_sl(2, 2), builtin_b0n(2), builtin_d21(rat(-3, 2))}) {
    CartanDatum back = cartan_from_config(parse_config_text(cartan_to_config(d)));
    CHECK(back.rank == d.rank);
    CHECK(back.a == d.a);
    CHECK(back.d == d.d);
    CHECK(back.tau == d.tau);
    CHECK(back.alpha == d.alpha);
  }
}

TEST_CASE("cartan config rejects missing or ill-typed fields") {
  CHECK_THROWS_AS(cartan_from_config(parse_config_text("rank = 2\n")), ParseError);
  CHECK_THROWS_AS(cartan_from_config(parse_config_text(
                      "rank = \"two\"\nmatrix = [[2]]\nd = [1]\n")),
                  ParseError);
  CHECK_THROWS_AS(cartan_from_config(parse_config_text(
                      "rank = 2\nmatrix = [[2, -1]]\nd = [1, 1]\n")),
                  ParseError);
}

TEST_CASE("superbialgebra config matches the built-in borel seed") {
  std::ifstream in(CONFIG_DIR "/sl2_borel.toml");
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  LieSBA g = liesba_from_config(parse_config_text(text));
  LieSBA seed = seed_sl2_borel();
  CHECK(g.dim == seed.dim);
  CHECK(g.parity == seed.parity);
  CHECK(g.c == seed.c);
  CHECK(g.delta == seed.delta);
}

TEST_CASE("r tensor config") {
  ConfigTable t = parse_config_text("dim = 2\nr = [[1, 2, 1/2], [2, 1, -1/2]]\n");
  TwoTensor r = r_from_config(t, 2);
  CHECK(r[0][1] == rat(1, 2));
  CHECK(r[1][0] == rat(-1, 2));
  CHECK(r[0][0] == Rat(0));
  // absent key gives the zero tensor
  TwoTensor zero = r_from_config(parse_config_text("dim = 2\n"), 2);
  CHECK(zero[0][1] == Rat(0));
  // out-of-range index
  CHECK_THROWS_AS(r_from_config(parse_config_text("r = [[3, 1, 1]]\n"), 2), ParseError);
}
