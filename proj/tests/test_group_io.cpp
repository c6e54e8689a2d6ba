#include "catch_amalgamated.hpp"
#include "vcg/group_io.hpp"
#include "vcg/system_file.hpp"

using namespace vcg;

TEST_CASE("permutations") {
  auto const p = parse_permutation("(1 2 3)");
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p.then(p).then(p).is_identity());
  CHECK(p.to_string() == "(1 2 3)");
  CHECK(parse_permutation("()").is_identity());
  CHECK(parse_permutation("(1 2)(3 4)").to_string() == "(1 2)(3 4)");
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation("(1 21)"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation("(1 x)"), InvalidInput);
}

TEST_CASE("permutation groups") {
  auto const d8 = permutation_group({parse_permutation("(1 2 3 4)"), parse_permutation("(1 3)")});
  CHECK(d8.group.size() == 8);
  CHECK(is_isomorphic(d8.group, make_group("D8")));
  auto const s4 = make_group(PermutationGenerators{{"(1 2 3 4)", "(1 2)"}});
  CHECK(s4.size() == 24);
  CHECK_THROWS_AS(make_group(PermutationGenerators{{"(1 2 3 4 5 6 7 8)", "(1 2)"}}),
                  CapExceeded);
}

TEST_CASE("cayley data") {
  CayleyData c{{"e", "a", "b", "c"},
               {{"e", "a", "b", "c"}, {"a", "e", "c", "b"}, {"b", "c", "e", "a"},
                {"c", "b", "a", "e"}}};
  auto const G = make_group(c);
  CHECK(is_isomorphic(G, make_group("C2^2")));
  CHECK(G.label(G.identity()) == "e");
  c.table[1][1] = "a";
  CHECK_THROWS_AS(make_group(c), InvalidInput);
}

TEST_CASE("group specs") {
  CHECK(load_group("Q8").group.size() == 8);
  CHECK(load_group("perm:(1 2 3),(1 2)").group.size() == 6);
  auto const p = load_group("pres:x,y | x^2, y^2, (x y)^3");
  CHECK(p.group.size() == 6);
  CHECK(p.presentation.generators() == std::vector<std::string>{"x", "y"});
  CHECK(load_group("file:" VCG_SAMPLES "/d8_permutations.json").group.size() == 8);
  CHECK(load_group("file:c2xc2_cayley.json", "", VCG_SAMPLES).group.exponent() == 2);
  CHECK_THROWS_AS(load_group("NotAGroup"), InvalidInput);
  CHECK_THROWS_AS(load_group("file:/nonexistent.json"), InvalidInput);
  CHECK(load_group_json(nlohmann::json::parse(R"({"catalog": "A4"})")).group.size() == 12);
  CHECK(load_group_json(nlohmann::json::parse(R"({"presentation": "a | a^5"})")).group.size()
        == 5);
}

TEST_CASE("maps from generator images") {
  auto const C2 = catalog_group("C2");
  auto const C4 = catalog_group("C4");
  auto const h  = map_from_images(C2, C4, {"a^2"});
  CHECK(h.is_injective());
  CHECK_THROWS_AS(map_from_images(C2, C4, {"a"}), InvalidInput);
  CHECK_THROWS_AS(map_from_images(C2, C4, {"b"}), InvalidInput);
  CHECK_THROWS_AS(map_from_images(C2, C4, {"a", "a"}), InvalidInput);
}

TEST_CASE("system files") {
  for (auto const* name : {"chain_c2_c4_c8.json", "chain_elementary.json", "diamond.json",
                           "constant_d8.json", "perm_stages.json"}) {
    INFO(name);
    auto const f = load_system_file(std::string(VCG_SAMPLES "/") + name);
    CHECK(validate_directed_system(f.system));
  }
  auto const c = load_system_file(VCG_SAMPLES "/chain_c2_c4_c8.json");
  CHECK(c.chain);
  CHECK(colimit(c.system).group.size() == 8);
  auto const bad = nlohmann::json::parse(
      R"({"index": "chain", "stages": [{"name": "a", "group": "C2"}],
          "maps": [{"from": "a", "to": "z", "images": ["a"]}]})");
  CHECK_THROWS_AS(load_system_json(bad), InvalidInput);
  CHECK_THROWS_AS(load_system_json(nlohmann::json::parse(R"({"stages": []})")), InvalidInput);
}
