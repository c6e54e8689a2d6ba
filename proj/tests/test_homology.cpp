#include "catch_amalgamated.hpp"
#include "vcg/catalog.hpp"
#include "vcg/homology.hpp"

using namespace vcg;

TEST_CASE("multipliers by both methods") {
  std::vector<std::pair<std::string, FgAbelianGroup>> const cases{
      {"C1", FgAbelianGroup()},       {"C6", FgAbelianGroup()},
      {"C2^2", FgAbelianGroup({2})},  {"C2^3", FgAbelianGroup({2, 2, 2})},
      {"S3", FgAbelianGroup()},       {"D8", FgAbelianGroup({2})},
      {"Q8", FgAbelianGroup()},       {"A4", FgAbelianGroup({2})},
      {"C3^2", FgAbelianGroup({3})},  {"C2xC4", FgAbelianGroup({2})},
      {"D12", FgAbelianGroup({2})},   {"C4^2", FgAbelianGroup({4})}};
  for (auto const& [name, M] : cases) {
    INFO(name);
    auto const G = make_group(name);
    CHECK(schur_multiplier_bar(G).group == M);
    CHECK(schur_multiplier_cocycle(G).group == M);
  }
}

TEST_CASE("multiplier caps") {
  CHECK_THROWS_AS(schur_multiplier_bar(make_group("C2^6")), CapExceeded);
}

TEST_CASE("induced maps") {
  auto const PV = catalog_group("C2^2");
  auto const V  = PV.group;
  auto const MV = schur_multiplier_bar(V, true);
  auto const id = multiplier_induced_map(Homomorphism::identity(V), MV, MV);
  CHECK(id.is_identity());
  auto const C2 = make_group("C2");
  auto const p  = Homomorphism::from_generators(
      V, C2, PV.generator_elements, {C2.element("a"), C2.identity()});
  CHECK(multiplier_induced_map(p).is_zero());
  auto const D8 = make_group("D8");
  auto const q  = quotient_group(D8, center(D8));
  CHECK(multiplier_induced_map(q.projection).is_zero());
  auto const C22 = direct_product({V, C2});
  auto const inc = multiplier_induced_map(C22.injections[0]);
  CHECK(inc.is_injective());
}

TEST_CASE("universal cocycle") {
  for (auto const& name : {"C2^2", "D8", "Q8", "C3^2"}) {
    INFO(name);
    auto const G = make_group(name);
    auto const f = universal_cocycle(G);
    CHECK(f.satisfies_cocycle_identity());
    CHECK(f.is_normalized());
    CHECK(f.values == schur_multiplier(G).group);
  }
}

TEST_CASE("relation module splitting") {
  auto const d = relation_module_splitting(make_group("C2"));
  CHECK(d.torsion.is_trivial());
  CHECK(d.free_rank == 2);
  auto const v = relation_module_splitting(make_group("C2^2"));
  CHECK(v.torsion == FgAbelianGroup({2}));
  CHECK(v.free_rank == 4);
  CHECK(v.complement_words.size() == v.free_rank);
}
