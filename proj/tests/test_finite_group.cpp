#include "catch_amalgamated.hpp"
#include "vcg/catalog.hpp"
#include "vcg/finite_group.hpp"

using namespace vcg;

TEST_CASE("catalog orders") {
  for (auto const& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"C1", 1}, {"C6", 6}, {"S3", 6}, {"D8", 8}, {"Q8", 8}, {"A4", 12},
           {"C2^3", 8}, {"C2xC4", 8}, {"Q12", 12}, {"SD16", 16}, {"Pauli", 16}}) {
    CHECK(make_group(name).size() == n);
  }
  CHECK_THROWS_AS(make_group("NotAGroup"), InvalidInput);
}

TEST_CASE("cayley table validation") {
  FiniteGroup C2({"e", "a"}, {0, 1, 1, 0});
  CHECK(C2.size() == 2);
  CHECK(C2.label(C2.identity()) == "e");
  CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {0, 1, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {0, 1, 1}), InvalidInput);
}

TEST_CASE("subgroups and closures") {
  auto const G = make_group("S3");
  auto const a = G.element("a");
  auto const H = subgroup_generated(G, {a});
  CHECK(H.size() == 2);
  CHECK_FALSE(is_normal(H));
  CHECK(normal_closure(G, {a}).size() == 6);
  CHECK(derived_subgroup(G).size() == 3);
  CHECK(center(G).is_trivial());
  CHECK(centralizer(G, a).size() == 2);
}

TEST_CASE("series") {
  auto const D8 = make_group("D8");
  CHECK(is_nilpotent(D8));
  CHECK(series(D8, SeriesKind::lower_central).size() == 3);
  CHECK(center(D8).size() == 2);
  CHECK_FALSE(is_nilpotent(make_group("S3")));
  CHECK(series(make_group("A4"), SeriesKind::derived).back().is_trivial());
}

TEST_CASE("quotients") {
  auto const D8 = make_group("D8");
  auto const q  = quotient_group(D8, center(D8));
  CHECK(q.group.size() == 4);
  CHECK(is_isomorphic(q.group, make_group("C2^2")));
  CHECK(q.projection.kernel() == center(D8));
  auto const S3 = make_group("S3");
  CHECK_THROWS_AS(quotient_group(S3, subgroup_generated(S3, {S3.element("a")})),
                  InvalidInput);
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(make_group("C12"), 2).size() == 4);
  CHECK(sylow_subgroup(make_group("C12"), 3).size() == 3);
  CHECK(sylow_subgroup(make_group("A4"), 2).size() == 4);
  CHECK(sylow_subgroup(make_group("C2xC4"), 3).is_trivial());
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(make_group("C2xC3"), make_group("C6")));
  CHECK_FALSE(is_isomorphic(make_group("D8"), make_group("Q8")));
  CHECK_FALSE(is_isomorphic(make_group("C4"), make_group("C2^2")));
  auto const r = is_isomorphic(make_group("D12"), make_group("S3xC2"));
  REQUIRE(r);
  CHECK(r.witness->is_bijective());
}

TEST_CASE("direct products and abelian invariants") {
  auto const d = direct_product({make_group("C2"), make_group("C4")});
  CHECK(d.group.size() == 8);
  CHECK(abelian_invariants(d.group) == FgAbelianGroup({2, 4}));
  CHECK(abelianization(make_group("D8")) == FgAbelianGroup({2, 2}));
  CHECK(abelianization(make_group("S3")) == FgAbelianGroup({2}));
  CHECK(abelianization(make_group("A4")) == FgAbelianGroup({3}));
  CHECK(d.injections[0].then(d.projections[0]) == Homomorphism::identity(make_group("C2")));
}

TEST_CASE("homomorphisms") {
  auto const C4 = make_group("C4");
  auto const C2 = make_group("C2");
  auto const h  = Homomorphism::from_generators(C4, C2, {C4.element("a")}, {C2.element("a")});
  CHECK(h.kernel().size() == 2);
  CHECK(h.is_surjective());
  CHECK_FALSE(h.is_injective());
  CHECK_THROWS_AS(
      Homomorphism::from_generators(C2, C4, {C2.element("a")}, {C4.element("a")}),
      InvalidInput);
}
