#include "catch_amalgamated.hpp"
#include "vcg/catalog.hpp"
#include "vcg/cover.hpp"
#include "vcg/variety.hpp"

using namespace vcg;

TEST_CASE("verbal and marginal subgroups") {
  auto const D8 = make_group("D8");
  auto const ab = Variety::abelian();
  auto const n2 = Variety::nilpotent(2);
  CHECK(verbal_subgroup(ab, D8).size() == 2);
  CHECK(verbal_subgroup(n2, D8).is_trivial());
  CHECK(marginal_subgroup(ab, D8).size() == 2);
  CHECK(marginal_subgroup(n2, D8).is_whole());
  CHECK(verbal_subgroup(ab, make_group("C2xC4")).is_trivial());
  CHECK(marginal_subgroup(ab, make_group("C2xC4")).is_whole());
}

TEST_CASE("verbal and marginal subgroups agree with substitution") {
  for (auto const& name : {"S3", "D8", "Q8", "A4", "D12", "Q12"}) {
    INFO(name);
    auto const G = make_group(name);
    for (auto const& V : {Variety::abelian(), Variety::nilpotent(2)}) {
      CHECK(verbal_subgroup(V, G) == verbal_subgroup_by_substitution(V, G));
      CHECK(marginal_subgroup(V, G) == marginal_subgroup_by_substitution(V, G));
    }
  }
}

TEST_CASE("cover checker") {
  auto const V  = make_group("C2^2");
  auto const ab = Variety::abelian();
  for (auto const& name : {"D8", "Q8"}) {
    INFO(name);
    auto const E = make_group(name);
    auto const c = check_v_cover(E, center(E), V, ab, std::nullopt);
    REQUIRE(c);
    CHECK(c.value().multiplier() == FgAbelianGroup({2}));
    CHECK(c.value().revalidate());
  }
  auto const C4   = make_group("C4");
  auto const A2  = subgroup_generated(C4, {C4.power(C4.element("a"), 2)});
  auto const bad = check_v_cover(C4, A2, make_group("C2"), ab, std::nullopt);
  CHECK_FALSE(bad);
  REQUIRE(bad.failed);
  CHECK(*bad.failed == CoverClause::containment);
  auto const C2 = make_group("C2");
  CHECK(check_v_cover(C2, trivial_subgroup(C2), C2, Variety::nilpotent(2),
                      FgAbelianGroup()));
  auto const E = make_group("C2^3");
  auto const n = check_v_cover(E, subgroup_generated(E, {E.element("(a,1,1)")}), V, ab,
                               std::nullopt);
  REQUIRE(n.failed);
  CHECK(*n.failed == CoverClause::containment);
}

TEST_CASE("cocycle covers") {
  auto const v = cover_from_cocycle(make_group("C2^2"));
  CHECK(v.cover().size() == 8);
  CHECK((is_isomorphic(v.cover(), make_group("D8")) || is_isomorphic(v.cover(), make_group("Q8"))));
  CHECK(is_isomorphic(cover_from_cocycle(make_group("C4")).cover(), make_group("C4")));
  auto const h = cover_from_cocycle(make_group("C3^2"));
  CHECK(h.cover().size() == 27);
  CHECK_FALSE(h.cover().is_abelian());
  CHECK(bool(lift_epimorphism_check(h)));
}

TEST_CASE("cover orders over the catalog") {
  for (auto const& name : catalog_all()) {
    INFO(name);
    auto const G = make_group(name);
    auto const c = cover_from_cocycle(G);
    CHECK(c.cover().size() == G.size() * schur_multiplier(G).group.order());
    CHECK(c.revalidate());
  }
}

TEST_CASE("splitting covers") {
  for (auto const& name : catalog_small()) {
    INFO(name);
    auto const G = make_group(name);
    auto const s = cover_from_splitting(G);
    auto const c = cover_from_cocycle(G);
    CHECK(s.certificate.cover().size() == c.cover().size());
    CHECK(s.certificate.multiplier() == c.multiplier());
    CHECK(bool(lift_epimorphism_check(s.certificate)));
  }
  CHECK(cover_from_splitting(FiniteGroup()).certificate.cover().size() == 1);
}

TEST_CASE("twisted complements reach both covers of C3^2") {
  auto const G = make_group("C3^2");
  auto const d = relation_module_splitting(G);
  ComplementTwist tw(d.complement_basis.size(),
                     std::vector<std::uint64_t>(d.torsion_basis.size(), 0));
  auto const plain = cover_from_splitting(G, twisted_complement(d, tw));
  tw[0][0]         = 2;
  auto const heis  = cover_from_splitting(G, twisted_complement(d, tw));
  CHECK(plain.certificate.cover().size() == 27);
  CHECK(heis.certificate.cover().size() == 27);
  CHECK(heis.certificate.cover().exponent() == 3);
  CHECK(plain.certificate.cover().exponent() == 9);
}

TEST_CASE("schur-baer divisibility") {
  auto const v = schur_baer_divisibility(make_group("C2^2"));
  CHECK(v.multiplier_order == 2);
  CHECK(v.minimal_power == 1);
  CHECK(v.holds);
  auto const c = schur_baer_divisibility(make_group("C6"));
  CHECK(c.multiplier_order == 1);
  CHECK(c.holds);
  auto const e = schur_baer_divisibility(make_group("C2^4"));
  CHECK(e.multiplier_order == 64);
  CHECK(e.minimal_power == 2);
  CHECK(e.holds);
}
