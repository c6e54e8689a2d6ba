#include "catch_amalgamated.hpp"
#include "vcg/scenarios.hpp"
#include "vcg/vcg.hpp"

using namespace vcg;

namespace {
  std::string cyclic(std::size_t k) {
    return "C" + std::to_string(std::size_t(1) << (k + 1));
  }

  // C2 -> C4 -> C8 -> ..., generator to the square of the next generator
  ChainSystem cyclic_chain(std::size_t horizon) {
    return ChainSystem(
        [](std::size_t k) { return make_group(cyclic(k)); },
        [](std::size_t k) {
          auto const s = catalog_group(cyclic(k));
          auto const t = catalog_group(cyclic(k + 1));
          return map_from_images(s, t, {"a^2"});
        },
        horizon, true);
  }

  DirectedSystem vee() {
    auto const V  = catalog_group("C2^2");
    auto const C2 = catalog_group("C2");
    DirectedSystem D({C2.group, C2.group, V.group}, {{0, 2}, {1, 2}});
    D.set_map(0, 2, map_from_images(C2, V, {"a1"}));
    D.set_map(1, 2, map_from_images(C2, V, {"a2"}));
    return D;
  }
}  // namespace

TEST_CASE("directed system validation") {
  CHECK(validate_directed_system(DirectedSystem::constant(make_group("C2^2"), 3)));
  CHECK(validate_directed_system(cyclic_chain(3)));
  CHECK(validate_directed_system(vee()));
  auto const C2 = make_group("C2");
  auto const r  = validate_directed_system(DirectedSystem({C2, C2}, {}));
  CHECK_FALSE(r);
  CHECK_FALSE(r.violation.empty());
  CHECK_THROWS_AS(ChainSystem([&](std::size_t) { return make_group("C4"); },
                              [](std::size_t) {
                                auto const c = catalog_group("C4");
                                return map_from_images(c, c, {"a^2"});
                              },
                              3, true),
                  InvalidInput);
}

TEST_CASE("colimits") {
  auto const c = colimit(vee());
  CHECK(c.maximum == 2);
  CHECK(c.group.size() == 4);
  CHECK(colimit_by_quotient(vee()).group.size() == 4);
  ChainColimit L(cyclic_chain(3));
  auto const C2 = make_group("C2");
  auto const C4 = make_group("C4");
  auto const x  = L.inject(0, C2.element("a"));
  auto const y  = L.inject(1, C4.power(C4.element("a"), 2));
  CHECK(L.equal(x, y) == ChainEquality::equal);
  CHECK(L.equal(x, L.identity()) == ChainEquality::distinct);
  CHECK(L.equal(L.multiply(x, x), L.identity()) == ChainEquality::equal);
}

TEST_CASE("mediating morphisms") {
  auto const G  = make_group("D8");
  auto const D  = DirectedSystem::constant(G, 3);
  auto const id = Homomorphism::identity(G);
  CHECK(mediating_morphism(D, G, {id, id, id}) == id);
  auto const V = vee();
  auto const c = colimit(V);
  CHECK(mediating_morphism(V, c.group, c.injections) == Homomorphism::identity(c.group));
  auto const C3 = make_group("C3");
  std::vector<Homomorphism> zero;
  for (std::size_t i = 0; i < V.size(); ++i) {
    zero.push_back(Homomorphism::trivial(V.group(i), C3));
  }
  CHECK(mediating_morphism(V, C3, zero).image().is_trivial());
}

TEST_CASE("products commute with colimits") {
  auto const a = product_colimit_swap(DirectedSystem::constant(make_group("C2"), 3),
                                      DirectedSystem::constant(make_group("C3"), 3));
  CHECK(a);
  CHECK(a.colimit_of_products == 6);
  CHECK(product_colimit_swap(vee(), vee()));
  CHECK(product_colimit_swap(cyclic_chain(3), cyclic_chain(3)));
}

TEST_CASE("multipliers commute with colimits") {
  auto const v = multiplier_colimit_check(DirectedSystem::constant(make_group("C2^2"), 3));
  CHECK(v.pass());
  CHECK(v.colimit_of_multipliers == FgAbelianGroup({2}));
  auto const e = multiplier_colimit_check(load_system_file(VCG_SAMPLES "/chain_elementary.json").system);
  CHECK(e.pass());
  CHECK(e.multiplier_of_colimit == FgAbelianGroup({2, 2, 2}));
  auto const c = multiplier_colimit_check(cyclic_chain(3).truncate(3));
  CHECK(c.pass());
  CHECK(c.colimit_of_multipliers.is_trivial());
}

TEST_CASE("induced cover systems") {
  auto const V  = make_group("C2^2");
  auto const kc = detail::klein_covers(V);
  REQUIRE(kc);
  auto const D = DirectedSystem::constant(V, 3);
  auto const same = induced_cover_system(D, {kc->dihedral, kc->dihedral, kc->dihedral});
  REQUIRE(same);
  auto const cert = colimit_cover_check(*same.system);
  CHECK(is_isomorphic(cert.cover(), make_group("D8")));
  auto const mixed = induced_cover_system(D, {kc->dihedral, kc->quaternion, kc->dihedral});
  CHECK_FALSE(mixed);
  REQUIRE(mixed.obstruction);
  CHECK(mixed.obstruction->from == 0);
  auto const chain = cyclic_chain(3);
  std::vector<SplittingCover> covers;
  for (std::size_t k = 0; k < 3; ++k) {
    covers.push_back(cover_from_splitting(chain.truncate(3).group(k)));
  }
  auto const r = colimit_cover_check(chain, covers);
  CHECK(r.status == ChainCoverStatus::verified_to_horizon);
  REQUIRE(r.stage_certificates.size() == 3);
  for (auto const& c : r.stage_certificates) {
    CHECK(c.A().is_trivial());
  }
}

TEST_CASE("free products are not covered by free products of covers") {
  auto const r = free_product_counterexample(make_group("C2^2"), make_group("C2^2"), 4);
  CHECK(r.expected_multiplier == FgAbelianGroup({2, 2}));
  CHECK(r.central_found == 0);
  CHECK(r.refuted);
  auto const t = free_product_counterexample(make_group("C2"), make_group("C2"), 4);
  CHECK_FALSE(t.contradiction_available);
  CHECK_FALSE(t.refuted);
  auto const m = free_product_counterexample(make_group("C2^2"), make_group("C3"), 4);
  CHECK(m.expected_multiplier == FgAbelianGroup({2}));
  CHECK(m.refuted);
}

TEST_CASE("exactness and subgroup systems") {
  auto const C2 = catalog_group("C2");
  auto const C4 = catalog_group("C4");
  auto const al = map_from_images(C2, C4, {"a^2"});
  auto const be = map_from_images(C4, C2, {"a"});
  auto const e  = exactness_check(DirectedSystem::constant(C2.group, 3),
                                  DirectedSystem::constant(C4.group, 3),
                                  DirectedSystem::constant(C2.group, 3), {al, al, al},
                                  {be, be, be});
  CHECK(e.pass());
  CHECK(all_subgroups(make_group("S3")).size() == 6);
  CHECK(all_subgroups(make_group("D8")).size() == 10);
  auto const S = subgroup_system(make_group("Q8"));
  CHECK(validate_directed_system(S));
  CHECK(colimit(S).group.size() == 8);
}
