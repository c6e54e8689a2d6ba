#include "catch_amalgamated.hpp"
#include "vcg/catalog.hpp"
#include "vcg/products.hpp"

using namespace vcg;

TEST_CASE("second nilpotent products") {
  auto const C2 = make_group("C2");
  auto const C3 = make_group("C3");
  auto const p  = nilpotent2_product({C2, C2});
  CHECK(p.group().size() == 8);
  CHECK(is_isomorphic(p.group(), make_group("D8")));
  CHECK(p.cartesian.size() == 2);
  auto const q = nilpotent2_product({C2, C3});
  CHECK(is_isomorphic(q.group(), make_group("C6")));
  CHECK(nilpotent2_predicted_order({make_group("D8"), make_group("D8")}) == 1024);
  CHECK(nilpotent2_predicted_order({make_group("C4"), make_group("C6")}) == 48);
  CHECK(nilpotent2_product({make_group("C4"), make_group("C6")}).group().size() == 48);
}

TEST_CASE("wiegold covers") {
  auto const w = wiegold_cover(make_group("C2"), make_group("C2"));
  CHECK(w.certificate.cover().size() == 8);
  CHECK(is_isomorphic(w.certificate.cover(), make_group("D8")));
  CHECK(w.certificate.multiplier() == FgAbelianGroup({2}));
  auto const c = wiegold_cover(make_group("C2"), make_group("C3"));
  CHECK(c.certificate.cover().size() == 6);
  CHECK(c.certificate.A().is_trivial());
}

TEST_CASE("sylow covers") {
  auto const c12 = sylow_cover(make_group("C12"));
  CHECK(c12.certificate.cover().size() == 12);
  CHECK(c12.certificate.A().is_trivial());
  auto const c24 = sylow_cover(make_group("C2xC4"));
  CHECK(c24.certificate.cover().size() == 16);
  CHECK(c24.certificate.multiplier() == FgAbelianGroup({2}));
  auto const big = sylow_cover(make_group("C2^2xC3^2"));
  CHECK(big.certificate.cover().size() == 216);
  CHECK(big.certificate.multiplier() == FgAbelianGroup({6}));
  CHECK_THROWS_AS(sylow_cover(make_group("S3")), InvalidInput);
}

TEST_CASE("regular products") {
  auto const d = direct_product({make_group("C2"), make_group("C2")});
  std::vector<Subgroup> fs{d.injections[0].image(), d.injections[1].image()};
  CHECK(is_regular_product(d.group, fs));
  auto const S3 = make_group("S3");
  auto const a  = subgroup_generated(S3, {S3.element("a")});
  auto const r  = subgroup_generated(S3, {S3.mul(S3.element("a"), S3.element("b"))});
  auto const w  = is_regular_product(S3, {a, r});
  CHECK(w.generates);
  CHECK_FALSE(w);
  CHECK(w.hats[1].is_whole());
  CHECK(is_regular_product(S3, {whole_group(S3)}));
}

TEST_CASE("haebich covers") {
  auto const C2 = make_group("C2");
  auto const d  = direct_product({C2, C2});
  auto const h  = haebich_cover({C2, C2}, d.group, d.injections);
  CHECK(h.group().size() == 8);
  CHECK(h.certificate.multiplier() == FgAbelianGroup({2}));
  auto const C3 = make_group("C3");
  auto const e  = direct_product({C2, C3});
  auto const k  = haebich_cover({C2, C3}, e.group, e.injections);
  CHECK(k.group().size() == 6);
  CHECK(k.certificate.A().is_trivial());
  auto const Q8 = make_group("Q8");
  auto const s  = haebich_cover({Q8}, Q8, {Homomorphism::identity(Q8)});
  CHECK(is_isomorphic(s.group(), Q8));
}
