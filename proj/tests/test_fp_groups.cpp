#include <random>

#include "catch_amalgamated.hpp"
#include "vcg/catalog.hpp"
#include "vcg/free_product.hpp"
#include "vcg/todd_coxeter.hpp"
#include "vcg/word.hpp"

using namespace vcg;

TEST_CASE("word parsing") {
  auto const w = parse_word("a^-1 b^-1 a b");
  CHECK(w == commutator(Word::generator("a"), Word::generator("b")));
  CHECK(parse_word("[a,b]") == w);
  CHECK(parse_word("a a a") == Word::generator("a", 3));
  CHECK(parse_word("a*a^-1").empty());
  CHECK(parse_word("1").empty());
  CHECK(parse_word("(a b)^2").length() == 4);
  CHECK_THROWS_AS(parse_word("a^"), InvalidInput);
}

TEST_CASE("presentation parsing") {
  auto const P = parse_presentation("a,b | a^2, b^3, (a b)^2");
  CHECK(P.generators().size() == 2);
  CHECK(P.relators().size() == 3);
  CHECK_THROWS_AS(parse_presentation("a | b^2"), InvalidInput);
  CHECK_THROWS_AS(parse_presentation("a, b"), InvalidInput);
}

TEST_CASE("todd-coxeter") {
  CHECK(todd_coxeter(parse_presentation("a,b | a^2, b^3, (a b)^2")).ncosets == 6);
  CHECK(todd_coxeter(parse_presentation("a | a^7")).ncosets == 7);
  CHECK(todd_coxeter(parse_presentation("a,b | a^2, b^2, (a b)^4")).ncosets == 8);
  CHECK(todd_coxeter(parse_presentation("a,b | a^4, b^2 a^-2, b^-1 a b a")).ncosets == 8);
  auto const P = parse_presentation("a,b | a^2, b^3, (a b)^2");
  CHECK(todd_coxeter(P, {parse_word("a")}).ncosets == 3);
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("a | a^100"), {}, 50), CapExceeded);
}

TEST_CASE("enumerated groups") {
  auto const e = enumerate_group(parse_presentation("a,b | a^2, b^2, (a b)^4"));
  CHECK(is_isomorphic(e.group, make_group("D8")));
  CHECK(e.generator_elements.size() == 2);
}

TEST_CASE("standard presentation") {
  auto const G  = make_group("S3");
  auto const sp = standard_presentation(G);
  CHECK(sp.presentation.generators().size() == 6);
  CHECK(sp.presentation.relators().size() == 36);
  auto const e = enumerate_group(sp.presentation);
  CHECK(is_isomorphic(e.group, G));
}

TEST_CASE("free product presentation") {
  auto const fp = free_product_presentation(
      {parse_presentation("a | a^2"), parse_presentation("a | a^2")});
  CHECK(fp.presentation.generators() == std::vector<std::string>{"a1", "a2"});
  CHECK(fp.presentation.relators().size() == 2);
  auto const T = todd_coxeter(fp.presentation.with_relators({parse_word("(a1 a2)^4")}));
  CHECK(T.ncosets == 8);
  auto const q = free_product_presentation(
      {parse_presentation("a | a^2"), parse_presentation("b | b^3")});
  CHECK(q.presentation.generators() == std::vector<std::string>{"a", "b"});
  CHECK(q.embed(1, parse_word("b^2")) == parse_word("b^2"));
}

TEST_CASE("free product normal forms") {
  std::vector<FiniteGroup> fs{make_group("C2"), make_group("C3")};
  auto const a = fp_generator(fs, 0, fs[0].element("a"));
  auto const b = fp_generator(fs, 1, fs[1].element("a"));
  auto const ab = fp_multiply(fs, a, b);
  CHECK(ab.length() == 2);
  CHECK(fp_multiply(fs, a, a).is_identity());
  CHECK(fp_multiply(fs, b, b).length() == 1);
  CHECK(fp_multiply(fs, fp_multiply(fs, ab, fp_inverse(fs, b)), a).is_identity());
  CHECK(fp_multiply(fs, ab, fp_inverse(fs, ab)).is_identity());
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto const x = random_free_product_element(fs, 4, rng);
    auto const y = random_free_product_element(fs, 3, rng);
    auto const z = random_free_product_element(fs, 5, rng);
    CHECK(fp_multiply(fs, fp_multiply(fs, x, y), z)
          == fp_multiply(fs, x, fp_multiply(fs, y, z)));
  }
}

TEST_CASE("word evaluation") {
  auto const P = catalog_group("D8");
  CHECK(P.evaluate(parse_word("r^4")) == P.group.identity());
  CHECK(P.evaluate(parse_word("s r s")) == P.evaluate(parse_word("r^-1")));
  CHECK_THROWS_AS(evaluate_word(parse_word("z"), P.assignment(), P.group), InvalidInput);
}
