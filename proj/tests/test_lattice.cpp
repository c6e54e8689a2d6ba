#include <random>

#include "catch_amalgamated.hpp"
#include "vcg/lattice.hpp"

using namespace vcg;

namespace {
  IntMatrix mul(IntMatrix const& A, IntMatrix const& B) {
    IntMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
      for (std::size_t j = 0; j < B.cols(); ++j) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
          C(i, j) += A(i, k) * B(k, j);
        }
      }
    }
    return C;
  }
}  // namespace

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
  auto const A = IntMatrix::from_rows({{2, 4}, {6, 8}});
  auto const s = smith_normal_form(A);
  REQUIRE(s.rank == 2);
  auto const d = s.diagonal();
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);
  CHECK(mul(mul(s.U, A), s.V) == s.D);
  CHECK(mul(s.U, s.U_inv) == IntMatrix::identity(2));
  CHECK(mul(s.V, s.V_inv) == IntMatrix::identity(2));
}

TEST_CASE("smith normal form of random matrices") {
  std::mt19937                       rng(7);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 8);
  for (int t = 0; t < 50; ++t) {
    IntMatrix A(dim(rng), dim(rng));
    for (std::size_t i = 0; i < A.rows(); ++i) {
      for (std::size_t j = 0; j < A.cols(); ++j) {
        A(i, j) = entry(rng);
      }
    }
    auto const s = smith_normal_form(A);
    REQUIRE(mul(mul(s.U, A), s.V) == s.D);
    auto const d = s.diagonal();
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
      CHECK(d[i] > 0);
      CHECK(d[i + 1] % d[i] == 0);
    }
    for (std::size_t i = s.rank; i < d.size(); ++i) {
      CHECK(d[i] == 0);
    }
  }
}

TEST_CASE("cokernels") {
  CHECK(cokernel(IntMatrix::from_rows({{2, 4}, {6, 8}})).group == FgAbelianGroup({2, 4}));
  CHECK(cokernel(IntMatrix::from_rows({{2}, {0}})).group == FgAbelianGroup({2}, 1));
  CHECK(cokernel(IntMatrix::from_rows({{1, 0}, {0, 1}})).group.is_trivial());
  auto const ck = cokernel(IntMatrix::from_rows({{4, 0}, {0, 6}}));
  CHECK(ck.group == FgAbelianGroup({2, 12}));
  for (std::size_t i = 0; i < ck.generators.size(); ++i) {
    auto const y = ck.coordinates(ck.generators[i]);
    for (std::size_t j = 0; j < y.size(); ++j) {
      CHECK(y[j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("torsion complement") {
  auto const t = torsion_complement(IntMatrix::from_rows({{2}, {0}, {0}}));
  CHECK(t.torsion_basis.size() == 1);
  CHECK(t.complement_basis.size() == 2);
}

TEST_CASE("linear congruences") {
  auto const A = IntMatrix::from_rows({{2}});
  auto const x = solve_linear_congruences(A, {Integer(0)}, {Integer(4)});
  REQUIRE(x);
  CHECK((*x)[0] == 0);
  CHECK_FALSE(solve_linear_congruences(A, {Integer(1)}, {Integer(4)}));
  auto const y = solve_linear_congruences(IntMatrix::from_rows({{3}}), {Integer(2)},
                                          {Integer(7)});
  REQUIRE(y);
  CHECK((3 * (*y)[0]) % 7 == 2);
}

TEST_CASE("abelian group normalisation") {
  CHECK(FgAbelianGroup::from_cyclic_orders({2, 3}) == FgAbelianGroup({6}));
  CHECK(FgAbelianGroup::from_cyclic_orders({4, 2, 1, 0}) == FgAbelianGroup({2, 4}, 1));
  CHECK(FgAbelianGroup({2, 4}).to_string() == "[2,4]");
  CHECK(tensor_product(FgAbelianGroup({4}), FgAbelianGroup({6})) == FgAbelianGroup({2}));
  CHECK_THROWS_AS(FgAbelianGroup({4, 2}), InvalidInput);
}
