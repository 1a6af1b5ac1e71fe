#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>

#include "doctest.h"
#include "vfree/finite_group.hpp"
#include "vfree/word.hpp"

using namespace vf;

TEST_CASE("check_group accepts valid tables") {
  CHECK(!check_group({{0, 1}, {1, 0}}));
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(!check_group({{0}}));
}

TEST_CASE("check_group reports the failing triple") {
  // Break associativity in a Z/4-like table by swapping two entries.
  auto z4 = FiniteGroup::cyclic(4);
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = z4.mul(i, j);
  t[1][1] = 3;
  t[1][3] = 2;
  auto v = check_group(t);
  REQUIRE(v.has_value());
  CHECK(v->kind == "associativity");
  CHECK(v->a >= 0);
  CHECK_THROWS_AS(FiniteGroup::from_table(t), input_error);
}

TEST_CASE("symmetric group composition matches permutation composition") {
  auto s3 = FiniteGroup::symmetric(3);
  // The table was built from composition; spot-check that squaring a
  // transposition is trivial and a 3-cycle has order 3.
  int transpositions = 0, threecycles = 0;
  for (int g = 1; g < s3.order(); ++g) {
    int o = s3.element_order(g);
    if (o == 2) ++transpositions;
    if (o == 3) ++threecycles;
  }
  CHECK(transpositions == 3);
  CHECK(threecycles == 2);
}

TEST_CASE("free_action is block-regular and free") {
  auto z2 = FiniteGroup::cyclic(2);
  auto act = free_action(z2, 6);
  CHECK(act.is_free());
  // (01)(23)(45)
  Permutation expect{{1, 0, 3, 2, 5, 4}};
  CHECK(act.act(1) == expect);

  auto z3 = FiniteGroup::cyclic(3);
  auto act3 = free_action(z3, 6);
  CHECK(act3.is_free());
  Permutation expect3{{1, 2, 0, 4, 5, 3}};
  CHECK(act3.act(1) == expect3);

  // The regular action is free.
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(free_action(s3, 6).is_free());

  CHECK_THROWS_AS(free_action(z3, 4), input_error);
}

TEST_CASE("conjugator") {
  auto z2 = FiniteGroup::cyclic(2);

  SUBCASE("identical actions verify") {
    auto a = free_action(z2, 4);
    Permutation phi = conjugator(a, a);
    Permutation phi_inv = phi.inverse();
    for (int g = 0; g < 2; ++g)
      CHECK(a.act(g) == phi_inv * (a.act(g) * phi));
  }

  SUBCASE("block-swapped action") {
    auto alpha = free_action(z2, 4);
    // Z/2 acting by (02)(13): blocks interleaved.
    std::vector<Permutation> per{Permutation::identity(4),
                                 Permutation{{2, 3, 0, 1}}};
    GroupAction beta(&z2, per);
    REQUIRE(beta.is_free());
    Permutation phi = conjugator(alpha, beta);
    Permutation phi_inv = phi.inverse();
    for (int g = 0; g < 2; ++g)
      CHECK(alpha.act(g) == phi_inv * (beta.act(g) * phi));
  }

}

TEST_CASE("non-free action rejected by conjugator") {
  // Z/2 acting trivially on one point pair and swapping the other.
  auto z2 = FiniteGroup::cyclic(2);
  std::vector<Permutation> per{Permutation::identity(4),
                               Permutation{{0, 1, 3, 2}}};
  GroupAction fixed_points(&z2, per);
  CHECK(!fixed_points.is_free());
  auto free4 = free_action(z2, 4);
  CHECK_THROWS_AS(conjugator(fixed_points, free4), input_error);
}

TEST_CASE("permutation algebra properties") {
  std::mt19937_64 rng(5);
  auto random_perm = [&](int m) {
    Permutation p = Permutation::identity(m);
    for (int i = m - 1; i > 0; --i)
      std::swap(p.img[i], p.img[rng() % (i + 1)]);
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(rng() % 11);
    Permutation a = random_perm(m), b = random_perm(m), c = random_perm(m);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
}

TEST_CASE("permutation group order") {
  CHECK(permutation_group_order({Permutation{{1, 0, 3, 2, 5, 4}}}) == 2);
  CHECK(permutation_group_order({Permutation{{1, 2, 0}}}) == 3);
  // S3 from a transposition and a 3-cycle.
  CHECK(permutation_group_order(
            {Permutation{{1, 0, 2}}, Permutation{{1, 2, 0}}}) == 6);
}

TEST_CASE("direct products and closure") {
  auto z6 = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                        FiniteGroup::cyclic(3));
  CHECK(z6.order() == 6);
  CHECK(!check_group({{0}}).has_value());
  auto closure = z6.subgroup_closure({z6.mul(1 * 3 + 0, 0 * 3 + 1)});
  CHECK(closure.size() == 6);  // (1,1) generates Z/2 x Z/3
}
