#include "bsk/zk.hpp"

#include "doctest.h"

#include <vector>

using namespace bsk;

namespace {

GroupElement el(int k, std::int64_t r, long num, int exp) {
  return GroupElement(k, r, ZkRational(k, num, exp));
}

std::vector<GroupElement> small_grid(int k) {
  std::vector<GroupElement> v;
  for (std::int64_t r = -2; r <= 2; ++r)
    for (long num = -4; num <= 4; ++num)
      for (int exp : {0, 1, 2}) v.push_back(el(k, r, num, exp));
  return v;
}

}  // namespace

TEST_SUITE("zk") {
  TEST_CASE("rational canonicalization") {
    CHECK(ZkRational(3, 9, 2) == ZkRational(3, 1, 0));
    CHECK(ZkRational(3, 6, 1) == ZkRational(3, 2, 0));
    CHECK(ZkRational(3, 5, 2).num() == 5);
    CHECK(ZkRational(3, 5, 2).exp() == 2);
    CHECK(ZkRational(3, 0, 7) == ZkRational::zero(3));
    CHECK(ZkRational(2, -12, 2) == ZkRational(2, -3, 0));
  }

  TEST_CASE("rational arithmetic") {
    ZkRational x(3, 49, 2), y(3, -64, 3);
    CHECK(zk_add(x, y) == ZkRational(3, 83, 3));
    CHECK(x + y == ZkRational(3, 83, 3));
    CHECK(x - x == ZkRational::zero(3));
    CHECK(ZkRational(3, 5, 1) * ZkRational(3, 6, 0) == ZkRational(3, 10, 0));
    CHECK(ZkRational(3, 1, 1) < ZkRational(3, 2, 1));
    CHECK(ZkRational(3, -5, 0) < ZkRational(3, 1, 2));
    CHECK(zk_shift(ZkRational(3, 5, 0), -2) == ZkRational(3, 5, 2));
    CHECK(zk_shift(ZkRational(3, 5, 2), 1) == ZkRational(3, 5, 1));
    CHECK(zk_shift(ZkRational(3, 5, 2), 2) == ZkRational(3, 5, 0));
    CHECK(zk_shift(ZkRational(3, 5, 2), 3) == ZkRational(3, 15, 0));
    CHECK(ZkRational(3, 83, 3).to_string() == "83/27");
    CHECK(ZkRational(3, -7, 0).to_string() == "-7");
  }

  TEST_CASE("digit split") {
    ZkSplit sp = zk_split(ZkRational(3, 49, 2));  // 49/9 = 5 + (1/9 + 1/3)
    CHECK(sp.sign == 1);
    CHECK(sp.int_part == 5);
    CHECK(sp.frac_digits == std::vector<int>{1, 1});
    sp = zk_split(ZkRational(3, -64, 3));  // 64/27 = 2 + (1/27 + 0 + 1/3)
    CHECK(sp.sign == -1);
    CHECK(sp.int_part == 2);
    CHECK(sp.frac_digits == std::vector<int>{1, 0, 1});
    sp = zk_split(ZkRational::zero(3));
    CHECK(sp.sign == 1);
    CHECK(sp.int_part == 0);
    CHECK(sp.frac_digits.empty());
    CHECK(base_k_digits(5, 3) == std::vector<int>{2, 1});
    CHECK(base_k_digits(0, 3).empty());
    CHECK(base_k_digits(27, 3) == std::vector<int>{0, 0, 0, 1});
  }

  TEST_CASE("group multiplication, inverse, power") {
    GroupElement x = el(3, -1, 49, 2), y = el(3, 0, -64, 3);
    CHECK(bs_mul(x, y) == el(3, -1, 83, 3));
    CHECK(bs_inv(el(3, 2, -7, 1)) == el(3, -2, 7, 3));
    CHECK(bs_pow(el(3, 1, 1, 0), 3) == el(3, 3, 13, 0));
    CHECK(bs_pow(el(3, 1, 1, 0), 0) == GroupElement::identity(3));
    for (const auto& g : small_grid(3)) {
      CHECK(bs_mul(g, bs_inv(g)) == GroupElement::identity(3));
      CHECK(bs_mul(bs_inv(g), g) == GroupElement::identity(3));
      CHECK(bs_pow(g, -2) == bs_inv(bs_pow(g, 2)));
      GroupElement p = GroupElement::identity(3);
      for (int n = 0; n <= 4; ++n) {
        CHECK(bs_pow(g, n) == p);
        p = bs_mul(p, g);
      }
    }
    auto grid = small_grid(2);
    for (size_t i = 0; i < grid.size(); i += 7)
      for (size_t j = 0; j < grid.size(); j += 11) {
        const auto &g = grid[i], &h = grid[j];
        CHECK(bs_inv(bs_mul(g, h)) == bs_mul(bs_inv(h), bs_inv(g)));
        for (size_t l = 0; l < grid.size(); l += 13)
          CHECK(bs_mul(bs_mul(g, h), grid[l]) == bs_mul(g, bs_mul(h, grid[l])));
      }
  }

  TEST_CASE("word evaluation") {
    CHECK(bs_eval_word(3, "ab") == el(3, 1, 3, 0));
    CHECK(bs_eval_word(3, "ba") == el(3, 1, 1, 0));
    CHECK(bs_eval_word(3, "bA") == el(3, 1, -1, 0));
    CHECK(bs_eval_word(3, "") == GroupElement::identity(3));
    CHECK(bs_eval_word(3, "baBaBaaaaa") == el(3, -1, 49, 2));
    CHECK(bs_eval_word(3, "aB") == el(3, -1, 1, 1));
    CHECK_THROWS_AS(bs_eval_word(3, "abq"), InputError);
  }

  TEST_CASE("element text form") {
    CHECK(element_to_string(el(3, -1, 83, 3)) == "(-1,83/27)");
    CHECK(element_to_string(el(3, 2, -7, 1)) == "(2,-7/3)");
    CHECK(element_to_string(el(3, 0, 5, 0)) == "(0,5)");
    CHECK(parse_element(3, "(-1,83/27)") == el(3, -1, 83, 3));
    CHECK(parse_element(3, "( -1 , 83 / 27 )") == el(3, -1, 83, 3));
    CHECK(parse_element(3, "(0,6/9)") == el(3, 0, 2, 1));  // reduced on input
    CHECK_THROWS_AS(parse_element(3, "(0,1/2)"), InputError);
    CHECK_THROWS_AS(parse_element(3, "(0,1"), InputError);
    CHECK_THROWS_AS(parse_element(3, "0,1)"), InputError);
    for (const auto& g : small_grid(3)) CHECK(parse_element(3, element_to_string(g)) == g);
  }

  TEST_CASE("fractions over k") {
    CHECK(zk_from_fraction(3, 5, 9) == ZkRational(3, 5, 2));
    CHECK(zk_from_fraction(3, 6, 9) == ZkRational(3, 2, 1));
    CHECK(zk_from_fraction(3, 10, 6) == ZkRational(3, 5, 1));
    CHECK(zk_from_fraction(2, 3, 8) == ZkRational(2, 3, 3));
    CHECK(zk_from_fraction(3, 4, 4) == ZkRational(3, 1, 0));
    CHECK(!zk_from_fraction(3, 1, 2).has_value());
    CHECK(!zk_from_fraction(2, 1, 6).has_value());
  }

  TEST_CASE("centralizer generator") {
    CHECK(centralizer_generator(GroupElement::identity(3)).kind == CentralizerGenerator::Whole);
    CHECK(centralizer_generator(el(3, 0, 5, 0)).kind == CentralizerGenerator::SubgroupN);
    CHECK(centralizer_generator(el(3, 0, 1, 2)).kind == CentralizerGenerator::SubgroupN);
    auto c = centralizer_generator(el(3, 2, 4, 0));
    REQUIRE(c.kind == CentralizerGenerator::Cyclic);
    CHECK(*c.generator == el(3, 1, 1, 0));
    auto cn = centralizer_generator(el(3, -2, 4, 0));
    REQUIRE(cn.kind == CentralizerGenerator::Cyclic);
    CHECK(*cn.generator == el(3, -1, 3, 0));
    for (const auto& g : small_grid(3)) {
      if (g.r == 0) continue;
      auto cg = centralizer_generator(g);
      REQUIRE(cg.kind == CentralizerGenerator::Cyclic);
      CHECK(bs_mul(*cg.generator, g) == bs_mul(g, *cg.generator));
      // g itself lies in <generator>: some power of the generator equals g.
      bool hit = false;
      for (int n = -8; n <= 8 && !hit; ++n) hit = bs_pow(*cg.generator, n) == g;
      CHECK(hit);
    }
  }

  TEST_CASE("conjugacy equation") {
    auto x0 = solve_conjugacy(el(2, 0, 1, 0), el(2, 0, 2, 0));
    REQUIRE(x0.has_value());
    CHECK(*x0 == el(2, 1, 0, 0));
    CHECK(bs_mul(*x0, el(2, 0, 2, 0)) == bs_mul(el(2, 0, 1, 0), *x0));
    CHECK(!solve_conjugacy(el(2, 0, 1, 0), el(2, 0, 3, 0)).has_value());
    CHECK(!solve_conjugacy(el(2, 1, 0, 0), el(2, 0, 1, 0)).has_value());
    CHECK(!solve_conjugacy(el(3, 0, 1, 0), el(3, 0, -1, 0)).has_value());

    // Every actually-conjugate pair must be solved, and the solution must
    // satisfy the defining equation.
    auto grid = small_grid(3);
    for (size_t i = 0; i < grid.size(); i += 5) {
      for (size_t j = 0; j < grid.size(); j += 3) {
        GroupElement g = grid[i];
        GroupElement h = bs_mul(bs_inv(grid[j]), bs_mul(g, grid[j]));
        auto w = solve_conjugacy(g, h);
        REQUIRE(w.has_value());
        CHECK(bs_mul(*w, h) == bs_mul(g, *w));
      }
    }
    // And solve_conjugacy never invents solutions: spot-check non-conjugate
    // pairs stay unsolved.
    CHECK(!solve_conjugacy(el(3, 1, 1, 0), el(3, 2, 1, 0)).has_value());
    CHECK(!solve_conjugacy(el(3, 0, 2, 0), el(3, 0, 4, 0)).has_value());
    // (0,2) and (0,2/3) ARE conjugate: b a^2 b^-1 = a^(2/3) holds in BS(1,3).
    auto w23 = solve_conjugacy(el(3, 0, 2, 0), el(3, 0, 2, 1));
    REQUIRE(w23.has_value());
    CHECK(bs_mul(*w23, el(3, 0, 2, 1)) == bs_mul(el(3, 0, 2, 0), *w23));
  }
}
