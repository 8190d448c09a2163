#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gfp/errors.hpp"
#include "gfp/quotient.hpp"
#include "gfp/word_ops.hpp"

using namespace gfp;

namespace {

GroupSpec grigorchuk() { return make_spec(2, {1, 1, 1}); }

}  // namespace

TEST_CASE("small quotient sizes") {
  GroupSpec g = grigorchuk();
  CHECK(enumerate_quotient(g, 1).size() == 2);
  CHECK(enumerate_quotient(g, 2).size() == 8);
  CHECK(enumerate_quotient(g, 3).size() == 128);  // full wreath at m+1
  CHECK(enumerate_quotient(g, 4).size() == 4096);

  GroupSpec g3 = make_spec(3, {2, 2, 1});
  CHECK(enumerate_quotient(g3, 1).size() == 3);
  CHECK(enumerate_quotient(g3, 2).size() == 81);  // quotient of full wreath

  GroupSpec cubic = make_spec(2, {1, 1, 0, 1});
  CHECK(enumerate_quotient(cubic, 4).nu() == 15);  // full wreath at m+1 = 4
}

TEST_CASE("quotient tables are canonical and closed") {
  GroupSpec g = grigorchuk();
  QuotientTable table = enumerate_quotient(g, 3);
  CHECK(table.nu() == 7);
  CHECK(std::is_sorted(table.keys().begin(), table.keys().end()));
  CHECK(table.element(0).trivial());

  const auto& moves = table.generator_moves();
  REQUIRE(moves.size() == 3);
  for (const auto& perm : moves) {
    std::vector<bool> hit(table.size(), false);
    for (std::uint32_t to : perm) {
      CHECK_FALSE(hit[to]);
      hit[to] = true;
    }
  }
  // left moves match explicit composition
  Portrait a = table.generators()[0];
  CHECK(table.element(moves[0][0]) == a);
}

TEST_CASE("enumeration budget is a hard stop") {
  GroupSpec g = grigorchuk();
  Budget tiny;
  tiny.max_elements = 100;
  try {
    enumerate_quotient(g, 4, tiny);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("quotient export format") {
  GroupSpec g = grigorchuk();
  QuotientTable table = enumerate_quotient(g, 2);
  std::ostringstream out;
  write_quotient(out, table, g);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "p=2 f=1,1,1 depth=2 size=2^3");
  std::string prev, line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    CHECK(line.size() == 3);
    if (count) CHECK(prev < line);
    prev = line;
    ++count;
  }
  CHECK(count == 8);
}

TEST_CASE("index sequence for the first Grigorchuk group, depths 1..4") {
  GroupSpec g = grigorchuk();
  IndexSequence seq = index_sequence(g, 4);
  CHECK(seq.nus == std::vector<unsigned>{1, 3, 7, 12});
}

TEST_CASE("t extraction from the index sequence") {
  GroupSpec g = grigorchuk();
  IndexSequence seq;
  seq.p = 2;
  seq.nus = {1, 3, 7, 12, 22};
  TSequence t = t_sequence(seq, g);
  CHECK(t.first_n == 3);
  CHECK(t.values == std::vector<long long>{3, 3});
  CHECK(t.stabilized);

  // a full wreath index sequence has t = 0 everywhere
  IndexSequence full;
  full.p = 2;
  full.nus = {1, 3, 7, 15, 31};
  TSequence t0 = t_sequence(full, g);
  CHECK(t0.values == std::vector<long long>{0, 0});

  IndexSequence shallow;
  shallow.p = 2;
  shallow.nus = {1, 3};
  CHECK_THROWS_AS(t_sequence(shallow, g), Error);
}

TEST_CASE("Hausdorff dimension, empirical and theoretical") {
  GroupSpec g = grigorchuk();
  DimensionReport emp = hausdorff_dimension(g, DimensionMode::Empirical);
  CHECK(emp.dimension == Rational(5, 8));
  CHECK(emp.r == 7);
  CHECK(emp.t == 3);
  CHECK(emp.r_measured);
  CHECK(emp.t_measured);
  CHECK(emp.matches_closed_form);

  DimensionReport theo = hausdorff_dimension(g, DimensionMode::Theoretical);
  CHECK(theo.dimension == Rational(5, 8));
  CHECK(emp.dimension == theo.dimension);

  DimensionReport g32 =
      hausdorff_dimension(make_spec(3, {2, 2, 1}), DimensionMode::Theoretical);
  CHECK(g32.dimension == Rational(8, 9));

  DimensionReport cubic = hausdorff_dimension(make_spec(2, {1, 1, 0, 1}),
                                              DimensionMode::Theoretical);
  CHECK(cubic.dimension == Rational(13, 16));

  CHECK_THROWS_AS(
      hausdorff_dimension(make_spec(2, {1, 1}), DimensionMode::Theoretical),
      Error);
}

TEST_CASE("general dimension formula") {
  // Hanoi: k = 3, q = 6, eps = 1, r = 2, t = log_6(2), s = 1
  double t = std::log(2.0) / std::log(6.0);
  GeneralDimensionResult hanoi = general_dimension(3, 6, 1.0, 2.0, t, 1);
  double expected = 1.0 - t / 3.0;
  CHECK(std::abs(hanoi.dimension - expected) < 1e-12);
  CHECK(hanoi.dimension > 0.8710);
  CHECK(hanoi.dimension < 0.8711);
  // the index curve starts at [H:H_s] = q^(r/(k-1))
  CHECK(std::abs(hanoi.index_exponent(1) - 1.0) < 1e-12);

  CHECK(general_dimension(3, 6, 1.0, 2.0, 3.0, 1).dimension == 0.0);

  // p-adic substitution reproduces the rational formula
  GeneralDimensionResult padic =
      general_dimension(2, 2, 1.0, 7.0, 3.0, 3);
  CHECK(std::abs(padic.dimension - 5.0 / 8.0) < 1e-12);

  CHECK_THROWS_AS(general_dimension(1, 6, 1.0, 2.0, 1.0, 1), Error);
}

TEST_CASE("subgroup indices at depth m+2") {
  GroupSpec g = grigorchuk();
  SubgroupIndexResult commutator =
      subgroup_index(g, 4, commutator_generators(g), true);
  CHECK(commutator.index == 8);  // [G:G'] = 2^(m+1)

  SubgroupIndexResult k =
      subgroup_index(g, 4, k_subgroup_generators(g), true);
  CHECK(k.index == 16);  // [G:K] = 2^(m+2)

  CHECK_THROWS_AS(k_subgroup_generators(make_spec(3, {2, 2, 1})), Error);
}

TEST_CASE("commutator index is stable from depth m+1 on") {
  GroupSpec g = grigorchuk();
  std::vector<Word> gens = commutator_generators(g);
  CHECK(subgroup_index(g, 3, gens, true).index == 8);
  CHECK(subgroup_index(g, 4, gens, true).index == 8);
  CHECK(subgroup_index(g, 5, gens, true).index == 8);
}

TEST_CASE("branch generator identities") {
  CHECK(verify_branch_generators(grigorchuk(), 6).pass);
  CHECK(verify_branch_generators(make_spec(3, {2, 2, 1}), 5).pass);
  CHECK(verify_branch_generators(make_spec(5, {1, 1, 1}), 4).pass);
  CHECK_THROWS_AS(verify_branch_generators(make_spec(2, {1, 1}), 6), Error);
  CHECK_THROWS_AS(verify_branch_generators(grigorchuk(), 3), Error);
}

TEST_CASE("self-replication at small depth") {
  GroupSpec g = grigorchuk();
  CHECK(self_replicating_check(g, 3).pass);

  // the group generated by a alone is not self-replicating
  QuotientTable closure2 =
      enumerate_closure(2, {a_portrait(2, 2, 1)}, 2);
  QuotientTable closure1 =
      enumerate_closure(2, {a_portrait(2, 1, 1)}, 1);
  CHECK_FALSE(self_replicating_check_with(closure2, closure1).pass);
}

TEST_CASE("abelianization certificate") {
  GroupSpec g = grigorchuk();
  CHECK(abelianization_check(g, 4).pass);
  CHECK_THROWS_AS(abelianization_check(g, 1), Error);
}

TEST_CASE("full wreath quotients at level m+1") {
  CHECK(full_wreath_check(grigorchuk(), 3).pass);
  CHECK(full_wreath_check(make_spec(2, {1, 1, 0, 1}), 4).pass);
  // beyond m+1 the quotient is properly smaller
  CHECK_FALSE(full_wreath_check(grigorchuk(), 4).pass);
}
