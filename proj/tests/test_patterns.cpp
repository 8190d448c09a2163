#include <doctest.h>

#include <sstream>

#include "gfp/errors.hpp"
#include "gfp/patterns.hpp"
#include "gfp/word_ops.hpp"

using namespace gfp;

namespace {

GroupSpec grigorchuk() { return make_spec(2, {1, 1, 1}); }

}  // namespace

TEST_CASE("pattern group of the first Grigorchuk group") {
  GroupSpec g = grigorchuk();
  PatternSet P = pattern_group(g);
  CHECK(P.pattern_depth() == 4);
  CHECK(P.size() == 4096);  // inside the full group of size 2^15

  // the zero pattern is a member, and P is closed under compose/inverse
  CHECK(P.contains(Portrait(2, 4)));
  for (std::size_t i = 0; i < 64; ++i) {
    Portrait x = P.pattern(i * 64 % P.size());
    CHECK(P.contains(inverse(x)));
    CHECK(P.contains(compose(x, P.pattern(i))));
  }

  CHECK_THROWS_AS(pattern_group(make_spec(2, {1, 1})), Error);
}

TEST_CASE("pattern group construction rejects non-groups") {
  GroupSpec g = grigorchuk();
  PatternSet P = pattern_group(g);
  std::vector<Portrait> members;
  for (std::size_t i = 0; i < P.size(); ++i) members.push_back(P.pattern(i));

  // rebuilding from the full member list succeeds
  PatternSet rebuilt = PatternSet::from_portraits(2, 4, members);
  CHECK(rebuilt.size() == P.size());

  // dropping a non-identity member breaks closure
  members.pop_back();
  CHECK_THROWS_AS(PatternSet::from_portraits(2, 4, members), Error);
}

TEST_CASE("window validity") {
  GroupSpec g = grigorchuk();
  PatternSet P = pattern_group(g);

  CHECK(window_valid(P, word_portrait(g, parse_word(g, "a"), 4)));
  CHECK(window_valid(P, word_portrait(g, parse_word(g, "a d0 a d1"), 6)));

  // flip one activity of d_0's portrait: vertex "11" at level 2
  Portrait d0 = b_portrait(g, g.standard_basis_vector(0), 4);
  d0.set_activity(2, 3, 1);
  CHECK_FALSE(window_valid(P, d0));

  CHECK_THROWS_AS(window_valid(P, Portrait(2, 3)), Error);
}

TEST_CASE("quotient members are window-valid") {
  GroupSpec g = grigorchuk();
  PatternSet P = pattern_group(g);
  QuotientTable table = enumerate_quotient(g, 4);
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(window_valid(P, table.element(i)));
  }
}

TEST_CASE("window-valid counts by dynamic programming") {
  GroupSpec g = grigorchuk();
  PatternSet P = pattern_group(g);
  CHECK(count_window_valid(P, 4) == mpz_class(1) << 12);
  CHECK(count_window_valid(P, 5) == mpz_class(1) << 22);
  CHECK(count_window_valid(P, 6) == mpz_class(1) << 42);
  CHECK_THROWS_AS(count_window_valid(P, 3), Error);
}

TEST_CASE("count monotonicity in depth") {
  GroupSpec g = grigorchuk();
  PatternSet P = pattern_group(g);
  // log_p count(n+1) <= p * log_p count(n) + 1
  mpz_class prev = count_window_valid(P, 4);
  for (unsigned n = 5; n <= 8; ++n) {
    mpz_class next = count_window_valid(P, n);
    CHECK(next >= prev);
    CHECK(next <= 2 * prev * prev);
    prev = next;
  }
}

TEST_CASE("cross-check against the quotient") {
  GroupSpec g = grigorchuk();
  PatternSet P = pattern_group(g);

  QuotientTable table4 = enumerate_quotient(g, 4);
  CrossCheckReport at4 = cross_check_membership_with(P, table4);
  CHECK(at4.agree);
  CHECK(at4.mismatches.empty());

  // negative control: the full pattern group accepts too much
  PatternSet full = PatternSet::from_portraits(
      2, 4, full_portrait_group(2, 4));
  CHECK(full.size() == 32768);
  CrossCheckReport control = cross_check_membership_with(full, table4);
  CHECK_FALSE(control.agree);
  CHECK(control.window_valid_count == 32768);
  CHECK(control.quotient_size == 4096);
}

TEST_CASE("pattern file round-trip") {
  GroupSpec g = grigorchuk();
  PatternSet P = pattern_group(g);
  std::ostringstream out;
  write_pattern_file(out, P);

  std::istringstream header_in(out.str());
  std::string header;
  std::getline(header_in, header);
  CHECK(header == "p=2 m=2 pattern_depth=4 size=4096");

  std::istringstream in(out.str());
  PatternSet back = read_pattern_file(in);
  CHECK(back.size() == P.size());
  CHECK(back.pattern_depth() == P.pattern_depth());
  CHECK(back.patterns() == P.patterns());
}
