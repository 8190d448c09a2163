#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "gfp/quotient.hpp"

namespace gfp {

/// The allowed-pattern group P: a set of depth-(m+2) portraits closed under
/// composition, together with a prefix index mapping each depth-(m+1)
/// truncation to the members extending it. The forbidden set is implicitly
/// the complement in the full portrait group of that depth.
class PatternSet {
 public:
  /// Builds from an explicit portrait collection; verifies the collection
  /// is a subgroup of the depth-`pattern_depth` portrait group.
  static PatternSet from_portraits(unsigned p, unsigned pattern_depth,
                                   const std::vector<Portrait>& portraits,
                                   const Budget& budget = {});

  /// Wraps an already-closed quotient table (no group check needed).
  static PatternSet from_table(const QuotientTable& table);

  unsigned p() const { return p_; }
  unsigned pattern_depth() const { return pattern_depth_; }
  std::size_t size() const { return patterns_.size(); }
  const std::vector<PortraitKey>& patterns() const { return patterns_; }

  bool contains(const Portrait& g) const;
  Portrait pattern(std::size_t ordinal) const;

  const std::unordered_map<PortraitKey, std::vector<std::uint32_t>,
                           PortraitKeyHash>&
  prefix_index() const {
    return prefix_index_;
  }

 private:
  PatternSet(unsigned p, unsigned pattern_depth,
             std::vector<PortraitKey> keys);

  unsigned p_ = 2;
  unsigned pattern_depth_ = 0;
  std::vector<PortraitKey> patterns_;  // sorted
  std::unordered_map<PortraitKey, std::vector<std::uint32_t>, PortraitKeyHash>
      prefix_index_;  // depth-(pattern_depth-1) truncation -> members
};

/// The pattern group of G: its depth-(m+2) quotient, per the
/// finitely-constrained characterization.
PatternSet pattern_group(const GroupSpec& spec, const Budget& budget = {});

/// True iff every depth-(pattern_depth) window of g lies in P.
bool window_valid(const PatternSet& P, const Portrait& g);

/// Number of depth-n portraits whose every window lies in P, by sliding-
/// window dynamic programming down the tree; cost is polynomial in |P| and
/// n, independent of the count itself.
mpz_class count_window_valid(const PatternSet& P, unsigned depth);

struct CrossCheckReport {
  bool agree = false;
  std::vector<Portrait> mismatches;  // elements on one side only
  mpz_class window_valid_count;
  std::uint64_t quotient_size = 0;
  std::string note;
};

/// Compares {window-valid depth-n portraits} against the BFS quotient at
/// depth n: containment is checked element by element, set equality follows
/// from the DP count.
CrossCheckReport cross_check_membership(const GroupSpec& spec, unsigned depth,
                                        const Budget& budget = {});
CrossCheckReport cross_check_membership_with(const PatternSet& P,
                                             const QuotientTable& table);

/// All p-adic portraits of the given depth (guarded by the budget).
std::vector<Portrait> full_portrait_group(unsigned p, unsigned depth,
                                          const Budget& budget = {});

void write_pattern_file(std::ostream& out, const PatternSet& P);
PatternSet read_pattern_file(std::istream& in, const Budget& budget = {});

}  // namespace gfp
