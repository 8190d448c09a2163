#include "gfp/patterns.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "gfp/errors.hpp"

namespace gfp {

namespace {

using KeySet = std::unordered_set<PortraitKey, PortraitKeyHash>;

}  // namespace

PatternSet::PatternSet(unsigned p, unsigned pattern_depth,
                       std::vector<PortraitKey> keys)
    : p_(p), pattern_depth_(pattern_depth), patterns_(std::move(keys)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    Portrait g = portrait_from_key(p_, pattern_depth_, patterns_[i]);
    PortraitKey prefix = portrait_key(g.truncated(pattern_depth_ - 1));
    prefix_index_[prefix].push_back(static_cast<std::uint32_t>(i));
  }
}

PatternSet PatternSet::from_table(const QuotientTable& table) {
  return PatternSet(table.p(), table.depth(), table.keys());
}

PatternSet PatternSet::from_portraits(unsigned p, unsigned pattern_depth,
                                      const std::vector<Portrait>& portraits,
                                      const Budget& budget) {
  if (pattern_depth < 1) {
    fail(ErrorCode::BadParameters, "pattern depth must be at least 1");
  }
  std::vector<PortraitKey> keys;
  keys.reserve(portraits.size());
  for (const Portrait& g : portraits) {
    if (g.p() != p || g.depth() != pattern_depth) {
      fail(ErrorCode::DepthMismatch,
           "pattern portraits must share p and the pattern depth");
    }
    keys.push_back(portrait_key(g));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  if (keys.size() > budget.max_elements) {
    fail(ErrorCode::BudgetExceeded, "pattern set exceeds the element budget");
  }
  if (keys.empty() || keys[0] != 0) {
    fail(ErrorCode::NotAGroup, "pattern set must contain the trivial pattern");
  }

  // group check: grow a generating set greedily; the closure must come out
  // exactly equal to the input set
  KeySet members(keys.begin(), keys.end());
  std::vector<Portrait> gens;
  KeySet closure_set;
  std::vector<PortraitKey> closure_list;
  closure_set.insert(0);
  closure_list.push_back(0);
  auto close = [&]() {
    for (std::size_t head = 0; head < closure_list.size(); ++head) {
      Portrait g = portrait_from_key(p, pattern_depth, closure_list[head]);
      for (const Portrait& gen : gens) {
        PortraitKey key = portrait_key(compose(g, gen));
        if (closure_set.insert(key).second) {
          closure_list.push_back(key);
          if (closure_list.size() > keys.size()) {
            fail(ErrorCode::NotAGroup,
                 "pattern set is not closed under composition");
          }
        }
      }
    }
  };
  for (PortraitKey key : keys) {
    if (closure_set.count(key)) continue;
    gens.push_back(portrait_from_key(p, pattern_depth, key));
    closure_set.insert(key);
    closure_list.push_back(key);
    close();
  }
  if (closure_list.size() != keys.size()) {
    fail(ErrorCode::NotAGroup, "pattern set is not closed under composition");
  }
  return PatternSet(p, pattern_depth, std::move(keys));
}

bool PatternSet::contains(const Portrait& g) const {
  if (g.p() != p_ || g.depth() != pattern_depth_) return false;
  PortraitKey key = portrait_key(g);
  return std::binary_search(patterns_.begin(), patterns_.end(), key);
}

Portrait PatternSet::pattern(std::size_t ordinal) const {
  return portrait_from_key(p_, pattern_depth_, patterns_[ordinal]);
}

PatternSet pattern_group(const GroupSpec& spec, const Budget& budget) {
  if (spec.m < 2) {
    fail(ErrorCode::DegreeTooSmall, "pattern groups need deg f >= 2");
  }
  unsigned pattern_depth = static_cast<unsigned>(spec.m) + 2;
  return PatternSet::from_table(
      enumerate_quotient(spec, pattern_depth, budget));
}

bool window_valid(const PatternSet& P, const Portrait& g) {
  if (g.depth() < P.pattern_depth()) {
    fail(ErrorCode::TooShallow,
         "portrait is shallower than the pattern depth");
  }
  unsigned D = P.pattern_depth();
  for (unsigned level = 0; level + D <= g.depth(); ++level) {
    std::size_t count = Portrait::level_size(g.p(), level);
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (!P.contains(window(g, level, idx, D))) return false;
    }
  }
  return true;
}

mpz_class count_window_valid(const PatternSet& P, unsigned depth) {
  unsigned D = P.pattern_depth();
  unsigned p = P.p();
  if (depth < D) {
    fail(ErrorCode::TooShallow,
         "count is defined from the pattern depth upward");
  }

  // State = depth-(D-1) portrait. T_h(q) counts depth-h labelings with top
  // (D-1) levels q and all windows in P:
  //   T_{D-1}(q) = 1,
  //   T_h(q) = sum over members w extending q of prod_x T_{h-1}(w_x).
  std::unordered_map<PortraitKey, std::uint32_t, PortraitKeyHash> state_id;
  auto intern = [&](PortraitKey key) {
    auto [it, fresh] = state_id.emplace(
        key, static_cast<std::uint32_t>(state_id.size()));
    return it->second;
  };

  struct Member {
    std::uint32_t prefix;
    std::vector<std::uint32_t> children;
  };
  std::vector<Member> members;
  members.reserve(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    Portrait w = P.pattern(i);
    Member member;
    member.prefix = intern(portrait_key(w.truncated(D - 1)));
    member.children.reserve(p);
    for (unsigned x = 0; x < p; ++x) {
      member.children.push_back(intern(portrait_key(window(w, 1, x, D - 1))));
    }
    members.push_back(std::move(member));
  }

  std::vector<mpz_class> values(state_id.size(), 1);  // T_{D-1}
  for (unsigned h = D; h <= depth; ++h) {
    std::vector<mpz_class> next(state_id.size(), 0);
    for (const Member& member : members) {
      mpz_class product = 1;
      for (std::uint32_t child : member.children) product *= values[child];
      next[member.prefix] += product;
    }
    values = std::move(next);
  }

  mpz_class total = 0;
  for (const mpz_class& v : values) total += v;
  return total;
}

CrossCheckReport cross_check_membership_with(const PatternSet& P,
                                             const QuotientTable& table) {
  CrossCheckReport report;
  report.quotient_size = table.size();
  report.window_valid_count = count_window_valid(P, table.depth());

  // quotient side must embed in the window-valid side
  for (std::size_t i = 0; i < table.size(); ++i) {
    Portrait g = table.element(i);
    if (!window_valid(P, g)) report.mismatches.push_back(std::move(g));
  }
  bool contained = report.mismatches.empty();
  bool counts_equal =
      contained && report.window_valid_count == mpz_class(table.size());
  report.agree = contained && counts_equal;
  if (!contained) {
    report.note = std::to_string(report.mismatches.size()) +
                  " quotient elements violate the window constraints";
  } else if (!counts_equal) {
    report.note = "window-valid count " + report.window_valid_count.get_str() +
                  " differs from quotient size " +
                  std::to_string(table.size());
  } else {
    report.note = "sets agree (containment plus equal counts)";
  }
  return report;
}

CrossCheckReport cross_check_membership(const GroupSpec& spec, unsigned depth,
                                        const Budget& budget) {
  PatternSet P = pattern_group(spec, budget);
  QuotientTable table = enumerate_quotient(spec, depth, budget);
  return cross_check_membership_with(P, table);
}

std::vector<Portrait> full_portrait_group(unsigned p, unsigned depth,
                                          const Budget& budget) {
  std::size_t digits = Portrait::vertex_count(p, depth);
  double total = std::pow(static_cast<double>(p),
                          static_cast<double>(digits));
  if (total > static_cast<double>(budget.max_elements)) {
    fail(ErrorCode::BudgetExceeded,
         "full portrait group exceeds the element budget");
  }
  std::vector<Portrait> out;
  out.reserve(static_cast<std::size_t>(total));
  std::uint64_t count = static_cast<std::uint64_t>(total);
  for (std::uint64_t key = 0; key < count; ++key) {
    out.push_back(portrait_from_key(p, depth, key));
  }
  return out;
}

void write_pattern_file(std::ostream& out, const PatternSet& P) {
  // pattern_depth = m+2 for library-built sets
  unsigned m = P.pattern_depth() - 2;
  out << "p=" << P.p() << " m=" << m << " pattern_depth=" << P.pattern_depth()
      << " size=" << P.size() << "\n";
  for (std::size_t i = 0; i < P.size(); ++i) {
    out << P.pattern(i).digit_string() << "\n";
  }
}

PatternSet read_pattern_file(std::istream& in, const Budget& budget) {
  std::string header;
  if (!std::getline(in, header)) {
    fail(ErrorCode::BadParameters, "empty pattern file");
  }
  unsigned p = 0, pattern_depth = 0;
  std::uint64_t size = 0;
  {
    std::istringstream hs(header);
    std::string field;
    while (hs >> field) {
      auto eq = field.find('=');
      if (eq == std::string::npos) continue;
      std::string name = field.substr(0, eq);
      std::string value = field.substr(eq + 1);
      if (name == "p") p = static_cast<unsigned>(std::stoul(value));
      if (name == "pattern_depth") {
        pattern_depth = static_cast<unsigned>(std::stoul(value));
      }
      if (name == "size") size = std::stoull(value);
    }
  }
  if (p < 2 || pattern_depth < 1) {
    fail(ErrorCode::BadParameters, "pattern file header is missing p or "
                                   "pattern_depth");
  }
  if (size > budget.max_elements) {
    fail(ErrorCode::BudgetExceeded, "pattern file exceeds the element budget");
  }
  std::size_t digits = Portrait::vertex_count(p, pattern_depth);
  std::vector<Portrait> portraits;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.size() != digits) {
      fail(ErrorCode::BadParameters,
           "pattern line has wrong length: " + line);
    }
    std::vector<Fp> acts(digits);
    for (std::size_t i = 0; i < digits; ++i) {
      char c = line[i];
      unsigned v = c >= 'a' ? 10u + static_cast<unsigned>(c - 'a')
                            : static_cast<unsigned>(c - '0');
      if (v >= p) {
        fail(ErrorCode::BadParameters, "pattern digit out of range: " + line);
      }
      acts[i] = static_cast<Fp>(v);
    }
    portraits.emplace_back(p, pattern_depth, std::move(acts));
  }
  return PatternSet::from_portraits(p, pattern_depth, portraits, budget);
}

}  // namespace gfp
