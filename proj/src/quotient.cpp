#include "gfp/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "gfp/errors.hpp"

namespace gfp {

namespace {

using KeySet = std::unordered_set<PortraitKey, PortraitKeyHash>;

// rough per-element footprint of the BFS structures (key + hash node)
constexpr std::uint64_t kBytesPerElement = 56;

std::int64_t checked_pow(std::int64_t base, unsigned exp,
                         const char* context) {
  std::int64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<std::int64_t>::max() / base) {
      fail(ErrorCode::BadParameters,
           std::string(context) + ": power overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

}  // namespace

QuotientTable::QuotientTable(unsigned p, unsigned depth,
                             std::vector<PortraitKey> keys,
                             std::vector<Portrait> generators)
    : p_(p), depth_(depth), keys_(std::move(keys)),
      generators_(std::move(generators)) {
  std::sort(keys_.begin(), keys_.end());
  std::uint64_t size = keys_.size();
  while (size > 1) {
    if (size % p_ != 0) {
      throw std::logic_error("closure size is not a power of p");
    }
    size /= p_;
    ++nu_;
  }
}

Portrait QuotientTable::element(std::size_t ordinal) const {
  return portrait_from_key(p_, depth_, keys_[ordinal]);
}

std::optional<std::uint32_t> QuotientTable::index_of_key(
    PortraitKey key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys_.begin());
}

std::optional<std::uint32_t> QuotientTable::index_of(const Portrait& g) const {
  if (g.p() != p_ || g.depth() != depth_) return std::nullopt;
  return index_of_key(portrait_key(g));
}

const std::vector<std::vector<std::uint32_t>>& QuotientTable::generator_moves()
    const {
  if (!moves_.empty() || generators_.empty()) return moves_;
  moves_.resize(generators_.size());
  for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
    moves_[gi].resize(size());
    for (std::size_t i = 0; i < size(); ++i) {
      Portrait moved = compose(generators_[gi], element(i));
      auto idx = index_of(moved);
      if (!idx) throw std::logic_error("table not closed under generators");
      moves_[gi][i] = *idx;
    }
  }
  return moves_;
}

QuotientTable enumerate_closure(unsigned p, std::vector<Portrait> generators,
                                unsigned depth, const Budget& budget) {
  if (depth < 1) fail(ErrorCode::BadParameters, "depth must be at least 1");
  if (!portrait_key_fits(p, depth)) {
    fail(ErrorCode::BudgetExceeded,
         "depth " + std::to_string(depth) + " exceeds 128-bit keys for p = " +
             std::to_string(p));
  }
  for (const Portrait& g : generators) {
    if (g.p() != p || g.depth() != depth) {
      fail(ErrorCode::DepthMismatch, "generator depth mismatch");
    }
  }

  KeySet visited;
  std::vector<PortraitKey> discovered;
  visited.insert(0);
  discovered.push_back(0);
  for (std::size_t head = 0; head < discovered.size(); ++head) {
    Portrait g = portrait_from_key(p, depth, discovered[head]);
    for (const Portrait& gen : generators) {
      PortraitKey key = portrait_key(compose(gen, g));
      if (!visited.insert(key).second) continue;
      discovered.push_back(key);
      if (discovered.size() > budget.max_elements ||
          discovered.size() * kBytesPerElement > budget.max_bytes) {
        fail(ErrorCode::BudgetExceeded,
             "enumeration budget exceeded at " +
                 std::to_string(discovered.size()) + " elements (depth " +
                 std::to_string(depth) + ")");
      }
    }
  }
  return QuotientTable(p, depth, std::move(discovered), std::move(generators));
}

QuotientTable enumerate_quotient(const GroupSpec& spec, unsigned depth,
                                 const Budget& budget) {
  return enumerate_closure(spec.p, generator_portraits(spec, depth), depth,
                           budget);
}

void write_quotient(std::ostream& out, const QuotientTable& table,
                    const GroupSpec& spec) {
  out << "p=" << spec.p << " f=" << spec.coeffs_string()
      << " depth=" << table.depth() << " size=" << spec.p << "^" << table.nu()
      << "\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.element(i).digit_string() << "\n";
  }
}

IndexSequence index_sequence(const GroupSpec& spec, unsigned n_max,
                             const Budget& budget) {
  IndexSequence seq;
  seq.p = spec.p;
  for (unsigned n = 1; n <= n_max; ++n) {
    try {
      seq.nus.push_back(enumerate_quotient(spec, n, budget).nu());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BudgetExceeded) break;  // prefix computed
      throw;
    }
  }
  // sanity of the filtration
  for (std::size_t i = 0; i + 1 < seq.nus.size(); ++i) {
    if (seq.nus[i] >= seq.nus[i + 1] ||
        seq.nus[i + 1] > spec.p * seq.nus[i] + 1) {
      throw std::logic_error("index sequence violates filtration bounds");
    }
  }
  if (!seq.nus.empty() && seq.nus[0] != 1) {
    throw std::logic_error("[G:G_1] != p");
  }
  return seq;
}

TSequence t_sequence(const IndexSequence& nus, const GroupSpec& spec) {
  unsigned s = static_cast<unsigned>(spec.m) + 1;
  if (nus.nus.size() < s + 1) {
    fail(ErrorCode::InsufficientDepth,
         "need nu up to depth " + std::to_string(s + 1) +
             " to extract t, have " + std::to_string(nus.nus.size()));
  }
  TSequence out;
  out.first_n = s;
  for (std::size_t n = s; n + 1 <= nus.nus.size(); ++n) {
    long long t = static_cast<long long>(spec.p) * nus.nus[n - 1] -
                  nus.nus[n] + 1;
    out.values.push_back(t);
  }
  out.stabilized = out.values.size() >= 2 &&
                   out.values[out.values.size() - 2] == out.values.back();
  return out;
}

DimensionReport hausdorff_dimension(const GroupSpec& spec, DimensionMode mode,
                                    const Budget& budget,
                                    unsigned max_measure_depth) {
  if (spec.m < 2) {
    fail(ErrorCode::DegreeTooSmall,
         "the dimension theorem needs deg f >= 2");
  }
  unsigned s = static_cast<unsigned>(spec.m) + 1;
  DimensionReport report;
  report.s = s;
  report.requested = mode;

  std::int64_t p_pow_s = checked_pow(spec.p, s, "p^s");
  std::int64_t theoretical_r = p_pow_s - 1;
  std::int64_t theoretical_t = spec.p == 2 ? 3 : spec.p;

  if (mode == DimensionMode::Theoretical) {
    report.r = theoretical_r;
    report.t = theoretical_t;
  } else {
    // measure nu_s (for r) and nu_{s+1} (for t); cite what the budget or
    // the depth cap cannot reach
    unsigned measure_depth = s + 1;
    if (max_measure_depth != 0 && max_measure_depth < measure_depth) {
      measure_depth = max_measure_depth;
    }
    IndexSequence nus = index_sequence(spec, measure_depth, budget);
    if (nus.nus.size() >= s) {
      report.r = static_cast<std::int64_t>(spec.p - 1) * nus.nus[s - 1];
      report.r_measured = true;
    } else {
      report.r = theoretical_r;
    }
    if (nus.nus.size() >= s + 1) {
      report.t = static_cast<std::int64_t>(spec.p) * nus.nus[s - 1] -
                 nus.nus[s] + 1;
      report.t_measured = true;
    } else {
      report.t = theoretical_t;
    }
    if (mode == DimensionMode::Empirical &&
        !(report.r_measured && report.t_measured)) {
      report.note = "enumeration limit reached; unmeasured parameters cite "
                    "the closed-form values (hybrid fallback)";
    }
  }

  report.dimension = Rational(report.r - report.t + 1, p_pow_s);
  Rational closed_form =
      spec.p == 2
          ? Rational(1) - Rational(3, p_pow_s)
          : Rational(1) - Rational(1, checked_pow(spec.p, s - 1, "p^m"));
  report.matches_closed_form = report.dimension == closed_form;
  return report;
}

GeneralDimensionResult general_dimension(long long k, long long q,
                                         double epsilon, double r, double t,
                                         long long s) {
  if (k < 2 || q < 2 || s < 1) {
    fail(ErrorCode::BadParameters, "need k >= 2, q >= 2, s >= 1");
  }
  double log_ks = static_cast<double>(s) * std::log(static_cast<double>(k));
  if (log_ks > 700.0) {
    fail(ErrorCode::BadParameters, "k^s overflows double precision");
  }
  double ks = std::exp(log_ks);
  GeneralDimensionResult out;
  out.dimension = (r - t + epsilon) / ks;
  out.index_exponent = [=](long long n) {
    double lead = (r - t + epsilon) / static_cast<double>(k - 1);
    double tail = (t - epsilon) / static_cast<double>(k - 1);
    return lead * std::pow(static_cast<double>(k),
                           static_cast<double>(n - s)) +
           tail;
  };
  return out;
}

namespace {

// subgroup closure inside the table group; seeds on `start` and multiplies
// on the right by `sub_gens` until stable
void close_subgroup(KeySet& set, std::vector<PortraitKey>& list,
                    const std::vector<Portrait>& sub_gens, unsigned p,
                    unsigned depth) {
  for (std::size_t head = 0; head < list.size(); ++head) {
    Portrait s = portrait_from_key(p, depth, list[head]);
    for (const Portrait& g : sub_gens) {
      PortraitKey key = portrait_key(compose(s, g));
      if (set.insert(key).second) list.push_back(key);
    }
  }
}

KeySet subgroup_closure_set(const QuotientTable& table,
                            std::vector<Portrait> sub_gens,
                            bool normal_closure) {
  unsigned p = table.p();
  unsigned depth = table.depth();
  KeySet set;
  std::vector<PortraitKey> list;
  set.insert(0);
  list.push_back(0);
  close_subgroup(set, list, sub_gens, p, depth);

  while (normal_closure) {
    std::vector<Portrait> added;
    for (PortraitKey key : list) {
      Portrait s = portrait_from_key(p, depth, key);
      for (const Portrait& g : table.generators()) {
        Portrait conj = compose(compose(inverse(g), s), g);
        PortraitKey ck = portrait_key(conj);
        if (!set.count(ck)) added.push_back(std::move(conj));
      }
    }
    if (added.empty()) break;
    for (auto& g : added) {
      PortraitKey key = portrait_key(g);
      if (set.insert(key).second) list.push_back(key);
      sub_gens.push_back(std::move(g));
    }
    close_subgroup(set, list, sub_gens, p, depth);
  }
  return set;
}

}  // namespace

SubgroupIndexResult subgroup_index_in(const QuotientTable& table,
                                      const GroupSpec& spec,
                                      const std::vector<Word>& generators,
                                      bool normal_closure) {
  std::vector<Portrait> sub_gens;
  sub_gens.reserve(generators.size());
  for (const Word& w : generators) {
    Portrait g = word_portrait(spec, w, table.depth());
    if (!table.contains(g)) {
      fail(ErrorCode::BadParameters,
           "generator word does not lie in the quotient: " + format_word(w));
    }
    sub_gens.push_back(std::move(g));
  }
  KeySet closure = subgroup_closure_set(table, std::move(sub_gens),
                                        normal_closure);
  SubgroupIndexResult out;
  out.group_size = table.size();
  out.subgroup_size = closure.size();
  if (out.group_size % out.subgroup_size != 0) {
    throw std::logic_error("subgroup size does not divide group size");
  }
  out.index = out.group_size / out.subgroup_size;
  return out;
}

SubgroupIndexResult subgroup_index(const GroupSpec& spec, unsigned depth,
                                   const std::vector<Word>& generators,
                                   bool normal_closure, const Budget& budget) {
  QuotientTable table = enumerate_quotient(spec, depth, budget);
  return subgroup_index_in(table, spec, generators, normal_closure);
}

std::vector<Word> commutator_generators(const GroupSpec& spec) {
  std::vector<Word> gens;
  gens.push_back(word_a(spec));
  for (std::size_t i = 0; i < spec.m; ++i) gens.push_back(word_d(spec, i));
  std::vector<Word> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Word c = commutator_word(spec, gens[i], gens[j]);
      if (!c.empty()) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Word> k_subgroup_generators(const GroupSpec& spec) {
  if (spec.p != 2) {
    fail(ErrorCode::BadParameters, "the K subgroup is defined for p = 2 only");
  }
  std::vector<Word> out;
  for (const FieldVector& b : kernel_subspace(spec, 1)) {
    out.push_back(commutator_word(spec, word_a(spec), word_b(spec, b)));
  }
  return out;
}

CheckReport verify_branch_generators(const GroupSpec& spec, unsigned depth) {
  if (spec.m < 2) {
    fail(ErrorCode::DegreeTooSmall, "branch generators need deg f >= 2");
  }
  if (depth < 4) {
    fail(ErrorCode::InsufficientDepth,
         "branch generator identities are checked at depth >= 4");
  }
  unsigned p = spec.p;

  // candidates b with omega(b) = 1
  std::vector<FieldVector> bs;
  std::size_t total = 1;
  for (std::size_t i = 0; i < spec.m; ++i) total *= p;
  for (std::size_t idx = 0; idx < total; ++idx) {
    FieldVector v(spec.m);
    std::size_t rem = idx;
    for (std::size_t i = 0; i < spec.m; ++i) {
      v[i] = static_cast<Fp>(rem % p);
      rem /= p;
    }
    if (omega_of(spec, v) == 1) bs.push_back(std::move(v));
  }

  // b' ranges over B for odd p and over B_1 for p = 2
  std::vector<FieldVector> b_primes;
  if (p == 2) {
    b_primes = span_vectors(kernel_subspace(spec, 1), p, spec.m);
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) {
      FieldVector v(spec.m);
      std::size_t rem = idx;
      for (std::size_t i = 0; i < spec.m; ++i) {
        v[i] = static_cast<Fp>(rem % p);
        rem /= p;
      }
      b_primes.push_back(std::move(v));
    }
  }

  CheckReport report;
  for (const FieldVector& b : bs) {
    Word b_conj = conjugate_word(spec, word_b(spec, b), word_a(spec));
    for (const FieldVector& bp : b_primes) {
      Word lhs_word = commutator_word(
          spec, b_conj, word_b(spec, spec.rho_inv.apply(bp)));
      Portrait lhs = word_portrait(spec, lhs_word, depth);

      Word inner = commutator_word(spec, word_a(spec), word_b(spec, bp));
      std::vector<Portrait> sections(p, Portrait(p, depth - 1));
      sections[p - 1] = word_portrait(spec, inner, depth - 1);
      Portrait rhs = assemble(p, 0, sections);

      ++report.checked;
      if (lhs != rhs) {
        report.pass = false;
        report.detail = "identity fails for b = " + vec_to_string(b) +
                        ", b' = " + vec_to_string(bp);
        return report;
      }
    }
  }
  report.pass = true;
  report.detail = std::to_string(report.checked) + " identities verified";
  return report;
}

std::vector<std::vector<Portrait>> branch_tuple_universe(
    const QuotientTable& table_d, unsigned n) {
  unsigned p = table_d.p();
  std::vector<Portrait> stab;  // elements trivial through level n
  for (std::size_t i = 0; i < table_d.size(); ++i) {
    Portrait g = table_d.element(i);
    if (g.truncated(n).trivial()) stab.push_back(std::move(g));
  }
  double count = std::pow(static_cast<double>(stab.size()),
                          static_cast<double>(p));
  if (count > 2e7) {
    fail(ErrorCode::BudgetExceeded,
         "tuple universe too large: " + std::to_string(stab.size()) + "^" +
             std::to_string(p));
  }
  std::vector<std::vector<Portrait>> tuples;
  std::vector<std::size_t> pick(p, 0);
  while (true) {
    std::vector<Portrait> tuple;
    tuple.reserve(p);
    for (unsigned x = 0; x < p; ++x) tuple.push_back(stab[pick[x]]);
    tuples.push_back(std::move(tuple));
    unsigned pos = 0;
    while (pos < p && ++pick[pos] == stab.size()) {
      pick[pos] = 0;
      ++pos;
    }
    if (pos == p) break;
  }
  return tuples;
}

bool tuple_in_image(const QuotientTable& table_d1,
                    const std::vector<Portrait>& sections) {
  Portrait candidate = assemble(table_d1.p(), 0, sections);
  return table_d1.contains(candidate);
}

CheckReport branching_check_with(const QuotientTable& table_d1,
                                 const QuotientTable& table_d, unsigned n) {
  if (table_d1.depth() != table_d.depth() + 1) {
    fail(ErrorCode::BadParameters, "tables must be at consecutive depths");
  }
  if (n >= table_d.depth()) {
    fail(ErrorCode::BadParameters, "need d > n");
  }
  CheckReport report;
  report.pass = true;
  for (const auto& tuple : branch_tuple_universe(table_d, n)) {
    ++report.checked;
    if (!tuple_in_image(table_d1, tuple)) {
      report.pass = false;
      report.detail = "tuple #" + std::to_string(report.checked) +
                      " is not a section tuple of the deeper quotient";
      return report;
    }
  }
  report.detail = std::to_string(report.checked) + " tuples checked";
  return report;
}

CheckReport branching_check(const GroupSpec& spec, unsigned n, unsigned d,
                            const Budget& budget) {
  unsigned s = static_cast<unsigned>(spec.m) + 1;
  if (spec.m < 2) {
    fail(ErrorCode::DegreeTooSmall, "branching needs deg f >= 2");
  }
  if (n < s) {
    fail(ErrorCode::BadParameters,
         "branching over the stabilizer starts at n = m+1");
  }
  QuotientTable table_d1 = enumerate_quotient(spec, d + 1, budget);
  QuotientTable table_d = enumerate_quotient(spec, d, budget);
  return branching_check_with(table_d1, table_d, n);
}

CheckReport self_replicating_check_with(const QuotientTable& table_n1,
                                        const QuotientTable& table_n) {
  if (table_n1.depth() != table_n.depth() + 1) {
    fail(ErrorCode::BadParameters, "tables must be at consecutive depths");
  }
  unsigned p = table_n1.p();
  unsigned n = table_n.depth();
  CheckReport report;

  for (unsigned x = 0; x < p; ++x) {
    KeySet sections;
    for (std::size_t i = 0; i < table_n1.size(); ++i) {
      Portrait g = table_n1.element(i);
      if (g.activities()[0] != 0) continue;  // must fix the vertex
      sections.insert(portrait_key(window(g, 1, x, n)));
    }
    if (sections.size() != table_n.size()) {
      report.pass = false;
      report.detail = "sections at vertex " + std::to_string(x) + " give " +
                      std::to_string(sections.size()) + " of " +
                      std::to_string(table_n.size()) + " elements";
      return report;
    }
    for (PortraitKey key : sections) {
      if (!table_n.index_of_key(key)) {
        report.pass = false;
        report.detail = "section at vertex " + std::to_string(x) +
                        " escapes the group";
        return report;
      }
    }
    report.checked += sections.size();
  }

  // spherical transitivity at level n: the generator action must move the
  // leftmost vertex onto the whole level
  std::size_t level_count = Portrait::level_size(p, n);
  std::vector<bool> seen(level_count, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Portrait& gen : table_n.generators()) {
      std::size_t img = gen.vertex_image(n, queue[head]);
      if (!seen[img]) {
        seen[img] = true;
        queue.push_back(img);
      }
    }
  }
  if (queue.size() != level_count) {
    report.pass = false;
    report.detail = "level-" + std::to_string(n) + " orbit has size " +
                    std::to_string(queue.size()) + " of " +
                    std::to_string(level_count);
    return report;
  }

  report.pass = true;
  report.detail = "all first-level sections project onto G/G_" +
                  std::to_string(n) + "; level orbit is full";
  return report;
}

CheckReport self_replicating_check(const GroupSpec& spec, unsigned n,
                                   const Budget& budget) {
  QuotientTable table_n1 = enumerate_quotient(spec, n + 1, budget);
  QuotientTable table_n = enumerate_quotient(spec, n, budget);
  return self_replicating_check_with(table_n1, table_n);
}

CheckReport abelianization_check_with(const QuotientTable& table,
                                      const GroupSpec& spec) {
  unsigned s = static_cast<unsigned>(spec.m) + 1;
  if (table.depth() < s) {
    fail(ErrorCode::InsufficientDepth,
         "the stabilizer enters G' only from depth m+1 = " +
             std::to_string(s));
  }
  CheckReport report;
  KeySet commutator = subgroup_closure_set(
      table,
      [&] {
        std::vector<Portrait> gens;
        for (const Word& w : commutator_generators(spec)) {
          gens.push_back(word_portrait(spec, w, table.depth()));
        }
        return gens;
      }(),
      true);

  std::uint64_t expected_index = 1;
  for (unsigned i = 0; i < s; ++i) expected_index *= spec.p;
  std::uint64_t index = table.size() / commutator.size();
  if (index != expected_index) {
    report.pass = false;
    report.detail = "[G:G'] = " + std::to_string(index) + ", expected " +
                    std::to_string(expected_index);
    return report;
  }

  // each standard generator must have order exactly p modulo G'
  for (const Portrait& gen : table.generators()) {
    Portrait h = gen;
    unsigned order = 1;
    while (!commutator.count(portrait_key(h)) && order <= spec.p) {
      h = compose(h, gen);
      ++order;
    }
    if (order != spec.p) {
      report.pass = false;
      report.detail = "generator has order " + std::to_string(order) +
                      " in the abelianization, expected " +
                      std::to_string(spec.p);
      return report;
    }
  }
  report.pass = true;
  report.checked = commutator.size();
  report.detail = "G/G' = A x B certified at depth " +
                  std::to_string(table.depth());
  return report;
}

CheckReport abelianization_check(const GroupSpec& spec, unsigned n,
                                 const Budget& budget) {
  QuotientTable table = enumerate_quotient(spec, n, budget);
  return abelianization_check_with(table, spec);
}

CheckReport full_wreath_check_with(const QuotientTable& table) {
  std::uint64_t expected = 0;
  std::uint64_t level = 1;
  for (unsigned l = 0; l < table.depth(); ++l) {
    expected += level;
    level *= table.p();
  }
  CheckReport report;
  report.pass = table.nu() == expected;
  report.checked = table.size();
  report.detail = "nu_" + std::to_string(table.depth()) + " = " +
                  std::to_string(table.nu()) + ", full wreath needs " +
                  std::to_string(expected);
  return report;
}

CheckReport full_wreath_check(const GroupSpec& spec, unsigned depth,
                              const Budget& budget) {
  QuotientTable table = enumerate_quotient(spec, depth, budget);
  return full_wreath_check_with(table);
}

}  // namespace gfp
