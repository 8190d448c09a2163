#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gfp/portrait.hpp"
#include "gfp/rational.hpp"
#include "gfp/word.hpp"

namespace gfp {

struct Budget {
  std::uint64_t max_elements = 8'000'000;
  std::uint64_t max_bytes = std::uint64_t{4} << 30;
};

/// The congruence quotient G/G_n as a canonically ordered table of depth-n
/// portraits. Ordinal 0 is the identity; keys are sorted lexicographically
/// on activity strings, so the table is a pure function of (generators, n).
class QuotientTable {
 public:
  QuotientTable(unsigned p, unsigned depth, std::vector<PortraitKey> keys,
                std::vector<Portrait> generators);

  unsigned p() const { return p_; }
  unsigned depth() const { return depth_; }
  std::size_t size() const { return keys_.size(); }
  unsigned nu() const { return nu_; }  // size = p^nu

  const std::vector<PortraitKey>& keys() const { return keys_; }
  const std::vector<Portrait>& generators() const { return generators_; }

  Portrait element(std::size_t ordinal) const;
  std::optional<std::uint32_t> index_of(const Portrait& g) const;
  std::optional<std::uint32_t> index_of_key(PortraitKey key) const;
  bool contains(const Portrait& g) const { return index_of(g).has_value(); }

  /// Left-multiplication permutations, one per generator; computed on first
  /// use and cached.
  const std::vector<std::vector<std::uint32_t>>& generator_moves() const;

 private:
  unsigned p_;
  unsigned depth_;
  unsigned nu_ = 0;
  std::vector<PortraitKey> keys_;
  std::vector<Portrait> generators_;
  mutable std::vector<std::vector<std::uint32_t>> moves_;
};

/// Breadth-first closure of arbitrary generator portraits at their depth.
QuotientTable enumerate_closure(unsigned p, std::vector<Portrait> generators,
                                unsigned depth, const Budget& budget = {});

/// Closure of the standard generators {a, d_0..d_{m-1}} at depth n.
QuotientTable enumerate_quotient(const GroupSpec& spec, unsigned depth,
                                 const Budget& budget = {});

void write_quotient(std::ostream& out, const QuotientTable& table,
                    const GroupSpec& spec);

struct IndexSequence {
  unsigned p = 2;
  std::vector<unsigned> nus;  // nus[n-1] = nu_n, [G:G_n] = p^nu_n
};

IndexSequence index_sequence(const GroupSpec& spec, unsigned n_max,
                             const Budget& budget = {});

struct TSequence {
  unsigned first_n = 0;  // t values start at n = first_n
  std::vector<long long> values;  // t_n = p*nu_n - nu_{n+1} + 1
  bool stabilized = false;  // consecutive values agree somewhere
};

/// Product-index exponents t_n for n >= s = m+1, from the index sequence
/// alone: |G_1/G_{n+1}| = |G/G_{n+1}|/p and psi is injective, so
/// t_n = p*nu_n - nu_{n+1} + 1 inverts the index recursion.
TSequence t_sequence(const IndexSequence& nus, const GroupSpec& spec);

enum class DimensionMode { Empirical, Theoretical, Hybrid };

struct DimensionReport {
  unsigned s = 0;       // branching level m+1
  std::int64_t r = 0;   // [G:G_s] = p^(r/(p-1))
  std::int64_t t = 0;   // [GxG..xG : psi(G_1)] = p^t
  DimensionMode requested = DimensionMode::Theoretical;
  bool r_measured = false;
  bool t_measured = false;
  Rational dimension;  // (r - t + 1) / p^s
  bool matches_closed_form = false;
  std::string note;
};

/// Hausdorff dimension of the closure, exact. Empirical mode measures r and
/// t from quotient sizes; theoretical mode cites r = p^{m+1}-1 and t = p
/// (odd p) or 3 (p = 2); hybrid measures what fits in budget and cites the
/// rest. The closed form compared against is 1 - 1/p^m (odd p) and
/// 1 - 3/2^{m+1} (p = 2). `max_measure_depth` caps the enumerated depth
/// (0 = no cap beyond the budget).
DimensionReport hausdorff_dimension(const GroupSpec& spec, DimensionMode mode,
                                    const Budget& budget = {},
                                    unsigned max_measure_depth = 0);

struct GeneralDimensionResult {
  double dimension = 0.0;
  // log_q [H:H_n] for n >= s
  std::function<double(long long)> index_exponent;
};

/// Dimension (r - t + epsilon)/k^s of a finitely constrained group given
/// its branching data; r, t, epsilon need not be integers.
GeneralDimensionResult general_dimension(long long k, long long q,
                                         double epsilon, double r, double t,
                                         long long s);

struct SubgroupIndexResult {
  std::uint64_t index = 0;
  std::uint64_t subgroup_size = 0;
  std::uint64_t group_size = 0;
};

/// Index of the subgroup generated by `generators` (or its normal closure)
/// in the depth-n quotient.
SubgroupIndexResult subgroup_index(const GroupSpec& spec, unsigned depth,
                                   const std::vector<Word>& generators,
                                   bool normal_closure,
                                   const Budget& budget = {});
SubgroupIndexResult subgroup_index_in(const QuotientTable& table,
                                      const GroupSpec& spec,
                                      const std::vector<Word>& generators,
                                      bool normal_closure);

/// COMMUTATOR preset: [x,y] over all pairs of standard generators.
std::vector<Word> commutator_generators(const GroupSpec& spec);

/// K preset (p = 2 only): [a,b] for b in the basis of B_1.
std::vector<Word> k_subgroup_generators(const GroupSpec& spec);

struct CheckReport {
  bool pass = false;
  std::uint64_t checked = 0;
  std::string detail;
};

/// Portrait identities behind the branching theorem: for every b with
/// omega(b) = 1 and every b' in B (odd p) or B_1 (p = 2),
/// [b^a, rho^{-1}(b')] = (1,...,1,[a,b']).
CheckReport verify_branch_generators(const GroupSpec& spec, unsigned depth);

/// psi(G_{n+1}) >= G_n x ... x G_n at finite depth: every p-tuple of
/// depth-d portraits trivial through level n assembles to a member of
/// G/G_{d+1}.
CheckReport branching_check(const GroupSpec& spec, unsigned n, unsigned d,
                            const Budget& budget = {});
CheckReport branching_check_with(const QuotientTable& table_d1,
                                 const QuotientTable& table_d, unsigned n);

// The tuple universe U and the membership test behind branching_check,
// exposed so controls can corrupt U.
std::vector<std::vector<Portrait>> branch_tuple_universe(
    const QuotientTable& table_d, unsigned n);
bool tuple_in_image(const QuotientTable& table_d1,
                    const std::vector<Portrait>& sections);

/// Sections at each first-level vertex of the level-1 stabilizer fill the
/// whole depth-n table, and the level-n orbit of 0^n is the full level.
CheckReport self_replicating_check(const GroupSpec& spec, unsigned n,
                                   const Budget& budget = {});
CheckReport self_replicating_check_with(const QuotientTable& table_n1,
                                        const QuotientTable& table_n);

/// G/G' = A x B at depth n: commutator index p^{m+1} and every standard
/// generator has order p modulo the commutator subgroup.
CheckReport abelianization_check(const GroupSpec& spec, unsigned n,
                                 const Budget& budget = {});
CheckReport abelianization_check_with(const QuotientTable& table,
                                      const GroupSpec& spec);

/// |G/G_n| = p^((p^n-1)/(p-1)), the full wreath quotient (true for
/// n <= m+1).
CheckReport full_wreath_check(const GroupSpec& spec, unsigned depth,
                              const Budget& budget = {});
CheckReport full_wreath_check_with(const QuotientTable& table);

}  // namespace gfp
