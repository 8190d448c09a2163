#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfp/portrait.hpp"
#include "gfp/word.hpp"

namespace gfp {

/// Image of a tree word under the word's action (leftmost token acts last).
std::string act(const GroupSpec& spec, const Word& w,
                const std::string& treeword);

struct SectionDecomposition {
  Fp root_activity = 0;
  std::vector<Word> sections;  // one per letter, length <= (|w|+1)/2 each
};

SectionDecomposition word_sections(const GroupSpec& spec, const Word& w);

/// Portrait of the word at the given depth, by composing generator
/// portraits.
Portrait word_portrait(const GroupSpec& spec, const Word& w, unsigned depth);

/// Word problem: true iff w acts trivially on the whole tree. Recursion on
/// sections with revisit-as-trivial cycle handling; a shared proven-trivial
/// cache only accelerates repeated queries.
bool is_identity(const GroupSpec& spec, const Word& w);

struct OrderLimits {
  unsigned max_steps = 64;   // descents through w -> section_0(w^p)
  std::size_t max_len = 256;  // token budget for intermediate words
};

struct OrderResult {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  std::uint64_t order = 0;          // when Finite
  std::vector<Word> witness;        // descent cycle, when Infinite
  std::string note;                 // exhausted budget, when Unknown
};

OrderResult element_order(const GroupSpec& spec, const Word& w,
                          const OrderLimits& limits = {});

}  // namespace gfp
