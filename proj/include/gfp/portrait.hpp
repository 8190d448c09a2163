#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfp/spec.hpp"

namespace gfp {

/// Depth-n truncation of a p-adic tree automorphism: the activity exponent
/// (mod p) at every vertex of levels 0..n-1, in level order with children in
/// digit order. Depth 0 is the empty portrait.
class Portrait {
 public:
  Portrait() = default;
  Portrait(unsigned p, unsigned depth)
      : p_(p), depth_(depth), activities_(vertex_count(p, depth), 0) {}
  Portrait(unsigned p, unsigned depth, std::vector<Fp> activities);

  unsigned p() const { return p_; }
  unsigned depth() const { return depth_; }
  const std::vector<Fp>& activities() const { return activities_; }
  std::vector<Fp>& activities() { return activities_; }

  // vertex addressing: level l holds p^l vertices, index 0..p^l-1 in digit
  // order; level-order position = level_offset(l) + index.
  static std::size_t vertex_count(unsigned p, unsigned depth);
  static std::size_t level_offset(unsigned p, unsigned level);
  static std::size_t level_size(unsigned p, unsigned level);

  Fp activity_at(unsigned level, std::size_t index) const {
    return activities_[level_offset(p_, level) + index];
  }
  void set_activity(unsigned level, std::size_t index, Fp value) {
    activities_[level_offset(p_, level) + index] = value;
  }

  bool trivial() const;
  Portrait truncated(unsigned new_depth) const;

  // image of a level-n vertex (given by its digit index) under this
  // automorphism
  std::size_t vertex_image(unsigned level, std::size_t index) const;

  bool operator==(const Portrait& other) const = default;

  // activities as a base-p digit string in level order, e.g. "0010110"
  std::string digit_string() const;

 private:
  unsigned p_ = 2;
  unsigned depth_ = 0;
  std::vector<Fp> activities_;
};

Portrait compose(const Portrait& g, const Portrait& h);
Portrait inverse(const Portrait& g);
Portrait power(const Portrait& g, std::uint64_t e);

/// Section of g at the vertex named by the digit string, e.g. "10".
Portrait section(const Portrait& g, const std::string& vertex);

/// Depth-`window_depth` sub-portrait rooted at the given vertex.
Portrait window(const Portrait& g, unsigned level, std::size_t index,
                unsigned window_depth);

/// Portrait with the given root activity and first-level sections (p of
/// them, one level shallower).
Portrait assemble(unsigned p, Fp root_activity,
                  const std::vector<Portrait>& sections);

/// Portrait of a^k at the given depth: activity k at the root.
Portrait a_portrait(unsigned p, unsigned depth, Fp k);

/// Portrait of b in B given by `v`, unrolling b = (omega(b),1,...,1,rho(b)).
Portrait b_portrait(const GroupSpec& spec, const FieldVector& v,
                    unsigned depth);

/// Standard generating set {a, d_0, ..., d_{m-1}} as portraits.
std::vector<Portrait> generator_portraits(const GroupSpec& spec,
                                          unsigned depth);

// Portraits pack into 128-bit keys (base p, root digit most significant) so
// numeric order equals lexicographic order on activity strings.
using PortraitKey = unsigned __int128;

bool portrait_key_fits(unsigned p, unsigned depth);
PortraitKey portrait_key(const Portrait& g);
Portrait portrait_from_key(unsigned p, unsigned depth, PortraitKey key);

struct PortraitKeyHash {
  std::size_t operator()(PortraitKey k) const noexcept {
    std::uint64_t lo = static_cast<std::uint64_t>(k);
    std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace gfp
