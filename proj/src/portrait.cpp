#include "gfp/portrait.hpp"

#include <algorithm>

#include "gfp/errors.hpp"

namespace gfp {

Portrait::Portrait(unsigned p, unsigned depth, std::vector<Fp> activities)
    : p_(p), depth_(depth), activities_(std::move(activities)) {
  if (activities_.size() != vertex_count(p, depth)) {
    fail(ErrorCode::BadParameters, "activity vector has wrong length");
  }
  for (Fp a : activities_) {
    if (a >= p) fail(ErrorCode::BadParameters, "activity out of range");
  }
}

std::size_t Portrait::vertex_count(unsigned p, unsigned depth) {
  std::size_t count = 0;
  std::size_t level = 1;
  for (unsigned l = 0; l < depth; ++l) {
    count += level;
    level *= p;
  }
  return count;
}

std::size_t Portrait::level_offset(unsigned p, unsigned level) {
  return vertex_count(p, level);
}

std::size_t Portrait::level_size(unsigned p, unsigned level) {
  std::size_t size = 1;
  for (unsigned l = 0; l < level; ++l) size *= p;
  return size;
}

bool Portrait::trivial() const {
  return std::all_of(activities_.begin(), activities_.end(),
                     [](Fp a) { return a == 0; });
}

Portrait Portrait::truncated(unsigned new_depth) const {
  if (new_depth >= depth_) return *this;
  Portrait out(p_, new_depth);
  std::copy_n(activities_.begin(), out.activities_.size(),
              out.activities_.begin());
  return out;
}

std::size_t Portrait::vertex_image(unsigned level, std::size_t index) const {
  // peel digits most-significant-first: image of ux = image(u)*p + x + act(u)
  std::vector<unsigned> digits(level);
  std::size_t rest = index;
  for (unsigned l = level; l-- > 0;) {
    digits[l] = rest % p_;
    rest /= p_;
  }
  std::size_t img = 0;
  std::size_t cur = 0;  // index of the current prefix at its level
  for (unsigned l = 0; l < level; ++l) {
    Fp act = activity_at(l, cur);
    img = img * p_ + (digits[l] + act) % p_;
    cur = cur * p_ + digits[l];
  }
  return img;
}

std::string Portrait::digit_string() const {
  std::string s(activities_.size(), '0');
  for (std::size_t i = 0; i < activities_.size(); ++i) {
    Fp a = activities_[i];
    s[i] = a < 10 ? static_cast<char>('0' + a)
                  : static_cast<char>('a' + (a - 10));
  }
  return s;
}

Portrait compose(const Portrait& g, const Portrait& h) {
  if (g.p() != h.p() || g.depth() != h.depth()) {
    fail(ErrorCode::DepthMismatch, "portraits must share p and depth");
  }
  unsigned p = g.p();
  Portrait out(p, g.depth());
  // activity of g*h at u = act_g(h(u)) + act_h(u); images of all vertices of
  // one level derive from the previous level in one pass.
  std::vector<std::size_t> img{0};  // images of level-l vertices under h
  for (unsigned level = 0; level < g.depth(); ++level) {
    std::size_t size = Portrait::level_size(p, level);
    std::size_t offset = Portrait::level_offset(p, level);
    for (std::size_t i = 0; i < size; ++i) {
      Fp act_h = h.activities()[offset + i];
      Fp act_g = g.activities()[offset + img[i]];
      out.activities()[offset + i] = static_cast<Fp>((act_g + act_h) % p);
    }
    if (level + 1 < g.depth()) {
      std::vector<std::size_t> next(size * p);
      for (std::size_t i = 0; i < size; ++i) {
        Fp act_h = h.activities()[offset + i];
        for (unsigned x = 0; x < p; ++x) {
          next[i * p + x] = img[i] * p + (x + act_h) % p;
        }
      }
      img = std::move(next);
    }
  }
  return out;
}

Portrait inverse(const Portrait& g) {
  unsigned p = g.p();
  Portrait out(p, g.depth());
  // act_{g^-1}(v) = -act_g(g^-1(v)); walk levels tracking preimages.
  std::vector<std::size_t> pre{0};  // preimage under g of each level-l vertex
  for (unsigned level = 0; level < g.depth(); ++level) {
    std::size_t size = Portrait::level_size(p, level);
    std::size_t offset = Portrait::level_offset(p, level);
    for (std::size_t i = 0; i < size; ++i) {
      Fp act = g.activities()[offset + pre[i]];
      out.activities()[offset + i] = static_cast<Fp>((p - act) % p);
    }
    if (level + 1 < g.depth()) {
      std::vector<std::size_t> next(size * p);
      for (std::size_t i = 0; i < size; ++i) {
        Fp act = g.activities()[offset + pre[i]];
        for (unsigned x = 0; x < p; ++x) {
          // g maps pre[i]*p + y to i*p + (y + act); invert digit-wise
          next[i * p + x] = pre[i] * p + (x + p - act) % p;
        }
      }
      pre = std::move(next);
    }
  }
  return out;
}

Portrait power(const Portrait& g, std::uint64_t e) {
  Portrait acc(g.p(), g.depth());
  Portrait base = g;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    if (e >>= 1) base = compose(base, base);
  }
  return acc;
}

Portrait section(const Portrait& g, const std::string& vertex) {
  unsigned level = 0;
  std::size_t index = 0;
  for (char c : vertex) {
    unsigned digit = static_cast<unsigned>(c - '0');
    if (c < '0' || digit >= g.p()) {
      fail(ErrorCode::BadVertex, std::string("bad digit '") + c + "'");
    }
    index = index * g.p() + digit;
    ++level;
  }
  if (level > g.depth()) {
    fail(ErrorCode::BadVertex, "vertex deeper than portrait");
  }
  return window(g, level, index, g.depth() - level);
}

Portrait window(const Portrait& g, unsigned level, std::size_t index,
                unsigned window_depth) {
  if (level + window_depth > g.depth()) {
    fail(ErrorCode::TooShallow, "window extends beyond portrait depth");
  }
  unsigned p = g.p();
  Portrait out(p, window_depth);
  std::size_t src_index = index;
  for (unsigned l = 0; l < window_depth; ++l) {
    std::size_t size = Portrait::level_size(p, l);
    std::size_t src_offset = Portrait::level_offset(p, level + l) + src_index;
    std::size_t dst_offset = Portrait::level_offset(p, l);
    std::copy_n(g.activities().begin() + src_offset, size,
                out.activities().begin() + dst_offset);
    src_index *= p;
  }
  return out;
}

Portrait assemble(unsigned p, Fp root_activity,
                  const std::vector<Portrait>& sections) {
  if (sections.size() != p) {
    fail(ErrorCode::BadParameters, "need exactly p sections");
  }
  unsigned sub_depth = sections[0].depth();
  for (const Portrait& s : sections) {
    if (s.p() != p || s.depth() != sub_depth) {
      fail(ErrorCode::DepthMismatch, "sections must share p and depth");
    }
  }
  Portrait out(p, sub_depth + 1);
  out.activities()[0] = root_activity;
  for (unsigned l = 0; l < sub_depth; ++l) {
    std::size_t size = Portrait::level_size(p, l);
    std::size_t src = Portrait::level_offset(p, l);
    for (unsigned x = 0; x < p; ++x) {
      // subtree x of level l+1 occupies a contiguous block per section
      std::size_t dst = Portrait::level_offset(p, l + 1) + x * size;
      std::copy_n(sections[x].activities().begin() + src, size,
                  out.activities().begin() + dst);
    }
  }
  return out;
}

Portrait a_portrait(unsigned p, unsigned depth, Fp k) {
  Portrait out(p, depth);
  if (depth > 0) out.activities()[0] = static_cast<Fp>(k % p);
  return out;
}

namespace {

// writes the portrait of the B-element v into the subtree rooted at
// (level, index)
void fill_b(Portrait& out, const GroupSpec& spec, FieldVector v,
            unsigned level, std::size_t index) {
  unsigned p = out.p();
  // b = (omega(b), 1, ..., 1, rho(b)): walk down the (p-1)-spine writing
  // a^{omega(v)} at each child 0.
  while (level + 1 < out.depth()) {
    Fp w = omega_of(spec, v);
    out.set_activity(level + 1, index * p, w);  // root activity of a^w
    v = spec.rho.apply(v);
    index = index * p + (p - 1);
    ++level;
  }
}

}  // namespace

Portrait b_portrait(const GroupSpec& spec, const FieldVector& v,
                    unsigned depth) {
  if (v.size() != spec.m) {
    fail(ErrorCode::BadVector, "vector dimension does not match spec");
  }
  Portrait out(spec.p, depth);
  if (depth > 0) fill_b(out, spec, v, 0, 0);
  return out;
}

std::vector<Portrait> generator_portraits(const GroupSpec& spec,
                                          unsigned depth) {
  std::vector<Portrait> gens;
  gens.push_back(a_portrait(spec.p, depth, 1));
  for (std::size_t i = 0; i < spec.m; ++i) {
    gens.push_back(b_portrait(spec, spec.standard_basis_vector(i), depth));
  }
  return gens;
}

bool portrait_key_fits(unsigned p, unsigned depth) {
  PortraitKey max = ~PortraitKey{0};
  std::size_t digits = Portrait::vertex_count(p, depth);
  PortraitKey cap = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (cap > max / p) return false;
    cap *= p;
  }
  return true;
}

PortraitKey portrait_key(const Portrait& g) {
  if (!portrait_key_fits(g.p(), g.depth())) {
    fail(ErrorCode::BudgetExceeded,
         "portrait too deep for 128-bit keys at this arity");
  }
  PortraitKey key = 0;
  for (Fp a : g.activities()) key = key * g.p() + a;
  return key;
}

Portrait portrait_from_key(unsigned p, unsigned depth, PortraitKey key) {
  Portrait out(p, depth);
  auto& acts = out.activities();
  for (std::size_t i = acts.size(); i-- > 0;) {
    acts[i] = static_cast<Fp>(key % p);
    key /= p;
  }
  return out;
}

}  // namespace gfp
