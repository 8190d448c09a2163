#include "gfp/word_ops.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "gfp/errors.hpp"

namespace gfp {

std::string act(const GroupSpec& spec, const Word& w,
                const std::string& treeword) {
  std::vector<unsigned> digits(treeword.size());
  for (std::size_t i = 0; i < treeword.size(); ++i) {
    unsigned d = static_cast<unsigned>(treeword[i] - '0');
    if (treeword[i] < '0' || d >= spec.p) {
      fail(ErrorCode::BadDigit,
           std::string("bad tree digit '") + treeword[i] + "'");
    }
    digits[i] = d;
  }
  // rightmost token acts first
  for (auto it = w.tokens().rbegin(); it != w.tokens().rend(); ++it) {
    if (auto* a = std::get_if<ATok>(&*it)) {
      if (!digits.empty()) digits[0] = (digits[0] + a->k) % spec.p;
      continue;
    }
    FieldVector v = std::get<BTok>(*it).v;
    // b = (omega(b),1,...,1,rho(b)): follow the path, acting where it enters
    // digit 0 or continues through digit p-1
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] == 0) {
        if (i + 1 < digits.size()) {
          digits[i + 1] = (digits[i + 1] + omega_of(spec, v)) % spec.p;
        }
        break;
      }
      if (digits[i] != spec.p - 1) break;
      v = spec.rho.apply(v);
    }
  }
  std::string out(treeword.size(), '0');
  for (std::size_t i = 0; i < digits.size(); ++i) {
    out[i] = static_cast<char>('0' + digits[i]);
  }
  return out;
}

SectionDecomposition word_sections(const GroupSpec& spec, const Word& w) {
  unsigned p = spec.p;
  // digit_before[j] = image of x under the tokens to the right of token j,
  // as an offset added to x (only A-tokens shift)
  std::vector<Fp> shift_after(w.length());
  {
    unsigned acc = 0;
    for (std::size_t j = w.length(); j-- > 0;) {
      shift_after[j] = static_cast<Fp>(acc % p);
      if (auto* a = std::get_if<ATok>(&w.tokens()[j])) acc += a->k;
    }
  }
  SectionDecomposition out;
  out.root_activity = project_A(spec, w);
  out.sections.reserve(p);
  for (unsigned x = 0; x < p; ++x) {
    std::vector<Token> tokens;
    for (std::size_t j = 0; j < w.length(); ++j) {
      auto* b = std::get_if<BTok>(&w.tokens()[j]);
      if (!b) continue;
      unsigned digit = (x + shift_after[j]) % p;
      if (digit == 0) {
        Fp k = omega_of(spec, b->v);
        if (k != 0) tokens.push_back(ATok{k});
      } else if (digit == p - 1) {
        tokens.push_back(BTok{spec.rho.apply(b->v)});
      }
    }
    out.sections.push_back(normalize(spec, std::move(tokens)));
  }
  return out;
}

Portrait word_portrait(const GroupSpec& spec, const Word& w, unsigned depth) {
  Portrait out(spec.p, depth);
  for (const auto& tok : w.tokens()) {
    if (auto* a = std::get_if<ATok>(&tok)) {
      out = compose(out, a_portrait(spec.p, depth, a->k));
    } else {
      out = compose(out, b_portrait(spec, std::get<BTok>(tok).v, depth));
    }
  }
  return out;
}

namespace {

// proven-trivial words, keyed by spec fingerprint + word
std::mutex g_trivial_mutex;
std::unordered_set<std::string> g_trivial_cache;

bool is_identity_rec(const GroupSpec& spec, const Word& w,
                     std::unordered_set<std::string>& on_stack,
                     std::vector<std::string>& session) {
  if (w.empty()) return true;
  std::string key = spec.fingerprint() + "|" + word_key(w);
  {
    std::lock_guard<std::mutex> lock(g_trivial_mutex);
    if (g_trivial_cache.count(key)) return true;
  }
  // a revisit means the activity set repeats; nothing new can be nontrivial
  if (!on_stack.insert(key).second) return true;
  if (project_A(spec, w) != 0) {
    on_stack.erase(key);
    return false;
  }
  for (const Word& s : word_sections(spec, w).sections) {
    if (!is_identity_rec(spec, s, on_stack, session)) {
      on_stack.erase(key);
      return false;
    }
  }
  on_stack.erase(key);
  session.push_back(std::move(key));
  return true;
}

}  // namespace

bool is_identity(const GroupSpec& spec, const Word& w) {
  std::unordered_set<std::string> on_stack;
  std::vector<std::string> session;
  bool trivial = is_identity_rec(spec, w, on_stack, session);
  if (trivial && !session.empty()) {
    std::lock_guard<std::mutex> lock(g_trivial_mutex);
    for (auto& key : session) g_trivial_cache.insert(std::move(key));
  }
  return trivial;
}

namespace {

struct OrderBudget {
  unsigned steps_left;
  std::size_t max_len;
};

constexpr std::uint64_t kOrderOverflow = ~std::uint64_t{0};

// order = lcm of section orders when the root is inactive, p times the order
// of section 0 of w^p when it is active. Returns kOrderOverflow on budget
// exhaustion; fills `cycle` when an infinite descent is detected.
//
// The inactive stack tracks pure section chains only: a revisit along an
// all-inactive chain contributes lcm-factor 1, because every activity of the
// revisited word lives in a branch that exits the cycle. Active steps switch
// to a different element (section of w^p), so they start a fresh stack.
std::uint64_t order_rec(const GroupSpec& spec, const Word& w,
                        OrderBudget& budget,
                        std::vector<std::pair<std::string, Word>>& descent,
                        std::unordered_set<std::string>& inactive_stack,
                        std::vector<Word>& cycle, bool& infinite) {
  if (is_identity(spec, w)) return 1;
  if (w.length() > budget.max_len || budget.steps_left == 0) {
    return kOrderOverflow;
  }
  std::string key = word_key(w);

  if (project_A(spec, w) != 0) {
    // an element reappearing in its own *p descent has order p^k times
    // itself, hence infinite
    auto it = std::find_if(descent.begin(), descent.end(),
                           [&](const auto& e) { return e.first == key; });
    if (it != descent.end()) {
      infinite = true;
      for (auto jt = it; jt != descent.end(); ++jt) {
        cycle.push_back(jt->second);
      }
      cycle.push_back(w);
      return kOrderOverflow;
    }
    --budget.steps_left;
    descent.emplace_back(key, w);
    Word wp = word_power(spec, w, spec.p);
    Word first = word_sections(spec, wp).sections[0];
    std::unordered_set<std::string> fresh_stack;
    std::uint64_t sub =
        order_rec(spec, first, budget, descent, fresh_stack, cycle, infinite);
    descent.pop_back();
    if (sub == kOrderOverflow) return kOrderOverflow;
    if (sub > kOrderOverflow / spec.p) return kOrderOverflow;
    return sub * spec.p;
  }

  if (!inactive_stack.insert(key).second) return 1;
  std::uint64_t result = 1;
  for (const Word& s : word_sections(spec, w).sections) {
    std::uint64_t sub = order_rec(spec, s, budget, descent, inactive_stack,
                                  cycle, infinite);
    if (sub == kOrderOverflow) {
      result = kOrderOverflow;
      break;
    }
    result = std::lcm(result, sub);
  }
  inactive_stack.erase(key);
  return result;
}

}  // namespace

OrderResult element_order(const GroupSpec& spec, const Word& w,
                          const OrderLimits& limits) {
  OrderResult out;
  OrderBudget budget{limits.max_steps, limits.max_len};
  std::vector<std::pair<std::string, Word>> descent;
  std::unordered_set<std::string> inactive_stack;
  std::vector<Word> cycle;
  bool infinite = false;
  std::uint64_t order =
      order_rec(spec, w, budget, descent, inactive_stack, cycle, infinite);
  if (infinite) {
    out.kind = OrderResult::Kind::Infinite;
    out.witness = std::move(cycle);
    return out;
  }
  if (order == kOrderOverflow) {
    out.kind = OrderResult::Kind::Unknown;
    out.note = "budget exhausted (max_steps=" +
               std::to_string(limits.max_steps) +
               ", max_len=" + std::to_string(limits.max_len) + ")";
    return out;
  }
  out.kind = OrderResult::Kind::Finite;
  out.order = order;
  return out;
}

}  // namespace gfp
