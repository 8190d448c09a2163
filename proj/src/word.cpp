#include "gfp/word.hpp"

#include <cstdlib>
#include <sstream>

#include "gfp/errors.hpp"

namespace gfp {

Word normalize(const GroupSpec& spec, std::vector<Token> tokens) {
  std::vector<Token> out;
  for (auto& tok : tokens) {
    if (auto* b = std::get_if<BTok>(&tok)) {
      if (b->v.size() != spec.m) {
        fail(ErrorCode::BadVector, "B-token dimension does not match spec");
      }
      for (Fp c : b->v) {
        if (c >= spec.p) {
          fail(ErrorCode::BadVector, "B-token entry out of range");
        }
      }
    } else {
      if (std::get<ATok>(tok).k >= spec.p) {
        fail(ErrorCode::BadVector, "A-token exponent out of range");
      }
    }
    if (!out.empty() && out.back().index() == tok.index()) {
      if (auto* a = std::get_if<ATok>(&out.back())) {
        a->k = static_cast<Fp>((a->k + std::get<ATok>(tok).k) % spec.p);
        if (a->k == 0) out.pop_back();
        continue;
      }
      auto& b = std::get<BTok>(out.back());
      b.v = vec_add(b.v, std::get<BTok>(tok).v, spec.p);
      if (vec_is_zero(b.v)) out.pop_back();
      continue;
    }
    bool identity = tok.index() == 0 ? std::get<ATok>(tok).k == 0
                                     : vec_is_zero(std::get<BTok>(tok).v);
    if (identity) continue;
    out.push_back(std::move(tok));
  }
  // `out` stays in normal form throughout: merges and pops never create a
  // same-kind adjacency between already-emitted tokens.
  return Word(std::move(out));
}

Word concat(const GroupSpec& spec, const Word& u, const Word& v) {
  std::vector<Token> tokens = u.tokens();
  tokens.insert(tokens.end(), v.tokens().begin(), v.tokens().end());
  return normalize(spec, std::move(tokens));
}

Word inverse_word(const GroupSpec& spec, const Word& w) {
  std::vector<Token> tokens;
  tokens.reserve(w.length());
  for (auto it = w.tokens().rbegin(); it != w.tokens().rend(); ++it) {
    if (auto* a = std::get_if<ATok>(&*it)) {
      tokens.push_back(ATok{static_cast<Fp>((spec.p - a->k) % spec.p)});
    } else {
      tokens.push_back(BTok{vec_neg(std::get<BTok>(*it).v, spec.p)});
    }
  }
  return normalize(spec, std::move(tokens));
}

Word conjugate_word(const GroupSpec& spec, const Word& g, const Word& h) {
  return concat(spec, concat(spec, inverse_word(spec, h), g), h);
}

Word commutator_word(const GroupSpec& spec, const Word& g, const Word& h) {
  return concat(spec,
                concat(spec, inverse_word(spec, g), inverse_word(spec, h)),
                concat(spec, g, h));
}

Word word_power(const GroupSpec& spec, const Word& w, unsigned e) {
  std::vector<Token> tokens;
  tokens.reserve(w.length() * e);
  for (unsigned i = 0; i < e; ++i) {
    tokens.insert(tokens.end(), w.tokens().begin(), w.tokens().end());
  }
  return normalize(spec, std::move(tokens));
}

Fp project_A(const GroupSpec& spec, const Word& w) {
  unsigned sum = 0;
  for (const auto& tok : w.tokens()) {
    if (auto* a = std::get_if<ATok>(&tok)) sum += a->k;
  }
  return static_cast<Fp>(sum % spec.p);
}

FieldVector project_B(const GroupSpec& spec, const Word& w) {
  FieldVector sum(spec.m, 0);
  for (const auto& tok : w.tokens()) {
    if (auto* b = std::get_if<BTok>(&tok)) sum = vec_add(sum, b->v, spec.p);
  }
  return sum;
}

namespace {

long long parse_int(const std::string& s, const std::string& context) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::BadParameters, "bad integer in " + context + ": " + s);
  }
  if (pos != s.size()) {
    fail(ErrorCode::BadParameters, "bad integer in " + context + ": " + s);
  }
  return value;
}

}  // namespace

Word parse_word(const GroupSpec& spec, const std::string& text) {
  std::vector<Token> tokens;
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    long long exponent = 1;
    if (auto caret = item.find('^'); caret != std::string::npos) {
      exponent = parse_int(item.substr(caret + 1), "token exponent");
      item = item.substr(0, caret);
    }
    if (item == "a") {
      tokens.push_back(ATok{reduce_mod(exponent, spec.p)});
      continue;
    }
    FieldVector v;
    if (item.size() >= 2 && item[0] == 'd') {
      long long i = parse_int(item.substr(1), "basis index");
      if (i < 0 || static_cast<std::size_t>(i) >= spec.m) {
        fail(ErrorCode::BadVector,
             "basis index out of range: " + std::to_string(i));
      }
      v = spec.standard_basis_vector(static_cast<std::size_t>(i));
    } else if (item.size() >= 3 && item[0] == 'b' && item[1] == '[' &&
               item.back() == ']') {
      std::string body = item.substr(2, item.size() - 3);
      std::istringstream coords(body);
      std::string c;
      while (std::getline(coords, c, ',')) {
        v.push_back(reduce_mod(parse_int(c, "vector entry"), spec.p));
      }
      if (v.size() != spec.m) {
        fail(ErrorCode::BadVector, "vector has wrong dimension: " + item);
      }
    } else {
      fail(ErrorCode::BadParameters, "unrecognized word token: " + item);
    }
    // B-token exponent scales the vector; inverse is the (p-1)-multiple
    tokens.push_back(BTok{vec_scale(v, reduce_mod(exponent, spec.p), spec.p)});
  }
  return normalize(spec, std::move(tokens));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& tok : w.tokens()) {
    if (!s.empty()) s += " ";
    if (auto* a = std::get_if<ATok>(&tok)) {
      s += "a";
      if (a->k != 1) s += "^" + std::to_string(static_cast<int>(a->k));
    } else {
      const auto& v = std::get<BTok>(tok).v;
      s += "b[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(v[i]));
      }
      s += "]";
    }
  }
  return s;
}

std::string word_key(const Word& w) { return format_word(w); }

Word word_a(const GroupSpec& spec, long long k) {
  return normalize(spec, {ATok{reduce_mod(k, spec.p)}});
}

Word word_b(const GroupSpec& spec, const FieldVector& v) {
  return normalize(spec, {BTok{v}});
}

Word word_d(const GroupSpec& spec, std::size_t i) {
  return word_b(spec, spec.standard_basis_vector(i));
}

}  // namespace gfp
