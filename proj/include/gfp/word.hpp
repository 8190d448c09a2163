#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gfp/spec.hpp"

namespace gfp {

struct ATok {
  Fp k = 1;  // exponent, 1..p-1
  bool operator==(const ATok&) const = default;
};

struct BTok {
  FieldVector v;  // nonzero element of B
  bool operator==(const BTok&) const = default;
};

using Token = std::variant<ATok, BTok>;

/// A group word over the generators a and B, in alternating normal form:
/// no two adjacent tokens of the same kind, no identity tokens. The empty
/// word is the identity. Construct via normalize().
class Word {
 public:
  Word() = default;

  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t length() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  bool operator==(const Word& other) const = default;

 private:
  friend Word normalize(const GroupSpec& spec, std::vector<Token> tokens);
  explicit Word(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}
  std::vector<Token> tokens_;
};

/// Merges adjacent same-kind tokens (A exponents add mod p, B vectors add in
/// B) and drops identity tokens; idempotent.
Word normalize(const GroupSpec& spec, std::vector<Token> tokens);

Word concat(const GroupSpec& spec, const Word& u, const Word& v);
Word inverse_word(const GroupSpec& spec, const Word& w);
Word conjugate_word(const GroupSpec& spec, const Word& g, const Word& h);  // h^-1 g h
Word commutator_word(const GroupSpec& spec, const Word& g, const Word& h);  // g^-1 h^-1 g h
Word word_power(const GroupSpec& spec, const Word& w, unsigned e);

Fp project_A(const GroupSpec& spec, const Word& w);
FieldVector project_B(const GroupSpec& spec, const Word& w);

/// Parses the CLI word grammar: whitespace-separated tokens `a`, `a^K`,
/// `dI`, `b[c0,...,c{m-1}]`, each with an optional `^K` suffix (negative K
/// allowed). The result is normalized.
Word parse_word(const GroupSpec& spec, const std::string& text);

std::string format_word(const Word& w);

// Canonical serialization, usable as a hash key.
std::string word_key(const Word& w);

// Convenience builders.
Word word_a(const GroupSpec& spec, long long k = 1);
Word word_b(const GroupSpec& spec, const FieldVector& v);
Word word_d(const GroupSpec& spec, std::size_t i);

}  // namespace gfp
