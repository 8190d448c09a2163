#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfp {

// Residue mod p. All arithmetic in this library is over GF(p) with p < 256,
// which keeps portraits at one byte per vertex.
using Fp = std::uint8_t;

// An element of B = (Z/pZ)^m in the standard basis d_0,...,d_{m-1}.
using FieldVector = std::vector<Fp>;

bool is_prime(long long n);

inline Fp reduce_mod(long long x, unsigned p) {
  long long r = x % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Fp>(r);
}

// Multiplicative inverse mod p (p prime, a not divisible by p).
Fp mod_inverse(Fp a, unsigned p);

FieldVector vec_add(const FieldVector& a, const FieldVector& b, unsigned p);
FieldVector vec_neg(const FieldVector& a, unsigned p);
FieldVector vec_scale(const FieldVector& a, Fp c, unsigned p);
bool vec_is_zero(const FieldVector& a);
std::string vec_to_string(const FieldVector& a);

/// Dense matrix over GF(p), row-major.
struct FieldMatrix {
  unsigned p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Fp> data;

  FieldMatrix() = default;
  FieldMatrix(unsigned p_, std::size_t rows_, std::size_t cols_)
      : p(p_), rows(rows_), cols(cols_), data(rows_ * cols_, 0) {}

  Fp& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Fp at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static FieldMatrix identity(unsigned p, std::size_t n);

  FieldMatrix mul(const FieldMatrix& other) const;
  FieldVector apply(const FieldVector& v) const;

  // nullopt means singular.
  std::optional<FieldMatrix> try_inverse() const;
  bool operator==(const FieldMatrix& other) const = default;
};

// Reduced row echelon form of the span of `vectors`; returns a canonical
// basis (RREF rows, pivot order), so equal subspaces compare equal.
std::vector<FieldVector> row_reduce(std::vector<FieldVector> vectors,
                                    unsigned p);

bool same_subspace(const std::vector<FieldVector>& a,
                   const std::vector<FieldVector>& b, unsigned p);

// All vectors in the span of `basis` (for small subspaces).
std::vector<FieldVector> span_vectors(const std::vector<FieldVector>& basis,
                                      unsigned p, std::size_t dim);

// Polynomial product over GF(p); coefficients constant-term-first.
std::vector<Fp> poly_mul(const std::vector<Fp>& a, const std::vector<Fp>& b,
                         unsigned p);

}  // namespace gfp
