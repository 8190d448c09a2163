#pragma once

#include <string>
#include <vector>

#include "gfp/field.hpp"

namespace gfp {

/// Everything that defines one group in the family: the prime p and the
/// monic polynomial f = x^m + a_{m-1}x^{m-1} + ... + a_0 with a_0 != 0,
/// realized as the companion matrix rho and the last-coordinate functional
/// omega on B = (Z/pZ)^m.
struct GroupSpec {
  unsigned p = 2;
  std::vector<Fp> coeffs;  // a_0,...,a_{m-1}; leading coefficient 1 implicit
  std::size_t m = 0;
  FieldMatrix rho;
  FieldMatrix rho_inv;
  std::vector<Fp> omega_row;  // (0,...,0,1)

  std::size_t generator_count() const { return m + 1; }  // a, d_0..d_{m-1}

  FieldVector standard_basis_vector(std::size_t i) const;

  // "p=2;f=1,1,1" — stable id, used as a cache key.
  std::string fingerprint() const;

  // "1,1,1" — the CLI/export form a_0,...,a_m.
  std::string coeffs_string() const;

  std::string polynomial_string() const;  // "x^2+x+1"
};

/// Validates (p, a_0..a_m) and builds the companion form. `coeffs` is the
/// full coefficient list including the leading 1, constant term first.
GroupSpec make_spec(long long p, const std::vector<long long>& coeffs);

FieldMatrix companion_matrix(const GroupSpec& spec);

FieldVector rho_power_apply(const GroupSpec& spec, const FieldVector& v,
                            long long i);

Fp omega_of(const GroupSpec& spec, const FieldVector& v);

/// Basis of B_i = rho^i(Ker omega). Empty when m = 1 (the kernel is trivial).
std::vector<FieldVector> kernel_subspace(const GroupSpec& spec, long long i);

}  // namespace gfp
