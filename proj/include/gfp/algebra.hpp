#pragma once

#include <optional>
#include <vector>

#include "gfp/spec.hpp"

namespace gfp {

/// One cycle of rho on the nonzero vectors of B. Members are listed in
/// cyclic order starting from the lexicographically least one.
struct Orbit {
  std::vector<FieldVector> members;
  bool meets_kernel = false;  // some member has last coordinate 0
};

struct OrbitReport {
  std::vector<Orbit> orbits;  // sorted by least member; a partition of B\{0}
};

OrbitReport rho_orbits(const GroupSpec& spec);

struct FaithfulnessResult {
  bool faithful = false;
  std::optional<Orbit> witness;  // an orbit inside Ker(omega), when unfaithful
};

/// Decides faithfulness of the B-action for an arbitrary invertible rho and
/// nonzero functional omega_row (not necessarily in companion form).
FaithfulnessResult faithfulness_check(const FieldMatrix& rho,
                                      const std::vector<Fp>& omega_row);

struct TorsionReport {
  bool is_p_group = false;
  std::optional<unsigned> r;  // least r with B_0 u ... u B_{r-1} = B
  std::optional<Orbit> witness_orbit;  // an orbit avoiding the kernel
};

TorsionReport torsion_analysis(const GroupSpec& spec);

struct GrowthParameters {
  unsigned r = 0;
  double eta = 0.0;    // positive root of x^r + x^(r-1) + x^(r-2) - 2
  double alpha = 0.0;  // log p / (log p - log eta)
};

GrowthParameters growth_parameters(const GroupSpec& spec);

// Positive root of x^r + x^(r-1) + x^(r-2) - 2 by bisection on [0,1],
// residual below 1e-12.
double growth_eta(unsigned r);

struct FactorGenerator {
  FieldVector b;  // f2(rho)(d_0)
  std::vector<FieldVector> cyclic_basis;  // b, rho(b), ..., rho^(deg f1 - 1)(b)
};

/// Locates the copy of G_{p,f1} inside G_{p,f} given a factorization
/// f = f1*f2. Coefficient lists are full (constant term first, leading 1).
FactorGenerator factor_generator(const GroupSpec& spec,
                                 const std::vector<long long>& f1_coeffs,
                                 const std::vector<long long>& f2_coeffs);

}  // namespace gfp
