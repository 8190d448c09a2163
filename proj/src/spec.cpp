#include "gfp/spec.hpp"

#include "gfp/errors.hpp"

namespace gfp {

FieldVector GroupSpec::standard_basis_vector(std::size_t i) const {
  FieldVector v(m, 0);
  v.at(i) = 1;
  return v;
}

std::string GroupSpec::fingerprint() const {
  return "p=" + std::to_string(p) + ";f=" + coeffs_string();
}

std::string GroupSpec::coeffs_string() const {
  std::string s;
  for (Fp c : coeffs) {
    s += std::to_string(static_cast<int>(c));
    s += ",";
  }
  s += "1";
  return s;
}

std::string GroupSpec::polynomial_string() const {
  std::string s;
  auto term = [&](unsigned coeff, std::size_t deg) {
    if (coeff == 0) return;
    if (!s.empty()) s += "+";
    if (deg == 0) {
      s += std::to_string(coeff);
      return;
    }
    if (coeff != 1) s += std::to_string(coeff);
    s += "x";
    if (deg > 1) s += "^" + std::to_string(deg);
  };
  term(1, m);
  for (std::size_t i = m; i-- > 0;) term(coeffs[i], i);
  return s;
}

GroupSpec make_spec(long long p, const std::vector<long long>& coeffs) {
  if (!is_prime(p)) {
    fail(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
  }
  if (p > 251) {
    fail(ErrorCode::BadParameters,
         "p = " + std::to_string(p) + " exceeds the supported range (p < 256)");
  }
  if (coeffs.size() < 2) {
    fail(ErrorCode::DegreeZero, "f must have degree at least 1");
  }
  GroupSpec spec;
  spec.p = static_cast<unsigned>(p);
  spec.m = coeffs.size() - 1;
  spec.coeffs.resize(spec.m);
  for (std::size_t i = 0; i < spec.m; ++i) {
    spec.coeffs[i] = reduce_mod(coeffs[i], spec.p);
  }
  if (reduce_mod(coeffs.back(), spec.p) != 1) {
    fail(ErrorCode::NotMonic, "leading coefficient must be 1");
  }
  if (spec.coeffs[0] == 0) {
    fail(ErrorCode::NotInvertible,
         "constant term a_0 must be nonzero mod p for f to be invertible");
  }

  // Companion matrix: subdiagonal 1s, last column -a_0..-a_{m-1}.
  spec.rho = FieldMatrix(spec.p, spec.m, spec.m);
  for (std::size_t i = 1; i < spec.m; ++i) spec.rho.at(i, i - 1) = 1;
  for (std::size_t i = 0; i < spec.m; ++i) {
    spec.rho.at(i, spec.m - 1) =
        static_cast<Fp>((spec.p - spec.coeffs[i]) % spec.p);
  }
  auto inv = spec.rho.try_inverse();
  if (!inv) {
    fail(ErrorCode::NotInvertible, "companion matrix is singular");
  }
  spec.rho_inv = *inv;

  spec.omega_row.assign(spec.m, 0);
  spec.omega_row.back() = 1;
  return spec;
}

FieldMatrix companion_matrix(const GroupSpec& spec) { return spec.rho; }

FieldVector rho_power_apply(const GroupSpec& spec, const FieldVector& v,
                            long long i) {
  if (v.size() != spec.m) {
    fail(ErrorCode::BadVector, "vector dimension does not match spec");
  }
  const FieldMatrix& step = i >= 0 ? spec.rho : spec.rho_inv;
  long long count = i >= 0 ? i : -i;
  FieldVector out = v;
  for (long long k = 0; k < count; ++k) out = step.apply(out);
  return out;
}

Fp omega_of(const GroupSpec& spec, const FieldVector& v) {
  if (v.size() != spec.m) {
    fail(ErrorCode::BadVector, "vector dimension does not match spec");
  }
  return v.back();
}

std::vector<FieldVector> kernel_subspace(const GroupSpec& spec, long long i) {
  std::vector<FieldVector> basis;
  for (std::size_t j = 0; j + 1 < spec.m; ++j) {
    basis.push_back(rho_power_apply(spec, spec.standard_basis_vector(j), i));
  }
  return basis;
}

}  // namespace gfp
