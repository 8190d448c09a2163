#include "gfp/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "gfp/errors.hpp"

namespace gfp {

namespace {

// Orbit partition of the nonzero vectors under an arbitrary invertible map.
// Each orbit is rotated to start at its lexicographically least member and
// orbits are sorted by that member.
std::vector<Orbit> orbits_of(const FieldMatrix& rho,
                             const std::vector<Fp>& omega_row) {
  unsigned p = rho.p;
  std::size_t m = rho.rows;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total *= p;
    if (total > (1ull << 26)) {
      fail(ErrorCode::BudgetExceeded,
           "p^m too large for orbit enumeration");
    }
  }

  auto index_of = [&](const FieldVector& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = m; i-- > 0;) idx = idx * p + v[i];
    return idx;
  };
  auto vector_of = [&](std::uint64_t idx) {
    FieldVector v(m);
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = static_cast<Fp>(idx % p);
      idx /= p;
    }
    return v;
  };
  auto omega_val = [&](const FieldVector& v) {
    unsigned acc = 0;
    for (std::size_t i = 0; i < m; ++i) acc += omega_row[i] * v[i];
    return static_cast<Fp>(acc % p);
  };

  std::vector<bool> seen(total, false);
  seen[0] = true;
  std::vector<Orbit> orbits;
  for (std::uint64_t start = 1; start < total; ++start) {
    if (seen[start]) continue;
    Orbit orbit;
    FieldVector v = vector_of(start);
    FieldVector least = v;
    do {
      seen[index_of(v)] = true;
      if (omega_val(v) == 0) orbit.meets_kernel = true;
      if (v < least) least = v;
      orbit.members.push_back(v);
      v = rho.apply(v);
    } while (index_of(v) != start);
    // rotate so the least member comes first
    auto it = std::find(orbit.members.begin(), orbit.members.end(), least);
    std::rotate(orbit.members.begin(), it, orbit.members.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
    return a.members.front() < b.members.front();
  });
  return orbits;
}

}  // namespace

OrbitReport rho_orbits(const GroupSpec& spec) {
  return OrbitReport{orbits_of(spec.rho, spec.omega_row)};
}

FaithfulnessResult faithfulness_check(const FieldMatrix& rho,
                                      const std::vector<Fp>& omega_row) {
  if (!rho.try_inverse()) {
    fail(ErrorCode::SingularRho, "rho must be invertible");
  }
  if (std::all_of(omega_row.begin(), omega_row.end(),
                  [](Fp x) { return x == 0; })) {
    fail(ErrorCode::ZeroOmega, "omega must be a nonzero functional");
  }
  unsigned p = rho.p;
  std::size_t m = rho.rows;
  auto omega_val = [&](const FieldVector& v) {
    unsigned acc = 0;
    for (std::size_t i = 0; i < m; ++i) acc += omega_row[i] * v[i];
    return static_cast<Fp>(acc % p);
  };
  for (auto& orbit : orbits_of(rho, omega_row)) {
    bool inside_kernel = std::all_of(
        orbit.members.begin(), orbit.members.end(),
        [&](const FieldVector& v) { return omega_val(v) == 0; });
    if (inside_kernel) {
      return FaithfulnessResult{false, std::move(orbit)};
    }
  }
  return FaithfulnessResult{true, std::nullopt};
}

TorsionReport torsion_analysis(const GroupSpec& spec) {
  TorsionReport report;
  auto orbits = rho_orbits(spec).orbits;

  for (auto& orbit : orbits) {
    if (!orbit.meets_kernel) {
      report.is_p_group = false;
      report.witness_orbit = std::move(orbit);
      return report;
    }
  }

  // Every orbit meets B_0; r is 1 + the longest run of consecutive orbit
  // members outside B_0 (runs are cyclic).
  unsigned longest = 0;
  for (const auto& orbit : orbits) {
    const auto& mem = orbit.members;
    std::size_t n = mem.size();
    // start scanning right after a kernel member so runs never wrap
    std::size_t anchor = 0;
    while (omega_of(spec, mem[anchor]) != 0) ++anchor;
    unsigned run = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const FieldVector& v = mem[(anchor + k) % n];
      if (omega_of(spec, v) != 0) {
        ++run;
        longest = std::max(longest, run);
      } else {
        run = 0;
      }
    }
  }
  report.is_p_group = true;
  report.r = longest + 1;
  return report;
}

double growth_eta(unsigned r) {
  if (r < 2) fail(ErrorCode::BadParameters, "growth exponent needs r >= 2");
  auto poly = [&](double x) {
    return std::pow(x, r) + std::pow(x, r - 1) + std::pow(x, r - 2) - 2.0;
  };
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    double val = poly(mid);
    if (std::abs(val) < 1e-13) return mid;
    if (val < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GrowthParameters growth_parameters(const GroupSpec& spec) {
  TorsionReport torsion = torsion_analysis(spec);
  if (!torsion.is_p_group) {
    fail(ErrorCode::NotTorsion,
         "growth parameters are defined only for the p-group case");
  }
  GrowthParameters out;
  out.r = *torsion.r;
  out.eta = growth_eta(out.r);
  out.alpha =
      std::log(double(spec.p)) / (std::log(double(spec.p)) - std::log(out.eta));
  return out;
}

FactorGenerator factor_generator(const GroupSpec& spec,
                                 const std::vector<long long>& f1_coeffs,
                                 const std::vector<long long>& f2_coeffs) {
  auto reduce = [&](const std::vector<long long>& c) {
    std::vector<Fp> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = reduce_mod(c[i], spec.p);
    return out;
  };
  std::vector<Fp> f1 = reduce(f1_coeffs);
  std::vector<Fp> f2 = reduce(f2_coeffs);
  if (f1.empty() || f2.empty()) {
    fail(ErrorCode::NotAFactorization, "factors must be nonempty");
  }
  std::vector<Fp> product = poly_mul(f1, f2, spec.p);
  std::vector<Fp> full(spec.coeffs);
  full.push_back(1);
  if (product != full) {
    fail(ErrorCode::NotAFactorization, "f1*f2 != f over GF(p)");
  }

  // b = f2(rho)(d_0)
  FieldVector d0 = spec.standard_basis_vector(0);
  FieldVector b(spec.m, 0);
  FieldVector power = d0;  // rho^k(d_0)
  for (std::size_t k = 0; k < f2.size(); ++k) {
    if (f2[k] != 0) b = vec_add(b, vec_scale(power, f2[k], spec.p), spec.p);
    power = spec.rho.apply(power);
  }

  FactorGenerator out;
  out.b = b;
  std::size_t deg_f1 = f1.size() - 1;
  FieldVector cur = b;
  for (std::size_t k = 0; k < deg_f1; ++k) {
    out.cyclic_basis.push_back(cur);
    cur = spec.rho.apply(cur);
  }
  return out;
}

}  // namespace gfp
