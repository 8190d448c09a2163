#include <doctest.h>

#include <cmath>
#include <random>

#include "gfp/algebra.hpp"
#include "gfp/errors.hpp"

using namespace gfp;

namespace {

GroupSpec grigorchuk() { return make_spec(2, {1, 1, 1}); }

FieldVector v2(int a, int b) {
  return FieldVector{static_cast<Fp>(a), static_cast<Fp>(b)};
}

}  // namespace

TEST_CASE("make_spec validates its input") {
  GroupSpec g = grigorchuk();
  CHECK(g.p == 2);
  CHECK(g.m == 2);
  CHECK(g.coeffs == std::vector<Fp>{1, 1});

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadParameters;
  };
  CHECK(code_of([] { make_spec(2, {0, 1}); }) == ErrorCode::NotInvertible);
  CHECK(code_of([] { make_spec(4, {1, 1}); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_spec(2, {1}); }) == ErrorCode::DegreeZero);
  CHECK(code_of([] { make_spec(2, {1, 1, 2}); }) == ErrorCode::NotMonic);
}

TEST_CASE("companion matrices match the defining examples") {
  GroupSpec g = grigorchuk();
  FieldMatrix rho = companion_matrix(g);
  CHECK(rho.at(0, 0) == 0);
  CHECK(rho.at(0, 1) == 1);
  CHECK(rho.at(1, 0) == 1);
  CHECK(rho.at(1, 1) == 1);

  GroupSpec dihedral = make_spec(2, {1, 1});  // x - 1 = x + 1 over GF(2)
  CHECK(dihedral.m == 1);
  CHECK(companion_matrix(dihedral).at(0, 0) == 1);

  GroupSpec g32 = make_spec(3, {2, 2, 1});  // x^2 + 2x + 2, -2 = 1 mod 3
  FieldMatrix rho32 = companion_matrix(g32);
  CHECK(rho32.at(0, 0) == 0);
  CHECK(rho32.at(0, 1) == 1);
  CHECK(rho32.at(1, 0) == 1);
  CHECK(rho32.at(1, 1) == 1);
}

TEST_CASE("rho_power_apply walks the standard cycle") {
  GroupSpec g = grigorchuk();
  CHECK(rho_power_apply(g, v2(1, 0), 1) == v2(0, 1));  // d -> b
  CHECK(rho_power_apply(g, v2(1, 1), 0) == v2(1, 1));
  CHECK(rho_power_apply(g, v2(1, 1), 1) == v2(1, 0));  // c -> d
  // negative powers invert
  CHECK(rho_power_apply(g, v2(0, 1), -1) == v2(1, 0));
}

TEST_CASE("omega reads the last coordinate") {
  GroupSpec g = grigorchuk();
  CHECK(omega_of(g, v2(0, 1)) == 1);
  CHECK(omega_of(g, v2(1, 0)) == 0);
  GroupSpec g3 = make_spec(3, {2, 2, 1});
  CHECK(omega_of(g3, v2(2, 1)) == 1);
}

TEST_CASE("kernel subspaces B_i") {
  GroupSpec g = grigorchuk();
  CHECK(kernel_subspace(g, 0) == std::vector<FieldVector>{v2(1, 0)});
  CHECK(kernel_subspace(g, 1) == std::vector<FieldVector>{v2(0, 1)});
  GroupSpec dihedral = make_spec(2, {1, 1});
  CHECK(kernel_subspace(dihedral, 0).empty());
}

TEST_CASE("B_{i+1} is the rho-image of B_i as a subspace") {
  for (auto& [p, coeffs] : std::vector<std::pair<int, std::vector<long long>>>{
           {2, {1, 1, 1}}, {2, {1, 0, 1, 1}}, {3, {2, 2, 1}}, {5, {1, 1, 1}}}) {
    GroupSpec spec = make_spec(p, coeffs);
    for (long long i = -2; i <= 3; ++i) {
      std::vector<FieldVector> mapped;
      for (const FieldVector& v : kernel_subspace(spec, i)) {
        mapped.push_back(spec.rho.apply(v));
      }
      CHECK(same_subspace(mapped, kernel_subspace(spec, i + 1), spec.p));
    }
  }
}

TEST_CASE("rho_orbits partitions the nonzero vectors") {
  GroupSpec g = grigorchuk();
  OrbitReport report = rho_orbits(g);
  REQUIRE(report.orbits.size() == 1);
  CHECK(report.orbits[0].members.size() == 3);
  CHECK(report.orbits[0].meets_kernel);
  // cyclic order starting at the least member: (0,1) -> (1,1) -> (1,0)
  CHECK(report.orbits[0].members[0] == v2(0, 1));

  GroupSpec erschler = make_spec(2, {1, 0, 1});  // x^2 + 1
  OrbitReport er = rho_orbits(erschler);
  REQUIRE(er.orbits.size() == 2);
  // derived by iterating the swap matrix by hand
  CHECK(er.orbits[0].members == std::vector<FieldVector>{v2(0, 1), v2(1, 0)});
  CHECK(er.orbits[0].meets_kernel);
  CHECK(er.orbits[1].members == std::vector<FieldVector>{v2(1, 1)});
  CHECK_FALSE(er.orbits[1].meets_kernel);

  GroupSpec dihedral = make_spec(2, {1, 1});
  OrbitReport di = rho_orbits(dihedral);
  REQUIRE(di.orbits.size() == 1);
  CHECK(di.orbits[0].members == std::vector<FieldVector>{FieldVector{1}});
  CHECK_FALSE(di.orbits[0].meets_kernel);
}

TEST_CASE("orbit partition covers p^m - 1 vectors and closes cyclically") {
  for (auto& [p, coeffs] : std::vector<std::pair<int, std::vector<long long>>>{
           {2, {1, 1, 1}}, {3, {2, 2, 1}}, {2, {1, 1, 0, 1}}, {5, {2, 3, 1}}}) {
    GroupSpec spec = make_spec(p, coeffs);
    OrbitReport report = rho_orbits(spec);
    std::size_t covered = 0;
    std::size_t expected = 1;
    for (std::size_t i = 0; i < spec.m; ++i) expected *= spec.p;
    for (const Orbit& orbit : report.orbits) {
      covered += orbit.members.size();
      long long len = static_cast<long long>(orbit.members.size());
      CHECK(rho_power_apply(spec, orbit.members[0], len) == orbit.members[0]);
      for (std::size_t k = 0; k + 1 < orbit.members.size(); ++k) {
        CHECK(spec.rho.apply(orbit.members[k]) == orbit.members[k + 1]);
      }
    }
    CHECK(covered == expected - 1);
  }
}

TEST_CASE("faithfulness for companion inputs and a counterexample") {
  GroupSpec g = grigorchuk();
  CHECK(faithfulness_check(g.rho, g.omega_row).faithful);

  // identity rho fixes (1,0) inside the kernel of (0,1)
  FieldMatrix id = FieldMatrix::identity(2, 2);
  auto result = faithfulness_check(id, {0, 1});
  CHECK_FALSE(result.faithful);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->members == std::vector<FieldVector>{v2(1, 0)});

  CHECK_THROWS_AS(faithfulness_check(FieldMatrix(2, 2, 2), {0, 1}), Error);
  CHECK_THROWS_AS(faithfulness_check(id, {0, 0}), Error);
}

TEST_CASE("companion form is faithful for every small spec") {
  // exhaustive sweep: all valid coefficient tuples, p <= 7, m <= 4
  for (int p : {2, 3, 5, 7}) {
    for (int m = 1; m <= 4; ++m) {
      std::size_t tuples = 1;
      for (int i = 1; i < m; ++i) tuples *= p;
      for (std::size_t idx = 0; idx < tuples; ++idx) {
        std::vector<long long> coeffs(m + 1, 0);
        coeffs[m] = 1;
        std::size_t rem = idx;
        for (int i = 1; i < m; ++i) {
          coeffs[i] = static_cast<long long>(rem % p);
          rem /= p;
        }
        for (int a0 = 1; a0 < p; ++a0) {
          coeffs[0] = a0;
          GroupSpec spec = make_spec(p, coeffs);
          CHECK(faithfulness_check(spec.rho, spec.omega_row).faithful);
        }
      }
    }
  }
}

TEST_CASE("torsion classification") {
  TorsionReport grig = torsion_analysis(grigorchuk());
  CHECK(grig.is_p_group);
  CHECK(grig.r == 3);  // primitive quadratic: r = m + 1

  TorsionReport erschler = torsion_analysis(make_spec(2, {1, 0, 1}));
  CHECK_FALSE(erschler.is_p_group);
  REQUIRE(erschler.witness_orbit.has_value());
  CHECK(erschler.witness_orbit->members ==
        std::vector<FieldVector>{v2(1, 1)});

  CHECK_FALSE(torsion_analysis(make_spec(2, {1, 1})).is_p_group);
}

TEST_CASE("torsion r agrees with the subspace-union oracle") {
  // independent route: smallest r with B_0 u ... u B_{r-1} = B
  for (auto& [p, coeffs] : std::vector<std::pair<int, std::vector<long long>>>{
           {2, {1, 1, 1}}, {2, {1, 1, 0, 1}}, {3, {2, 2, 1}}, {3, {1, 2, 1}}}) {
    GroupSpec spec = make_spec(p, coeffs);
    TorsionReport report = torsion_analysis(spec);
    if (!report.is_p_group) continue;
    std::size_t total = 1;
    for (std::size_t i = 0; i < spec.m; ++i) total *= spec.p;
    unsigned r_oracle = 0;
    std::vector<bool> seen(total, false);
    std::size_t covered = 0;
    while (covered < total) {
      for (const FieldVector& v :
           span_vectors(kernel_subspace(spec, r_oracle), spec.p, spec.m)) {
        std::size_t idx = 0;
        for (std::size_t i = spec.m; i-- > 0;) idx = idx * spec.p + v[i];
        if (!seen[idx]) {
          seen[idx] = true;
          ++covered;
        }
      }
      ++r_oracle;
      REQUIRE(r_oracle <= total);
    }
    CHECK(report.r == r_oracle);
  }
}

TEST_CASE("torsion implies every orbit meets the kernel, r <= p^m") {
  for (auto& [p, coeffs] : std::vector<std::pair<int, std::vector<long long>>>{
           {2, {1, 1, 1}}, {2, {1, 1, 0, 1}}, {3, {2, 2, 1}}, {5, {1, 1, 1}}}) {
    GroupSpec spec = make_spec(p, coeffs);
    TorsionReport report = torsion_analysis(spec);
    if (!report.is_p_group) continue;
    std::size_t total = 1;
    for (std::size_t i = 0; i < spec.m; ++i) total *= spec.p;
    CHECK(*report.r <= total);
    for (const Orbit& orbit : rho_orbits(spec).orbits) {
      CHECK(orbit.meets_kernel);
    }
  }
}

TEST_CASE("growth parameters") {
  GrowthParameters grig = growth_parameters(grigorchuk());
  CHECK(grig.r == 3);
  double residual = std::pow(grig.eta, 3) + std::pow(grig.eta, 2) + grig.eta -
                    2.0;
  CHECK(std::abs(residual) < 1e-12);
  CHECK(grig.eta > 0.0);
  CHECK(grig.eta < 1.0);
  CHECK(grig.alpha > 0.767);
  CHECK(grig.alpha < 0.768);

  // r = 2: golden ratio root of x^2 + x - 1
  CHECK(std::abs(growth_eta(2) - (std::sqrt(5.0) - 1.0) / 2.0) < 1e-12);

  // primitive cubic: r = m + 1 = 4
  GroupSpec cubic = make_spec(2, {1, 1, 0, 1});  // x^3 + x + 1
  GrowthParameters c = growth_parameters(cubic);
  CHECK(c.r == 4);
  double res4 = std::pow(c.eta, 4) + std::pow(c.eta, 3) + std::pow(c.eta, 2) -
                2.0;
  CHECK(std::abs(res4) < 1e-12);

  CHECK_THROWS_AS(growth_parameters(make_spec(2, {1, 0, 1})), Error);
}

TEST_CASE("alpha increases strictly with r") {
  double prev = 0.0;
  for (unsigned r = 2; r <= 8; ++r) {
    double eta = growth_eta(r);
    double alpha = std::log(2.0) / (std::log(2.0) - std::log(eta));
    CHECK(alpha > prev);
    prev = alpha;
  }
}

TEST_CASE("factor generators locate subgroup copies") {
  GroupSpec over = make_spec(2, {1, 0, 0, 1});  // x^3 + 1

  // x^3 + 1 = (x+1)(x^2+x+1) over GF(2)
  FactorGenerator dihedral_copy =
      factor_generator(over, {1, 1}, {1, 1, 1});
  CHECK(dihedral_copy.b == FieldVector{1, 1, 1});
  CHECK(dihedral_copy.cyclic_basis ==
        std::vector<FieldVector>{FieldVector{1, 1, 1}});

  FactorGenerator grig_copy = factor_generator(over, {1, 1, 1}, {1, 1});
  CHECK(grig_copy.b == FieldVector{1, 1, 0});
  CHECK(grig_copy.cyclic_basis ==
        std::vector<FieldVector>{FieldVector{1, 1, 0}, FieldVector{0, 1, 1}});

  // trivial factorization: b = d_0
  GroupSpec g = grigorchuk();
  FactorGenerator triv = factor_generator(g, {1, 1, 1}, {1});
  CHECK(triv.b == FieldVector{1, 0});

  CHECK_THROWS_AS(factor_generator(over, {1, 1}, {1, 1}), Error);
}

TEST_CASE("Cayley-Hamilton holds for the companion matrix") {
  std::mt19937 rng(20240901);
  for (auto& [p, coeffs] : std::vector<std::pair<int, std::vector<long long>>>{
           {2, {1, 1, 1}}, {3, {2, 2, 1}}, {5, {2, 3, 1}}, {2, {1, 1, 0, 1}}}) {
    GroupSpec spec = make_spec(p, coeffs);
    for (int trial = 0; trial < 20; ++trial) {
      FieldVector v(spec.m);
      for (auto& c : v) {
        c = static_cast<Fp>(rng() % spec.p);
      }
      // rho^m(v) = -(a_0 v + a_1 rho(v) + ... + a_{m-1} rho^{m-1}(v))
      FieldVector lhs = rho_power_apply(spec, v, spec.m);
      FieldVector rhs(spec.m, 0);
      FieldVector power = v;
      for (std::size_t i = 0; i < spec.m; ++i) {
        rhs = vec_add(rhs, vec_scale(power, spec.coeffs[i], spec.p), spec.p);
        power = spec.rho.apply(power);
      }
      rhs = vec_neg(rhs, spec.p);
      CHECK(lhs == rhs);
    }
  }
}
