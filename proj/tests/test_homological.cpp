#include <doctest.h>

#include <random>

#include "nakayama/algebra.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/error.hpp"
#include "nakayama/homological.hpp"
#include "nakayama/quiver.hpp"
#include "oracles.hpp"

using namespace nakayama;

namespace {

std::vector<int> as_vector(const AdmissibleSequence& A) { return {A.values().begin(), A.values().end()}; }

std::vector<long> degrees(const Grading& d) { return {d.values().begin(), d.values().end()}; }

HomDim from_oracle(int v) { return v < 0 ? HomDim::infinite() : HomDim::finite(v); }

oracle::FactorList to_list(const GradedIntervalModule& M, const Grading& d, int n) {
  oracle::FactorList out;
  for (int k = 0; k < M.length; ++k) out.emplace_back(tau_power(M.top, k, n), M.top_degree + path_degree(d, M.top, k));
  return out;
}

std::vector<HomDim> hom(std::initializer_list<int> v) {
  std::vector<HomDim> out;
  for (int x : v) out.push_back(from_oracle(x));
  return out;
}

}  // namespace

TEST_CASE("HomDim ordering and printing") {
  CHECK(HomDim::finite(3) < HomDim::infinite());
  CHECK(HomDim::finite(1) < HomDim::finite(2));
  CHECK(HomDim::infinite().str() == "inf");
  CHECK(HomDim::finite(4).is_even());
  CHECK_FALSE(HomDim::infinite().is_even());
  CHECK_FALSE(HomDim::infinite().is_odd());
}

TEST_CASE("dimension_report examples") {
  const auto r322 = dimension_report(validate_sequence({3, 2, 2}));
  CHECK(r322.pd == hom({1, 3, 2}));
  // S2 -> I2 = S1 over S2 has cokernel S1, which is not injective, so id S2 = 3.
  CHECK(r322.id == hom({2, 3, 1}));
  CHECK(r322.gldim == HomDim::finite(3));

  const auto r21 = dimension_report(validate_sequence({2, 1}));
  CHECK(r21.pd == hom({1, 0}));
  CHECK(r21.id == hom({0, 1}));
  CHECK(r21.gldim == HomDim::finite(1));

  const auto r222 = dimension_report(validate_sequence({2, 2, 2}));
  CHECK(r222.pd == hom({-1, -1, -1}));
  CHECK(r222.id == hom({-1, -1, -1}));
  CHECK(r222.gldim == HomDim::infinite());
}

TEST_CASE("proj_dim and inj_dim agree with factor-list resolutions") {
  for (const auto& A : enumerate_up_to(5, 6)) {
    const auto p = as_vector(A);
    HomDim gl = HomDim::finite(0);
    for (int a = 1; a <= A.order(); ++a) {
      REQUIRE(proj_dim(A, a) == from_oracle(oracle::list_proj_dim(p, a)));
      REQUIRE(inj_dim(A, a) == from_oracle(oracle::list_inj_dim(p, a)));
      gl = std::max(gl, proj_dim(A, a));
    }
    REQUIRE(dimension_report(A).gldim == gl);
  }
}

TEST_CASE("graded syzygy and cosyzygy agree with factor lists") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> deg(-2, 3);
  for (const auto& A : enumerate_up_to(4, 5)) {
    const int n = A.order();
    const auto p = as_vector(A);
    std::vector<long> dv(static_cast<std::size_t>(n));
    for (auto& x : dv) x = deg(rng);
    const Grading d(dv);
    for (int top = 1; top <= n; ++top) {
      for (int len = 1; len <= A.p(top); ++len) {
        const GradedIntervalModule M{top, len, 3};
        REQUIRE(to_list(syzygy(A, d, M), d, n) == oracle::list_syzygy(p, dv, to_list(M, d, n)));
        REQUIRE(to_list(cosyzygy(A, d, M), d, n) == oracle::list_cosyzygy(p, dv, to_list(M, d, n)));
        REQUIRE(is_projective(A, M) == (len == A.p(top)));
      }
    }
  }
}

TEST_CASE("graded_injective_resolution examples") {
  const auto r33 = graded_injective_resolution(validate_sequence({3, 3}), Grading::length(2), 1);
  CHECK_FALSE(r33.finite);
  CHECK(r33.inj_dim == HomDim::infinite());
  REQUIRE(r33.shifts.size() >= 4);
  CHECK(std::vector<long>(r33.shifts.begin(), r33.shifts.begin() + 4) == std::vector<long>{0, 1, 3, 4});
  CHECK(r33.shifts == std::vector<long>{0, 1, 3, 4, 6});
  CHECK(r33.preperiod == 0);
  CHECK(r33.period_steps == 4);
  CHECK(r33.shift_increment == 6);

  const auto r322 = graded_injective_resolution(validate_sequence({3, 2, 2}), Grading::length(3), 1);
  CHECK(r322.finite);
  CHECK(r322.inj_dim == HomDim::finite(2));
  CHECK(r322.shifts == std::vector<long>{0, 1, 2});

  const auto r3 = graded_injective_resolution(validate_sequence({3, 2, 2}), Grading::length(3), 3);
  CHECK(r3.shifts == std::vector<long>{0, 1});

  const auto rs = graded_injective_resolution(validate_sequence({1, 1, 1}), Grading::length(3), 2);
  CHECK(rs.shifts == std::vector<long>{0});
  CHECK(rs.inj_dim == HomDim::finite(0));

  CHECK_THROWS_AS(graded_injective_resolution(validate_sequence({2, 2}), Grading({1, 0}), 1), NonPositiveGrading);
}

TEST_CASE("graded_injective_resolution shifts agree with factor-list cosyzygies") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> deg(1, 4);
  for (const auto& A : enumerate_up_to(4, 5)) {
    const int n = A.order();
    const auto p = as_vector(A);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<long> dv(static_cast<std::size_t>(n), 1);
      if (trial > 0) {
        for (auto& x : dv) x = deg(rng);
      }
      for (int a = 1; a <= n; ++a) {
        const auto r = graded_injective_resolution(A, Grading(dv), a);
        const auto want = oracle::list_injective_shifts(p, dv, a, r.shifts.size() + 1);
        if (r.finite) {
          REQUIRE(want == r.shifts);
        } else {
          REQUIRE(std::vector<long>(want.begin(), want.begin() + static_cast<std::ptrdiff_t>(r.shifts.size())) == r.shifts);
          const auto pre = static_cast<std::size_t>(r.preperiod);
          REQUIRE(r.shift_increment == r.shifts[pre + static_cast<std::size_t>(r.period_steps)] - r.shifts[pre]);
          REQUIRE(r.period_steps % 2 == 0);
          REQUIRE(r.preperiod % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("e_module_dimvec examples") {
  CHECK(e_module_dimvec(validate_sequence({3, 3}), 1, 1) == std::vector<int>{1, 0});
  CHECK(e_module_dimvec(validate_sequence({3, 2, 2}), 3, 1) == std::vector<int>{0, 0, 0});
  CHECK(e_module_dimvec(validate_sequence({3, 2, 2}), 1, 1) == std::vector<int>{1, 0, 0});
}

TEST_CASE("omega_even_dimvec examples") {
  CHECK(omega_even_dimvec(validate_sequence({3, 3}), 1, 1) == std::vector<int>{0, 1});
  CHECK(omega_even_dimvec(validate_sequence({2, 1}), 1, 1) == std::vector<int>{0, 0});
  CHECK(omega_even_dimvec(validate_sequence({1, 1, 1}), 2, 3) == std::vector<int>{0, 0, 0});
}

TEST_CASE("even syzygies agree with factor lists and psi fibers") {
  for (const auto& A : enumerate_up_to(4, 5)) {
    const int n = A.order();
    const auto p = as_vector(A);
    const std::vector<long> dv(static_cast<std::size_t>(n), 1);
    const auto psi = psi_graph(A);
    for (int a = 1; a <= n; ++a) {
      oracle::FactorList M{{a, 0}};
      for (int m = 1; m <= 4; ++m) {
        M = oracle::list_syzygy(p, dv, oracle::list_syzygy(p, dv, M));
        const auto got = omega_even_dimvec(A, a, m);
        REQUIRE(got == oracle::list_dimvec(M, n));
        // once the resolution reaches degree 2m - 1, the psi^m fiber over a
        std::vector<int> fiber(static_cast<std::size_t>(n), 0);
        const int pd = oracle::list_proj_dim(p, a);
        if (pd < 0 || pd >= 2 * m - 1) {
          for (int b : fiber_power(psi, a, m)) fiber[static_cast<std::size_t>(b - 1)] = 1;
        }
        REQUIRE(got == fiber);
      }
    }
  }
}

TEST_CASE("syzygy_period_sum examples") {
  const auto s33 = syzygy_period_sum(validate_sequence({3, 3}), 1);
  CHECK(s33.r == 0);
  CHECK(s33.total == 2);
  CHECK(syzygy_period_sum(validate_sequence({2, 2, 2}), 1).total == 3);
  CHECK_THROWS_AS(syzygy_period_sum(validate_sequence({2, 1}), 1), FiniteProjectiveDimension);
}

TEST_CASE("syzygy_period_sum of (2,1,2,1) agrees with brute-force iteration") {
  const auto A = validate_sequence({2, 1, 2, 1});
  const auto p = as_vector(A);
  const std::vector<long> dv(4, 1);
  for (int a = 1; a <= 4; ++a) {
    if (proj_dim(A, a).is_finite()) continue;
    std::vector<std::vector<int>> even;
    oracle::FactorList M{{a, 0}};
    for (int i = 0; i < 40; ++i) {
      even.push_back(oracle::list_dimvec(M, 4));
      M = oracle::list_syzygy(p, dv, oracle::list_syzygy(p, dv, M));
    }
    const int period = analyze(gamma_graph(A)).periodicity;
    int r = 0;
    while (even[static_cast<std::size_t>(r + period)] != even[static_cast<std::size_t>(r)]) ++r;
    int total = 0;
    for (int i = 0; i < period; ++i) {
      for (int x : even[static_cast<std::size_t>(r + i)]) total += x;
    }
    const auto got = syzygy_period_sum(A, a);
    CHECK(got.r == r);
    CHECK(got.total == total);
    CHECK(got.total == analyze(psi_graph(A)).size_of_component(a));
  }
}

TEST_CASE("finite global dimension criteria examples") {
  CHECK(madsen_finite_gldim(validate_sequence({3, 2, 2})));
  CHECK(shen_finite_gldim(validate_sequence({3, 2, 2})));
  CHECK_FALSE(madsen_finite_gldim(validate_sequence({2, 2, 2})));
  CHECK_FALSE(shen_finite_gldim(validate_sequence({2, 2, 2})));
  CHECK(madsen_finite_gldim(validate_sequence({1, 1, 1})));
  CHECK(shen_finite_gldim(validate_sequence({1, 1, 1})));
}
