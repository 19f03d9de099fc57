#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "nakayama/algebra.hpp"
#include "nakayama/enumerate.hpp"
#include "nakayama/error.hpp"
#include "nakayama/quiver.hpp"
#include "oracles.hpp"

using namespace nakayama;

namespace {

std::vector<int> as_vector(const AdmissibleSequence& A) { return {A.values().begin(), A.values().end()}; }

/// Vertices that return to themselves under some power of the map.
std::set<int> brute_cyclic(const std::vector<int>& next) {
  const int n = static_cast<int>(next.size());
  std::set<int> out;
  for (int a = 1; a <= n; ++a) {
    int x = a;
    for (int k = 0; k < n; ++k) {
      x = next[static_cast<std::size_t>(x - 1)];
      if (x == a) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("gamma_graph examples") {
  CHECK(gamma_graph(validate_sequence({2, 2, 2})).images() == std::vector<int>{3, 1, 2});
  CHECK(gamma_graph(validate_sequence({3, 2, 2})).images() == std::vector<int>{1, 1, 2});
  CHECK(gamma_graph(validate_sequence({1, 1, 1, 1})).images() == std::vector<int>{2, 3, 4, 1});
  CHECK(gamma_graph(validate_sequence({3, 2, 2})).dims() == std::vector<int>{3, 2, 2});
}

TEST_CASE("psi_graph examples") {
  CHECK(psi_graph(validate_sequence({3, 3})).images() == std::vector<int>{2, 1});
  CHECK(psi_graph(validate_sequence({3, 2, 2})).images() == std::vector<int>{2, 3, 3});
  CHECK(psi_graph(validate_sequence({1, 1, 1})).images() == std::vector<int>{3, 1, 2});
  CHECK(psi_graph(validate_sequence({3, 2, 2})).dims() == std::vector<int>{2, 2, 3});
}

TEST_CASE("gamma and psi agree with counting along projectives and injectives") {
  for (const auto& A : enumerate_up_to(5, 6)) {
    const int n = A.order();
    const auto p = as_vector(A);
    const auto G = gamma_graph(A);
    const auto P = psi_graph(A);
    for (int a = 1; a <= n; ++a) {
      // the vertex just past the socle of P_a
      const auto pf = oracle::projective_factors(p, a);
      REQUIRE(G(a) == pf.back() % n + 1);
      // the vertex just before the top of I_a
      const auto inf = oracle::injective_factors(p, a);
      REQUIRE(P(a) == (inf.back() + n - 2) % n + 1);
    }
  }
}

TEST_CASE("analyze examples") {
  const auto i222 = analyze(gamma_graph(validate_sequence({2, 2, 2})));
  CHECK(i222.cycles == std::vector<std::vector<int>>{{1, 3, 2}});
  CHECK(i222.periodicity == 3);
  CHECK(i222.weight == 2);
  CHECK(i222.cycle_count == 1);
  CHECK(i222.component_size == std::vector<int>{3, 3, 3});
  CHECK(i222.leaves.empty());

  const auto i322 = analyze(gamma_graph(validate_sequence({3, 2, 2})));
  CHECK(i322.cycles == std::vector<std::vector<int>>{{1}});
  CHECK(i322.periodicity == 1);
  CHECK(i322.weight == 1);
  CHECK(i322.cycle_count == 1);
  CHECK(i322.component_size == std::vector<int>{3, 3, 3});
  CHECK(i322.leaves == std::vector<int>{3});
  CHECK(i322.is_leaf(3));
  CHECK_FALSE(i322.is_cyclic(2));

  const auto i2121 = analyze(gamma_graph(validate_sequence({2, 1, 2, 1})));
  CHECK(i2121.cycles == std::vector<std::vector<int>>{{1, 3}});
  CHECK(i2121.periodicity == 2);
  CHECK(i2121.weight == 1);
  CHECK(i2121.cycle_count == 1);
}

TEST_CASE("analyze agrees with brute-force cycle search") {
  for (const auto& A : enumerate_up_to(5, 6)) {
    for (const auto& G : {gamma_graph(A), psi_graph(A)}) {
      const auto inv = analyze(G);
      const auto cyc = brute_cyclic(G.images());
      std::size_t on_cycles = 0;
      for (const auto& c : inv.cycles) {
        on_cycles += c.size();
        REQUIRE(static_cast<int>(c.size()) == inv.periodicity);
        REQUIRE(c.front() == *std::min_element(c.begin(), c.end()));
        long label_sum = 0;
        for (std::size_t k = 0; k < c.size(); ++k) {
          REQUIRE(cyc.count(c[k]) == 1);
          REQUIRE(G(c[k]) == c[(k + 1) % c.size()]);
          label_sum += G.dim(c[k]);
        }
        REQUIRE(label_sum == static_cast<long>(inv.weight) * G.order());
      }
      REQUIRE(on_cycles == cyc.size());
      REQUIRE(inv.cycle_count == static_cast<int>(inv.cycles.size()));
      for (int a = 1; a <= G.order(); ++a) {
        REQUIRE(inv.is_cyclic(a) == (cyc.count(a) == 1));
        const auto pre = fiber_power(G, a, 1);
        REQUIRE(inv.is_leaf(a) == pre.empty());
        // a and gamma^n(a) share a component, and gamma^n(a) lies on a cycle
        const int lim = G.power(a, G.order());
        REQUIRE(inv.is_cyclic(lim));
        REQUIRE(inv.component_of(a) == inv.component_of(lim));
      }
      int total = 0;
      for (const auto& comp : inv.components()) {
        total += static_cast<int>(comp.size());
        for (int v : comp) REQUIRE(inv.size_of_component(v) == static_cast<int>(comp.size()));
      }
      REQUIRE(total == G.order());
    }
  }
}

TEST_CASE("image_power and fiber_power examples") {
  const auto G = gamma_graph(validate_sequence({3, 2, 2}));
  CHECK(image_power(G, 1) == std::vector<int>{1, 2});
  CHECK(image_power(G, 2) == std::vector<int>{1});
  CHECK(image_power(G, 0) == std::vector<int>{1, 2, 3});
  const auto P = psi_graph(validate_sequence({3, 2, 2}));
  CHECK(fiber_power(P, 3, 1) == std::vector<int>{2, 3});
  CHECK(fiber_power(psi_graph(validate_sequence({3, 3})), 1, 2) == std::vector<int>{1});
  CHECK(fiber_power(P, 2, 0) == std::vector<int>{2});
}

TEST_CASE("restricted renumbers a closed subset") {
  const auto G = gamma_graph(validate_sequence({2, 1, 2, 1}));
  const auto R = G.restricted({1, 3});
  CHECK(R.images() == std::vector<int>{2, 1});
  CHECK(R.dims() == std::vector<int>{2, 2});
}

TEST_CASE("inconsistent cycles are rejected") {
  FunctionalGraph bad(QuiverKind::resolution, {2, 1, 3}, {1, 1, 1});
  CHECK_THROWS_AS(analyze(bad), NonUniformCycles);
}

TEST_CASE("emit_dot examples") {
  const std::string d21 = emit_dot(gamma_graph(validate_sequence({2, 1})));
  CHECK(d21 ==
        "digraph resolution_quiver {\n"
        "  node [shape=circle];\n"
        "  1 [label=\"1 (2)\", peripheries=2];\n"
        "  2 [label=\"2 (1)\"];\n"
        "  1 -> 1;\n"
        "  2 -> 1;\n"
        "}\n");
  const std::string d11 = emit_dot(gamma_graph(validate_sequence({1, 1})));
  CHECK(d11.find("  1 -> 2;\n  2 -> 1;\n") != std::string::npos);
  const std::string psi = emit_dot(psi_graph(validate_sequence({3, 2, 2})));
  CHECK(psi.rfind("digraph coresolution_quiver {", 0) == 0);
  CHECK(psi.find("  1 -> 2;\n  2 -> 3;\n  3 -> 3;\n") != std::string::npos);
  CHECK(emit_dot(psi_graph(validate_sequence({3, 2, 2}))) == psi);
}
