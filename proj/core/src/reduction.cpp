#include "nakayama/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "nakayama/error.hpp"
#include "nakayama/matrix.hpp"
#include "nakayama/quiver.hpp"

namespace nakayama {

namespace {

/// Sequence of the idempotent subalgebra on `keep` (sorted): each surviving
/// projective loses the composition factors at removed vertices.
std::vector<int> restricted_sequence(const AdmissibleSequence& A, const std::vector<bool>& keep) {
  const int n = A.order();
  std::vector<int> p;
  for (int v = 1; v <= n; ++v) {
    if (!keep[static_cast<std::size_t>(v - 1)]) continue;
    int length = 0;
    for (int k = 0; k < A.p(v); ++k) {
      if (keep[static_cast<std::size_t>(tau_power(v, k, n) - 1)]) ++length;
    }
    p.push_back(length);
  }
  return p;
}

AdmissibleSequence revalidate(const std::vector<int>& p, const AdmissibleSequence& from) {
  try {
    return validate_sequence(p);
  } catch (const NotAdmissible& e) {
    throw CrossCheckFailure("reduction of (" + from.str() + ") is not admissible: " + e.what());
  }
}

}  // namespace

ReductionStep remove_leaf(const AdmissibleSequence& A, const Grading& d, int leaf) {
  check_grading(A, d);
  const int n = A.order();
  if (leaf < 1 || leaf > n) throw InvalidInput("vertex " + std::to_string(leaf) + " out of range");
  if (!analyze(gamma_graph(A)).is_leaf(leaf)) throw NotALeaf(leaf);

  std::vector<bool> keep(static_cast<std::size_t>(n), true);
  keep[static_cast<std::size_t>(leaf - 1)] = false;

  std::vector<int> vertex_map(static_cast<std::size_t>(n), 0);
  std::vector<long> degrees;
  int next_label = 0;
  for (int v = 1; v <= n; ++v) {
    if (v == leaf) continue;
    vertex_map[static_cast<std::size_t>(v - 1)] = ++next_label;
    long degree = d.degree(v);
    if (tau_power(v, 1, n) == leaf) degree += d.degree(leaf);
    degrees.push_back(degree);
  }

  return ReductionStep{leaf,
                       A,
                       d,
                       revalidate(restricted_sequence(A, keep), A),
                       Grading(std::move(degrees)),
                       std::move(vertex_map)};
}

AdmissibleSequence epsilon_construction(const AdmissibleSequence& A) {
  const int n = A.order();
  std::vector<bool> keep(static_cast<std::size_t>(n), false);
  for (int v : image_power(gamma_graph(A), 1)) keep[static_cast<std::size_t>(v - 1)] = true;
  return revalidate(restricted_sequence(A, keep), A);
}

bool is_selfinjective(const AdmissibleSequence& A) {
  const auto p = A.values();
  const bool constant = std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>()) == p.end();
  const bool leafless = analyze(gamma_graph(A)).leaves.empty();
  if (constant != leafless) {
    throw CrossCheckFailure("(" + A.str() + "): constant sequence = " + std::to_string(constant) +
                            " but leafless resolution quiver = " + std::to_string(leafless));
  }
  return constant;
}

LaurentPoly det_closed_form(long d_total, int w, int c) {
  if (d_total == 0) return LaurentPoly(Rational(c == 1 ? w : 0));
  const LaurentPoly one = LaurentPoly::one();
  const LaurentPoly numerator = (one - LaurentPoly::monomial(Rational(1), d_total * w)).pow(static_cast<unsigned>(c));
  return exact_quotient(numerator, one - LaurentPoly::monomial(Rational(1), d_total));
}

SelfinjectiveDet selfinjective_det(int n, int ell, const Grading& d) {
  if (n < 1 || ell < 1) throw InvalidInput("selfinjective_det needs n >= 1 and l >= 1");
  if (d.size() != n) throw InvalidInput("grading length must equal n");
  const long total = d.total_degree();
  if (total == 0) throw ZeroTotalDegree();

  const int g = std::gcd(n, ell);
  const LaurentPoly one = LaurentPoly::one();
  const LaurentPoly numerator =
      (one - LaurentPoly::monomial(Rational(1), total * ell / g)).pow(static_cast<unsigned>(g));
  SelfinjectiveDet out{exact_quotient(numerator, one - LaurentPoly::monomial(Rational(1), total)), ell / g, g};

  const auto inv = analyze(gamma_graph(validate_sequence(std::vector<int>(static_cast<std::size_t>(n), ell))));
  if (inv.weight != out.weight || inv.cycle_count != out.cycle_count) {
    throw CrossCheckFailure("selfinjective (n, l) = (" + std::to_string(n) + ", " + std::to_string(ell) +
                            "): quiver has w = " + std::to_string(inv.weight) +
                            ", c = " + std::to_string(inv.cycle_count));
  }
  return out;
}

DetReport graded_cartan_det(const AdmissibleSequence& A, const Grading& d) {
  const auto inv = analyze(gamma_graph(A));
  DetReport report{det_bareiss(graded_cartan_matrix(A, d)), {}, d.total_degree(), inv.weight, inv.cycle_count};
  report.closed_form = det_closed_form(report.d_total, report.w, report.c);
  if (report.direct != report.closed_form) {
    throw MismatchBug("(" + A.str() + ") grading (" + d.str() + "): det = " + report.direct.str() +
                      ", closed form = " + report.closed_form.str());
  }
  return report;
}

std::vector<ReductionStep> reduction_chain(const AdmissibleSequence& A, const Grading& d) {
  std::vector<ReductionStep> chain;
  AdmissibleSequence current = A;
  Grading grading = d;
  while (true) {
    const auto leaves = analyze(gamma_graph(current)).leaves;
    if (leaves.empty()) break;
    chain.push_back(remove_leaf(current, grading, leaves.front()));
    current = chain.back().after;
    grading = chain.back().after_grading;
  }
  return chain;
}

}  // namespace nakayama
