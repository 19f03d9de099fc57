#include "nakayama/homological.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "nakayama/error.hpp"
#include "nakayama/quiver.hpp"

namespace nakayama {

namespace {

using State = std::pair<int, int>;  // (top, length) of an ungraded interval

State state_of(const GradedIntervalModule& M) { return M.is_zero() ? State{0, 0} : State{M.top, M.length}; }

int injective_length(const AdmissibleSequence& A, int vertex) {
  return injective_dims(A)[static_cast<std::size_t>(vertex - 1)];
}

template <class Step, class Stop>
HomDim resolution_length(const AdmissibleSequence& A, int a, Step step, Stop stop) {
  GradedIntervalModule M = simple_module(a);
  std::set<State> visited;
  for (int k = 0;; ++k) {
    if (stop(M)) return HomDim::finite(k);
    if (!visited.insert(state_of(M)).second) return HomDim::infinite();
    M = step(A, M);
  }
}

}  // namespace

int HomDim::value() const {
  if (!is_finite()) throw Error("HomDim::value on an infinite dimension");
  return value_;
}

std::string HomDim::str() const { return is_finite() ? std::to_string(value_) : "inf"; }

std::strong_ordering operator<=>(const HomDim& a, const HomDim& b) {
  if (a.is_finite() != b.is_finite()) return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.value_ <=> b.value_;
}

bool is_projective(const AdmissibleSequence& A, const GradedIntervalModule& M) {
  return M.is_zero() || M.length == A.p(M.top);
}

bool is_injective(const AdmissibleSequence& A, const GradedIntervalModule& M) {
  return M.is_zero() || M.length == injective_length(A, M.socle(A.order()));
}

GradedIntervalModule syzygy(const AdmissibleSequence& A, const Grading& d, const GradedIntervalModule& M) {
  if (M.is_zero() || is_projective(A, M)) return {};
  const int n = A.order();
  return {tau_power(M.top, M.length, n), A.p(M.top) - M.length, M.top_degree + path_degree(d, M.top, M.length)};
}

GradedIntervalModule syzygy(const AdmissibleSequence& A, const GradedIntervalModule& M) {
  return syzygy(A, Grading::zero(A.order()), M);
}

GradedIntervalModule cosyzygy(const AdmissibleSequence& A, const Grading& d, const GradedIntervalModule& M) {
  if (M.is_zero() || is_injective(A, M)) return {};
  const int n = A.order();
  const int q = injective_length(A, M.socle(n));
  const int top = tau_power(M.socle(n), -(q - 1), n);
  const int length = q - M.length;
  // The factor directly above M's top inside the envelope becomes the socle.
  const int above = tau_power(M.top, -1, n);
  const long socle_degree = M.top_degree - d.degree(above);
  return {top, length, socle_degree - path_degree(d, top, length - 1)};
}

GradedIntervalModule cosyzygy(const AdmissibleSequence& A, const GradedIntervalModule& M) {
  return cosyzygy(A, Grading::zero(A.order()), M);
}

HomDim proj_dim(const AdmissibleSequence& A, int a) {
  return resolution_length(
      A, a, [](const AdmissibleSequence& alg, const GradedIntervalModule& M) { return syzygy(alg, M); },
      [&A](const GradedIntervalModule& M) { return is_projective(A, M); });
}

HomDim inj_dim(const AdmissibleSequence& A, int a) {
  return resolution_length(
      A, a, [](const AdmissibleSequence& alg, const GradedIntervalModule& M) { return cosyzygy(alg, M); },
      [&A](const GradedIntervalModule& M) { return is_injective(A, M); });
}

DimensionReport dimension_report(const AdmissibleSequence& A) {
  DimensionReport report;
  for (int a = 1; a <= A.order(); ++a) {
    report.pd.push_back(proj_dim(A, a));
    report.id.push_back(inj_dim(A, a));
  }
  report.gldim = *std::max_element(report.pd.begin(), report.pd.end());
  return report;
}

ResolutionSummary graded_injective_resolution(const AdmissibleSequence& A, const Grading& d, int a) {
  check_grading(A, d);
  if (!d.is_positive()) throw NonPositiveGrading();
  const int n = A.order();

  ResolutionSummary out;
  std::vector<GradedIntervalModule> terms;  // Sigma^i(S_a)
  GradedIntervalModule M = simple_module(a);
  std::size_t first = 0;
  std::size_t repeat = 0;
  while (true) {
    if (M.is_zero()) {
      out.finite = true;
      out.inj_dim = HomDim::finite(static_cast<int>(terms.size()) - 1);
      break;
    }
    const auto hit = std::find_if(terms.begin(), terms.end(),
                                  [&M](const GradedIntervalModule& T) { return T.same_ungraded(M); });
    if (hit != terms.end()) {
      first = static_cast<std::size_t>(hit - terms.begin());
      repeat = terms.size();
      out.finite = false;
      out.inj_dim = HomDim::infinite();
      break;
    }
    terms.push_back(M);
    M = cosyzygy(A, d, M);
  }

  if (!out.finite) {
    // Minimal preperiod/period of the ungraded sequence, rounded up to even
    // values so that the alternating signs line up across periods.
    const std::size_t period = repeat - first;
    const std::size_t pre = first + (first % 2);
    const std::size_t steps = period % 2 == 0 ? period : 2 * period;
    out.preperiod = static_cast<int>(pre);
    out.period_steps = static_cast<int>(steps);
    while (terms.size() <= pre + steps) {
      terms.push_back(cosyzygy(A, d, terms.back()));
    }
    terms.resize(pre + steps + 1);
  }

  for (const auto& T : terms) {
    out.shifts.push_back(-T.socle_degree(d));
    out.socle_vertices.push_back(T.socle(n));
  }
  if (!out.finite) {
    out.shift_increment = out.shifts[static_cast<std::size_t>(out.preperiod + out.period_steps)] -
                          out.shifts[static_cast<std::size_t>(out.preperiod)];
  }
  return out;
}

std::vector<int> e_module_dimvec(const AdmissibleSequence& A, int a, int m) {
  const int n = A.order();
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  const auto image = image_power(gamma_graph(A), m);
  if (!std::binary_search(image.begin(), image.end(), a)) return v;
  const auto psi = psi_graph(A);
  const int target = psi.power(a, m);
  for (int b : fiber_power(psi, target, m)) v[static_cast<std::size_t>(b - 1)] = 1;
  return v;
}

std::vector<int> omega_even_dimvec(const AdmissibleSequence& A, int a, int m) {
  GradedIntervalModule M = simple_module(a);
  for (int i = 0; i < 2 * m; ++i) M = syzygy(A, M);
  return M.dimension_vector(A.order());
}

PeriodSum syzygy_period_sum(const AdmissibleSequence& A, int a) {
  if (proj_dim(A, a).is_finite()) throw FiniteProjectiveDimension(a);
  const auto psi = psi_graph(A);
  const auto inv = analyze(psi);
  const int p = inv.periodicity;

  // The syzygy sequence is eventually periodic within n * max(p) steps.
  const int bound = A.order() * A.max_p() + p + 2;
  std::vector<GradedIntervalModule> omega{simple_module(a)};
  while (static_cast<int>(omega.size()) <= 2 * (bound + p)) omega.push_back(syzygy(A, omega.back()));

  for (int r = 0; r <= bound; ++r) {
    if (!omega[static_cast<std::size_t>(2 * r + 2 * p)].same_ungraded(omega[static_cast<std::size_t>(2 * r)])) continue;
    PeriodSum out;
    out.r = r;
    for (int i = 0; i < p; ++i) out.total += omega[static_cast<std::size_t>(2 * r + 2 * i)].length;
    const int expected = inv.size_of_component(a);
    if (out.total != expected) {
      throw CrossCheckFailure("syzygy period sum " + std::to_string(out.total) + " != coresolution component size " +
                              std::to_string(expected) + " for S_" + std::to_string(a));
    }
    return out;
  }
  throw CrossCheckFailure("even syzygies of S_" + std::to_string(a) + " never repeat with period p = " +
                          std::to_string(p));
}

bool madsen_finite_gldim(const AdmissibleSequence& A) {
  const auto inv = analyze(gamma_graph(A));
  for (int a = 1; a <= A.order(); ++a) {
    if (inv.is_cyclic(a) && inj_dim(A, a).is_even()) return true;
  }
  return false;
}

bool shen_finite_gldim(const AdmissibleSequence& A) {
  const auto inv = analyze(gamma_graph(A));
  return inv.cycle_count == 1 && inv.weight == 1;
}

}  // namespace nakayama
