#include "nakayama/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nakayama/enumerate.hpp"
#include "nakayama/error.hpp"
#include "nakayama/homological.hpp"
#include "nakayama/magnitude.hpp"
#include "nakayama/matrix.hpp"
#include "nakayama/quiver.hpp"
#include "nakayama/reduction.hpp"

namespace nakayama {

namespace {

constexpr int kMaxSyzygyPower = 4;

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string show(const std::vector<HomDim>& v) {
  std::vector<std::string> s;
  for (const auto& d : v) s.push_back(d.str());
  return show(s);
}

/// Runs named checks; a check returns an empty string on success.
class Checker {
 public:
  Checker(const AdmissibleSequence& A, std::vector<Failure>& out, std::size_t& evaluations)
      : A_(A), out_(out), evaluations_(evaluations) {}

  void run(const char* name, const std::function<std::string()>& check) {
    ++evaluations_;
    try {
      std::string detail = check();
      if (!detail.empty()) out_.push_back({A_.str(), name, std::move(detail)});
    } catch (const std::exception& e) {
      out_.push_back({A_.str(), name, std::string("exception: ") + e.what()});
    }
  }

 private:
  const AdmissibleSequence& A_;
  std::vector<Failure>& out_;
  std::size_t& evaluations_;
};

std::vector<Grading> random_gradings(const AdmissibleSequence& A, int count, long lo, long hi, bool nonzero_total,
                                     unsigned salt) {
  std::mt19937_64 rng(sequence_seed(A, salt));
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Grading> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<long> d;
    for (int a = 0; a < A.order(); ++a) d.push_back(dist(rng));
    Grading g(std::move(d));
    if (nonzero_total && g.total_degree() == 0) continue;
    out.push_back(std::move(g));
  }
  return out;
}

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

/// Opposite algebra relabelled to the standard orientation: vertex a of A
/// becomes n + 1 - a, and projectives of the opposite are injectives of A.
AdmissibleSequence opposite_sequence(const AdmissibleSequence& A) {
  const auto q = injective_dims(A);
  return validate_sequence(std::vector<int>(q.rbegin(), q.rend()));
}

// ---------------------------------------------------------------------------

void quiver_checks(const AdmissibleSequence& A, Checker& check) {
  const int n = A.order();
  const auto C = cartan_matrix(A);
  const auto gamma = gamma_graph(A);
  const auto psi = psi_graph(A);
  const auto inv = analyze(gamma);

  check.run("quiver.coprime_p_w", [&] {
    return std::gcd(inv.periodicity, inv.weight) == 1
               ? std::string()
               : "gcd(" + std::to_string(inv.periodicity) + ", " + std::to_string(inv.weight) + ") != 1";
  });
  check.run("quiver.cycles_vs_corank", [&] {
    const long corank = static_cast<long>(C.cols()) - static_cast<long>(matrix_rank(C));
    return inv.cycle_count == corank + 1
               ? std::string()
               : "c = " + std::to_string(inv.cycle_count) + ", corank + 1 = " + std::to_string(corank + 1);
  });
  check.run("quiver.dual_p_w", [&] {
    const auto dual = analyze(psi);
    return dual.periodicity == inv.periodicity && dual.weight == inv.weight
               ? std::string()
               : "R*: (p, w) = (" + std::to_string(dual.periodicity) + ", " + std::to_string(dual.weight) + ")";
  });
  check.run("quiver.leaf_iff_id_one", [&] {
    for (int a = 1; a <= n; ++a) {
      if (inv.is_leaf(a) != (inj_dim(A, a) == HomDim::finite(1))) {
        return "vertex " + std::to_string(a) + ": leaf = " + std::to_string(inv.is_leaf(a)) +
               ", id = " + inj_dim(A, a).str();
      }
    }
    return std::string();
  });
  check.run("quiver.cyclic_iff_id_even_or_inf", [&] {
    for (int a = 1; a <= n; ++a) {
      const HomDim id = inj_dim(A, a);
      if (inv.is_cyclic(a) != (id.is_even() || !id.is_finite())) {
        return "vertex " + std::to_string(a) + ": cyclic = " + std::to_string(inv.is_cyclic(a)) + ", id = " + id.str();
      }
    }
    return std::string();
  });
  check.run("quiver.ungraded_det", [&] {
    const Rational det = det_bareiss(C);
    const Rational expected(inv.cycle_count == 1 ? inv.weight : 0);
    return det == expected ? std::string() : "det C = " + det.str() + ", expected " + expected.str();
  });
  check.run("quiver.cartan_sums", [&] {
    const auto q = injective_dims(A);
    for (int a = 1; a <= n; ++a) {
      Rational col, row;
      for (int b = 1; b <= n; ++b) {
        col += C(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1));
        row += C(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
      }
      if (col != Rational(A.p(a)) || row != Rational(q[static_cast<std::size_t>(a - 1)])) {
        return "vertex " + std::to_string(a) + ": column sum " + col.str() + ", row sum " + row.str();
      }
    }
    return std::string();
  });
  check.run("quiver.graded_specializations", [&] {
    const auto length = graded_cartan_matrix(A, Grading::length(n));
    if (length.map([](const LaurentPoly& p) { return p.eval(Rational(1)); }) != C) return std::string("C(1) != C");
    if (length.map([](const LaurentPoly& p) { return p.eval(Rational(0)); }) != Matrix<Rational>::identity(C.rows())) {
      return std::string("C(0) != identity for the length grading");
    }
    const auto zero = graded_cartan_matrix(A, Grading::zero(n));
    if (zero.map([](const LaurentPoly& p) { return p.eval(Rational(1)); }) != C) return std::string("zero grading != C");
    return std::string();
  });
  check.run("quiver.leaf_row_relation", [&] {
    const Grading d = Grading::length(n);
    const auto G = graded_cartan_matrix(A, d);
    for (int a : inv.leaves) {
      const int prev = tau_power(a, -1, n);
      const LaurentPoly factor = LaurentPoly::monomial(Rational(1), d.degree(prev));
      for (int b = 1; b <= n; ++b) {
        const auto ra = static_cast<std::size_t>(a - 1);
        const auto rp = static_cast<std::size_t>(prev - 1);
        const auto c = static_cast<std::size_t>(b - 1);
        const LaurentPoly got = G(ra, c) - factor * G(rp, c);
        if (got != LaurentPoly(Rational(a == b ? 1 : 0))) {
          return "leaf " + std::to_string(a) + ", column " + std::to_string(b) + ": " + got.str();
        }
      }
    }
    return std::string();
  });
  check.run("quiver.gamma_psi_bijection", [&] {
    for (int m = 1; m <= kMaxSyzygyPower; ++m) {
      const auto im_psi = image_power(psi, m);
      const auto im_gamma = image_power(gamma, m);
      std::set<int> hit;
      for (int a : im_psi) {
        const int g = gamma.power(a, m);
        if (!contains(im_gamma, g) || psi.power(g, m) != a) return "m = " + std::to_string(m) + ", a = " + std::to_string(a);
        hit.insert(g);
      }
      if (hit.size() != im_gamma.size()) return "gamma^" + std::to_string(m) + " not onto Im gamma^m";
    }
    return std::string();
  });
}

void magnitude_checks(const AdmissibleSequence& A, const VerifyOptions& options, Checker& check) {
  const int n = A.order();
  const auto C = cartan_matrix(A);
  const auto inv = analyze(gamma_graph(A));
  const Rational p_over_w{BigInt(inv.periodicity), BigInt(inv.weight)};
  const std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));

  check.run("magnitude.p_over_w", [&] {
    const auto alpha = weighting(C);
    const auto beta = coweighting(C);
    if (!alpha || !beta) return std::string("missing weighting or coweighting");
    const Rational sa = std::accumulate(alpha->begin(), alpha->end(), Rational());
    const Rational sb = std::accumulate(beta->begin(), beta->end(), Rational());
    if (sa != p_over_w || sb != p_over_w) return "sum alpha = " + sa.str() + ", sum beta = " + sb.str();
    if (magnitude_nakayama(A) != p_over_w) return std::string("magnitude_nakayama differs");
    return std::string();
  });
  check.run("magnitude.euler_characteristic", [&] {
    if (!dimension_report(A).gldim.is_finite()) return std::string();
    const auto s = inverse_entry_sum(C);
    if (!s) return std::string("finite global dimension but singular Cartan matrix");
    return *s == p_over_w ? std::string() : "inverse entry sum " + s->str();
  });
  check.run("magnitude.cycle_weightings", [&] {
    for (const auto& cycle : inv.cycles) {
      std::vector<Rational> v(static_cast<std::size_t>(n));
      for (int a : cycle) v[static_cast<std::size_t>(a - 1)] = Rational(BigInt(1), BigInt(inv.weight));
      if (C * v != ones) return "cycle starting at " + std::to_string(cycle.front());
    }
    return std::string();
  });
  check.run("magnitude.weighting_structure", [&] {
    const auto alpha = *weighting(C);
    for (int a = 1; a <= n; ++a) {
      if (!inv.is_cyclic(a) && !alpha[static_cast<std::size_t>(a - 1)].is_zero()) {
        return "non-cyclic vertex " + std::to_string(a) + " has weight " + alpha[static_cast<std::size_t>(a - 1)].str();
      }
    }
    for (const auto& cycle : inv.cycles) {
      for (int a : cycle) {
        if (alpha[static_cast<std::size_t>(a - 1)] != alpha[static_cast<std::size_t>(cycle.front() - 1)]) {
          return "weighting not constant on the cycle through " + std::to_string(cycle.front());
        }
      }
    }
    return std::string();
  });
  check.run("magnitude.pivot_independence", [&] {
    // Reverse the column order so elimination picks different pivots.
    Matrix<Rational> R(C.rows(), C.cols());
    for (std::size_t r = 0; r < C.rows(); ++r) {
      for (std::size_t c = 0; c < C.cols(); ++c) R(r, c) = C(r, C.cols() - 1 - c);
    }
    const auto alpha = weighting(R);
    const auto beta = coweighting(R);
    if (!alpha || !beta) return std::string("missing weighting after permutation");
    const Rational sa = std::accumulate(alpha->begin(), alpha->end(), Rational());
    const Rational sb = std::accumulate(beta->begin(), beta->end(), Rational());
    if (sa != p_over_w || sb != p_over_w) return "permuted sums " + sa.str() + ", " + sb.str();
    return std::string();
  });
  check.run("magnitude.alpha_at_one", [&] {
    const auto violations = theorem_main_violations(A);
    if (!violations.empty()) return violations.front();
    const auto gw = graded_weighting(A, Grading::length(n));
    for (int a = 1; a <= n; ++a) {
      const HomDim id = inj_dim(A, a);
      const Rational& v = gw.at_one[static_cast<std::size_t>(a - 1)];
      const bool ok = id.is_odd()    ? v.is_zero()
                      : id.is_even() ? v == Rational(1)
                                     : (v > Rational(0) && v < Rational(1));
      if (!ok) return "vertex " + std::to_string(a) + ": id " + id.str() + " but alpha(1) = " + v.str();
    }
    return std::string();
  });
  check.run("magnitude.series_vs_solve", [&] {
    auto gradings = random_gradings(A, options.series_gradings, 1, 4, false, 7U);
    gradings.insert(gradings.begin(), Grading::length(n));
    for (const auto& d : gradings) {
      const auto gw = graded_weighting(A, d);
      for (int a = 1; a <= n; ++a) {
        const RatFunc series = alpha_from_resolution(A, d, a);
        if (series != gw.alpha[static_cast<std::size_t>(a - 1)]) {
          return "grading (" + d.str() + "), vertex " + std::to_string(a) + ": " + series.str() + " vs " +
                 gw.alpha[static_cast<std::size_t>(a - 1)].str();
        }
      }
    }
    return std::string();
  });
}

void determinant_checks(const AdmissibleSequence& A, const VerifyOptions& options, Checker& check) {
  const int n = A.order();
  auto gradings = random_gradings(A, options.determinant_gradings, -2, 3, true, 11U);
  gradings.insert(gradings.begin(), Grading::length(n));

  check.run("determinant.closed_form", [&] {
    for (const auto& d : gradings) {
      const auto report = graded_cartan_det(A, d);
      if (report.direct != report.closed_form) return "grading (" + d.str() + ")";
    }
    return std::string();
  });
  check.run("determinant.zero_grading", [&] {
    const auto report = graded_cartan_det(A, Grading::zero(n));
    const Rational integer_det = det_bareiss(cartan_matrix(A));
    return report.direct == LaurentPoly(integer_det) ? std::string() : "det " + report.direct.str();
  });
  check.run("determinant.reduction_chain", [&] {
    for (const auto& d : gradings) {
      for (const auto& step : reduction_chain(A, d)) {
        const std::string where = "grading (" + d.str() + "), removing " + std::to_string(step.removed_vertex) +
                                  " from (" + step.before.str() + "): ";
        const auto before_det = det_bareiss(graded_cartan_matrix(step.before, step.before_grading));
        const auto after_det = det_bareiss(graded_cartan_matrix(step.after, step.after_grading));
        if (before_det != after_det) return where + "determinant changed";
        if (step.before_grading.total_degree() != step.after_grading.total_degree()) return where + "total degree changed";

        const auto leaf = static_cast<std::size_t>(step.removed_vertex - 1);
        if (graded_cartan_matrix(step.before, step.before_grading).without({leaf}, {leaf}) !=
            graded_cartan_matrix(step.after, step.after_grading)) {
          return where + "graded Cartan matrix is not the submatrix";
        }

        const auto g_before = gamma_graph(step.before);
        const auto g_after = gamma_graph(step.after);
        std::vector<int> survivors;
        for (int v = 1; v <= step.before.order(); ++v) {
          if (v != step.removed_vertex) survivors.push_back(v);
        }
        if (g_before.restricted(survivors).images() != g_after.images()) return where + "R_A' != R_A minus the leaf";
        const auto ib = analyze(g_before);
        const auto ia = analyze(g_after);
        if (ib.weight != ia.weight || ib.cycle_count != ia.cycle_count) return where + "w or c changed";
      }
    }
    return std::string();
  });
  check.run("determinant.epsilon_construction", [&] {
    const auto eps = epsilon_construction(A);
    const bool self = is_selfinjective(A);
    if (self != (eps == A)) return std::string("eps(A) = A disagrees with selfinjectivity");
    if (!self && eps.order() >= A.order()) return std::string("eps(A) does not shrink");
    const auto image = image_power(gamma_graph(A), 1);
    std::vector<std::size_t> drop;
    for (int v = 1; v <= n; ++v) {
      if (!contains(image, v)) drop.push_back(static_cast<std::size_t>(v - 1));
    }
    if (cartan_matrix(A).without(drop, drop) != cartan_matrix(eps)) return std::string("Cartan submatrix mismatch");
    const auto ia = analyze(gamma_graph(A));
    const auto ie = analyze(gamma_graph(eps));
    if (ia.weight != ie.weight || ia.cycle_count != ie.cycle_count) return std::string("w or c changed");
    return std::string();
  });
  check.run("determinant.selfinjective_closed_form", [&] {
    if (!is_selfinjective(A)) return std::string();
    const int ell = A.p(1);
    for (const auto& d : gradings) {
      const auto closed = selfinjective_det(n, ell, d);
      const auto direct = det_bareiss(graded_cartan_matrix(A, d));
      if (closed.det != direct) return "grading (" + d.str() + "): " + closed.det.str() + " vs " + direct.str();
    }
    return std::string();
  });
}

void syzygy_checks(const AdmissibleSequence& A, Checker& check) {
  const int n = A.order();
  const auto gamma = gamma_graph(A);
  const auto psi = psi_graph(A);
  const auto dims = dimension_report(A);
  const auto pd = [&dims](int a) { return dims.pd[static_cast<std::size_t>(a - 1)]; };

  check.run("syzygy.top_of_even_syzygy", [&] {
    for (int a = 1; a <= n; ++a) {
      GradedIntervalModule M = simple_module(a);
      for (int m = 1; m <= kMaxSyzygyPower; ++m) {
        M = syzygy(A, syzygy(A, M));
        if (pd(a) >= HomDim::finite(2 * m) && M.top != gamma.power(a, m)) {
          return "a = " + std::to_string(a) + ", m = " + std::to_string(m);
        }
      }
    }
    return std::string();
  });
  check.run("syzygy.second_syzygy_factors", [&] {
    for (int a = 1; a <= n; ++a) {
      if (A.p(a) == 1) continue;  // S_a projective
      const auto v = omega_even_dimvec(A, a, 1);
      for (int b = 1; b <= n; ++b) {
        if (v[static_cast<std::size_t>(b - 1)] != (psi(b) == a ? 1 : 0)) {
          return "a = " + std::to_string(a) + ": Omega^2 dimension vector " + show(v);
        }
      }
    }
    return std::string();
  });
  check.run("syzygy.even_syzygy_fibers", [&] {
    for (int a = 1; a <= n; ++a) {
      for (int m = 1; m <= kMaxSyzygyPower; ++m) {
        const auto omega = omega_even_dimvec(A, a, m);
        std::vector<int> expected(static_cast<std::size_t>(n), 0);
        if (pd(a) >= HomDim::finite(2 * m - 1)) {
          for (int b : fiber_power(psi, a, m)) expected[static_cast<std::size_t>(b - 1)] = 1;
        }
        if (omega != expected) {
          return "a = " + std::to_string(a) + ", m = " + std::to_string(m) + ": " + show(omega) + " vs " + show(expected);
        }
        if (pd(a) >= HomDim::finite(2 * m) && omega != e_module_dimvec(A, gamma.power(a, m), m)) {
          return "a = " + std::to_string(a) + ", m = " + std::to_string(m) + ": Omega^2m differs from E^m";
        }
      }
    }
    return std::string();
  });
  check.run("syzygy.odd_pd_vs_image_psi", [&] {
    for (int m = 1; m <= kMaxSyzygyPower; ++m) {
      const auto image = image_power(psi, m);
      for (int a = 1; a <= n; ++a) {
        bool odd_small = false;
        for (int k = 1; k <= 2 * m - 1; k += 2) odd_small = odd_small || pd(a) == HomDim::finite(k);
        if (odd_small == contains(image, a)) return "a = " + std::to_string(a) + ", m = " + std::to_string(m);
      }
    }
    return std::string();
  });
  check.run("syzygy.e_modules_partition", [&] {
    for (int m = 1; m <= kMaxSyzygyPower; ++m) {
      std::vector<int> total(static_cast<std::size_t>(n), 0);
      for (int a = 1; a <= n; ++a) {
        const auto v = e_module_dimvec(A, a, m);
        for (int b = 0; b < n; ++b) total[static_cast<std::size_t>(b)] += v[static_cast<std::size_t>(b)];
      }
      if (total != std::vector<int>(static_cast<std::size_t>(n), 1)) return "m = " + std::to_string(m) + ": " + show(total);
    }
    return std::string();
  });
  check.run("syzygy.period_sum", [&] {
    for (int a = 1; a <= n; ++a) {
      if (pd(a).is_finite()) continue;
      syzygy_period_sum(A, a);  // throws on mismatch
    }
    return std::string();
  });
  check.run("syzygy.period_steps", [&] {
    const int p = analyze(gamma).periodicity;
    for (int a = 1; a <= n; ++a) {
      const auto res = graded_injective_resolution(A, Grading::length(n), a);
      if (res.finite) continue;
      if (res.period_steps != 2 * p) {
        return "a = " + std::to_string(a) + ": period " + std::to_string(res.period_steps) + ", 2p = " + std::to_string(2 * p);
      }
    }
    return std::string();
  });
  check.run("syzygy.injective_dims_by_duality", [&] {
    const auto op = opposite_sequence(A);
    for (int a = 1; a <= n; ++a) {
      if (dims.id[static_cast<std::size_t>(a - 1)] != proj_dim(op, n + 1 - a)) {
        return "id " + show(dims.id) + " vs opposite pd at " + std::to_string(a);
      }
    }
    return std::string();
  });
  check.run("syzygy.interval_bounds", [&] {
    const Grading d = Grading::length(n);
    for (int a = 1; a <= n; ++a) {
      for (bool forward : {true, false}) {
        GradedIntervalModule M = simple_module(a);
        for (int i = 0; i < 2 * n * A.max_p() + 2; ++i) {
          M = forward ? syzygy(A, d, M) : cosyzygy(A, d, M);
          if (!M.is_zero() && M.length > A.p(M.top)) return "module (" + std::to_string(M.top) + ", " + std::to_string(M.length) + ")";
        }
      }
    }
    return std::string();
  });
}

void criteria_checks(const AdmissibleSequence& A, Checker& check) {
  check.run("criteria.equivalence", [&] {
    const bool madsen = madsen_finite_gldim(A);
    const bool shen = shen_finite_gldim(A);
    const bool direct = dimension_report(A).gldim.is_finite();
    if (madsen == shen && shen == direct) return std::string();
    return "madsen = " + std::to_string(madsen) + ", shen = " + std::to_string(shen) + ", gldim finite = " +
           std::to_string(direct);
  });
  check.run("criteria.dimension_consistency", [&] {
    const auto dims = dimension_report(A);
    const bool pd_finite = std::all_of(dims.pd.begin(), dims.pd.end(), [](const HomDim& d) { return d.is_finite(); });
    const bool id_finite = std::all_of(dims.id.begin(), dims.id.end(), [](const HomDim& d) { return d.is_finite(); });
    const HomDim max_id = *std::max_element(dims.id.begin(), dims.id.end());
    if (pd_finite != id_finite || dims.gldim.is_finite() != pd_finite) return "pd " + show(dims.pd) + ", id " + show(dims.id);
    if (dims.gldim != max_id) return "gldim " + dims.gldim.str() + " but max id " + max_id.str();
    return std::string();
  });
}

}  // namespace

std::string to_string(CheckGroup group) {
  switch (group) {
    case CheckGroup::quiver:
      return "quiver";
    case CheckGroup::magnitude:
      return "magnitude";
    case CheckGroup::determinant:
      return "determinant";
    case CheckGroup::syzygy:
      return "syzygy";
    case CheckGroup::criteria:
      return "criteria";
  }
  return "unknown";
}

std::optional<CheckGroup> parse_check_group(std::string_view name) {
  for (CheckGroup g : all_check_groups()) {
    if (to_string(g) == name) return g;
  }
  return std::nullopt;
}

std::vector<CheckGroup> all_check_groups() {
  return {CheckGroup::quiver, CheckGroup::magnitude, CheckGroup::determinant, CheckGroup::syzygy, CheckGroup::criteria};
}

unsigned long long sequence_seed(const AdmissibleSequence& A, unsigned salt) {
  // FNV-1a over the sequence and the salt.
  unsigned long long h = 1469598103934665603ULL;
  auto mix = [&h](unsigned long long v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(salt);
  for (int p : A.values()) mix(static_cast<unsigned long long>(p));
  mix(static_cast<unsigned long long>(A.order()));
  return h;
}

std::vector<Failure> check_algebra(const AdmissibleSequence& A, CheckGroup group, const VerifyOptions& options,
                                   std::size_t* evaluations) {
  std::vector<Failure> failures;
  std::size_t count = 0;
  Checker check(A, failures, count);
  try {
    switch (group) {
      case CheckGroup::quiver:
        quiver_checks(A, check);
        break;
      case CheckGroup::magnitude:
        magnitude_checks(A, options, check);
        break;
      case CheckGroup::determinant:
        determinant_checks(A, options, check);
        break;
      case CheckGroup::syzygy:
        syzygy_checks(A, check);
        break;
      case CheckGroup::criteria:
        criteria_checks(A, check);
        break;
    }
  } catch (const std::exception& e) {
    // setup (quiver analysis etc.) failed before any named check ran
    failures.push_back({A.str(), to_string(group), std::string("exception: ") + e.what()});
  }
  if (evaluations) *evaluations += count;
  return failures;
}

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report;
  report.n_max = options.n_max;
  report.p_max = options.p_max;
  for (CheckGroup g : options.checks) report.checks_run.push_back(to_string(g));

  const auto algebras = enumerate_up_to(options.n_max, options.p_max);
  report.instances = algebras.size();

  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, algebras.size())));

  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::vector<std::pair<std::size_t, Failure>> failures;
  std::size_t evaluations = 0;

  auto worker = [&] {
    std::vector<std::pair<std::size_t, Failure>> local;
    std::size_t local_evals = 0;
    for (std::size_t i = next++; i < algebras.size(); i = next++) {
      for (CheckGroup g : options.checks) {
        for (auto& f : check_algebra(algebras[i], g, options, &local_evals)) local.emplace_back(i, std::move(f));
      }
    }
    std::lock_guard lock(merge);
    failures.insert(failures.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    evaluations += local_evals;
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(failures.begin(), failures.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second.check, x.second.detail) < std::tie(y.first, y.second.check, y.second.detail);
  });
  for (auto& [index, f] : failures) report.failures.push_back(std::move(f));
  report.evaluations = evaluations;
  return report;
}

std::string emit_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"sequence", f.sequence}, {"check", f.check}, {"detail", f.detail}});
  }
  const nlohmann::json j = {{"n_range", {1, report.n_max}},
                            {"p_max", report.p_max},
                            {"checks_run", report.checks_run},
                            {"instances", report.instances},
                            {"evaluations", report.evaluations},
                            {"failures", failures}};
  return j.dump(2) + "\n";
}

}  // namespace nakayama
