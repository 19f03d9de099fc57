#pragma once

#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/laurent.hpp"

namespace nakayama {

/// One leaf removal A -> e'Ae' with e' = 1 - e_leaf. The two arrows through
/// the leaf merge into one arrow whose degree is their sum; surviving
/// vertices are renumbered in increasing order.
struct ReductionStep {
  int removed_vertex;
  AdmissibleSequence before;
  Grading before_grading;
  AdmissibleSequence after;
  Grading after_grading;
  /// vertex_map[v - 1] is the new label of old vertex v, 0 for the leaf.
  std::vector<int> vertex_map;
};

/// Throws NotALeaf when the vertex has a preimage under gamma.
ReductionStep remove_leaf(const AdmissibleSequence& A, const Grading& d, int leaf);

/// eAe for e the sum of idempotents at the non-leaf vertices (Im gamma).
AdmissibleSequence epsilon_construction(const AdmissibleSequence& A);

/// Constant Kupisch series; checked against "the resolution quiver has no
/// leaf" (CrossCheckFailure if the two disagree).
bool is_selfinjective(const AdmissibleSequence& A);

struct SelfinjectiveDet {
  LaurentPoly det;
  int weight;
  int cycle_count;
};

/// (1 - t^{d l/g})^g / (1 - t^d) with g = gcd(n, l) for k Delta_n / rad^l,
/// together with w = l/g and c = g (checked against the resolution quiver).
/// Throws ZeroTotalDegree when d = 0.
SelfinjectiveDet selfinjective_det(int n, int ell, const Grading& d);

/// (1 - t^{d w})^c / (1 - t^d) by exact division; for d = 0 the limit
/// t -> 1, i.e. w when c = 1 and 0 otherwise.
LaurentPoly det_closed_form(long d_total, int w, int c);

struct DetReport {
  LaurentPoly direct;
  LaurentPoly closed_form;
  long d_total;
  int w;
  int c;
};

/// Bareiss determinant of the graded Cartan matrix next to the closed form.
/// Throws MismatchBug when they differ.
DetReport graded_cartan_det(const AdmissibleSequence& A, const Grading& d);

/// Removes the smallest leaf until the algebra is selfinjective.
std::vector<ReductionStep> reduction_chain(const AdmissibleSequence& A, const Grading& d);

}  // namespace nakayama
