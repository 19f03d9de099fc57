#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/homological.hpp"
#include "nakayama/laurent.hpp"
#include "nakayama/rational.hpp"

namespace nakayama {

/// Everything the `analyze` command reports about one graded algebra.
/// Vertices are 1-based throughout.
struct AnalysisDocument {
  struct Quiver {
    std::vector<int> gamma;
    std::vector<int> psi;
    std::vector<std::vector<int>> cycles;
    int p = 0;
    int w = 0;
    int c = 0;
    std::vector<std::vector<int>> components;
    std::vector<int> leaves;
    friend bool operator==(const Quiver&, const Quiver&) = default;
  };
  struct Dims {
    std::vector<HomDim> pd;
    std::vector<HomDim> id;
    HomDim gldim = HomDim::finite(0);
    friend bool operator==(const Dims&, const Dims&) = default;
  };
  struct Magnitude {
    std::optional<Rational> value;
    std::optional<std::vector<Rational>> weighting;
    std::optional<std::vector<Rational>> coweighting;
    friend bool operator==(const Magnitude&, const Magnitude&) = default;
  };
  struct Determinant {
    LaurentPoly direct;
    LaurentPoly closed_form;
    friend bool operator==(const Determinant&, const Determinant&) = default;
  };
  struct Criteria {
    bool madsen = false;
    bool shen = false;
    friend bool operator==(const Criteria&, const Criteria&) = default;
  };

  std::vector<int> sequence;
  std::vector<long> grading;
  std::vector<std::vector<long>> cartan;
  std::vector<std::vector<LaurentPoly>> graded_cartan;
  Quiver quiver;
  Dims dims;
  Magnitude magnitude;
  /// alpha(1) for the given grading; absent unless the grading is positive.
  std::optional<std::vector<Rational>> alpha_at_one;
  Determinant determinant;
  Criteria criteria;

  friend bool operator==(const AnalysisDocument&, const AnalysisDocument&) = default;
};

AnalysisDocument analyze_algebra(const AdmissibleSequence& A, const Grading& d);

/// Canonical JSON: sorted keys, rationals as {"num": "...", "den": "..."},
/// Laurent polynomials as {"exponent": "coefficient"} maps, infinity as "inf".
std::string emit_json(const AnalysisDocument& doc);
AnalysisDocument parse_document(std::string_view json);

std::string emit_text(const AnalysisDocument& doc);

}  // namespace nakayama
