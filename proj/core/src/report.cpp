#include "nakayama/report.hpp"

#include <sstream>

#include <json.hpp>

#include "nakayama/error.hpp"
#include "nakayama/magnitude.hpp"
#include "nakayama/quiver.hpp"
#include "nakayama/reduction.hpp"

namespace nakayama {

using json = nlohmann::json;

namespace {

json rational_to_json(const Rational& r) { return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

Rational rational_from_json(const json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

json poly_to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
  return j;
}

LaurentPoly poly_from_json(const json& j) {
  std::map<long, Rational> terms;
  for (const auto& [key, value] : j.items()) terms.emplace(std::stol(key), Rational::parse(value.get<std::string>()));
  return LaurentPoly::from_terms(terms);
}

json dim_to_json(const HomDim& d) { return d.is_finite() ? json(d.value()) : json("inf"); }

HomDim dim_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw InvalidInput("bad dimension " + j.dump());
    return HomDim::infinite();
  }
  return HomDim::finite(j.get<int>());
}

json vector_to_json(const std::optional<std::vector<Rational>>& v) {
  if (!v) return nullptr;
  json arr = json::array();
  for (const auto& r : *v) arr.push_back(rational_to_json(r));
  return arr;
}

std::optional<std::vector<Rational>> vector_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    if constexpr (std::is_same_v<T, HomDim>) {
      os << v[i].str();
    } else {
      os << v[i];
    }
  }
  return os.str();
}

}  // namespace

AnalysisDocument analyze_algebra(const AdmissibleSequence& A, const Grading& d) {
  check_grading(A, d);
  AnalysisDocument doc;
  doc.sequence.assign(A.values().begin(), A.values().end());
  doc.grading.assign(d.values().begin(), d.values().end());

  const auto C = cartan_matrix(A);
  for (std::size_t r = 0; r < C.rows(); ++r) {
    std::vector<long> row;
    for (std::size_t c = 0; c < C.cols(); ++c) row.push_back(C(r, c).to_long());
    doc.cartan.push_back(std::move(row));
  }
  const auto G = graded_cartan_matrix(A, d);
  for (std::size_t r = 0; r < G.rows(); ++r) doc.graded_cartan.push_back(G.row(r));

  const auto gamma = gamma_graph(A);
  const auto psi = psi_graph(A);
  const auto inv = analyze(gamma);
  doc.quiver.gamma = gamma.images();
  doc.quiver.psi = psi.images();
  doc.quiver.cycles = inv.cycles;
  doc.quiver.p = inv.periodicity;
  doc.quiver.w = inv.weight;
  doc.quiver.c = inv.cycle_count;
  doc.quiver.components = inv.components();
  doc.quiver.leaves = inv.leaves;

  const auto dims = dimension_report(A);
  doc.dims.pd = dims.pd;
  doc.dims.id = dims.id;
  doc.dims.gldim = dims.gldim;

  const auto mag = magnitude_report(C);
  doc.magnitude.value = mag.magnitude;
  doc.magnitude.weighting = mag.weighting;
  doc.magnitude.coweighting = mag.coweighting;
  // cross-check against p/w
  magnitude_nakayama(A);

  if (d.is_positive()) doc.alpha_at_one = graded_weighting(A, d).at_one;

  const auto det = graded_cartan_det(A, d);
  doc.determinant.direct = det.direct;
  doc.determinant.closed_form = det.closed_form;

  doc.criteria.madsen = madsen_finite_gldim(A);
  doc.criteria.shen = shen_finite_gldim(A);
  return doc;
}

std::string emit_json(const AnalysisDocument& doc) {
  json j;
  j["sequence"] = doc.sequence;
  j["grading"] = doc.grading;
  j["cartan"] = doc.cartan;
  json graded = json::array();
  for (const auto& row : doc.graded_cartan) {
    json r = json::array();
    for (const auto& p : row) r.push_back(poly_to_json(p));
    graded.push_back(std::move(r));
  }
  j["graded_cartan"] = std::move(graded);

  j["quiver"] = {{"gamma", doc.quiver.gamma},     {"psi", doc.quiver.psi},
                 {"cycles", doc.quiver.cycles},   {"p", doc.quiver.p},
                 {"w", doc.quiver.w},             {"c", doc.quiver.c},
                 {"components", doc.quiver.components}, {"leaves", doc.quiver.leaves}};

  json pd = json::array();
  json id = json::array();
  for (const auto& x : doc.dims.pd) pd.push_back(dim_to_json(x));
  for (const auto& x : doc.dims.id) id.push_back(dim_to_json(x));
  j["dims"] = {{"pd", pd}, {"id", id}, {"gldim", dim_to_json(doc.dims.gldim)}};

  j["magnitude"] = {{"value", doc.magnitude.value ? rational_to_json(*doc.magnitude.value) : json(nullptr)},
                    {"weighting", vector_to_json(doc.magnitude.weighting)},
                    {"coweighting", vector_to_json(doc.magnitude.coweighting)}};
  j["alpha_at_one"] = vector_to_json(doc.alpha_at_one);
  j["determinant"] = {{"direct", poly_to_json(doc.determinant.direct)},
                      {"closed_form", poly_to_json(doc.determinant.closed_form)}};
  j["criteria"] = {{"madsen", doc.criteria.madsen}, {"shen", doc.criteria.shen}};
  return j.dump(2) + "\n";
}

AnalysisDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  try {
    AnalysisDocument doc;
    doc.sequence = j.at("sequence").get<std::vector<int>>();
    doc.grading = j.at("grading").get<std::vector<long>>();
    doc.cartan = j.at("cartan").get<std::vector<std::vector<long>>>();
    for (const auto& row : j.at("graded_cartan")) {
      std::vector<LaurentPoly> r;
      for (const auto& p : row) r.push_back(poly_from_json(p));
      doc.graded_cartan.push_back(std::move(r));
    }
    const auto& q = j.at("quiver");
    doc.quiver.gamma = q.at("gamma").get<std::vector<int>>();
    doc.quiver.psi = q.at("psi").get<std::vector<int>>();
    doc.quiver.cycles = q.at("cycles").get<std::vector<std::vector<int>>>();
    doc.quiver.p = q.at("p").get<int>();
    doc.quiver.w = q.at("w").get<int>();
    doc.quiver.c = q.at("c").get<int>();
    doc.quiver.components = q.at("components").get<std::vector<std::vector<int>>>();
    doc.quiver.leaves = q.at("leaves").get<std::vector<int>>();

    const auto& dims = j.at("dims");
    for (const auto& x : dims.at("pd")) doc.dims.pd.push_back(dim_from_json(x));
    for (const auto& x : dims.at("id")) doc.dims.id.push_back(dim_from_json(x));
    doc.dims.gldim = dim_from_json(dims.at("gldim"));

    const auto& mag = j.at("magnitude");
    if (!mag.at("value").is_null()) doc.magnitude.value = rational_from_json(mag.at("value"));
    doc.magnitude.weighting = vector_from_json(mag.at("weighting"));
    doc.magnitude.coweighting = vector_from_json(mag.at("coweighting"));
    doc.alpha_at_one = vector_from_json(j.at("alpha_at_one"));
    doc.determinant.direct = poly_from_json(j.at("determinant").at("direct"));
    doc.determinant.closed_form = poly_from_json(j.at("determinant").at("closed_form"));
    doc.criteria.madsen = j.at("criteria").at("madsen").get<bool>();
    doc.criteria.shen = j.at("criteria").at("shen").get<bool>();
    return doc;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed analysis document: ") + e.what());
  }
}

std::string emit_text(const AnalysisDocument& doc) {
  std::ostringstream os;
  os << "sequence       " << join(doc.sequence, ",") << '\n';
  os << "grading        " << join(doc.grading, ",") << '\n';
  os << "cartan\n";
  for (const auto& row : doc.cartan) os << "  [" << join(row) << "]\n";
  os << "graded cartan\n";
  for (const auto& row : doc.graded_cartan) os << "  [" << join(row) << "]\n";
  os << "gamma          ";
  for (std::size_t a = 0; a < doc.quiver.gamma.size(); ++a) {
    os << (a ? ", " : "") << a + 1 << "->" << doc.quiver.gamma[a];
  }
  os << "\npsi            ";
  for (std::size_t a = 0; a < doc.quiver.psi.size(); ++a) {
    os << (a ? ", " : "") << a + 1 << "->" << doc.quiver.psi[a];
  }
  os << '\n';
  os << "cycles         ";
  for (std::size_t i = 0; i < doc.quiver.cycles.size(); ++i) os << (i ? " " : "") << '{' << join(doc.quiver.cycles[i], ",") << '}';
  os << '\n';
  os << "p / w / c      " << doc.quiver.p << " / " << doc.quiver.w << " / " << doc.quiver.c << '\n';
  os << "leaves         {" << join(doc.quiver.leaves, ",") << "}\n";
  os << "pd             (" << join(doc.dims.pd) << ")\n";
  os << "id             (" << join(doc.dims.id) << ")\n";
  os << "gldim          " << doc.dims.gldim.str() << '\n';
  os << "magnitude      " << (doc.magnitude.value ? doc.magnitude.value->str() : "none") << '\n';
  if (doc.magnitude.weighting) os << "weighting      (" << join(*doc.magnitude.weighting) << ")\n";
  if (doc.magnitude.coweighting) os << "coweighting    (" << join(*doc.magnitude.coweighting) << ")\n";
  if (doc.alpha_at_one) os << "alpha(1)       (" << join(*doc.alpha_at_one) << ")\n";
  os << "graded det     " << doc.determinant.direct << "  [closed form " << doc.determinant.closed_form << "]\n";
  os << "finite gldim   madsen=" << (doc.criteria.madsen ? "yes" : "no") << " shen=" << (doc.criteria.shen ? "yes" : "no")
     << '\n';
  return os.str();
}

}  // namespace nakayama
