// nakayama: invariants of Nakayama algebras from their Kupisch series.
//
// Exit codes: 0 ok, 1 usage error, 2 invalid input, 3 verification failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nakayama/nakayama.hpp"

namespace {

using nlohmann::json;
using namespace nakayama;

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerify = 3;

json rational_json(const Rational& r) { return {{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

json vector_json(const std::optional<std::vector<Rational>>& v) {
  if (!v) return nullptr;
  json arr = json::array();
  for (const auto& r : *v) arr.push_back(rational_json(r));
  return arr;
}

json poly_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
  return j;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s;
}

Grading grading_or_length(const AdmissibleSequence& A, const std::string& csv) {
  Grading d = csv.empty() ? Grading::length(A.order()) : parse_grading(csv);
  check_grading(A, d);
  return d;
}

struct AnalyzeArgs {
  std::string seq;
  std::string grading;
  std::string format = "text";
  std::string dot;
  std::string dot_quiver = "resolution";
};

int run_analyze(const AnalyzeArgs& args) {
  const auto A = parse_sequence(args.seq);
  const auto d = grading_or_length(A, args.grading);
  const auto doc = analyze_algebra(A, d);
  std::cout << (args.format == "json" ? emit_json(doc) : emit_text(doc));
  if (!args.dot.empty()) {
    std::ofstream out(args.dot);
    if (!out) throw InvalidInput("cannot write " + args.dot);
    out << emit_dot(args.dot_quiver == "coresolution" ? psi_graph(A) : gamma_graph(A));
  }
  return 0;
}

int run_magnitude(const std::string& seq, const std::string& format) {
  const auto A = parse_sequence(seq);
  const auto report = magnitude_report(cartan_matrix(A));
  const auto inv = analyze(gamma_graph(A));
  const Rational p_over_w = magnitude_nakayama(A);
  if (format == "json") {
    const json j = {{"sequence", std::vector<int>(A.values().begin(), A.values().end())},
                    {"magnitude", report.magnitude ? rational_json(*report.magnitude) : json(nullptr)},
                    {"weighting", vector_json(report.weighting)},
                    {"coweighting", vector_json(report.coweighting)},
                    {"method", to_string(report.method)},
                    {"p", inv.periodicity},
                    {"w", inv.weight}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "magnitude      " << p_over_w << "  (p = " << inv.periodicity << ", w = " << inv.weight << ")\n";
  if (report.weighting) std::cout << "weighting      (" << join(*report.weighting) << ")\n";
  if (report.coweighting) std::cout << "coweighting    (" << join(*report.coweighting) << ")\n";
  std::cout << "method         " << to_string(report.method) << '\n';
  return 0;
}

int run_det(const std::string& seq, const std::string& grading, const std::string& format) {
  const auto A = parse_sequence(seq);
  const auto d = grading_or_length(A, grading);
  const auto det = graded_cartan_det(A, d);
  if (format == "json") {
    const json j = {{"sequence", std::vector<int>(A.values().begin(), A.values().end())},
                    {"grading", std::vector<long>(d.values().begin(), d.values().end())},
                    {"direct", poly_json(det.direct)},
                    {"closed_form", poly_json(det.closed_form)},
                    {"d_total", det.d_total},
                    {"w", det.w},
                    {"c", det.c}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "det C(t)       " << det.direct << '\n';
  std::cout << "closed form    " << det.closed_form << "  (d = " << det.d_total << ", w = " << det.w
            << ", c = " << det.c << ")\n";
  return 0;
}

int run_enumerate(int n, int p_max, bool count_only) {
  std::size_t count = 0;
  for_each_sequence(n, p_max, [&](const AdmissibleSequence& A) {
    ++count;
    if (!count_only) std::cout << A.str() << '\n';
  });
  if (count_only) std::cout << count << '\n';
  return 0;
}

struct VerifyArgs {
  int n_max = 5;
  int p_max = 6;
  std::string checks = "all";
  unsigned jobs = 0;
  int determinant_gradings = 20;
  int series_gradings = 2;
  std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
  VerifyOptions options;
  options.n_max = args.n_max;
  options.p_max = args.p_max;
  options.jobs = args.jobs;
  options.determinant_gradings = args.determinant_gradings;
  options.series_gradings = args.series_gradings;
  if (args.checks != "all") {
    options.checks.clear();
    std::size_t pos = 0;
    while (pos <= args.checks.size()) {
      const std::size_t comma = args.checks.find(',', pos);
      const std::string name = args.checks.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const auto group = parse_check_group(name);
      if (!group) throw InvalidInput("unknown check group '" + name + "'");
      options.checks.push_back(*group);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const auto report = run_verification(options);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  if (args.format == "json") {
    std::cout << emit_json(report);
    std::cerr << "wall time " << elapsed.count() << " s\n";
  } else {
    std::cout << "range          n = 1.." << report.n_max << ", p_a <= " << report.p_max << '\n';
    std::cout << "checks         ";
    for (std::size_t i = 0; i < report.checks_run.size(); ++i) std::cout << (i ? "," : "") << report.checks_run[i];
    std::cout << '\n';
    std::cout << "instances      " << report.instances << '\n';
    std::cout << "evaluations    " << report.evaluations << '\n';
    std::cout << "failures       " << report.failures.size() << '\n';
    for (const auto& f : report.failures) std::cout << "  (" << f.sequence << ") " << f.check << ": " << f.detail << '\n';
    std::cout << "wall time      " << elapsed.count() << " s\n";
  }
  return report.ok() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of Nakayama algebras: magnitude, resolution quivers, homological dimensions, "
               "graded Cartan determinants"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of one graded algebra");
  analyze_cmd->add_option("--seq", analyze_args.seq, "Kupisch series, e.g. 3,2,2")->required();
  analyze_cmd->add_option("--grading", analyze_args.grading, "Arrow degrees (default: all 1)");
  analyze_cmd->add_option("--format", analyze_args.format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--dot", analyze_args.dot, "Write the resolution quiver as Graphviz DOT");
  analyze_cmd->add_option("--dot-quiver", analyze_args.dot_quiver)->check(CLI::IsMember({"resolution", "coresolution"}));

  std::string mag_seq, mag_format = "text";
  auto* mag_cmd = app.add_subcommand("magnitude", "Weighting, coweighting and magnitude of the Cartan matrix");
  mag_cmd->add_option("--seq", mag_seq)->required();
  mag_cmd->add_option("--format", mag_format)->check(CLI::IsMember({"text", "json"}));

  std::string det_seq, det_grading, det_format = "text";
  auto* det_cmd = app.add_subcommand("det", "Graded Cartan determinant and its closed form");
  det_cmd->add_option("--seq", det_seq)->required();
  det_cmd->add_option("--grading", det_grading, "Arrow degrees (default: all 1)");
  det_cmd->add_option("--format", det_format)->check(CLI::IsMember({"text", "json"}));

  int enum_n = 1, enum_p = 1;
  bool enum_count = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "List admissible sequences of order n with entries <= p-max");
  enum_cmd->add_option("--n", enum_n)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--p-max", enum_p)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--count", enum_count, "Print only the number of sequences");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check every theorem over all algebras up to the given size");
  verify_cmd->add_option("--n-max", verify_args.n_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--p-max", verify_args.p_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--checks", verify_args.checks,
                         "all, or a comma list of quiver,magnitude,determinant,syzygy,criteria");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads (default: hardware concurrency)");
  verify_cmd->add_option("--determinant-gradings", verify_args.determinant_gradings)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--series-gradings", verify_args.series_gradings)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--format", verify_args.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_args);
    if (*mag_cmd) return run_magnitude(mag_seq, mag_format);
    if (*det_cmd) return run_det(det_seq, det_grading, det_format);
    if (*enum_cmd) return run_enumerate(enum_n, enum_p, enum_count);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const InvalidInput& e) {
    std::cerr << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitUsage;
}
