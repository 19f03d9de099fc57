#include "nakayama/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "nakayama/error.hpp"

namespace nakayama {

namespace {

template <class Int>
std::vector<Int> parse_csv(std::string_view csv) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = csv.find(',', pos);
    std::string_view field = csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    Int value{};
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
      throw InvalidInput("cannot parse integer '" + std::string(field) + "' in '" + std::string(csv) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <class Seq>
std::string join(const Seq& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace

int AdmissibleSequence::max_p() const { return *std::max_element(p_.begin(), p_.end()); }

std::string AdmissibleSequence::str() const { return join(p_); }

AdmissibleSequence validate_sequence(std::span<const int> p) {
  if (p.empty()) throw InvalidInput("admissible sequence must be nonempty");
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int next = p[(i + 1) % n];
    if (p[i] <= 0 || p[i] > next + 1) throw NotAdmissible(i + 1);
  }
  return AdmissibleSequence(std::vector<int>(p.begin(), p.end()));
}

AdmissibleSequence validate_sequence(std::initializer_list<int> p) {
  return validate_sequence(std::span<const int>(p.begin(), p.size()));
}

AdmissibleSequence parse_sequence(std::string_view csv) {
  const auto values = parse_csv<int>(csv);
  return validate_sequence(values);
}

long Grading::total_degree() const { return std::accumulate(d_.begin(), d_.end(), 0L); }

bool Grading::is_positive() const {
  return std::all_of(d_.begin(), d_.end(), [](long x) { return x >= 1; });
}
bool Grading::is_length() const {
  return std::all_of(d_.begin(), d_.end(), [](long x) { return x == 1; });
}
bool Grading::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](long x) { return x == 0; });
}

std::string Grading::str() const { return join(d_); }

Grading parse_grading(std::string_view csv) { return Grading(parse_csv<long>(csv)); }

void check_grading(const AdmissibleSequence& A, const Grading& d) {
  if (d.size() != A.order()) {
    throw InvalidInput("grading has " + std::to_string(d.size()) + " entries but the algebra has order " +
                       std::to_string(A.order()));
  }
}

int tau_power(int a, long k, int n) {
  long r = (static_cast<long>(a - 1) + k) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

long path_degree(const Grading& d, int a, long k) {
  const int n = d.size();
  long sum = 0;
  for (long j = 0; j < k; ++j) sum += d.degree(tau_power(a, j, n));
  return sum;
}

std::vector<int> GradedIntervalModule::dimension_vector(int n) const {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < length; ++k) ++v[static_cast<std::size_t>(tau_power(top, k, n) - 1)];
  return v;
}

GradedIntervalModule simple_module(int a, long degree) { return {a, 1, degree}; }

GradedIntervalModule projective_module(const AdmissibleSequence& A, int a) { return {a, A.p(a), 0}; }

Matrix<Rational> cartan_matrix(const AdmissibleSequence& A) {
  const int n = A.order();
  std::vector<std::vector<long>> counts(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
  for (int b = 1; b <= n; ++b) {
    for (int k = 0; k < A.p(b); ++k) ++counts[static_cast<std::size_t>(tau_power(b, k, n) - 1)][static_cast<std::size_t>(b - 1)];
  }
  Matrix<Rational> c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t col = 0; col < c.cols(); ++col) c(r, col) = Rational(counts[r][col]);
  }
  return c;
}

Matrix<LaurentPoly> graded_cartan_matrix(const AdmissibleSequence& A, const Grading& d) {
  check_grading(A, d);
  const int n = A.order();
  Matrix<LaurentPoly> c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int b = 1; b <= n; ++b) {
    long degree = 0;
    for (int k = 0; k < A.p(b); ++k) {
      const int a = tau_power(b, k, n);
      c(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) += LaurentPoly::monomial(Rational(1), degree);
      degree += d.degree(a);
    }
  }
  return c;
}

std::vector<int> injective_dims(const AdmissibleSequence& A) {
  const int n = A.order();
  std::vector<int> q(static_cast<std::size_t>(n), 0);
  for (int b = 1; b <= n; ++b) {
    for (int k = 0; k < A.p(b); ++k) ++q[static_cast<std::size_t>(tau_power(b, k, n) - 1)];
  }
  return q;
}

GradedIntervalModule injective_module(const AdmissibleSequence& A, const Grading& d, int a) {
  check_grading(A, d);
  const int n = A.order();
  const int q = injective_dims(A)[static_cast<std::size_t>(a - 1)];
  const int top = tau_power(a, -(q - 1), n);
  return {top, q, -path_degree(d, top, q - 1)};
}

}  // namespace nakayama
