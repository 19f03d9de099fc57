#include "nakayama/enumerate.hpp"

#include "nakayama/error.hpp"

namespace nakayama {

namespace {

bool admissible(const std::vector<int>& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] > p[(i + 1) % n] + 1) return false;
  }
  return true;
}

}  // namespace

void for_each_sequence(int n, int p_max, const std::function<void(const AdmissibleSequence&)>& visit) {
  if (n < 1 || p_max < 1) throw InvalidInput("enumeration needs n >= 1 and p_max >= 1");
  std::vector<int> p(static_cast<std::size_t>(n), 1);
  while (true) {
    if (admissible(p)) visit(validate_sequence(p));
    // odometer, last position fastest
    int i = n - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == p_max) p[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return;
    ++p[static_cast<std::size_t>(i)];
  }
}

std::vector<AdmissibleSequence> enumerate_sequences(int n, int p_max) {
  std::vector<AdmissibleSequence> out;
  for_each_sequence(n, p_max, [&out](const AdmissibleSequence& A) { out.push_back(A); });
  return out;
}

std::vector<AdmissibleSequence> enumerate_up_to(int n_max, int p_max) {
  std::vector<AdmissibleSequence> out;
  for (int n = 1; n <= n_max; ++n) {
    for_each_sequence(n, p_max, [&out](const AdmissibleSequence& A) { out.push_back(A); });
  }
  return out;
}

}  // namespace nakayama
