#pragma once

#include <functional>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

/// Calls visit for every admissible sequence in {1..p_max}^n, in
/// lexicographic order. Rotations are not identified.
void for_each_sequence(int n, int p_max, const std::function<void(const AdmissibleSequence&)>& visit);

std::vector<AdmissibleSequence> enumerate_sequences(int n, int p_max);

/// All admissible sequences of order 1..n_max, ordered by n, then
/// lexicographically.
std::vector<AdmissibleSequence> enumerate_up_to(int n_max, int p_max);

}  // namespace nakayama
