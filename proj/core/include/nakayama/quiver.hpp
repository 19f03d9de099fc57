#pragma once

#include <string>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

enum class QuiverKind { resolution, coresolution };

/// A map of the vertex set 1..n to itself, together with the dimension label
/// each vertex carries (p_a for the resolution quiver, q_a for the
/// coresolution quiver).
class FunctionalGraph {
 public:
  FunctionalGraph(QuiverKind kind, std::vector<int> next, std::vector<int> dims);

  QuiverKind kind() const { return kind_; }
  int order() const { return static_cast<int>(next_.size()); }
  int operator()(int a) const { return next_[static_cast<std::size_t>(a - 1)]; }
  /// G^m(a).
  int power(int a, long m) const;
  int dim(int a) const { return dims_[static_cast<std::size_t>(a - 1)]; }
  const std::vector<int>& images() const { return next_; }
  const std::vector<int>& dims() const { return dims_; }

  /// Graph restricted to the listed vertices (which must be closed under
  /// the map); vertices are renumbered in increasing order.
  FunctionalGraph restricted(const std::vector<int>& keep) const;

  friend bool operator==(const FunctionalGraph&, const FunctionalGraph&) = default;

 private:
  QuiverKind kind_;
  std::vector<int> next_;
  std::vector<int> dims_;
};

/// Resolution quiver: gamma(a) = tau^{p_a}(a).
FunctionalGraph gamma_graph(const AdmissibleSequence& A);
/// Coresolution quiver: psi(a) = tau^{-q_a}(a).
FunctionalGraph psi_graph(const AdmissibleSequence& A);

struct QuiverInvariants {
  /// Each cycle starts at its smallest vertex and follows the map.
  std::vector<std::vector<int>> cycles;
  int periodicity = 0;
  int weight = 0;
  int cycle_count = 0;
  /// 1-based component index per vertex; components numbered by smallest vertex.
  std::vector<int> component_id;
  /// n_a: size of the component containing a.
  std::vector<int> component_size;
  std::vector<bool> cyclic;
  std::vector<int> leaves;

  bool is_cyclic(int a) const { return cyclic[static_cast<std::size_t>(a - 1)]; }
  int component_of(int a) const { return component_id[static_cast<std::size_t>(a - 1)]; }
  int size_of_component(int a) const { return component_size[static_cast<std::size_t>(a - 1)]; }
  bool is_leaf(int a) const;
  /// Vertex lists of every component, in component order.
  std::vector<std::vector<int>> components() const;
};

/// Cycles, periodicity, weight (sum of the dimension labels on a cycle over
/// n), components and leaves. Throws NonUniformCycles when cycles disagree
/// on periodicity or weight, or a weight is not an integer.
QuiverInvariants analyze(const FunctionalGraph& G);

/// {G^m(a) : a in 1..n}, sorted.
std::vector<int> image_power(const FunctionalGraph& G, long m);
/// {b : G^m(b) = a}, sorted.
std::vector<int> fiber_power(const FunctionalGraph& G, int a, long m);

/// Graphviz rendering: node "a (dim)", edge a -> G(a), cyclic vertices
/// drawn with a double border.
std::string emit_dot(const FunctionalGraph& G);

}  // namespace nakayama
