#include "nakayama/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nakayama/error.hpp"

namespace nakayama {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // keep the smaller index as root so component numbering is stable
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FunctionalGraph::FunctionalGraph(QuiverKind kind, std::vector<int> next, std::vector<int> dims)
    : kind_(kind), next_(std::move(next)), dims_(std::move(dims)) {
  const int n = order();
  if (dims_.size() != next_.size()) throw DimensionMismatch("functional graph labels");
  for (int v : next_) {
    if (v < 1 || v > n) throw InvalidInput("functional graph image out of range");
  }
}

int FunctionalGraph::power(int a, long m) const {
  for (long i = 0; i < m; ++i) a = (*this)(a);
  return a;
}

FunctionalGraph FunctionalGraph::restricted(const std::vector<int>& keep) const {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> relabel(next_.size() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i) + 1;
  std::vector<int> next, dims;
  for (int v : sorted) {
    const int image = relabel[static_cast<std::size_t>((*this)(v))];
    if (image == 0) throw InvalidInput("restricted vertex set is not closed under the map");
    next.push_back(image);
    dims.push_back(dim(v));
  }
  return FunctionalGraph(kind_, std::move(next), std::move(dims));
}

FunctionalGraph gamma_graph(const AdmissibleSequence& A) {
  const int n = A.order();
  std::vector<int> next, dims;
  for (int a = 1; a <= n; ++a) {
    next.push_back(tau_power(a, A.p(a), n));
    dims.push_back(A.p(a));
  }
  return FunctionalGraph(QuiverKind::resolution, std::move(next), std::move(dims));
}

FunctionalGraph psi_graph(const AdmissibleSequence& A) {
  const int n = A.order();
  const auto q = injective_dims(A);
  std::vector<int> next;
  for (int a = 1; a <= n; ++a) next.push_back(tau_power(a, -q[static_cast<std::size_t>(a - 1)], n));
  return FunctionalGraph(QuiverKind::coresolution, std::move(next), q);
}

bool QuiverInvariants::is_leaf(int a) const { return std::binary_search(leaves.begin(), leaves.end(), a); }

std::vector<std::vector<int>> QuiverInvariants::components() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(cycle_count));
  for (std::size_t v = 0; v < component_id.size(); ++v) {
    out[static_cast<std::size_t>(component_id[v] - 1)].push_back(static_cast<int>(v) + 1);
  }
  return out;
}

QuiverInvariants analyze(const FunctionalGraph& G) {
  const int n = G.order();
  QuiverInvariants inv;

  // After n applications every vertex has fallen onto a cycle.
  inv.cyclic.assign(static_cast<std::size_t>(n), false);
  for (int v : image_power(G, n)) inv.cyclic[static_cast<std::size_t>(v - 1)] = true;

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int a = 1; a <= n; ++a) {
    if (!inv.is_cyclic(a) || seen[static_cast<std::size_t>(a - 1)]) continue;
    std::vector<int> cycle;
    int v = a;
    do {
      seen[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v);
      v = G(v);
    } while (v != a);
    inv.cycles.push_back(std::move(cycle));
  }

  for (const auto& cycle : inv.cycles) {
    const int period = static_cast<int>(cycle.size());
    long label_sum = 0;
    for (int v : cycle) label_sum += G.dim(v);
    const Rational weight{BigInt(label_sum), BigInt(n)};
    if (!weight.is_integer()) {
      throw NonUniformCycles("cycle weight " + weight.str() + " is not an integer");
    }
    const int w = static_cast<int>(weight.to_long());
    if (inv.periodicity == 0) {
      inv.periodicity = period;
      inv.weight = w;
    } else if (inv.periodicity != period || inv.weight != w) {
      throw NonUniformCycles("cycles with (p, w) = (" + std::to_string(inv.periodicity) + ", " +
                             std::to_string(inv.weight) + ") and (" + std::to_string(period) + ", " +
                             std::to_string(w) + ")");
    }
  }
  inv.cycle_count = static_cast<int>(inv.cycles.size());

  DisjointSets sets(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) sets.unite(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(G(a) - 1));
  std::vector<int> index_of_root(static_cast<std::size_t>(n), 0);
  int components = 0;
  inv.component_id.resize(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) {
    const std::size_t root = sets.find(v);
    if (index_of_root[root] == 0) index_of_root[root] = ++components;
    inv.component_id[v] = index_of_root[root];
  }
  std::vector<int> sizes(static_cast<std::size_t>(components) + 1, 0);
  for (int id : inv.component_id) ++sizes[static_cast<std::size_t>(id)];
  for (int id : inv.component_id) inv.component_size.push_back(sizes[static_cast<std::size_t>(id)]);
  if (components != inv.cycle_count) {
    throw NonUniformCycles(std::to_string(components) + " components but " + std::to_string(inv.cycle_count) +
                           " cycles");
  }

  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int a = 1; a <= n; ++a) hit[static_cast<std::size_t>(G(a) - 1)] = true;
  for (int a = 1; a <= n; ++a) {
    if (!hit[static_cast<std::size_t>(a - 1)]) inv.leaves.push_back(a);
  }
  return inv;
}

std::vector<int> image_power(const FunctionalGraph& G, long m) {
  const int n = G.order();
  std::vector<bool> in(static_cast<std::size_t>(n), true);
  for (long step = 0; step < m; ++step) {
    std::vector<bool> next(static_cast<std::size_t>(n), false);
    bool changed = false;
    for (int a = 1; a <= n; ++a) {
      if (in[static_cast<std::size_t>(a - 1)]) next[static_cast<std::size_t>(G(a) - 1)] = true;
    }
    changed = next != in;
    in = std::move(next);
    if (!changed) break;  // a fixed set stays fixed
  }
  std::vector<int> out;
  for (int a = 1; a <= n; ++a) {
    if (in[static_cast<std::size_t>(a - 1)]) out.push_back(a);
  }
  return out;
}

std::vector<int> fiber_power(const FunctionalGraph& G, int a, long m) {
  std::vector<int> out;
  for (int b = 1; b <= G.order(); ++b) {
    if (G.power(b, m) == a) out.push_back(b);
  }
  return out;
}

std::string emit_dot(const FunctionalGraph& G) {
  const auto inv = analyze(G);
  std::ostringstream os;
  os << "digraph " << (G.kind() == QuiverKind::resolution ? "resolution_quiver" : "coresolution_quiver")
     << " {\n";
  os << "  node [shape=circle];\n";
  for (int a = 1; a <= G.order(); ++a) {
    os << "  " << a << " [label=\"" << a << " (" << G.dim(a) << ")\"";
    if (inv.is_cyclic(a)) os << ", peripheries=2";
    os << "];\n";
  }
  for (int a = 1; a <= G.order(); ++a) os << "  " << a << " -> " << G(a) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace nakayama
