// Explicit m-uniform weighted hypergraphs with self-loops (vertex
// multiplicity inside an edge), their graph expansions (star and clique
// adjacencies), degrees, and cut objectives. This is the combinatorial
// ground-truth side against which the kernel-based matrices are checked.
#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "hyc/common.hpp"
#include "hyc/tensor.hpp"

namespace hyc {

struct Edge {
  std::vector<int> vertices;  // exactly m slots, repeats allowed
  double weight = 0.0;        // strictly positive
};

class UniformHypergraph {
 public:
  // Validates: every edge has exactly m vertex slots, weights > 0, vertex
  // ids in [0, n).
  UniformHypergraph(int m, int n, std::vector<Edge> edges);

  int edge_order() const { return m_; }
  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int m_;
  int n_;
  std::vector<Edge> edges_;
};

// H[v,e] = sqrt(multiplicity of v in e), 0 if absent.  n x |E|.
Matrix index_matrix(const UniformHypergraph& G);

// Star expansion: A_s = H W_e H^T / m (W_e = diagonal edge weights).
Matrix star_adjacency(const UniformHypergraph& G);

// Clique expansions (A_uc, A_nc):
//   A_uc = H W_e H^T - D_uc   with d^uc_i = sum_e w(e) * rho_ie * (m - rho_ie)
//   A_nc = H W_e (D_e - I)^{-1} H^T - D_v,  D_e = m I for uniform G.
// Requires m >= 2 (so D_e - I is invertible).
std::pair<Matrix, Matrix> clique_adjacencies(const UniformHypergraph& G);

// Multiplicity-weighted vertex degrees: d_i = sum_e rho_ie * w(e).
Vector degrees(const UniformHypergraph& G);

// Cut weight between two disjoint vertex sets:
//   sum_e w(e) * |e cap V1| * |e cap V2| / m, intersections counted with
// multiplicity. Throws DataError if the sets overlap.
double cut_value(const UniformHypergraph& G, const std::vector<int>& V1,
                 const std::vector<int>& V2);

// k-way normalized cut: sum_j Cut(V_j, complement) * (1/vol(V_j) +
// 1/vol(complement)). Every cluster (and complement) must have positive
// volume; k = 1 is degenerate and rejected.
double kncut(const UniformHypergraph& G, const std::vector<int>& labels, int k);

// One edge per orbit of index tuples under the half-symmetry group,
// weight = the orbit's (common) entry value; zero entries are skipped,
// negative entries rejected with a shift suggestion. Edge vertex lists are
// the canonical representatives (sorted halves, halves in lexicographic
// order), emitted in lexicographic order. Even order only.
UniformHypergraph tensor_to_hypergraph(const CubicalTensor& tensor);

// Counterpart for FULLY symmetric tensors of any order (the order-3
// heuristic models): one edge per sorted index multiset, weight = the
// common entry value; zero skipped, negative rejected.
UniformHypergraph symmetric_tensor_to_hypergraph(const CubicalTensor& tensor);

// Text edge-list format: one edge per line, "v1 v2 ... vm weight",
// whitespace-separated, 0-based vertex ids. '#' starts a comment line.
// The vertex count is inferred as max id + 1 unless n_hint is larger.
UniformHypergraph read_edge_list(std::istream& in, int n_hint = -1);
void write_edge_list(std::ostream& out, const UniformHypergraph& G);

}  // namespace hyc
