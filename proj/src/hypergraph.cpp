#include "hyc/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hyc/io.hpp"

namespace hyc {

UniformHypergraph::UniformHypergraph(int m, int n, std::vector<Edge> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
  if (m_ < 1) throw DataError("edge order must be >= 1, got " + std::to_string(m_));
  if (n_ < 0) throw DataError("vertex count must be >= 0, got " + std::to_string(n_));
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (static_cast<int>(edge.vertices.size()) != m_) {
      throw DataError("edge " + std::to_string(e) + " has " + std::to_string(edge.vertices.size()) +
                      " vertex slots, expected " + std::to_string(m_));
    }
    if (!(edge.weight > 0.0)) {
      throw DataError("edge " + std::to_string(e) + " has nonpositive weight " +
                      format_double(edge.weight));
    }
    for (int v : edge.vertices) {
      if (v < 0 || v >= n_) {
        throw DataError("edge " + std::to_string(e) + " references vertex " + std::to_string(v) +
                        " outside [0, " + std::to_string(n_) + ")");
      }
    }
  }
}

namespace {

// vertex -> multiplicity within one edge, in ascending vertex order.
std::map<int, int> edge_counts(const Edge& edge) {
  std::map<int, int> counts;
  for (int v : edge.vertices) counts[v] += 1;
  return counts;
}

}  // namespace

Matrix index_matrix(const UniformHypergraph& G) {
  Matrix H = Matrix::Zero(G.vertex_count(), static_cast<int>(G.edges().size()));
  for (std::size_t e = 0; e < G.edges().size(); ++e) {
    for (const auto& [v, rho] : edge_counts(G.edges()[e])) {
      H(v, static_cast<int>(e)) = std::sqrt(static_cast<double>(rho));
    }
  }
  return H;
}

Matrix star_adjacency(const UniformHypergraph& G) {
  int n = G.vertex_count();
  Matrix A = Matrix::Zero(n, n);
  for (const Edge& edge : G.edges()) {
    auto counts = edge_counts(edge);
    double scale = edge.weight / G.edge_order();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      double hu = std::sqrt(static_cast<double>(it->second));
      for (auto jt = it; jt != counts.end(); ++jt) {
        double add = scale * hu * std::sqrt(static_cast<double>(jt->second));
        A(it->first, jt->first) += add;
        if (jt->first != it->first) A(jt->first, it->first) += add;
      }
    }
  }
  return A;
}

std::pair<Matrix, Matrix> clique_adjacencies(const UniformHypergraph& G) {
  int n = G.vertex_count();
  int m = G.edge_order();
  if (m < 2) throw DataError("clique expansions need edge order >= 2");
  Matrix S = Matrix::Zero(n, n);  // H W_e H^T
  Vector d_uc = Vector::Zero(n);
  for (const Edge& edge : G.edges()) {
    auto counts = edge_counts(edge);
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      double hu = std::sqrt(static_cast<double>(it->second));
      d_uc[it->first] += edge.weight * it->second * (m - it->second);
      for (auto jt = it; jt != counts.end(); ++jt) {
        double add = edge.weight * hu * std::sqrt(static_cast<double>(jt->second));
        S(it->first, jt->first) += add;
        if (jt->first != it->first) S(jt->first, it->first) += add;
      }
    }
  }
  Matrix A_uc = S;
  A_uc.diagonal() -= d_uc;
  // For an m-uniform hypergraph every edge has degree m, so the
  // edge-normalizer (D_e - I)^{-1} is the scalar 1/(m-1).
  Matrix A_nc = S / static_cast<double>(m - 1);
  A_nc.diagonal() -= degrees(G);
  return {A_uc, A_nc};
}

Vector degrees(const UniformHypergraph& G) {
  Vector d = Vector::Zero(G.vertex_count());
  for (const Edge& edge : G.edges()) {
    for (int v : edge.vertices) d[v] += edge.weight;
  }
  return d;
}

double cut_value(const UniformHypergraph& G, const std::vector<int>& V1,
                 const std::vector<int>& V2) {
  std::set<int> s1(V1.begin(), V1.end());
  std::set<int> s2(V2.begin(), V2.end());
  for (int v : s1) {
    if (s2.count(v)) throw DataError("cut sets overlap at vertex " + std::to_string(v));
  }
  double total = 0.0;
  for (const Edge& edge : G.edges()) {
    int c1 = 0, c2 = 0;
    for (int v : edge.vertices) {
      if (s1.count(v)) ++c1;
      else if (s2.count(v)) ++c2;
    }
    total += edge.weight * c1 * c2 / static_cast<double>(G.edge_order());
  }
  return total;
}

double kncut(const UniformHypergraph& G, const std::vector<int>& labels, int k) {
  int n = G.vertex_count();
  if (static_cast<int>(labels.size()) != n) {
    throw DataError("label vector length " + std::to_string(labels.size()) +
                    " does not match vertex count " + std::to_string(n));
  }
  if (k < 2) throw DataError("the k-way normalized cut needs k >= 2 (the complement of a single cluster is empty)");
  for (int l : labels) {
    if (l < 0 || l >= k) throw DataError("label " + std::to_string(l) + " outside [0, " + std::to_string(k) + ")");
  }
  Vector d = degrees(G);
  std::vector<double> vol(static_cast<std::size_t>(k), 0.0);
  double vol_total = 0.0;
  for (int i = 0; i < n; ++i) {
    vol[static_cast<std::size_t>(labels[i])] += d[i];
    vol_total += d[i];
  }
  // Cut(V_j, complement) accumulated per edge from the slot counts.
  std::vector<double> cut(static_cast<std::size_t>(k), 0.0);
  std::vector<int> slots(static_cast<std::size_t>(k));
  for (const Edge& edge : G.edges()) {
    std::fill(slots.begin(), slots.end(), 0);
    for (int v : edge.vertices) slots[static_cast<std::size_t>(labels[v])] += 1;
    for (int j = 0; j < k; ++j) {
      int c = slots[static_cast<std::size_t>(j)];
      if (c > 0 && c < G.edge_order()) {
        cut[static_cast<std::size_t>(j)] +=
            edge.weight * c * (G.edge_order() - c) / static_cast<double>(G.edge_order());
      }
    }
  }
  double total = 0.0;
  for (int j = 0; j < k; ++j) {
    double vj = vol[static_cast<std::size_t>(j)];
    double vc = vol_total - vj;
    if (!(vj > 0.0) || !(vc > 0.0)) {
      throw DataError("cluster " + std::to_string(j) + " or its complement has zero volume; the normalized cut is undefined");
    }
    total += cut[static_cast<std::size_t>(j)] * (1.0 / vj + 1.0 / vc);
  }
  return total;
}

namespace {

UniformHypergraph orbits_to_hypergraph(const CubicalTensor& tensor, bool half_orbits) {
  int m = tensor.order();
  int n = tensor.dim();
  std::vector<Edge> edges;
  std::vector<int> idx(m, 0);
  do {
    std::vector<int> canon;
    if (half_orbits) {
      canon = detail::canonical_half_form(idx);
    } else {
      canon = idx;
      std::sort(canon.begin(), canon.end());
    }
    if (idx != canon) continue;
    double w = tensor.entries()[tensor.linear_index(idx)];
    if (w == 0.0) continue;
    if (w < 0.0) {
      throw DataError("tensor entry " + format_double(w) +
                      " is negative; shift the tensor (e.g. min_to_zero) before building a hypergraph");
    }
    edges.push_back(Edge{canon, w});
  } while (detail::advance_index(idx, n));
  return UniformHypergraph(m, n, std::move(edges));
}

}  // namespace

UniformHypergraph tensor_to_hypergraph(const CubicalTensor& tensor) {
  if (tensor.order() % 2 != 0) {
    throw ConfigError("orbit edges need an even tensor order, got " + std::to_string(tensor.order()));
  }
  if (!is_half_symmetric(tensor, 1e-9)) {
    throw ConfigError("tensor is not half-symmetric; orbit weights would be ambiguous");
  }
  return orbits_to_hypergraph(tensor, /*half_orbits=*/true);
}

UniformHypergraph symmetric_tensor_to_hypergraph(const CubicalTensor& tensor) {
  // Full-symmetry check: every entry must match its sorted representative.
  std::vector<int> idx(tensor.order(), 0);
  do {
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    double a = tensor.entries()[tensor.linear_index(idx)];
    double b = tensor.entries()[tensor.linear_index(sorted)];
    if (std::abs(a - b) > 1e-9) {
      throw ConfigError("tensor is not fully symmetric; orbit weights would be ambiguous");
    }
  } while (detail::advance_index(idx, tensor.dim()));
  return orbits_to_hypergraph(tensor, /*half_orbits=*/false);
}

UniformHypergraph read_edge_list(std::istream& in, int n_hint) {
  std::vector<Edge> edges;
  int m = -1;
  int max_vertex = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<double> tokens;
    double tok = 0.0;
    while (ss >> tok) tokens.push_back(tok);
    if (!ss.eof()) {
      throw DataError("edge list line " + std::to_string(line_no) + ": unparseable token");
    }
    if (tokens.empty()) continue;
    if (tokens.size() < 2) {
      throw DataError("edge list line " + std::to_string(line_no) +
                      ": need at least one vertex and a weight");
    }
    if (m == -1) m = static_cast<int>(tokens.size()) - 1;
    if (static_cast<int>(tokens.size()) != m + 1) {
      throw DataError("edge list line " + std::to_string(line_no) + ": expected " +
                      std::to_string(m) + " vertices + weight, got " +
                      std::to_string(tokens.size()) + " tokens");
    }
    Edge edge;
    edge.vertices.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      double v = tokens[static_cast<std::size_t>(i)];
      int vi = static_cast<int>(v);
      if (v != static_cast<double>(vi) || vi < 0) {
        throw DataError("edge list line " + std::to_string(line_no) + ": vertex id " +
                        format_double(v) + " is not a nonnegative integer");
      }
      edge.vertices.push_back(vi);
      max_vertex = std::max(max_vertex, vi);
    }
    edge.weight = tokens.back();
    edges.push_back(std::move(edge));
  }
  if (m == -1) throw DataError("edge list contains no edges");
  int n = std::max(max_vertex + 1, n_hint);
  return UniformHypergraph(m, n, std::move(edges));
}

void write_edge_list(std::ostream& out, const UniformHypergraph& G) {
  for (const Edge& edge : G.edges()) {
    for (int v : edge.vertices) out << v << ' ';
    out << format_double(edge.weight) << '\n';
  }
}

}  // namespace hyc
