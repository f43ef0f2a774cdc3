#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qwc {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph with dense 0/1 adjacency. Immutable once built.
class Graph {
 public:
  // Builds a graph from an edge list. Rejects self-loops, duplicate edges and
  // out-of-range endpoints with std::invalid_argument.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::vector<std::string> labels = {});

  // Builds a graph from a symmetric 0/1 matrix with zero diagonal.
  static Graph from_adjacency(const Eigen::MatrixXi& adjacency,
                              std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return adj_[u * n_ + v] != 0;
  }
  std::size_t degree(std::size_t u) const { return degree_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Degree when every vertex has the same degree, -1 otherwise.
  long regular_degree() const;
  bool is_connected() const;

  Eigen::MatrixXd adjacency_matrix() const;
  Eigen::MatrixXd degree_matrix() const;

  // Breadth-first distances from `source`; unreachable vertices get -1.
  std::vector<long> distances_from(std::size_t source) const;
  // Largest finite distance. Throws std::invalid_argument if disconnected.
  std::size_t diameter() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Graph(std::size_t n, std::vector<std::uint8_t> adj,
        std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::size_t> degree_;
  std::vector<std::string> labels_;
};

// Named families.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
// Cocktail party graph on 2m vertices; vertices 2k and 2k+1 are antipodal.
Graph cocktail_party_graph(std::size_t m);
// d-dimensional hypercube; vertex index is its bit vector.
Graph hypercube_graph(std::size_t d);
// Halved 2d-cube: even-weight vectors of length 2d joined at Hamming
// distance 2, ordered by increasing integer value.
Graph halved_cube_graph(std::size_t d);

// Parses "K:n", "C:n", "empty:n", "CP:m", "HQ:d", "halved:d" (also "P:n").
Graph generate(std::string_view spec);

// Edge-list text: first line "n", then one "i j" pair per line, 0-based.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

Eigen::MatrixXd signless_laplacian(const Graph& g);

// Vertex (v_i, w): inner == 0 is the G-vertex, inner in 1..n2 the (inner-1)th
// vertex of the i-th copy of H.
struct CoronaVertex {
  std::size_t base = 0;
  std::size_t inner = 0;
};

// Index of a corona vertex: G-vertices first, then copies of H in block order.
std::size_t corona_index(std::size_t n1, std::size_t n2, CoronaVertex v);
CoronaVertex corona_vertex(std::size_t n1, std::size_t n2, std::size_t index);

// G-vertex v_i is joined to every copy of H except the i-th one.
Graph vertex_complemented_corona(const Graph& g, const Graph& h);
// Classical corona: copy i joined to v_i only. Same vertex ordering.
Graph standard_corona(const Graph& g, const Graph& h);

// Entry (u,v) is 1 iff the distance between u and v is exactly k.
Eigen::MatrixXd distance_k_adjacency(const Graph& g, std::size_t k);

}  // namespace qwc
