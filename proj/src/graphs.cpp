#include "qwc/graphs.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qwc {

Graph::Graph(std::size_t n, std::vector<std::uint8_t> adj,
             std::vector<std::string> labels)
    : n_(n), adj_(std::move(adj)), degree_(n, 0), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_)
    throw std::invalid_argument("label count does not match vertex count");
  std::size_t twice = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) degree_[u] += adj_[u * n_ + v];
    twice += degree_[u];
  }
  edges_ = twice / 2;
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                        std::vector<std::string> labels) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adj[u * n + v])
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    adj[u * n + v] = adj[v * n + u] = 1;
  }
  return Graph(n, std::move(adj), std::move(labels));
}

Graph Graph::from_adjacency(const Eigen::MatrixXi& a,
                            std::vector<std::string> labels) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument("adjacency must be a non-empty square matrix");
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::uint8_t> adj(n * n, 0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw std::invalid_argument("adjacency diagonal must be zero");
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && a(i, j) != 1)
        throw std::invalid_argument("adjacency entries must be 0 or 1");
      if (a(i, j) != a(j, i))
        throw std::invalid_argument("adjacency must be symmetric");
      adj[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
          static_cast<std::uint8_t>(a(i, j));
    }
  }
  return Graph(n, std::move(adj), std::move(labels));
}

long Graph::regular_degree() const {
  for (std::size_t u = 1; u < n_; ++u)
    if (degree_[u] != degree_[0]) return -1;
  return static_cast<long>(degree_[0]);
}

std::vector<long> Graph::distances_from(std::size_t source) const {
  std::vector<long> dist(n_, -1);
  std::queue<std::size_t> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const auto u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < n_; ++v) {
      if (adj_[u * n_ + v] && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

bool Graph::is_connected() const {
  const auto d = distances_from(0);
  return std::none_of(d.begin(), d.end(), [](long x) { return x < 0; });
}

std::size_t Graph::diameter() const {
  long best = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    for (long d : distances_from(u)) {
      if (d < 0) throw std::invalid_argument("graph is disconnected");
      best = std::max(best, d);
    }
  }
  return static_cast<std::size_t>(best);
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = adj_[static_cast<std::size_t>(i * n + j)];
  return a;
}

Eigen::MatrixXd Graph::degree_matrix() const {
  Eigen::VectorXd d(static_cast<Eigen::Index>(n_));
  for (std::size_t u = 0; u < n_; ++u)
    d(static_cast<Eigen::Index>(u)) = static_cast<double>(degree_[u]);
  return d.asDiagonal();
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cocktail_party_graph(std::size_t m) {
  if (m == 0) throw std::invalid_argument("cocktail party size must be positive");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 2 * m; ++i)
    for (std::size_t j = i + 1; j < 2 * m; ++j)
      if (i / 2 != j / 2) e.emplace_back(i, j);
  return Graph::from_edges(2 * m, e);
}

Graph hypercube_graph(std::size_t d) {
  if (d == 0 || d > 20) throw std::invalid_argument("hypercube dimension must be in [1,20]");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> e;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < d; ++b) {
      const auto y = x ^ (std::size_t{1} << b);
      if (x < y) e.emplace_back(x, y);
    }
  return Graph::from_edges(n, e);
}

Graph halved_cube_graph(std::size_t d) {
  if (d == 0 || d > 10) throw std::invalid_argument("halved cube parameter must be in [1,10]");
  const std::size_t len = 2 * d;
  std::vector<std::size_t> words;
  for (std::size_t x = 0; x < (std::size_t{1} << len); ++x)
    if (std::popcount(x) % 2 == 0) words.push_back(x);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (std::popcount(words[i] ^ words[j]) == 2) e.emplace_back(i, j);
  return Graph::from_edges(words.size(), e);
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument("invalid " + std::string(what) + ": '" +
                                std::string(text) + "'");
  return value;
}

}  // namespace

Graph generate(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("generator spec must be NAME:N, got '" +
                                std::string(spec) + "'");
  const auto name = spec.substr(0, colon);
  const auto n = parse_size(spec.substr(colon + 1), "generator size");
  if (n == 0) throw std::invalid_argument("generator size must be positive");
  if (name == "K") return complete_graph(n);
  if (name == "C") return cycle_graph(n);
  if (name == "P") return path_graph(n);
  if (name == "empty") return empty_graph(n);
  if (name == "CP") return cocktail_party_graph(n);
  if (name == "HQ") return hypercube_graph(n);
  if (name == "halved") return halved_cube_graph(n);
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!have_n) {
      if (fields >> b)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected vertex count");
      n = parse_size(a, "vertex count");
      have_n = true;
      continue;
    }
    if (!(fields >> b) || (fields >> extra))
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'i j'");
    edges.emplace_back(parse_size(a, "vertex"), parse_size(b, "vertex"));
  }
  if (!have_n) throw std::invalid_argument("edge list is empty");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    for (std::size_t j = 0; j < i; ++j) {
      auto [x, y] = edges[j];
      if ((x == u && y == v) || (x == v && y == u))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Eigen::MatrixXd signless_laplacian(const Graph& g) {
  return g.degree_matrix() + g.adjacency_matrix();
}

std::size_t corona_index(std::size_t n1, std::size_t n2, CoronaVertex v) {
  if (v.base >= n1 || v.inner > n2)
    throw std::out_of_range("corona vertex out of range");
  return v.inner == 0 ? v.base : n1 + v.base * n2 + (v.inner - 1);
}

CoronaVertex corona_vertex(std::size_t n1, std::size_t n2, std::size_t index) {
  if (index >= n1 * (1 + n2)) throw std::out_of_range("corona index out of range");
  if (index < n1) return {index, 0};
  const auto k = index - n1;
  return {k / n2, k % n2 + 1};
}

namespace {

// Shared construction; `complemented` picks which G-vertices see copy i.
Graph corona_impl(const Graph& g, const Graph& h, bool complemented) {
  const auto n1 = g.order();
  const auto n2 = h.order();
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j)
      if (g.adjacent(i, j)) e.emplace_back(i, j);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t a = 0; a < n2; ++a)
      for (std::size_t b = a + 1; b < n2; ++b)
        if (h.adjacent(a, b))
          e.emplace_back(corona_index(n1, n2, {i, a + 1}),
                         corona_index(n1, n2, {i, b + 1}));
    for (std::size_t j = 0; j < n1; ++j) {
      if ((i != j) != complemented) continue;
      for (std::size_t a = 0; a < n2; ++a)
        e.emplace_back(j, corona_index(n1, n2, {i, a + 1}));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n1 * (1 + n2));
  for (std::size_t idx = 0; idx < n1 * (1 + n2); ++idx) {
    const auto cv = corona_vertex(n1, n2, idx);
    labels.push_back(cv.inner == 0 ? "base:" + std::to_string(cv.base)
                                   : "copy:" + std::to_string(cv.base) + ":" +
                                         std::to_string(cv.inner - 1));
  }
  return Graph::from_edges(n1 * (1 + n2), e, std::move(labels));
}

}  // namespace

Graph vertex_complemented_corona(const Graph& g, const Graph& h) {
  return corona_impl(g, h, true);
}

Graph standard_corona(const Graph& g, const Graph& h) {
  return corona_impl(g, h, false);
}

Eigen::MatrixXd distance_k_adjacency(const Graph& g, std::size_t k) {
  const auto n = g.order();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (std::size_t u = 0; u < n; ++u) {
    const auto d = g.distances_from(u);
    for (std::size_t v = 0; v < n; ++v) {
      if (d[v] < 0) throw std::invalid_argument("graph is disconnected");
      if (static_cast<std::size_t>(d[v]) == k)
        out(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    }
  }
  return out;
}

}  // namespace qwc
