#include "tiling/graph.hpp"

#include <sstream>

namespace tiling {

std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s != 0) {
    int v = lowest_vertex(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) {
      throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }
    s |= vertex_bit(v);
  }
  return s;
}

static void check_vertex_count(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in [1, 64], got " +
                                std::to_string(n));
  }
}

Graph Graph::empty(int n) {
  check_vertex_count(n);
  return Graph(n, std::vector<VertexSet>(n, 0));
}

Graph Graph::complete(int n) {
  check_vertex_count(n);
  std::vector<VertexSet> adj(n);
  VertexSet all = n == kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  for (int v = 0; v < n; ++v) adj[v] = all & ~vertex_bit(v);
  return Graph(n, std::move(adj));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  check_vertex_count(n);
  std::vector<VertexSet> adj(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + ", " + std::to_string(v) +
                                  ") with n = " + std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    adj[u] |= vertex_bit(v);
    adj[v] |= vertex_bit(u);
  }
  return Graph(n, std::move(adj));
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += set_size(adj_[v]);
  return twice / 2;
}

long long Graph::edges_within(VertexSet s) const {
  s &= all_vertices();
  long long twice = 0;
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    twice += set_size(adj_[lowest_vertex(rest)] & s);
  }
  return twice / 2;
}

long long Graph::edges_between(VertexSet s, VertexSet t) const {
  if ((s & t) != 0) {
    throw std::invalid_argument("edges_between requires disjoint vertex sets");
  }
  s &= all_vertices();
  t &= all_vertices();
  long long total = 0;
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    total += set_size(adj_[lowest_vertex(rest)] & t);
  }
  return total;
}

bool Graph::is_clique(VertexSet s) const {
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    int v = lowest_vertex(rest);
    // Every later member of s must be adjacent to v.
    if (((rest & ~vertex_bit(v)) & ~adj_[v]) != 0) return false;
  }
  return true;
}

Graph Graph::complement() const {
  std::vector<VertexSet> adj(n_);
  VertexSet all = all_vertices();
  for (int v = 0; v < n_; ++v) adj[v] = all & ~adj_[v] & ~vertex_bit(v);
  return Graph(n_, std::move(adj));
}

namespace {

// Recursively extends the clique `current` (all mutually adjacent, common
// neighborhood `candidates` restricted to vertices > max(current)) until it
// reaches r vertices. Vertices are tried in increasing order, so cliques are
// produced in lexicographic order of their sorted vertex tuples.
void extend_cliques(const Graph& g, VertexSet current, int size, int r,
                    VertexSet candidates, std::vector<VertexSet>& out) {
  if (size == r) {
    out.push_back(current);
    return;
  }
  while (candidates != 0) {
    int v = lowest_vertex(candidates);
    candidates &= candidates - 1;
    VertexSet next = candidates & g.neighbors(v);
    extend_cliques(g, current | vertex_bit(v), size + 1, r, next, out);
  }
}

}  // namespace

std::vector<VertexSet> Graph::cliques(int r) const {
  if (r < 1 || r > kMaxVertices) {
    throw std::invalid_argument("clique size must be in [1, 64], got " +
                                std::to_string(r));
  }
  std::vector<VertexSet> out;
  extend_cliques(*this, 0, 0, r, all_vertices(), out);
  return out;
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) {
    throw std::invalid_argument(
        "graph6 output supports at most 62 vertices, got " +
        std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit = 5;
  unsigned char group = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) group |= static_cast<unsigned char>(1u << bit);
      if (bit == 0) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        bit = 5;
      } else {
        --bit;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(group + 63));
  return out;
}

Graph from_graph6(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw std::invalid_argument("invalid graph6 character");
    }
  }
  int n = text[0] - 63;
  if (n < 1 || n > 62) {
    throw std::invalid_argument("graph6 vertex count out of range: " +
                                std::to_string(n));
  }
  long long pair_bits = static_cast<long long>(n) * (n - 1) / 2;
  long long expected = 1 + (pair_bits + 5) / 6;
  if (static_cast<long long>(text.size()) != expected) {
    throw std::invalid_argument("graph6 string has wrong length");
  }
  std::vector<std::pair<int, int>> edges;
  long long index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      unsigned char group = static_cast<unsigned char>(text[1 + index / 6] - 63);
      if ((group >> (5 - index % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits beyond the last vertex pair must be zero.
  for (long long i = pair_bits; i < (expected - 1) * 6; ++i) {
    unsigned char group = static_cast<unsigned char>(text[1 + i / 6] - 63);
    if ((group >> (5 - i % 6)) & 1) {
      throw std::invalid_argument("graph6 padding bits must be zero");
    }
  }
  return Graph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// edge-list text format
// ---------------------------------------------------------------------------

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) {
    throw std::invalid_argument("edge list must start with \"n m\"");
  }
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("edge list vertex count out of range");
  }
  if (m < 0) throw std::invalid_argument("negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list ended before " +
                                  std::to_string(m) + " edges");
    }
    edges.emplace_back(u, v);
  }
  long long extra = 0;
  if (in >> extra) {
    throw std::invalid_argument("edge list has trailing data");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace tiling
