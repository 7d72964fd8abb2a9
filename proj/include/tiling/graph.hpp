#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiling {

// Thrown when a computation would exceed a configured size/work cap.
// Input and domain violations use std::invalid_argument / std::domain_error.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A set of vertices of a graph on at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }
inline VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1; }

// Expands a vertex set into its sorted vertex list.
std::vector<int> set_vertices(VertexSet s);

// Builds a vertex set from a list of vertices.
VertexSet make_set(const std::vector<int>& vs);

// Simple undirected graph on n <= 64 vertices, stored as one adjacency
// bitmask per vertex. Immutable after construction: all named constructors
// validate and the class exposes no mutators.
class Graph {
 public:
  // Graph with n vertices and no edges. Throws std::invalid_argument unless
  // 1 <= n <= 64.
  static Graph empty(int n);

  // Complete graph on n vertices.
  static Graph complete(int n);

  // Graph from an explicit edge list. Loops and out-of-range endpoints are
  // rejected with std::invalid_argument; duplicate edges collapse.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  VertexSet all_vertices() const {
    return n_ == kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
  }

  bool has_edge(int u, int v) const { return set_contains(adj_[u], v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return set_size(adj_[v]); }

  long long edge_count() const;

  // Number of edges with both endpoints in s.
  long long edges_within(VertexSet s) const;

  // Number of edges with one endpoint in s and the other in t. The sets must
  // be disjoint; overlap throws std::invalid_argument.
  long long edges_between(VertexSet s, VertexSet t) const;

  // True if every pair of vertices in s is adjacent.
  bool is_clique(VertexSet s) const;

  // Graph on the same vertices whose edges are exactly the non-edges.
  Graph complement() const;

  // All r-vertex cliques, ordered lexicographically by sorted vertex tuple.
  // r = 1 lists the vertices; r = 0 is rejected.
  std::vector<VertexSet> cliques(int r) const;

  bool operator==(const Graph& other) const = default;

 private:
  Graph(int n, std::vector<VertexSet> adj) : n_(n), adj_(std::move(adj)) {}

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// graph6 codec for graphs on up to 62 vertices (single-byte size prefix).
// Encoding is canonical; decoding validates size, characters and padding.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

// Plain-text edge list: first line "n m", then one "u v" line per edge with
// u < v, edges sorted. The reader accepts any whitespace layout and edge
// order but insists on exactly m edges.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

}  // namespace tiling
