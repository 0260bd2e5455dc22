#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chrysalis/wire.hpp"

namespace chrysalis::protocol {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected simple graph on nodes 0..node_count-1. Edges are stored with
/// u < v, sorted and unique.
class Graph {
 public:
  Graph() = default;
  /// Throws DegenerateInput on self-loops, duplicate edges or out-of-range ends.
  Graph(std::uint32_t node_count, std::vector<Edge> edges);

  static Graph complete(std::uint32_t n);
  static Graph path(std::uint32_t n);
  static Graph cycle(std::uint32_t n);

  std::uint32_t node_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::vector<std::uint32_t> degrees() const;
  Graph without_edge(std::uint32_t u, std::uint32_t v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
};

void write(wire::Writer& w, const Graph& g);
Graph read_graph(wire::Reader& r);

/// Undirected multigraph with loops, given by a symmetric multiplicity matrix.
/// Smoothing a simple graph can create parallel edges and loops, so the
/// homeomorphism test works on this form.
struct Multigraph {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> mult;  // n*n, loops on the diagonal counted once

  std::uint32_t at(std::uint32_t u, std::uint32_t v) const { return mult[u * n + v]; }
  std::uint32_t degree(std::uint32_t v) const;
};

/// Repeatedly removes degree-2 nodes (other than a node carrying a single
/// loop), joining their two edge ends.
Multigraph smooth(const Graph& g);

/// Smooths only the listed nodes, each of which must have degree 2 when its
/// turn comes. The result must again be simple; throws DegenerateInput
/// otherwise. Remaining nodes are renumbered in increasing order.
Graph smooth_nodes(const Graph& g, const std::vector<std::uint32_t>& nodes);

bool isomorphic(const Multigraph& a, const Multigraph& b);

inline constexpr std::uint32_t kMaxHomeomorphismNodes = 12;
/// Graph homeomorphism: isomorphism after smoothing every degree-2 node.
/// Throws TooLarge when a smoothed graph exceeds 12 nodes.
bool is_homeomorphic(const Graph& g1, const Graph& g2);

inline constexpr std::uint32_t kMaxCliqueNodes = 32;
/// A k-clique (sorted node ids) or nullopt. Throws TooLarge past 32 nodes.
std::optional<std::vector<std::uint32_t>> max_clique(const Graph& g, std::uint32_t k);
/// The size of a largest clique.
std::uint32_t clique_number(const Graph& g);

}  // namespace chrysalis::protocol
