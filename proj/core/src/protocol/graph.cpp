#include "chrysalis/protocol/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace chrysalis::protocol {

Graph::Graph(std::uint32_t node_count, std::vector<Edge> edges) : n_(node_count) {
  for (auto& [u, v] : edges) {
    if (u == v) fail(ErrorCode::DegenerateInput, "self-loop in simple graph");
    if (u >= n_ || v >= n_) fail(ErrorCode::DegenerateInput, "edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(ErrorCode::DegenerateInput, "duplicate edge in simple graph");
  edges_ = std::move(edges);
}

Graph Graph::complete(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return {n, std::move(e)};
}

Graph Graph::path(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return {n, std::move(e)};
}

Graph Graph::cycle(std::uint32_t n) {
  if (n < 3) fail(ErrorCode::DegenerateInput, "a simple cycle needs 3 nodes");
  std::vector<Edge> e;
  for (std::uint32_t u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return {n, std::move(e)};
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> d(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++d[u];
    ++d[v];
  }
  return d;
}

Graph Graph::without_edge(std::uint32_t u, std::uint32_t v) const {
  if (u > v) std::swap(u, v);
  std::vector<Edge> e;
  for (const auto& edge : edges_)
    if (edge != Edge{u, v}) e.push_back(edge);
  return {n_, std::move(e)};
}

void write(wire::Writer& w, const Graph& g) {
  w.u32(g.node_count());
  w.u32(static_cast<std::uint32_t>(g.edge_count()));
  for (const auto& [u, v] : g.edges()) {
    w.u32(u);
    w.u32(v);
  }
}

Graph read_graph(wire::Reader& r) {
  const std::uint32_t n = r.u32();
  const std::uint32_t m = r.u32();
  if (m > r.remaining() / 8) fail(ErrorCode::FrameCorrupt, "edge count exceeds payload");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::uint32_t u = r.u32();
    const std::uint32_t v = r.u32();
    if (!(u < v) || v >= n) fail(ErrorCode::FrameCorrupt, "non-canonical edge");
    if (!edges.empty() && !(edges.back() < Edge{u, v})) fail(ErrorCode::FrameCorrupt, "edges not sorted");
    edges.emplace_back(u, v);
  }
  return {n, std::move(edges)};
}

std::uint32_t Multigraph::degree(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (std::uint32_t u = 0; u < n; ++u) d += u == v ? 2 * at(v, v) : at(v, u);
  return d;
}

namespace {

struct WorkGraph {
  std::uint32_t n;
  std::vector<std::uint32_t> mult;
  std::vector<bool> alive;

  explicit WorkGraph(const Graph& g) : n(g.node_count()), mult(std::size_t{n} * n, 0), alive(n, true) {
    for (const auto& [u, v] : g.edges()) {
      ++mult[u * n + v];
      ++mult[v * n + u];
    }
  }

  std::uint32_t& at(std::uint32_t u, std::uint32_t v) { return mult[u * n + v]; }

  std::uint32_t degree(std::uint32_t v) const {
    std::uint32_t d = 0;
    for (std::uint32_t u = 0; u < n; ++u)
      if (alive[u]) d += u == v ? 2 * mult[v * n + v] : mult[v * n + u];
    return d;
  }

  bool smoothable(std::uint32_t v) const { return alive[v] && degree(v) == 2 && mult[v * n + v] == 0; }

  void smooth_node(std::uint32_t v) {
    std::vector<std::uint32_t> ends;
    for (std::uint32_t u = 0; u < n; ++u)
      if (alive[u] && u != v)
        for (std::uint32_t k = 0; k < mult[v * n + u]; ++k) ends.push_back(u);
    for (std::uint32_t u = 0; u < n; ++u) at(v, u) = at(u, v) = 0;
    alive[v] = false;
    if (ends[0] == ends[1]) {
      ++at(ends[0], ends[0]);
    } else {
      ++at(ends[0], ends[1]);
      ++at(ends[1], ends[0]);
    }
  }

  Multigraph compact() const {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t v = 0; v < n; ++v)
      if (alive[v]) ids.push_back(v);
    Multigraph out;
    out.n = static_cast<std::uint32_t>(ids.size());
    out.mult.assign(std::size_t{out.n} * out.n, 0);
    for (std::uint32_t i = 0; i < out.n; ++i)
      for (std::uint32_t j = 0; j < out.n; ++j) out.mult[i * out.n + j] = mult[ids[i] * n + ids[j]];
    return out;
  }
};

}  // namespace

Multigraph smooth(const Graph& g) {
  WorkGraph w(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t v = 0; v < w.n; ++v) {
      if (w.smoothable(v)) {
        w.smooth_node(v);
        changed = true;
      }
    }
  }
  return w.compact();
}

Graph smooth_nodes(const Graph& g, const std::vector<std::uint32_t>& nodes) {
  WorkGraph w(g);
  for (std::uint32_t v : nodes) {
    if (v >= w.n || !w.smoothable(v)) fail(ErrorCode::DegenerateInput, "node is not smoothable");
    w.smooth_node(v);
  }
  const Multigraph m = w.compact();
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < m.n; ++u) {
    if (m.at(u, u) != 0) fail(ErrorCode::DegenerateInput, "smoothing produced a loop");
    for (std::uint32_t v = u + 1; v < m.n; ++v) {
      if (m.at(u, v) > 1) fail(ErrorCode::DegenerateInput, "smoothing produced parallel edges");
      if (m.at(u, v) == 1) edges.emplace_back(u, v);
    }
  }
  return {m.n, std::move(edges)};
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.n != b.n) return false;
  const std::uint32_t n = a.n;
  auto signature = [](const Multigraph& g, std::uint32_t v) { return std::pair{g.degree(v), g.at(v, v)}; };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sa(n), sb(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    sa[v] = signature(a, v);
    sb[v] = signature(b, v);
  }
  auto sorted_a = sa, sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;

  std::vector<std::uint32_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::uint32_t)> extend = [&](std::uint32_t v) -> bool {
    if (v == n) return true;
    for (std::uint32_t t = 0; t < n; ++t) {
      if (used[t] || sa[v] != sb[t]) continue;
      bool ok = true;
      for (std::uint32_t u = 0; u < v && ok; ++u) ok = a.at(v, u) == b.at(t, map[u]);
      if (!ok) continue;
      used[t] = true;
      map[v] = t;
      if (extend(v + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return extend(0);
}

bool is_homeomorphic(const Graph& g1, const Graph& g2) {
  const Multigraph a = smooth(g1);
  const Multigraph b = smooth(g2);
  if (a.n > kMaxHomeomorphismNodes || b.n > kMaxHomeomorphismNodes)
    fail(ErrorCode::TooLarge, "homeomorphism test limited to 12 smoothed nodes");
  return isomorphic(a, b);
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.node_count() > kMaxCliqueNodes) fail(ErrorCode::TooLarge, "clique search limited to 32 nodes");
  std::vector<std::uint64_t> adj(g.node_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

bool find_clique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, std::uint32_t need,
                 std::vector<std::uint32_t>& chosen) {
  if (need == 0) return true;
  while (candidates != 0) {
    if (static_cast<std::uint32_t>(std::popcount(candidates)) < need) return false;
    const auto v = static_cast<std::uint32_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    chosen.push_back(v);
    if (find_clique(adj, candidates & adj[v], need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> max_clique(const Graph& g, std::uint32_t k) {
  const auto adj = adjacency_masks(g);
  const std::uint64_t all = g.node_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.node_count()) - 1;
  std::vector<std::uint32_t> chosen;
  if (!find_clique(adj, all, k, chosen)) return std::nullopt;
  return chosen;
}

std::uint32_t clique_number(const Graph& g) {
  std::uint32_t k = 0;
  while (k < g.node_count() && max_clique(g, k + 1)) ++k;
  return k;
}

}  // namespace chrysalis::protocol
