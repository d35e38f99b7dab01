#include "cubulate/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "cubulate/error.hpp"

namespace cubulate {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

UnitGraph::UnitGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count <= 0) {
    throw Error(ErrorCode::malformed_input, "graph must have at least one vertex");
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count) {
    throw Error(ErrorCode::malformed_input, "label count does not match vertex count");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw Error(ErrorCode::malformed_input,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range", {u, v});
    }
    if (u == v) {
      throw Error(ErrorCode::malformed_input, "loop at vertex " + std::to_string(u), {u});
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::malformed_input,
                "repeated edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")",
                {dup->first, dup->second});
  }
  edges_ = std::move(edges);

  std::vector<int> degree(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.assign(static_cast<std::size_t>(offsets_[n_]), 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

bool UnitGraph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> bfs_distances(const UnitGraph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), DistanceMatrix::unreachable);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.size()));
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbours(v)) {
      if (dist[w] == DistanceMatrix::unreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const UnitGraph& g) {
  DistanceMatrix d(g.size());
  for (Vertex s = 0; s < g.size(); ++s) {
    Vertex src[] = {s};
    auto row = bfs_distances(g, src);
    for (Vertex t = 0; t < g.size(); ++t) {
      if (row[t] == DistanceMatrix::unreachable) {
        throw Error(ErrorCode::disconnected,
                    "graph is disconnected: no path between " + std::to_string(s) + " and " +
                        std::to_string(t),
                    {s, t});
      }
      d.at(s, t) = row[t];
    }
  }
  return d;
}

bool is_connected(const UnitGraph& g) {
  Vertex src[] = {0};
  auto dist = bfs_distances(g, src);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x == DistanceMatrix::unreachable; });
}

bool is_tree(const UnitGraph& g) {
  return static_cast<int>(g.edges().size()) == g.size() - 1 && is_connected(g);
}

std::vector<VertexSet> induced_components(const UnitGraph& g, const VertexSet& subset) {
  std::vector<char> inside(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : subset) inside[v] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  std::vector<VertexSet> components;
  for (Vertex start : subset) {
    if (seen[start]) continue;
    VertexSet comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbours(comp[head])) {
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

UnitGraph induced_subgraph(const UnitGraph& g, const VertexSet& subset) {
  std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) index[subset[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Vertex v : subset) labels.push_back(g.labels()[v]);
  }
  return UnitGraph(static_cast<int>(subset.size()), std::move(edges), std::move(labels));
}

int set_distance(const DistanceMatrix& d, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) return -1;
  int best = std::numeric_limits<int>::max();
  for (Vertex x : a) {
    for (Vertex y : b) best = std::min(best, d(x, y));
  }
  return best;
}

int set_diameter(const DistanceMatrix& d, const VertexSet& a) {
  int best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) best = std::max(best, d(a[i], a[j]));
  }
  return best;
}

int point_to_set(const DistanceMatrix& d, Vertex v, const VertexSet& set) {
  int best = std::numeric_limits<int>::max();
  for (Vertex w : set) best = std::min(best, d(v, w));
  return set.empty() ? -1 : best;
}

VertexSet interval(const DistanceMatrix& d, Vertex a, Vertex b) {
  VertexSet out;
  const int dab = d(a, b);
  for (Vertex v = 0; v < d.size(); ++v) {
    if (d(a, v) + d(v, b) == dab) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> least_geodesic(const UnitGraph& g, const DistanceMatrix& d, Vertex a, Vertex b) {
  std::vector<Vertex> path{a};
  Vertex cur = a;
  while (cur != b) {
    for (Vertex w : g.neighbours(cur)) {
      if (d(w, b) == d(cur, b) - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

VertexSet geodesic_hull(const DistanceMatrix& d, const VertexSet& set) {
  std::vector<char> in(static_cast<std::size_t>(d.size()), 0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    in[set[i]] = 1;
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const int dab = d(set[i], set[j]);
      for (Vertex v = 0; v < d.size(); ++v) {
        if (!in[v] && d(set[i], v) + d(v, set[j]) == dab) in[v] = 1;
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace cubulate
