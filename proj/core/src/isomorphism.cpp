#include <algorithm>
#include <map>

#include "cubulate/cube_complex.hpp"

namespace cubulate {

namespace {

// All-pairs distances without the connectivity requirement.
std::vector<std::vector<int>> distance_rows(const UnitGraph& g) {
  std::vector<std::vector<int>> rows;
  rows.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const Vertex src[] = {v};
    rows.push_back(bfs_distances(g, src));
  }
  return rows;
}

// Sorted distance histogram; invariant under isomorphism.
std::vector<int> profile(const std::vector<int>& row) {
  std::vector<int> p = row;
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

bool is_isomorphism(const UnitGraph& a, const UnitGraph& b, const std::vector<Vertex>& map) {
  if (a.size() != b.size() || a.edges().size() != b.edges().size()) return false;
  if (static_cast<int>(map.size()) != a.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (Vertex v : map) {
    if (v < 0 || v >= b.size() || used[v]) return false;
    used[v] = 1;
  }
  return std::all_of(a.edges().begin(), a.edges().end(),
                     [&](const Edge& e) { return b.adjacent(map[e.first], map[e.second]); });
}

std::optional<std::vector<Vertex>> find_isomorphism(const UnitGraph& a, const UnitGraph& b) {
  const int n = a.size();
  if (n != b.size() || a.edges().size() != b.edges().size()) return std::nullopt;
  if (n == 0) return std::vector<Vertex>{};

  const auto da = distance_rows(a);
  const auto db = distance_rows(b);
  std::map<std::vector<int>, int> colour_ids;
  std::vector<int> ca(n);
  std::vector<int> cb(n);
  for (Vertex v = 0; v < n; ++v) ca[v] = colour_ids.try_emplace(profile(da[v]), static_cast<int>(colour_ids.size())).first->second;
  for (Vertex v = 0; v < n; ++v) {
    auto it = colour_ids.find(profile(db[v]));
    if (it == colour_ids.end()) return std::nullopt;
    cb[v] = it->second;
  }
  {
    std::vector<int> sa = ca;
    std::vector<int> sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Breadth-first order over a, so each vertex after the first in its
  // component has an already-placed neighbour constraining its image.
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (Vertex w : a.neighbours(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);
  auto place = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const Vertex u = order[k];
        ok = da[v][u] == db[w][map[u]];
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, depth + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  if (!is_isomorphism(a, b, map)) return std::nullopt;
  return map;
}

}  // namespace cubulate
