#include "bcfea/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bcfea {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n = n;
  g.adj.resize(n);
  std::set<std::pair<int, int>> norm;
  for (auto [u, v] : edges) {
    if (u == v) continue;
    norm.emplace(std::min(u, v), std::max(u, v));
  }
  g.edges.assign(norm.begin(), norm.end());
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

Graph Graph::from_instance(const Instance& inst) {
  return from_edges(inst.n(), inst.edges);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n) return false;
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> components;
  std::vector<bool> visited(g.n, false);
  for (int start = 0; start < g.n; start++) {
    if (visited[start]) continue;
    std::vector<int> comp;
    std::deque<int> queue{start};
    visited[start] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int u : g.adj[v])
        if (!visited[u]) {
          visited[u] = true;
          queue.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

BipartitionResult bipartition(const Graph& g, const std::vector<int>& component) {
  BipartitionResult result;
  if (component.empty()) {
    result.bipartite = true;
    return result;
  }
  std::vector<int> color(g.n, -1);
  std::vector<int> parent(g.n, -1);
  int root = component[0];
  color[root] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.adj[v]) {
      if (color[u] == -1) {
        color[u] = 1 - color[v];
        parent[u] = v;
        queue.push_back(u);
      } else if (color[u] == color[v]) {
        // Same-color BFS edge closes an odd cycle through the lowest common
        // ancestor of u and v in the BFS tree.
        std::vector<int> pv, pu;
        for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
        for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
        std::reverse(pv.begin(), pv.end());
        std::reverse(pu.begin(), pu.end());
        size_t common = 0;
        while (common + 1 < pv.size() && common + 1 < pu.size() && pv[common + 1] == pu[common + 1])
          common++;
        std::vector<int> cycle;
        for (size_t i = common; i < pv.size(); i++) cycle.push_back(pv[i]);
        for (size_t i = pu.size(); i-- > common + 1;) cycle.push_back(pu[i]);
        result.odd_cycle = std::move(cycle);
        return result;
      }
    }
  }
  result.bipartite = true;
  for (int v : component)
    (color[v] == 0 ? result.side_x : result.side_y).push_back(v);
  return result;
}

namespace {

// Finds a chordless cycle of length >= 4 in a non-chordal graph: for every
// path u-v-w with uw not an edge, search a shortest u-w path avoiding
// N[v] \ {u, w}; shortest paths in the induced subgraph carry no chords.
std::vector<int> find_hole(const Graph& g) {
  for (int v = 0; v < g.n; v++) {
    for (size_t a = 0; a < g.adj[v].size(); a++) {
      for (size_t b = a + 1; b < g.adj[v].size(); b++) {
        int u = g.adj[v][a], w = g.adj[v][b];
        if (g.has_edge(u, w)) continue;
        std::vector<bool> blocked(g.n, false);
        blocked[v] = true;
        for (int x : g.adj[v]) blocked[x] = true;
        blocked[u] = blocked[w] = false;
        std::vector<int> parent(g.n, -2);
        parent[u] = -1;
        std::deque<int> queue{u};
        while (!queue.empty()) {
          int x = queue.front();
          queue.pop_front();
          if (x == w) break;
          for (int y : g.adj[x]) {
            if (blocked[y] || parent[y] != -2) continue;
            parent[y] = x;
            queue.push_back(y);
          }
        }
        if (parent[w] == -2) continue;
        std::vector<int> path;
        for (int x = w; x != -1; x = parent[x]) path.push_back(x);
        path.push_back(v);
        return path;  // cycle v-u-...-w-v, chordless, length >= 4
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult recognize_chordal(const Graph& g) {
  ChordalityResult result;
  int n = g.n;
  // Maximum cardinality search: visit order alpha, elimination order = reverse.
  std::vector<int> weight(n, 0), order;
  std::vector<bool> visited(n, false);
  order.reserve(n);
  for (int step = 0; step < n; step++) {
    int best = -1;
    for (int v = 0; v < n; v++)
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    visited[best] = true;
    order.push_back(best);
    for (int u : g.adj[best])
      if (!visited[u]) weight[u]++;
  }
  std::vector<int> pos(n);  // position in visit order; higher = eliminated earlier
  for (int i = 0; i < n; i++) pos[order[i]] = i;

  // PEO check: for each vertex, its earlier-visited neighbors must include the
  // latest one adjacent to all the others.
  for (int i = 0; i < n; i++) {
    int v = order[i];
    std::vector<int> earlier;
    for (int u : g.adj[v])
      if (pos[u] < i) earlier.push_back(u);
    if (earlier.empty()) continue;
    int pivot = earlier[0];
    for (int u : earlier)
      if (pos[u] > pos[pivot]) pivot = u;
    for (int u : earlier) {
      if (u != pivot && !g.has_edge(pivot, u)) {
        result.hole = find_hole(g);
        return result;
      }
    }
  }
  result.chordal = true;
  result.peo.assign(order.rbegin(), order.rend());
  return result;
}

namespace {

// Edmonds' blossom algorithm for maximum cardinality matching.
struct Blossom {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<bool> used, blossom;

  explicit Blossom(const Graph& graph) : g(graph), n(graph.n), match(n, -1) {}

  int lca(int a, int b) {
    std::vector<bool> mark(n, false);
    for (;;) {
      a = base[a];
      mark[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  int find_path(int root) {
    parent.assign(n, -1);
    used.assign(n, false);
    base.resize(n);
    for (int i = 0; i < n; i++) base[i] = i;
    used[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : g.adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int curbase = lca(v, to);
          blossom.assign(n, false);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; i++) {
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = true;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[v], ppv = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = ppv;
    }
  }

  void run() {
    for (int v = 0; v < n; v++) {
      if (match[v] != -1) continue;
      int u = find_path(v);
      if (u != -1) augment(u);
    }
  }
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
  Blossom blossom(g);
  blossom.run();
  std::vector<std::pair<int, int>> result;
  for (int v = 0; v < g.n; v++)
    if (blossom.match[v] > v) result.emplace_back(v, blossom.match[v]);
  return result;
}

}  // namespace bcfea
