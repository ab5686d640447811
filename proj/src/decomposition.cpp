#include "bcfea/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bcfea {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "Leaf";
    case NodeKind::Introduce: return "Introduce";
    case NodeKind::Forget: return "Forget";
    case NodeKind::Join: return "Join";
  }
  return "Unknown";
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

std::vector<int> NiceTreeDecomposition::post_order() const {
  std::vector<int> order;
  order.reserve(num_nodes());
  std::vector<std::pair<int, size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < children[node].size()) {
      int child = children[node][next++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

int NiceTreeDecomposition::join_count() const {
  int count = 0;
  for (NodeKind nk : kind)
    if (nk == NodeKind::Join) count++;
  return count;
}

namespace {

void check_tree_shape(size_t num_bags, const std::vector<std::pair<int, int>>& tree_edges,
                      std::vector<std::string>& violations) {
  if (num_bags == 0) {
    if (!tree_edges.empty()) violations.push_back("tree edges without bags");
    return;
  }
  if (tree_edges.size() != num_bags - 1) {
    violations.push_back("tree has " + std::to_string(tree_edges.size()) + " edges, expected " +
                         std::to_string(num_bags - 1));
  }
  std::vector<std::vector<int>> adj(num_bags);
  for (auto [a, b] : tree_edges) {
    if (a < 0 || b < 0 || a >= static_cast<int>(num_bags) || b >= static_cast<int>(num_bags)) {
      violations.push_back("tree edge references unknown bag");
      return;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> visited(num_bags, false);
  std::deque<int> queue{0};
  visited[0] = true;
  size_t reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adj[v])
      if (!visited[u]) {
        visited[u] = true;
        reached++;
        queue.push_back(u);
      }
  }
  if (reached != num_bags) violations.push_back("decomposition tree is not connected");
}

}  // namespace

DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  DecompositionReport report;
  auto& violations = report.violations;

  check_tree_shape(td.num_bags(), td.tree_edges, violations);

  std::vector<bool> covered(g.n, false);
  for (const auto& bag : td.bags)
    for (int v : bag) {
      if (v < 0 || v >= g.n)
        violations.push_back("bag contains unknown item index " + std::to_string(v));
      else
        covered[v] = true;
    }
  for (int v = 0; v < g.n; v++)
    if (!covered[v]) violations.push_back("ItemNotCovered: " + std::to_string(v));

  for (auto [u, v] : g.edges) {
    bool found = false;
    for (const auto& bag : td.bags) {
      if (std::binary_search(bag.begin(), bag.end(), u) &&
          std::binary_search(bag.begin(), bag.end(), v)) {
        found = true;
        break;
      }
    }
    if (!found)
      violations.push_back("EdgeNotCovered: " + std::to_string(u) + "-" + std::to_string(v));
  }

  // Occurrence subtrees must be connected.
  std::vector<std::vector<int>> adj(td.num_bags());
  for (auto [a, b] : td.tree_edges)
    if (a >= 0 && b >= 0 && a < static_cast<int>(td.num_bags()) &&
        b < static_cast<int>(td.num_bags())) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  for (int v = 0; v < g.n; v++) {
    int start = -1, total = 0;
    for (size_t b = 0; b < td.num_bags(); b++)
      if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), v)) {
        total++;
        if (start == -1) start = static_cast<int>(b);
      }
    if (total <= 1) continue;
    std::vector<bool> visited(td.num_bags(), false);
    std::deque<int> queue{start};
    visited[start] = true;
    int reached = 1;
    while (!queue.empty()) {
      int b = queue.front();
      queue.pop_front();
      for (int c : adj[b]) {
        if (visited[c] || !std::binary_search(td.bags[c].begin(), td.bags[c].end(), v)) continue;
        visited[c] = true;
        reached++;
        queue.push_back(c);
      }
    }
    if (reached != total) violations.push_back("ConnectivityViolated: " + std::to_string(v));
  }

  report.valid = violations.empty();
  return report;
}

DecompositionReport validate_nice_decomposition(const Graph& g, const NiceTreeDecomposition& ntd) {
  TreeDecomposition td;
  td.bags = ntd.bags;
  for (size_t v = 0; v < ntd.num_nodes(); v++)
    if (ntd.parent[v] != -1) td.tree_edges.emplace_back(ntd.parent[v], static_cast<int>(v));
  DecompositionReport report = validate_decomposition(g, td);
  auto& violations = report.violations;

  if (ntd.root < 0 || ntd.root >= static_cast<int>(ntd.num_nodes())) {
    violations.push_back("missing root");
  } else {
    if (!ntd.bags[ntd.root].empty()) violations.push_back("root bag not empty");
  }
  for (size_t t = 0; t < ntd.num_nodes(); t++) {
    const auto& kids = ntd.children[t];
    const auto& bag = ntd.bags[t];
    switch (ntd.kind[t]) {
      case NodeKind::Leaf:
        if (!kids.empty()) violations.push_back("leaf with children at node " + std::to_string(t));
        if (!bag.empty()) violations.push_back("leaf bag not empty at node " + std::to_string(t));
        break;
      case NodeKind::Introduce: {
        if (kids.size() != 1) {
          violations.push_back("introduce without single child at node " + std::to_string(t));
          break;
        }
        auto child_bag = ntd.bags[kids[0]];
        auto expect = child_bag;
        expect.insert(std::upper_bound(expect.begin(), expect.end(), ntd.item[t]), ntd.item[t]);
        if (ntd.item[t] < 0 || bag != expect ||
            std::binary_search(child_bag.begin(), child_bag.end(), ntd.item[t]))
          violations.push_back("introduce label inconsistent at node " + std::to_string(t));
        break;
      }
      case NodeKind::Forget: {
        if (kids.size() != 1) {
          violations.push_back("forget without single child at node " + std::to_string(t));
          break;
        }
        auto expect = ntd.bags[kids[0]];
        auto it = std::find(expect.begin(), expect.end(), ntd.item[t]);
        if (ntd.item[t] < 0 || it == expect.end()) {
          violations.push_back("forget label inconsistent at node " + std::to_string(t));
          break;
        }
        expect.erase(it);
        if (bag != expect)
          violations.push_back("forget label inconsistent at node " + std::to_string(t));
        break;
      }
      case NodeKind::Join:
        if (kids.size() != 2 || ntd.bags[kids[0]] != bag || ntd.bags[kids[1]] != bag)
          violations.push_back("join children bags differ at node " + std::to_string(t));
        break;
    }
  }

  report.valid = violations.empty();
  return report;
}

namespace {

struct EliminationState {
  std::vector<std::set<int>> adj;

  int fill_in(int v) const {
    int fill = 0;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (size_t i = 0; i < nb.size(); i++)
      for (size_t j = i + 1; j < nb.size(); j++)
        if (!adj[nb[i]].count(nb[j])) fill++;
    return fill;
  }
};

}  // namespace

TreeDecomposition heuristic_tree_decomposition(const Graph& g, EliminationHeuristic heuristic) {
  int n = g.n;
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }

  EliminationState state;
  state.adj.resize(n);
  for (auto [u, v] : g.edges) {
    state.adj[u].insert(v);
    state.adj[v].insert(u);
  }

  std::vector<bool> eliminated(n, false);
  std::vector<int> elim_pos(n, -1);
  std::vector<int> bag_of(n, -1);  // vertex -> bag created at its elimination
  std::vector<std::vector<int>> bags;
  std::vector<int> order;

  for (int step = 0; step < n; step++) {
    int best = -1;
    long long best_score = -1;
    for (int v = 0; v < n; v++) {
      if (eliminated[v]) continue;
      long long score = heuristic == EliminationHeuristic::MinFill
                            ? state.fill_in(v)
                            : static_cast<long long>(state.adj[v].size());
      if (best == -1 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    std::vector<int> bag(state.adj[best].begin(), state.adj[best].end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    bag_of[best] = static_cast<int>(bags.size());
    bags.push_back(bag);
    order.push_back(best);
    elim_pos[best] = step;

    std::vector<int> nb(state.adj[best].begin(), state.adj[best].end());
    for (size_t i = 0; i < nb.size(); i++)
      for (size_t j = i + 1; j < nb.size(); j++) {
        state.adj[nb[i]].insert(nb[j]);
        state.adj[nb[j]].insert(nb[i]);
      }
    for (int u : nb) state.adj[u].erase(best);
    state.adj[best].clear();
    eliminated[best] = true;
  }

  // Attach each bag to the bag of its first-eliminated surviving neighbor;
  // bags with no later neighbor become roots and are chained together.
  td.bags = bags;
  std::vector<int> roots;
  for (int i = 0; i < n; i++) {
    int v = order[i];
    int next = -1;
    for (int u : td.bags[bag_of[v]]) {
      if (u == v) continue;
      if (next == -1 || elim_pos[u] < elim_pos[next]) next = u;
    }
    if (next == -1)
      roots.push_back(bag_of[v]);
    else
      td.tree_edges.emplace_back(bag_of[v], bag_of[next]);
  }
  for (size_t i = 1; i < roots.size(); i++) td.tree_edges.emplace_back(roots[i - 1], roots[i]);
  return td;
}

TreeDecomposition clique_tree(const Graph& g, const ChordalityResult& chordality) {
  if (!chordality.chordal) throw NotChordalInput();
  int n = g.n;
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }

  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[chordality.peo[i]] = i;

  // Candidate cliques {v} + later neighbors along the elimination order;
  // keep the maximal ones.
  std::vector<std::vector<int>> candidates;
  for (int v = 0; v < n; v++) {
    std::vector<int> clique{v};
    for (int u : g.adj[v])
      if (pos[u] > pos[v]) clique.push_back(u);
    std::sort(clique.begin(), clique.end());
    candidates.push_back(std::move(clique));
  }
  std::vector<std::vector<int>> cliques;
  for (const auto& c : candidates) {
    bool maximal = true;
    for (const auto& other : candidates) {
      if (&c == &other || other.size() <= c.size()) continue;
      if (std::includes(other.begin(), other.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal &&
        std::find(cliques.begin(), cliques.end(), c) == cliques.end())
      cliques.push_back(c);
  }

  // Maximum-weight spanning tree on clique intersection sizes yields a valid
  // clique tree for chordal graphs.
  td.bags = cliques;
  size_t m = cliques.size();
  std::vector<bool> in_tree(m, false);
  std::vector<int> best_link(m, -1);
  std::vector<long long> best_weight(m, -1);
  in_tree[0] = true;
  for (size_t added = 1; added < m; added++) {
    for (size_t c = 0; c < m; c++) {
      if (in_tree[c]) continue;
      for (size_t t = 0; t < m; t++) {
        if (!in_tree[t]) continue;
        std::vector<int> inter;
        std::set_intersection(cliques[c].begin(), cliques[c].end(), cliques[t].begin(),
                              cliques[t].end(), std::back_inserter(inter));
        long long w = static_cast<long long>(inter.size());
        if (w > best_weight[c]) {
          best_weight[c] = w;
          best_link[c] = static_cast<int>(t);
        }
      }
    }
    size_t pick = m;
    for (size_t c = 0; c < m; c++)
      if (!in_tree[c] && (pick == m || best_weight[c] > best_weight[pick])) pick = c;
    in_tree[pick] = true;
    td.tree_edges.emplace_back(static_cast<int>(pick), best_link[pick]);
    best_weight[pick] = -1;
  }
  return td;
}

namespace {

struct NiceBuilder {
  NiceTreeDecomposition ntd;

  int add_node(std::vector<int> bag, NodeKind kind, int item, std::vector<int> kids) {
    int id = static_cast<int>(ntd.bags.size());
    ntd.bags.push_back(std::move(bag));
    ntd.kind.push_back(kind);
    ntd.item.push_back(item);
    ntd.children.push_back(kids);
    ntd.parent.push_back(-1);
    for (int c : kids) ntd.parent[c] = id;
    return id;
  }

  // Chain from the empty bag introducing `target` one item at a time.
  int leaf_chain(const std::vector<int>& target) {
    int node = add_node({}, NodeKind::Leaf, -1, {});
    std::vector<int> bag;
    for (int v : target) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      node = add_node(bag, NodeKind::Introduce, v, {node});
    }
    return node;
  }

  // Chain from a node with bag `from` to bag `to`: forgets first, then
  // introduces, so intermediate bags never exceed max(|from|, |to|).
  int transform_chain(int node, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> bag = from;
    for (int v : from) {
      if (std::binary_search(to.begin(), to.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      node = add_node(bag, NodeKind::Forget, v, {node});
    }
    for (int v : to) {
      if (std::binary_search(from.begin(), from.end(), v)) continue;
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      node = add_node(bag, NodeKind::Introduce, v, {node});
    }
    return node;
  }
};

}  // namespace

NiceTreeDecomposition to_nice_decomposition(const TreeDecomposition& td) {
  if (td.num_bags() == 0) throw std::invalid_argument("empty tree decomposition");

  std::vector<std::vector<int>> adj(td.num_bags());
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  NiceBuilder builder;
  // Iterative DFS from bag 0; builds the nice subtree for each original bag.
  struct Frame {
    int bag_id;
    int parent_bag;
    size_t next_child = 0;
    std::vector<int> pending;  // nice nodes of processed children, topped at this bag
  };
  std::vector<Frame> stack{{0, -1, 0, {}}};
  int top_node = -1;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    std::vector<int> kids;
    for (int nb : adj[frame.bag_id])
      if (nb != frame.parent_bag) kids.push_back(nb);

    if (frame.next_child < kids.size()) {
      int child = kids[frame.next_child++];
      stack.push_back({child, frame.bag_id, 0, {}});
      continue;
    }

    const auto& bag = td.bags[frame.bag_id];
    int node;
    if (frame.pending.empty()) {
      node = builder.leaf_chain(bag);
    } else {
      node = frame.pending[0];
      for (size_t i = 1; i < frame.pending.size(); i++)
        node = builder.add_node(bag, NodeKind::Join, -1, {node, frame.pending[i]});
    }

    int parent_bag = frame.parent_bag;
    stack.pop_back();
    if (parent_bag == -1) {
      top_node = node;
    } else {
      // Lift this subtree's top bag to the parent's bag, then queue it.
      node = builder.transform_chain(node, bag, td.bags[parent_bag]);
      stack.back().pending.push_back(node);
    }
  }

  // Forget everything above the root bag so the root bag is empty.
  builder.ntd.root = builder.transform_chain(top_node, td.bags[0], {});
  builder.ntd.parent[builder.ntd.root] = -1;
  return builder.ntd;
}

std::string write_td_format(const TreeDecomposition& td, const Instance& inst) {
  std::ostringstream out;
  out << "s td " << td.num_bags() << ' ' << td.width() + 1 << ' ' << inst.n() << '\n';
  for (size_t b = 0; b < td.num_bags(); b++) {
    out << "b " << b + 1;
    for (int v : td.bags[b]) out << ' ' << inst.items[v];
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

TreeDecomposition read_td_format(std::istream& in, const Instance& inst) {
  TreeDecomposition td;
  std::string line;
  long long num_bags = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    if (tok == "s") {
      std::string td_tok;
      long long width_plus_one, n;
      ss >> td_tok >> num_bags >> width_plus_one >> n;
      if (td_tok != "td" || num_bags < 0) throw std::runtime_error("bad td header");
      td.bags.resize(num_bags);
    } else if (tok == "b") {
      long long id;
      ss >> id;
      if (num_bags < 0 || id < 1 || id > num_bags) throw std::runtime_error("bad bag id");
      std::vector<int> bag;
      std::string item;
      while (ss >> item) {
        int idx = inst.item_index(item);
        if (idx == -1) {
          try {
            size_t used = 0;
            long long as_int = std::stoll(item, &used);
            if (used == item.size() && as_int >= 1 && as_int <= inst.n())
              idx = static_cast<int>(as_int - 1);
          } catch (const std::exception&) {
          }
        }
        if (idx == -1) throw std::runtime_error("unknown item in bag: " + item);
        bag.push_back(idx);
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      td.bags[id - 1] = bag;
    } else {
      long long a = 0, b = 0;
      std::istringstream es(line);
      if (!(es >> a >> b)) throw std::runtime_error("bad tree edge line: " + line);
      if (num_bags < 0 || a < 1 || b < 1 || a > num_bags || b > num_bags)
        throw std::runtime_error("tree edge references unknown bag");
      td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
  }
  if (num_bags < 0) throw std::runtime_error("missing td header");
  return td;
}

}  // namespace bcfea
