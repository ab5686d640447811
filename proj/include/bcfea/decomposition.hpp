#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bcfea/graph.hpp"

namespace bcfea {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;          // bag id -> sorted item indices
  std::vector<std::pair<int, int>> tree_edges; // bag id pairs

  int width() const;
  size_t num_bags() const { return bags.size(); }
};

enum class NodeKind : std::uint8_t { Leaf, Introduce, Forget, Join };

const char* to_string(NodeKind kind);

/// Rooted nice tree decomposition: empty root and leaf bags, Introduce adds
/// one item vs its child, Forget removes one, Join has two children with
/// identical bags.
struct NiceTreeDecomposition {
  std::vector<std::vector<int>> bags;  // sorted
  std::vector<int> parent;             // -1 at root
  std::vector<std::vector<int>> children;
  std::vector<NodeKind> kind;
  std::vector<int> item;               // introduced/forgotten item, -1 otherwise
  int root = -1;

  int width() const;
  size_t num_nodes() const { return bags.size(); }
  std::vector<int> post_order() const;  // children before parents
  int join_count() const;
};

struct DecompositionReport {
  bool valid = false;
  std::vector<std::string> violations;
};

/// Checks the three tree-decomposition properties (vertex coverage, edge
/// coverage, connected occurrence subtrees) plus tree shape, reporting every
/// violation.
DecompositionReport validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// validate_decomposition on the bags/edges plus an audit of the nice-form
/// kind labels.
DecompositionReport validate_nice_decomposition(const Graph& g, const NiceTreeDecomposition& ntd);

enum class EliminationHeuristic { MinFill, MinDegree };

/// Tree decomposition from an elimination ordering chosen greedily by the
/// given heuristic (ties broken by smallest vertex). Valid but not
/// necessarily optimal width.
TreeDecomposition heuristic_tree_decomposition(const Graph& g,
                                               EliminationHeuristic heuristic = EliminationHeuristic::MinFill);

struct NotChordalInput : std::invalid_argument {
  NotChordalInput() : std::invalid_argument("clique_tree requires a chordal graph") {}
};

/// Clique tree of a chordal graph: a tree decomposition whose bags are the
/// maximal cliques; width = omega(G) - 1.
TreeDecomposition clique_tree(const Graph& g, const ChordalityResult& chordality);

/// Converts any valid tree decomposition to nice form of the same width with
/// O(width * n) nodes. High-degree tree nodes are binarized into joins.
NiceTreeDecomposition to_nice_decomposition(const TreeDecomposition& td);

/// Tree-decomposition text exchange format: header `s td <bags> <width+1> <n>`,
/// bag lines `b <bag_id> <item...>`, then tree edges `<bag_id> <bag_id>`.
/// Bag ids are 1-based. Item tokens are item ids; bare integers in [1..n]
/// are accepted as 1-based item indices for competition-style files.
std::string write_td_format(const TreeDecomposition& td, const Instance& inst);
TreeDecomposition read_td_format(std::istream& in, const Instance& inst);

}  // namespace bcfea
