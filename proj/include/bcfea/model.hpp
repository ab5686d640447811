#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcfea/values.hpp"

namespace bcfea {

enum class ValuationMode { Identical, PerAgent };

/// A validated problem instance: items with additive utilities and costs, a
/// conflict graph on the items, an agent count k, a profit floor P and a
/// budget B. Instances are immutable after validation; every operation on
/// them is a pure function.
struct Instance {
  std::vector<std::string> items;           // unique ids, order fixed
  int k = 1;
  std::vector<std::pair<int, int>> edges;   // item indices, u < v, sorted, unique
  ValuationMode mode = ValuationMode::Identical;
  std::vector<std::vector<Value>> utility;  // [row][item]; one row in Identical mode
  std::vector<std::vector<Value>> cost;     // same shape as utility
  Value profit_floor = 0;                   // P
  Value budget = 0;                         // B

  int n() const { return static_cast<int>(items.size()); }
  bool identical() const { return mode == ValuationMode::Identical; }

  Value util(int agent, int item) const {
    return utility[mode == ValuationMode::Identical ? 0 : agent][item];
  }
  Value cst(int agent, int item) const {
    return cost[mode == ValuationMode::Identical ? 0 : agent][item];
  }

  int item_index(const std::string& id) const;

  bool operator==(const Instance&) const = default;
};

/// Raw, unchecked instance record as parsed from a file or built by hand.
struct RawInstance {
  std::vector<std::string> items;
  long long k = 1;
  std::vector<std::pair<std::string, std::string>> edges;
  bool per_agent = false;
  std::vector<std::map<std::string, long long>> utilities;  // one map in identical mode
  std::vector<std::map<std::string, long long>> costs;
  long long profit_floor = 0;
  long long budget = 0;
};

enum class ValidationCode {
  DuplicateItem,
  UnknownEndpoint,
  SelfLoop,
  DuplicateEdge,
  NegativeValue,
  ArityMismatch,
  MissingValue,
  BadAgentCount,
};

const char* to_string(ValidationCode code);

struct ValidationIssue {
  ValidationCode code;
  std::string detail;
};

struct ValidationResult {
  std::optional<Instance> instance;
  std::vector<ValidationIssue> issues;
  bool ok() const { return instance.has_value(); }
};

/// Checks every instance invariant and either returns the instance or a
/// diagnostic listing all violations.
ValidationResult validate_instance(const RawInstance& raw);

/// An ordered partition of the items into k bundles; bundle i belongs to
/// agent i. Empty bundles are legal.
struct Allocation {
  std::vector<std::vector<int>> bundles;  // item indices

  bool operator==(const Allocation&) const = default;
};

struct BundleReport {
  bool independent = false;
  bool cost_ok = false;
  bool profit_ok = false;
  Value profit = 0;
  Value cost = 0;
};

struct FeasibilityReport {
  bool partition_ok = false;                   // structural: k disjoint covering bundles
  std::vector<std::string> structural_issues;  // NotAPartition details
  std::vector<BundleReport> bundles;
  bool feasible = false;
};

/// Checks independence, c_i(S_i) <= B and p_i(S_i) >= P for every bundle,
/// evaluating bundle i with agent i's valuation functions. A missing or
/// duplicated item is a structural failure, reported separately from
/// infeasibility.
FeasibilityReport verify_allocation(const Instance& inst, const Allocation& alloc);

struct InstanceStats {
  std::vector<Value> alpha;  // total utility per agent; one entry in Identical mode
  std::vector<Value> gamma;  // total cost per agent
  int lambda = 0;            // number of distinct (cost, utility) pairs
  int n = 0;

  Value alpha_max() const;
  Value gamma_max() const;
};

InstanceStats compute_stats(const Instance& inst);

/// Identical-mode instance rewritten as an equivalent PerAgent instance with
/// k copies of the valuation functions.
Instance expand_to_per_agent(const Instance& inst);

}  // namespace bcfea
