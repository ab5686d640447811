#include "bcfea/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace bcfea {

int Instance::item_index(const std::string& id) const {
  for (int i = 0; i < n(); i++)
    if (items[i] == id) return i;
  return -1;
}

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::DuplicateItem: return "DuplicateItem";
    case ValidationCode::UnknownEndpoint: return "UnknownEndpoint";
    case ValidationCode::SelfLoop: return "SelfLoop";
    case ValidationCode::DuplicateEdge: return "DuplicateEdge";
    case ValidationCode::NegativeValue: return "NegativeValue";
    case ValidationCode::ArityMismatch: return "ArityMismatch";
    case ValidationCode::MissingValue: return "MissingValue";
    case ValidationCode::BadAgentCount: return "BadAgentCount";
  }
  return "Unknown";
}

namespace {

void check_value_maps(const RawInstance& raw,
                      const std::vector<std::map<std::string, long long>>& maps,
                      const char* what, size_t expected_rows,
                      const std::unordered_map<std::string, int>& index,
                      std::vector<ValidationIssue>& issues) {
  if (maps.size() != expected_rows) {
    issues.push_back({ValidationCode::ArityMismatch,
                      std::string(what) + ": expected " + std::to_string(expected_rows) +
                          " mapping(s), got " + std::to_string(maps.size())});
    return;
  }
  for (size_t row = 0; row < maps.size(); row++) {
    const auto& m = maps[row];
    for (const auto& [id, v] : m) {
      if (index.find(id) == index.end())
        issues.push_back({ValidationCode::UnknownEndpoint,
                          std::string(what) + "[" + std::to_string(row) + "] names unknown item " + id});
      if (v < 0)
        issues.push_back({ValidationCode::NegativeValue,
                          std::string(what) + "[" + std::to_string(row) + "](" + id + ") = " +
                              std::to_string(v)});
    }
    for (const auto& id : raw.items) {
      if (m.find(id) == m.end())
        issues.push_back({ValidationCode::MissingValue,
                          std::string(what) + "[" + std::to_string(row) + "] missing item " + id});
    }
  }
}

}  // namespace

ValidationResult validate_instance(const RawInstance& raw) {
  ValidationResult result;
  auto& issues = result.issues;

  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < raw.items.size(); i++) {
    if (!index.emplace(raw.items[i], static_cast<int>(i)).second)
      issues.push_back({ValidationCode::DuplicateItem, raw.items[i]});
  }

  if (raw.k < 1)
    issues.push_back({ValidationCode::BadAgentCount, "k = " + std::to_string(raw.k)});
  if (raw.profit_floor < 0)
    issues.push_back({ValidationCode::NegativeValue, "P = " + std::to_string(raw.profit_floor)});
  if (raw.budget < 0)
    issues.push_back({ValidationCode::NegativeValue, "B = " + std::to_string(raw.budget)});

  std::set<std::pair<int, int>> edge_set;
  for (const auto& [a, b] : raw.edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end())
      issues.push_back({ValidationCode::UnknownEndpoint, a});
    if (ib == index.end())
      issues.push_back({ValidationCode::UnknownEndpoint, b});
    if (ia == index.end() || ib == index.end()) continue;
    if (ia->second == ib->second) {
      issues.push_back({ValidationCode::SelfLoop, a});
      continue;
    }
    int u = std::min(ia->second, ib->second);
    int v = std::max(ia->second, ib->second);
    if (!edge_set.emplace(u, v).second)
      issues.push_back({ValidationCode::DuplicateEdge, a + "-" + b});
  }

  size_t rows = raw.per_agent ? static_cast<size_t>(std::max(raw.k, 0ll)) : 1;
  check_value_maps(raw, raw.utilities, "utilities", rows, index, issues);
  check_value_maps(raw, raw.costs, "costs", rows, index, issues);

  if (!issues.empty()) return result;

  Instance inst;
  inst.items = raw.items;
  inst.k = static_cast<int>(raw.k);
  inst.edges.assign(edge_set.begin(), edge_set.end());
  inst.mode = raw.per_agent ? ValuationMode::PerAgent : ValuationMode::Identical;
  inst.profit_floor = raw.profit_floor;
  inst.budget = raw.budget;
  inst.utility.resize(rows);
  inst.cost.resize(rows);
  for (size_t row = 0; row < rows; row++) {
    inst.utility[row].resize(raw.items.size());
    inst.cost[row].resize(raw.items.size());
    for (size_t i = 0; i < raw.items.size(); i++) {
      inst.utility[row][i] = raw.utilities[row].at(raw.items[i]);
      inst.cost[row][i] = raw.costs[row].at(raw.items[i]);
    }
  }
  result.instance = std::move(inst);
  return result;
}

FeasibilityReport verify_allocation(const Instance& inst, const Allocation& alloc) {
  FeasibilityReport report;
  report.partition_ok = true;

  if (static_cast<int>(alloc.bundles.size()) != inst.k) {
    report.partition_ok = false;
    report.structural_issues.push_back("expected " + std::to_string(inst.k) + " bundles, got " +
                                       std::to_string(alloc.bundles.size()));
  }

  std::vector<int> seen(inst.n(), 0);
  for (const auto& bundle : alloc.bundles) {
    for (int v : bundle) {
      if (v < 0 || v >= inst.n()) {
        report.partition_ok = false;
        report.structural_issues.push_back("item index " + std::to_string(v) + " out of range");
      } else {
        seen[v]++;
      }
    }
  }
  for (int v = 0; v < inst.n(); v++) {
    if (seen[v] == 0) {
      report.partition_ok = false;
      report.structural_issues.push_back("item " + inst.items[v] + " unassigned");
    } else if (seen[v] > 1) {
      report.partition_ok = false;
      report.structural_issues.push_back("item " + inst.items[v] + " assigned " +
                                         std::to_string(seen[v]) + " times");
    }
  }

  std::vector<std::vector<bool>> adj(inst.n(), std::vector<bool>(inst.n(), false));
  for (auto [u, v] : inst.edges) adj[u][v] = adj[v][u] = true;

  bool all_ok = report.partition_ok;
  for (size_t i = 0; i < alloc.bundles.size(); i++) {
    const auto& bundle = alloc.bundles[i];
    BundleReport br;
    br.independent = true;
    for (size_t a = 0; a < bundle.size(); a++)
      for (size_t b = a + 1; b < bundle.size(); b++)
        if (bundle[a] >= 0 && bundle[a] < inst.n() && bundle[b] >= 0 && bundle[b] < inst.n() &&
            adj[bundle[a]][bundle[b]])
          br.independent = false;
    int agent = std::min(static_cast<int>(i), inst.k - 1);
    for (int v : bundle) {
      if (v < 0 || v >= inst.n()) continue;
      br.profit = checked_add(br.profit, inst.util(agent, v));
      br.cost = checked_add(br.cost, inst.cst(agent, v));
    }
    br.cost_ok = br.cost <= inst.budget;
    br.profit_ok = br.profit >= inst.profit_floor;
    all_ok = all_ok && br.independent && br.cost_ok && br.profit_ok;
    report.bundles.push_back(br);
  }
  report.feasible = all_ok;
  return report;
}

Value InstanceStats::alpha_max() const {
  Value m = 0;
  for (Value a : alpha) m = std::max(m, a);
  return m;
}

Value InstanceStats::gamma_max() const {
  Value m = 0;
  for (Value g : gamma) m = std::max(m, g);
  return m;
}

InstanceStats compute_stats(const Instance& inst) {
  InstanceStats stats;
  stats.n = inst.n();
  size_t rows = inst.utility.size();
  stats.alpha.resize(rows, 0);
  stats.gamma.resize(rows, 0);
  std::set<std::pair<Value, Value>> types;  // (cost, utility) pairs, union over agents
  for (size_t row = 0; row < rows; row++) {
    for (int v = 0; v < inst.n(); v++) {
      stats.alpha[row] = checked_add(stats.alpha[row], inst.utility[row][v]);
      stats.gamma[row] = checked_add(stats.gamma[row], inst.cost[row][v]);
      types.emplace(inst.cost[row][v], inst.utility[row][v]);
    }
  }
  stats.lambda = static_cast<int>(types.size());
  return stats;
}

Instance expand_to_per_agent(const Instance& inst) {
  Instance out = inst;
  if (inst.mode == ValuationMode::PerAgent) return out;
  out.mode = ValuationMode::PerAgent;
  out.utility.assign(inst.k, inst.utility[0]);
  out.cost.assign(inst.k, inst.cost[0]);
  return out;
}

}  // namespace bcfea
