#include "wrt/tree.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wrt {

RecursiveTree RecursiveTree::single_node() { return RecursiveTree(); }

RecursiveTree RecursiveTree::from_parents(std::vector<std::uint32_t> parents) {
  for (std::size_t idx = 0; idx < parents.size(); ++idx) {
    const std::uint64_t j = idx + 2;
    if (parents[idx] < 1 || parents[idx] >= j)
      throw std::invalid_argument("node " + std::to_string(j) +
                                  " needs a parent in [1, " +
                                  std::to_string(j - 1) + "]");
  }
  RecursiveTree t;
  t.parents_ = std::move(parents);
  return t;
}

std::uint32_t RecursiveTree::parent(std::uint64_t j) const {
  if (j < 2 || j > size())
    throw std::out_of_range("node " + std::to_string(j) + " out of range");
  return parents_[j - 2];
}

void RecursiveTree::reset(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("tree needs at least one node");
  parents_.assign(n - 1, 0);
}

std::uint64_t depth_of(const RecursiveTree& tree, std::uint64_t i) {
  if (i < 1 || i > tree.size())
    throw std::out_of_range("node " + std::to_string(i) + " out of range");
  std::uint64_t d = 0;
  while (i != 1) {
    i = tree.parent(i);
    ++d;
  }
  return d;
}

TreeStats compute_stats(const RecursiveTree& tree) {
  const std::uint64_t n = tree.size();
  TreeStats st;
  if (n == 1) return st;

  const auto& par = tree.parents();
  std::vector<std::uint32_t> depth(n + 1, 0);
  std::vector<std::uint32_t> branch(n + 1, 0);  // root child owning each node
  std::vector<std::uint8_t> has_child(n + 1, 0);

  for (std::uint64_t j = 2; j <= n; ++j) {
    const std::uint32_t p = par[j - 2];
    has_child[p] = 1;
    depth[j] = depth[p] + 1;
    branch[j] = p == 1 ? static_cast<std::uint32_t>(j) : branch[p];
    if (depth[j] > st.height) st.height = depth[j];
  }
  st.depth_last = depth[n];

  std::vector<std::uint64_t> branch_size(n + 1, 0);
  for (std::uint64_t j = 2; j <= n; ++j) {
    if (!has_child[j]) ++st.leaves;
    ++branch_size[branch[j]];
  }
  for (std::uint64_t j = 2; j <= n; ++j)
    if (branch_size[j] > 0) st.branch_sizes.push_back(branch_size[j]);
  std::sort(st.branch_sizes.begin(), st.branch_sizes.end());
  st.num_branches = st.branch_sizes.size();
  st.largest_branch = st.branch_sizes.empty() ? 0 : st.branch_sizes.back();
  return st;
}

const char* statistic_name(Statistic s) {
  switch (s) {
    case Statistic::leaves:
      return "leaves";
    case Statistic::height:
      return "height";
    case Statistic::depth_last:
      return "depth_last";
    case Statistic::branches:
      return "branches";
    case Statistic::largest_branch:
      return "largest_branch";
  }
  return "?";
}

Statistic statistic_from_name(const std::string& name) {
  if (name == "leaves") return Statistic::leaves;
  if (name == "height") return Statistic::height;
  if (name == "depth_last") return Statistic::depth_last;
  if (name == "branches") return Statistic::branches;
  if (name == "largest_branch") return Statistic::largest_branch;
  throw std::invalid_argument("unknown statistic: " + name);
}

std::uint64_t statistic_value(const RecursiveTree& tree, Statistic s,
                              StatWorkspace& ws) {
  const std::uint64_t n = tree.size();
  if (n == 1) return 0;
  const auto& par = tree.parents();

  switch (s) {
    case Statistic::leaves: {
      auto& has_child = ws.a;
      has_child.assign(n + 1, 0);
      for (std::uint64_t j = 2; j <= n; ++j) has_child[par[j - 2]] = 1;
      std::uint64_t leaves = 0;
      for (std::uint64_t j = 2; j <= n; ++j)
        if (!has_child[j]) ++leaves;
      return leaves;
    }
    case Statistic::height: {
      auto& depth = ws.a;
      depth.assign(n + 1, 0);
      std::uint32_t h = 0;
      for (std::uint64_t j = 2; j <= n; ++j) {
        depth[j] = depth[par[j - 2]] + 1;
        if (depth[j] > h) h = depth[j];
      }
      return h;
    }
    case Statistic::depth_last: {
      std::uint64_t d = 0;
      std::uint64_t i = n;
      while (i != 1) {
        i = par[i - 2];
        ++d;
      }
      return d;
    }
    case Statistic::branches: {
      std::uint64_t b = 0;
      for (std::uint64_t j = 2; j <= n; ++j)
        if (par[j - 2] == 1) ++b;
      return b;
    }
    case Statistic::largest_branch: {
      auto& branch = ws.a;
      auto& count = ws.b;
      branch.assign(n + 1, 0);
      count.assign(n + 1, 0);
      std::uint32_t best = 0;
      for (std::uint64_t j = 2; j <= n; ++j) {
        const std::uint32_t p = par[j - 2];
        branch[j] = p == 1 ? static_cast<std::uint32_t>(j) : branch[p];
        if (++count[branch[j]] > best) best = count[branch[j]];
      }
      return best;
    }
  }
  throw std::logic_error("unreachable statistic");
}

void write_tree(std::ostream& out, const RecursiveTree& tree) {
  out << tree.size() << '\n';
  for (std::uint64_t j = 2; j <= tree.size(); ++j)
    out << j << ' ' << tree.parent(j) << '\n';
}

RecursiveTree read_tree(std::istream& in) {
  std::uint64_t n = 0;
  if (!(in >> n) || n < 1)
    throw std::invalid_argument("tree file: bad node count");
  std::vector<std::uint32_t> parents(n - 1, 0);
  for (std::uint64_t j = 2; j <= n; ++j) {
    std::uint64_t label = 0, p = 0;
    if (!(in >> label >> p) || label != j)
      throw std::invalid_argument("tree file: expected line for node " +
                                  std::to_string(j));
    if (p < 1 || p >= j)
      throw std::invalid_argument("tree file: node " + std::to_string(j) +
                                  " has invalid parent " + std::to_string(p));
    parents[j - 2] = static_cast<std::uint32_t>(p);
  }
  return RecursiveTree::from_parents(std::move(parents));
}

}  // namespace wrt
