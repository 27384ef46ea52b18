#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wrt {

// Rooted recursive tree on labels {1..n}: node 1 is the root and every other
// node j stores a parent with parent(j) < j. Parents are kept in a flat
// uint32 array (4 bytes/node), so trees with 10^7 nodes stay cheap.
class RecursiveTree {
 public:
  RecursiveTree() = default;

  static RecursiveTree single_node();
  // parents[j-2] is the parent of node j; validates the increasing property.
  static RecursiveTree from_parents(std::vector<std::uint32_t> parents);

  std::uint64_t size() const { return parents_.size() + 1; }

  std::uint32_t parent(std::uint64_t j) const;

  const std::vector<std::uint32_t>& parents() const { return parents_; }

  // Builder interface for samplers: size n, parents initially unset.
  void reset(std::uint64_t n);
  void set_parent(std::uint64_t j, std::uint32_t p) { parents_[j - 2] = p; }

  bool operator==(const RecursiveTree&) const = default;

 private:
  std::vector<std::uint32_t> parents_;
};

// Statistics of one realized tree. branch_sizes is sorted ascending and sums
// to n-1; a leaf is a non-root node without children, so the single-node
// tree reports zero everywhere.
struct TreeStats {
  std::uint64_t leaves = 0;
  std::uint64_t height = 0;
  std::uint64_t depth_last = 0;
  std::vector<std::uint64_t> branch_sizes;
  std::uint64_t num_branches = 0;
  std::uint64_t largest_branch = 0;
};

TreeStats compute_stats(const RecursiveTree& tree);

// Number of parent steps from node i to the root; depth_of(t, 1) == 0.
std::uint64_t depth_of(const RecursiveTree& tree, std::uint64_t i);

enum class Statistic { leaves, height, depth_last, branches, largest_branch };

const char* statistic_name(Statistic s);
Statistic statistic_from_name(const std::string& name);

// Scratch space so per-replication statistic extraction does not allocate.
struct StatWorkspace {
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
};

std::uint64_t statistic_value(const RecursiveTree& tree, Statistic s,
                              StatWorkspace& ws);

// Text format: first line "n", then one line "j parent(j)" for j = 2..n.
void write_tree(std::ostream& out, const RecursiveTree& tree);
RecursiveTree read_tree(std::istream& in);

}  // namespace wrt
