#pragma once

#include "wrt/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wrt {

enum class WeightFamily { uniform, hoppe, theta_k, power, custom };

// A positive node-weight family (w_i)_{i>=1} together with its prefix sums
// S(i) = w_1 + ... + w_i. Instances are immutable value handles; copies share
// the memoized prefix table. Call prefix_table(upto) before handing a
// sequence to concurrent workers so readers never observe a growing table.
class WeightSequence {
 public:
  static WeightSequence uniform();
  static WeightSequence hoppe(double theta);
  static WeightSequence theta_k(double theta, std::uint64_t k);
  static WeightSequence power(double exponent);
  static WeightSequence custom(std::vector<double> table);
  static WeightSequence custom_from_file(const std::string& path);

  // Parses the flat descriptor grammar:
  //   uniform | hoppe:<theta> | thetak:<theta>,<k> | power:<a> | custom:<path>
  static WeightSequence from_descriptor(const std::string& descriptor);

  WeightFamily family() const;
  double theta() const;          // hoppe / theta_k only
  std::uint64_t k() const;       // theta_k only
  double exponent() const;       // power only

  // w_i, 1-based. Throws std::out_of_range past the end of a custom table.
  double weight_at(std::uint64_t i) const;

  // S(i). Closed form where the family has one, memoized table otherwise.
  double prefix_sum(std::uint64_t i) const;

  // S(1..upto) as a contiguous table (built with compensated summation).
  std::span<const double> prefix_table(std::uint64_t upto) const;

  // Largest index with a defined weight (UINT64_MAX for closed-form families).
  std::uint64_t max_index() const;

  // Smallest k with w_i = 1 for all i > k, when the family guarantees an
  // eventually-constant tail (for custom tables: within the table).
  std::optional<std::uint64_t> constancy_index() const;

  // Exact rational prefix sums; table-backed families only.
  std::optional<std::vector<Rational>> exact_prefix_sums(std::uint64_t upto) const;
  std::optional<std::vector<Rational>> exact_weights(std::uint64_t upto) const;

  // Descriptor echo for reports ("hoppe:2", "custom:weights.txt", ...).
  const std::string& label() const;

 private:
  struct Impl;
  explicit WeightSequence(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;
};

}  // namespace wrt
