#ifndef INCTREE_TREE_SPACE_HPP
#define INCTREE_TREE_SPACE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inctree/degree_weights.hpp"
#include "inctree/exact.hpp"

namespace inctree {

/// Raised when an exhaustive computation would exceed its documented bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bound for an exhaustive enumeration. The environment variable
/// INCTREE_CAPACITY raises every bound to its value (never lowers it).
std::size_t capacity_limit(std::size_t default_limit);

/// Rooted plane tree stored as the preorder sequence of out-degrees; node ids
/// are preorder indices, 0 being the root.
class OrderedTree {
 public:
  /// Single node.
  OrderedTree();

  /// Root whose ordered children are the given subtrees.
  static OrderedTree from_children(std::span<const OrderedTree> children);
  static OrderedTree from_degrees(std::vector<std::uint8_t> preorder_degrees);

  /// Balanced-parentheses encoding, one pair per node: "()" is a single
  /// node, "(()())" the cherry. Throws std::invalid_argument when malformed.
  static OrderedTree parse(std::string_view text);
  std::string to_string() const;

  std::size_t size() const { return degrees_.size(); }
  unsigned out_degree(std::size_t v) const { return degrees_.at(v); }
  const std::vector<std::uint8_t>& preorder_degrees() const { return degrees_; }

  /// Subtree sizes h_v, indexed by preorder id.
  std::vector<std::size_t> hook_lengths() const;
  /// Preorder ids of each node's children, left to right.
  std::vector<std::vector<std::size_t>> children() const;
  /// Parent id per node, nullopt for the root.
  std::vector<std::optional<std::size_t>> parents() const;
  /// The root's subtrees.
  std::vector<OrderedTree> subtrees() const;

  /// Canonical order: by size, then by child sequence lexicographically
  /// (children compared recursively, a proper prefix sorts first).
  friend std::strong_ordering operator<=>(const OrderedTree& a, const OrderedTree& b);
  friend bool operator==(const OrderedTree& a, const OrderedTree& b) { return a.degrees_ == b.degrees_; }

 private:
  explicit OrderedTree(std::vector<std::uint8_t> degrees) : degrees_(std::move(degrees)) {}
  std::vector<std::uint8_t> degrees_;
};

/// All Catalan(n-1) ordered trees of size n in canonical order. Bounded by
/// capacity_limit(14); larger n raises CapacityError.
const std::vector<OrderedTree>& enumerate_ordered_trees(std::size_t n);

/// Trees of size n whose out-degrees all have nonzero weight.
std::vector<OrderedTree> enumerate_weighted_trees(std::size_t n, const DegreeWeights& w);

/// w(T) = prod_v phi_{odeg(v)}.
Rational tree_weight(const OrderedTree& t, const DegreeWeights& w);

/// Bucket sizes b(v) >= 1 per node (preorder ids).
struct BucketFunction {
  std::vector<unsigned> sizes;
  unsigned total() const;
  friend bool operator==(const BucketFunction&, const BucketFunction&) = default;
};

/// h^{[b]}(v): sum of bucket sizes over the subtree of v.
std::vector<std::size_t> bucket_hook_lengths(const OrderedTree& t, const BucketFunction& b);

/// (kn)! / prod_v (k h_v)^{falling k}.
Integer count_k_labellings_formula(const OrderedTree& t, unsigned k);

/// Counts increasing k-labellings by constructing every assignment of
/// k-subsets of {1..kn} to the nodes. Requires k*n <= capacity_limit(12).
Integer count_k_labellings_bruteforce(const OrderedTree& t, unsigned k);

/// m! / prod_v (h^{[b]}(v))^{falling b(v)}.
Integer count_bucket_labellings_formula(const OrderedTree& t, const BucketFunction& b);

/// Explicit enumeration of increasing multilabellings with the given bucket
/// sizes. Requires m <= capacity_limit(10).
Integer count_bucket_labellings_bruteforce(const OrderedTree& t, const BucketFunction& b);

/// (n! / prod h_v)^k.
Integer count_k_tuple_labellings(const OrderedTree& t, unsigned k);

/// All b: nodes -> {1..max_bucket} with sum m, in lexicographic order of the
/// preorder size vector. Empty when m < size(t) or m > size(t)*max_bucket.
std::vector<BucketFunction> enumerate_bucket_functions(const OrderedTree& t, unsigned m,
                                                       std::optional<unsigned> max_bucket = std::nullopt);

}  // namespace inctree

#endif  // INCTREE_TREE_SPACE_HPP
