#ifndef INCTREE_BIJECTIONS_HPP
#define INCTREE_BIJECTIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inctree {

enum class Color { black, white };

/// A labelled rooted tree. Label sets are kept ascending; unordered schemes
/// keep children sorted by their smallest label.
struct LabelledTree {
  std::vector<int> labels;
  std::optional<Color> color;
  std::vector<LabelledTree> children;

  std::size_t size() const;         // number of nodes
  std::size_t label_count() const;  // total number of labels

  /// "({1,2}b ({3}w) ({4}))": a node is "(" label-set [b|w] children ")".
  std::string to_string() const;
  /// Throws std::invalid_argument on malformed text.
  static LabelledTree parse(std::string_view text);

  friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
};

enum class ObjectScheme {
  free_ordered,                 // ordered, label sets of any size, no colours
  unibi_unordered,              // unordered, label sets of size 1 or 2, no colours
  colored_unary_ordered,        // ordered, single labels, only out-degree-1 nodes may be black
  colored_branching_unordered,  // unordered, single labels, only out-degree >= 2 nodes may be black
};

std::string to_string(ObjectScheme s);
/// Accepts free, unibi, colored-unary, colored-branching.
ObjectScheme parse_object_scheme(std::string_view text);

/// Throws std::invalid_argument naming the violated constraint.
void validate(const LabelledTree& t, ObjectScheme scheme);

/// Each node with labels l_1 < ... < l_k becomes a chain of k-1 black nodes
/// followed by a white node that keeps the original children.
LabelledTree multi_to_colored(const LabelledTree& t);
/// Pushes chains of black nodes back together.
LabelledTree colored_to_multi(const LabelledTree& c);

struct QImage {
  LabelledTree tree;
  bool dropped_root_label = false;  // true when the root was {1,2}: size m-1
};

/// Unordered uni-bi tree with m labels to a branching-coloured tree with m
/// labels, or m-1 labels when the root carried {1,2}.
QImage unibi_to_q(const LabelledTree& t);
LabelledTree q_to_unibi(const QImage& q);

/// All objects with m labels, in a fixed order. m is bounded by capacity_limit(7).
std::vector<LabelledTree> enumerate_objects(ObjectScheme scheme, std::size_t m);

struct BijectionReport {
  std::string name;
  std::size_t m = 0;
  std::size_t domain_count = 0;
  std::size_t codomain_count = 0;
  bool image_valid = true;
  bool injective = true;
  bool round_trip = true;
  bool image_equals_codomain = true;
  std::string first_failure;

  bool ok() const { return image_valid && injective && round_trip && image_equals_codomain; }
};

/// Free ordered multilabelled trees against unary-coloured ordered trees.
BijectionReport verify_chain_bijection(std::size_t m);
/// Uni-bi trees with m labels against branching-coloured trees with m or m-1 labels.
BijectionReport verify_split_bijection(std::size_t m);

}  // namespace inctree

#endif  // INCTREE_BIJECTIONS_HPP
