#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hfcalc/laurent.hpp"
#include "hfcalc/pd.hpp"

namespace hfc {

/// Node of a skein resolution tree. A branch records the role the node's own
/// link plays at the chosen crossing: a Positive node is the K+ of the
/// triple (its children are K- and K0), a Negative node is the K-. Leaves
/// are the standard links with known polynomial: the unknot (value 1) and
/// the split two-component unlink (value 0).
struct SkeinNode {
  enum Kind { UnknotLeaf, SplitUnlinkLeaf, Branch };
  enum Role { Positive, Negative };

  Kind kind = UnknotLeaf;
  Role role = Positive;     // Branch only
  int crossing_id = 0;      // Branch only, informational
  std::shared_ptr<SkeinNode> flipped;   // the crossing-changed link
  std::shared_ptr<SkeinNode> resolved;  // the oriented resolution

  static std::shared_ptr<SkeinNode> unknot();
  static std::shared_ptr<SkeinNode> split_unlink();
  static std::shared_ptr<SkeinNode> branch(Role role, int crossing_id,
                                           std::shared_ptr<SkeinNode> flipped,
                                           std::shared_ptr<SkeinNode> resolved);
};

using SkeinTree = std::shared_ptr<SkeinNode>;

/// Conway polynomial of the tree's root in the skein variable z:
/// Theta(K+) = Theta(K-) + z Theta(K0) at each branch, unknot 1, split
/// unlink 0.
Laurent conway_from_tree(const SkeinTree& tree);

/// Conway recursion followed by the substitution z^2 = t - 2 + t^-1; for a
/// knot this is the symmetric Alexander polynomial with value 1 at t = 1.
Laurent theta_from_tree(const SkeinTree& tree);

/// Parses the JSON encoding
///   {"leaf": "unknot"} | {"leaf": "split-unlink"} |
///   {"role": "positive"|"negative", "crossing": n,
///    "flipped": {...}, "resolved": {...}}
SkeinTree skein_tree_from_json(const std::string& json_text);
std::string skein_tree_to_json(const SkeinTree& tree);

struct Mod2Partition {
  // classes[i] = indices of the inputs sharing the i-th canonical form
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::string> canonical_forms;  // one per class
  bool all_distinct() const;
};

/// Groups polynomials by their canonical mod-2 form (normalize_up_to_unit of
/// the mod-2 reduction); singleton classes are pairwise distinguishable.
Mod2Partition mod2_partition(const std::vector<Laurent>& polys);

}  // namespace hfc
