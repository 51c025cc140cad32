#include "hfcalc/skein.hpp"

#include <map>

#include <nlohmann/json.hpp>

namespace hfc {

using nlohmann::ordered_json;

std::shared_ptr<SkeinNode> SkeinNode::unknot() {
  auto n = std::make_shared<SkeinNode>();
  n->kind = UnknotLeaf;
  return n;
}

std::shared_ptr<SkeinNode> SkeinNode::split_unlink() {
  auto n = std::make_shared<SkeinNode>();
  n->kind = SplitUnlinkLeaf;
  return n;
}

std::shared_ptr<SkeinNode> SkeinNode::branch(Role role, int crossing_id,
                                             std::shared_ptr<SkeinNode> flipped,
                                             std::shared_ptr<SkeinNode> resolved) {
  if (!flipped || !resolved)
    throw DomainError("skein branch needs both children");
  auto n = std::make_shared<SkeinNode>();
  n->kind = Branch;
  n->role = role;
  n->crossing_id = crossing_id;
  n->flipped = std::move(flipped);
  n->resolved = std::move(resolved);
  return n;
}

Laurent conway_from_tree(const SkeinTree& tree) {
  if (!tree) throw DomainError("empty skein tree");
  switch (tree->kind) {
    case SkeinNode::UnknotLeaf:
      return Laurent::constant(1, 1, Coeffs::Z);
    case SkeinNode::SplitUnlinkLeaf:
      return Laurent::zero(1, Coeffs::Z);
    case SkeinNode::Branch: {
      Laurent flip = conway_from_tree(tree->flipped);
      Laurent res = conway_from_tree(tree->resolved);
      Laurent z = Laurent::monomial(1, {1}, 1, Coeffs::Z);
      // K+ = K- + z K0; a Negative node is the K- of its triple
      return tree->role == SkeinNode::Positive ? flip + z * res
                                               : flip - z * res;
    }
  }
  throw DomainError("corrupt skein tree");
}

Laurent theta_from_tree(const SkeinTree& tree) {
  return expand_z_square(conway_from_tree(tree));
}

namespace {

SkeinTree tree_from_json_value(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("skein tree node must be an object");
  if (j.contains("leaf")) {
    std::string kind = j.at("leaf").get<std::string>();
    if (kind == "unknot") return SkeinNode::unknot();
    if (kind == "split-unlink" || kind == "unlink2")
      return SkeinNode::split_unlink();
    throw ParseError("unknown skein leaf '" + kind + "'");
  }
  if (!j.contains("role") || !j.contains("flipped") || !j.contains("resolved"))
    throw ParseError("skein branch needs role/flipped/resolved");
  std::string role = j.at("role").get<std::string>();
  SkeinNode::Role r;
  if (role == "positive" || role == "+")
    r = SkeinNode::Positive;
  else if (role == "negative" || role == "-")
    r = SkeinNode::Negative;
  else
    throw ParseError("skein role must be positive or negative");
  int crossing = j.value("crossing", 0);
  return SkeinNode::branch(r, crossing, tree_from_json_value(j.at("flipped")),
                           tree_from_json_value(j.at("resolved")));
}

ordered_json tree_to_json_value(const SkeinTree& t) {
  ordered_json j;
  switch (t->kind) {
    case SkeinNode::UnknotLeaf:
      j["leaf"] = "unknot";
      break;
    case SkeinNode::SplitUnlinkLeaf:
      j["leaf"] = "split-unlink";
      break;
    case SkeinNode::Branch:
      j["role"] = t->role == SkeinNode::Positive ? "positive" : "negative";
      j["crossing"] = t->crossing_id;
      j["flipped"] = tree_to_json_value(t->flipped);
      j["resolved"] = tree_to_json_value(t->resolved);
      break;
  }
  return j;
}

}  // namespace

SkeinTree skein_tree_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("skein tree JSON: ") + e.what());
  }
  return tree_from_json_value(j);
}

std::string skein_tree_to_json(const SkeinTree& tree) {
  if (!tree) throw DomainError("empty skein tree");
  return tree_to_json_value(tree).dump();
}

bool Mod2Partition::all_distinct() const {
  for (const auto& cls : classes)
    if (cls.size() > 1) return false;
  return true;
}

Mod2Partition mod2_partition(const std::vector<Laurent>& polys) {
  Mod2Partition out;
  std::map<std::string, std::size_t> class_of;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::string form = polys[i].reduced_mod2().normalized_up_to_unit().str();
    auto [it, fresh] = class_of.emplace(form, out.classes.size());
    if (fresh) {
      out.classes.emplace_back();
      out.canonical_forms.push_back(form);
    }
    out.classes[it->second].push_back(i);
  }
  return out;
}

}  // namespace hfc
