#include "hfcalc/corpus.hpp"

#include <algorithm>

#include "hfcalc/pd.hpp"

namespace hfc {

SkeinTree torus_2m_tree(int m) {
  if (m < 0) throw DomainError("torus_2m_tree needs m >= 0");
  if (m == 0) return SkeinNode::split_unlink();
  if (m == 1) return SkeinNode::unknot();
  return SkeinNode::branch(SkeinNode::Positive, m, torus_2m_tree(m - 2),
                           torus_2m_tree(m - 1));
}

namespace {

SkeinTree figure_eight_tree() {
  // changing one crossing unknots 4_1; the resolution is a Hopf link
  return SkeinNode::branch(SkeinNode::Negative, 1, SkeinNode::unknot(),
                           torus_2m_tree(2));
}

std::vector<CorpusKnot> build_corpus() {
  std::vector<CorpusKnot> knots;

  knots.push_back({"trefoil", torus_2m_diagram(3).str(), torus_2m_tree(3)});
  knots.push_back({"figure-eight", "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)",
                   figure_eight_tree()});
  knots.push_back({"5_1", torus_2m_diagram(5).str(), torus_2m_tree(5)});
  // twist knot: flipping a twist crossing gives the trefoil, resolving a clasp
  knots.push_back({"5_2", "X(1,4,2,5);X(3,8,4,9);X(5,10,6,1);X(9,6,10,7);X(7,2,8,3)",
                   SkeinNode::branch(SkeinNode::Positive, 1, torus_2m_tree(3),
                                     torus_2m_tree(2))});
  knots.push_back(
      {"6_1",
       "X(1,4,2,5);X(7,10,8,11);X(3,9,4,8);X(9,3,10,2);X(5,12,6,1);X(11,6,12,7)",
       SkeinNode::branch(SkeinNode::Negative, 1, figure_eight_tree(),
                         torus_2m_tree(2))});
  knots.push_back(
      {"6_2",
       "X(1,4,2,5);X(5,10,6,11);X(3,9,4,8);X(9,3,10,2);X(7,12,8,1);X(11,6,12,7)",
       SkeinNode::branch(SkeinNode::Negative, 1, torus_2m_tree(3),
                         torus_2m_tree(4))});
  knots.push_back(
      {"6_3",
       "X(4,2,5,1);X(8,4,9,3);X(12,9,1,10);X(10,5,11,6);X(6,11,7,12);X(2,8,3,7)",
       SkeinNode::branch(SkeinNode::Positive, 1, figure_eight_tree(),
                         torus_2m_tree(4))});
  knots.push_back({"7_1", torus_2m_diagram(7).str(), torus_2m_tree(7)});
  knots.push_back(
      {"8_19",
       "X(4,2,5,1);X(8,4,9,3);X(9,15,10,14);X(5,13,6,12);X(13,7,14,6);"
       "X(11,1,12,16);X(15,11,16,10);X(2,8,3,7)",
       SkeinNode::branch(SkeinNode::Negative, 1, torus_2m_tree(7),
                         torus_2m_tree(2))});
  knots.push_back({"9_1", torus_2m_diagram(9).str(), torus_2m_tree(9)});

  for (int n = 1; n <= 8; ++n) {
    int m = 2 * n + 1;
    std::string name = "T(2," + std::to_string(m) + ")";
    knots.push_back({name, torus_2m_diagram(m).str(), torus_2m_tree(m)});
  }
  return knots;
}

}  // namespace

const std::vector<CorpusKnot>& knot_corpus() {
  static const std::vector<CorpusKnot> corpus = build_corpus();
  return corpus;
}

std::optional<CorpusKnot> find_knot(const std::string& name) {
  std::string wanted = name;
  if (wanted == "unknot")
    return CorpusKnot{"unknot", "", SkeinNode::unknot()};
  if (wanted == "3_1") wanted = "trefoil";
  if (wanted == "4_1") wanted = "figure-eight";
  for (const auto& k : knot_corpus())
    if (k.name == wanted) return k;
  return std::nullopt;
}

}  // namespace hfc
