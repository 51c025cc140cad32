#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfcalc/laurent.hpp"

namespace hfc {

/// One crossing of a planar diagram in PD notation X(a,b,c,d): the four edge
/// labels counterclockwise starting from the incoming under-strand, so the
/// under-strand runs a -> c. Signs are computed from the edge numbering,
/// never taken from input.
struct Crossing {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
};

class PlanarDiagram {
 public:
  // Parses "X(1,4,2,3);X(3,6,4,5);X(5,2,6,1)"; whitespace is free, and the
  // empty string is the zero-crossing unknot.
  static PlanarDiagram parse(const std::string& text);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::int64_t edge_count() const { return 2 * crossings_.size(); }
  int component_count() const { return component_count_; }
  // +1 or -1 per crossing, derived from the orientation of the over-strand.
  const std::vector<int>& signs() const { return signs_; }
  int writhe() const;

  std::string str() const;

 private:
  void validate_and_orient();

  std::vector<Crossing> crossings_;
  std::vector<int> signs_;
  int component_count_ = 0;
};

/// Alexander polynomial of a knot diagram via Fox calculus on the Wirtinger
/// presentation: strike one row and column of the Alexander matrix, take the
/// determinant, then normalize to the symmetric representative with value 1
/// at t = 1.
Laurent alexander_from_diagram(const PlanarDiagram& d);

/// Standard (2, m) torus-knot/link diagram with m crossings.
PlanarDiagram torus_2m_diagram(int m);

}  // namespace hfc
