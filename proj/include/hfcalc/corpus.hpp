#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfcalc/skein.hpp"

namespace hfc {

/// A bundled knot: name, PD code, and a skein resolution certificate whose
/// value agrees with the diagram's Alexander polynomial (the test suites
/// enforce the agreement).
struct CorpusKnot {
  std::string name;
  std::string pd;
  SkeinTree tree;
};

/// The bundled table: the standard knots through nine crossings used by the
/// distinctness engine, plus the (2, 2n+1) torus family.
const std::vector<CorpusKnot>& knot_corpus();

std::optional<CorpusKnot> find_knot(const std::string& name);

/// Resolution tree of the (2, m) torus link: T(2,m) = T(2,m-2) + z T(2,m-1)
/// with T(2,1) the unknot and T(2,0) the split unlink.
SkeinTree torus_2m_tree(int m);

}  // namespace hfc
