#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfcalc/cfk.hpp"
#include "hfcalc/grading.hpp"

namespace hfc {

/// One summand of a twisted Floer homology answer. Degrees are exact
/// rationals (denominators divide 4|n|).
struct HfSummand {
  enum Kind {
    Tower,          // T_m, infinite in increasing degree
    TowerBelow,     // Z[U]-tower infinite in decreasing degree
    FreeRankOne,    // a copy of the group ring R_Y
    SyzygyQuotient, // Q_l = Z_l / delta(Z_{l-1})
    SyzygyKernel,   // K_l = ker(delta: Z_l -> Z_{l+1})
    CyclicUTower,   // Z[U] / U^length
  };
  Kind kind = Tower;
  Rat degree;            // bottom degree (Tower, CyclicUTower), top degree
                         // (TowerBelow), or the supporting degree otherwise
  int ell = 0;           // syzygy index for SyzygyQuotient / SyzygyKernel
  int length = 0;        // CyclicUTower length
  Rat tower_base;        // Tower only: degree of the untruncated tower base
  bool has_resolution = false;
  PresentedModule resolution;  // filled when DeltaData pins the module down
  bool u_action_known = true;  // false on the kernel summand the analysis
                               // leaves open when k and g have opposite parity

  std::string str() const;
};

struct GradedModuleDescription {
  int g = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string flavor;  // "HF+" or "HF-"
  Rat tau_shift;
  std::vector<HfSummand> summands;

  // the reduced (non-tower) summands
  std::vector<HfSummand> reduced() const;
  // summand of maximal degree (towers compare by their top reach)
  const HfSummand& top() const;
};

/// HF+ of the circle bundle of degree n <= 1-2g over a genus-g surface in
/// the spin^c structure labeled k: a tower with bottom -|k|+1+tau plus the
/// syzygy quotient Q_{g-|k|} in degree -|k|+tau when |k| <= g-1, a bare
/// tower otherwise. Supplying delta resolves the quotient to a presentation.
GradedModuleDescription hf_plus_large_negative(
    std::int64_t n, int g, std::int64_t k,
    const std::optional<DeltaData>& delta = std::nullopt);

/// HF+ for n >= 2g-1: K_{g+|k|+1} in degree |k|-1-tau, a cyclic U-tower of
/// length floor((g-|k|)/2) with bottom 2|k|-g-tau (omitted when the length
/// is zero), and the tower with bottom -g-tau.
GradedModuleDescription hf_plus_large_positive(
    std::int64_t n, int g, std::int64_t k,
    const std::optional<DeltaData>& delta = std::nullopt);

/// HF- for n >= 2g-1 in the extremal spin^c structures |k| = g-1: a free
/// rank-one summand in degree g-3-tau over a downward U-tower with top
/// -g-2-tau.
GradedModuleDescription hf_minus_large_positive(std::int64_t n, int g,
                                                std::int64_t k);

struct SpinCLabel {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t characteristic = 0;  // 2k - n reduced mod 2n into (-|n|, |n|]
  std::int64_t conjugate_k = 0;     // representative of -k
  bool self_conjugate = false;
};

/// The |n| spin^c structures of Y_n with torsion first Chern class,
/// represented by k in the window centered at zero, with the conjugation
/// pairing k <-> -k.
std::vector<SpinCLabel> spinc_enumerate(std::int64_t n, int g);

}  // namespace hfc
