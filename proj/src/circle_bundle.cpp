#include "hfcalc/circle_bundle.hpp"

#include <algorithm>
#include <sstream>

namespace hfc {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

// Labels congruent mod n name the same spin^c structure; the grading
// formulas are stated for the representative centered at zero.
std::int64_t centered_rep(std::int64_t k, std::int64_t n) {
  std::int64_t an = iabs(n);
  std::int64_t r = ((k % an) + an) % an;
  if (r > an / 2) r -= an;
  return r;
}

}  // namespace

std::string HfSummand::str() const {
  std::ostringstream out;
  switch (kind) {
    case Tower:
      out << "T[" << rat_str(degree) << ", inf)";
      if (tower_base != degree) out << " (base " << rat_str(tower_base) << ")";
      break;
    case TowerBelow:
      out << "Z[U]-tower(-inf, " << rat_str(degree) << "]";
      break;
    case FreeRankOne:
      out << "R in degree " << rat_str(degree);
      break;
    case SyzygyQuotient:
      out << "Q_" << ell << " in degree " << rat_str(degree);
      break;
    case SyzygyKernel:
      out << "K_" << ell << " in degree " << rat_str(degree);
      if (!u_action_known) out << " (U-action undetermined)";
      break;
    case CyclicUTower:
      out << "Z[U]/U^" << length << " with bottom " << rat_str(degree);
      break;
  }
  return out.str();
}

std::vector<HfSummand> GradedModuleDescription::reduced() const {
  std::vector<HfSummand> out;
  for (const auto& s : summands)
    if (s.kind != HfSummand::Tower && s.kind != HfSummand::TowerBelow)
      out.push_back(s);
  return out;
}

const HfSummand& GradedModuleDescription::top() const {
  if (summands.empty()) throw DomainError("empty description");
  const HfSummand* best = nullptr;
  Rat best_deg;
  for (const auto& s : summands) {
    if (s.kind == HfSummand::Tower) continue;  // unbounded above
    Rat top_deg = s.degree;
    if (s.kind == HfSummand::CyclicUTower)
      top_deg = s.degree + Rat(2 * (s.length - 1));
    if (!best || top_deg > best_deg) {
      best = &s;
      best_deg = top_deg;
    }
  }
  if (!best) throw DomainError("description has only towers");
  return *best;
}

GradedModuleDescription hf_plus_large_negative(
    std::int64_t n, int g, std::int64_t k,
    const std::optional<DeltaData>& delta) {
  if (g < 1) throw DomainError("genus must be positive");
  if (n > 1 - 2 * static_cast<std::int64_t>(g))
    throw DomainError("hf_plus_large_negative requires n <= 1-2g");
  GradedModuleDescription desc;
  desc.g = g;
  desc.n = n;
  k = centered_rep(k, n);
  desc.k = k;
  desc.flavor = "HF+";
  desc.tau_shift = tau(n, k);
  std::int64_t ak = iabs(k);

  HfSummand tower;
  tower.kind = HfSummand::Tower;
  tower.tower_base = Rat(-g) + desc.tau_shift;
  if (ak <= g - 1) {
    tower.degree = Rat(-ak + 1) + desc.tau_shift;
    desc.summands.push_back(tower);
    HfSummand q;
    q.kind = HfSummand::SyzygyQuotient;
    q.ell = static_cast<int>(g - ak);
    q.degree = Rat(-ak) + desc.tau_shift;
    if (delta) {
      q.resolution = syzygy_quotient_presentation(q.ell, *delta, Coeffs::Z);
      q.has_resolution = true;
    }
    desc.summands.push_back(q);
  } else {
    tower.degree = tower.tower_base;
    desc.summands.push_back(tower);
  }
  return desc;
}

GradedModuleDescription hf_plus_large_positive(
    std::int64_t n, int g, std::int64_t k,
    const std::optional<DeltaData>& delta) {
  if (g < 1) throw DomainError("genus must be positive");
  if (n < 2 * static_cast<std::int64_t>(g) - 1)
    throw DomainError("hf_plus_large_positive requires n >= 2g-1");
  GradedModuleDescription desc;
  desc.g = g;
  desc.n = n;
  k = centered_rep(k, n);
  desc.k = k;
  desc.flavor = "HF+";
  desc.tau_shift = tau(n, k);
  std::int64_t ak = iabs(k);

  HfSummand tower;
  tower.kind = HfSummand::Tower;
  tower.tower_base = Rat(-g) - desc.tau_shift;
  tower.degree = tower.tower_base;
  if (ak > g - 1) {
    desc.summands.push_back(tower);
    return desc;
  }

  HfSummand kernel;
  kernel.kind = ak == g - 1 ? HfSummand::FreeRankOne : HfSummand::SyzygyKernel;
  kernel.ell = static_cast<int>(g + ak + 1);
  kernel.degree = Rat(ak - 1) - desc.tau_shift;
  // U respects the splitting when k = g mod 2; otherwise the analysis does
  // not determine the action on the kernel summand
  kernel.u_action_known = ((k % 2) + 2) % 2 == (g % 2) || ak == g - 1;
  if (delta && kernel.kind == HfSummand::SyzygyKernel) {
    auto res = syzygy_kernel_presentation(kernel.ell, *delta, Coeffs::Z);
    if (res) {
      kernel.resolution = *res;
      kernel.has_resolution = true;
    }
  }
  desc.summands.push_back(kernel);

  int r_k = static_cast<int>((g - ak) / 2);
  if (r_k > 0) {
    HfSummand cyc;
    cyc.kind = HfSummand::CyclicUTower;
    cyc.length = r_k;
    cyc.degree = Rat(2 * ak - g) - desc.tau_shift;
    desc.summands.push_back(cyc);
  }
  desc.summands.push_back(tower);
  return desc;
}

GradedModuleDescription hf_minus_large_positive(std::int64_t n, int g,
                                                std::int64_t k) {
  if (g < 1) throw DomainError("genus must be positive");
  if (n < 2 * static_cast<std::int64_t>(g) - 1)
    throw DomainError("hf_minus_large_positive requires n >= 2g-1");
  k = centered_rep(k, n);
  if (iabs(k) != g - 1)
    throw DomainError(
        "hf_minus_large_positive is derived only for |k| = g-1");
  GradedModuleDescription desc;
  desc.g = g;
  desc.n = n;
  desc.k = k;
  desc.flavor = "HF-";
  desc.tau_shift = tau(n, k);

  HfSummand free_part;
  free_part.kind = HfSummand::FreeRankOne;
  free_part.degree = Rat(g - 3) - desc.tau_shift;
  desc.summands.push_back(free_part);

  HfSummand below;
  below.kind = HfSummand::TowerBelow;
  below.degree = Rat(-g - 2) - desc.tau_shift;
  desc.summands.push_back(below);
  return desc;
}

std::vector<SpinCLabel> spinc_enumerate(std::int64_t n, int g) {
  if (g < 1) throw DomainError("genus must be positive");
  if (n == 0)
    throw DomainError(
        "spinc_enumerate requires n != 0 (torsion spin^c condition fails)");
  std::int64_t an = iabs(n);
  std::int64_t lo = -((an - 1) / 2);
  std::int64_t hi = an / 2;
  std::vector<SpinCLabel> out;
  for (std::int64_t k = lo; k <= hi; ++k) {
    SpinCLabel lab;
    lab.k = k;
    lab.n = n;
    std::int64_t c = (2 * k - n) % (2 * an);
    if (c > an) c -= 2 * an;
    if (c <= -an) c += 2 * an;
    lab.characteristic = c;
    std::int64_t conj = -k;
    while (conj > hi) conj -= an;
    while (conj < lo) conj += an;
    lab.conjugate_k = conj;
    lab.self_conjugate = conj == k;
    out.push_back(lab);
  }
  return out;
}

}  // namespace hfc
