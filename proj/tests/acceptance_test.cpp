// Acceptance suite: runs every exactness and agreement criterion the
// library is committed to and prints one pass/fail line each. All checks
// are exact (integer or rational equality); the only randomness is the
// seeded choice of fraction-field evaluation points.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hfcalc/circle_bundle.hpp"
#include "hfcalc/corpus.hpp"
#include "hfcalc/json_io.hpp"
#include "hfcalc/pd.hpp"
#include "hfcalc/skein.hpp"
#include "hfcalc/surgery.hpp"

using namespace hfc;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": "
            << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

ZMat random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2), val(-3, 3), coin(0, 1);
  ZMat m = ZMat::identity(3, Int(1), Int(0));
  for (int step = 0; step < 6; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    ZMat e = ZMat::identity(3, Int(1), Int(0));
    e(i, j) = val(rng);
    m = zmat_mul(m, e);
    if (coin(rng)) {
      ZMat s(3, 3, Int(0));
      s(i, j) = 1;
      s(j, i) = -1;
      for (int k = 0; k < 3; ++k)
        if (k != i && k != j) s(k, k) = 1;
      m = zmat_mul(m, s);
    }
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path = argc > 1 ? argv[1] : "";

  criterion(1, "grading identities d-, d+, and D(k), exact", [](std::string& why) {
    for (std::int64_t g = 1; g <= 50; ++g) {
      auto fam = relative_invariant_degree_family(g);
      if (fam.first != Rat(g) - make_rat(13, 4) ||
          fam.second != make_rat(5, 4) - Rat(g)) {
        why = "family closed form failed at g=" + std::to_string(g);
        return false;
      }
      if (g >= 2) {
        auto gen = relative_invariant_degree(2 - 2 * g, g);
        if (gen != fam) {
          why = "general formula disagrees at g=" + std::to_string(g);
          return false;
        }
      }
    }
    for (std::int64_t g = 1; g <= 20; ++g)
      for (std::int64_t k = -g; k <= g; ++k) {
        Rat lhs = Rat(-(k < 0 ? -k : k)) + tau(1 - 2 * g, k);
        Rat rhs = make_rat(-k * k, 2 * g - 1) - make_rat(g - 1, 2);
        if (lhs != rhs) {
          why = "D(k) identity failed at g=" + std::to_string(g) +
                ", k=" + std::to_string(k);
          return false;
        }
      }
    return true;
  });

  criterion(2, "blowup degree profile: argmax, endpoint, two routes",
            [](std::string& why) {
    for (std::int64_t g = 2; g <= 20; ++g) {
      DegreeProfile p = blowup_degree_profile(g);
      Rat endpoint = make_rat(5, 4) - Rat(g);
      if (p.max_degree_sum != endpoint) {
        why = "endpoint mismatch at g=" + std::to_string(g);
        return false;
      }
      std::vector<std::int64_t> expect{-(g - 1), g - 1};
      if (p.argmax_ells != expect) {
        why = "argmax not at +-(g-1) for g=" + std::to_string(g);
        return false;
      }
      if (!p.strictly_increasing_below_top) {
        why = "profile not strictly increasing below the top at g=" +
              std::to_string(g);
        return false;
      }
      if (p.max_degree_sum != relative_invariant_degree(2 - 2 * g, g).second) {
        why = "the two routes disagree at g=" + std::to_string(g);
        return false;
      }
    }
    return true;
  });

  criterion(3, "blowup lattice: a^2 and canonical restriction by matrix "
               "arithmetic", [](std::string& why) {
    for (std::int64_t n = -10; n <= 10; ++n) {
      BlowupLattice lat = blowup_lattice(n);
      if (lat.a_square_via_form() != Int(-n) * Int(n - 1)) {
        why = "a^2 mismatch at n=" + std::to_string(n);
        return false;
      }
      if (!lat.a_in_kernel_of_b()) {
        why = "a not in ker B at n=" + std::to_string(n);
        return false;
      }
      for (std::int64_t g = 2; g <= 5; ++g) {
        auto [s_comp, a_comp] = lat.canonical_restriction(g);
        if (s_comp != Int(2 * g - 1) - Int(n) || a_comp != Int(2 * g - 2)) {
          why = "canonical restriction mismatch at n=" + std::to_string(n) +
                ", g=" + std::to_string(g);
          return false;
        }
      }
    }
    return true;
  });

  criterion(4, "Koszul resolution: d^2 = 0, generic exactness, syzygy "
               "presentations", [](std::string& why) {
    for (int g = 1; g <= 3; ++g) {
      FreeComplex c = koszul_complex(g, Coeffs::Z);  // validates d^2 = 0
      auto ranks = fraction_field_homology_ranks(c, 20260 + g);
      for (int r : ranks)
        if (r != 0) {
          why = "nonzero generic homology at g=" + std::to_string(g);
          return false;
        }
      PresentedModule top = syzygy_presentation(2 * g, g, Coeffs::Z);
      if (top.generators != 1 || top.pruned().relations.cols() != 0) {
        why = "Z_2g is not free of rank one at g=" + std::to_string(g);
        return false;
      }
      PresentedModule z1 = syzygy_presentation(1, g, Coeffs::Z);
      if (z1.generators != 2 * g ||
          !(z1.relations == c.differential_at(2))) {
        why = "Z_1 presentation mismatch at g=" + std::to_string(g);
        return false;
      }
      PresentedModule z0 = syzygy_presentation(0, g, Coeffs::Z);
      for (int i = 0; i < 2 * g; ++i)
        if (z0.relations(0, i) !=
            Laurent::variable_minus_one(2 * g, i, Coeffs::Z)) {
          why = "Z_0 relations are not (t_i - 1) at g=" + std::to_string(g);
          return false;
        }
    }
    return true;
  });

  criterion(5, "E1 pages reproduce the genus-two truncation figures",
            [](std::string& why) {
    E1Page plus = e1_page(2, {RegionKind::AboveAnd, -1}, 0, 4);
    auto col0 = plus.column(0);
    if (col0.size() != 1 || col0[0].degree != -1 ||
        col0[0].label.kind != E1Label::Syzygy || col0[0].label.ell != 1) {
      why = "plus-region boundary column is not Z_1 in degree -1";
      return false;
    }
    for (std::int64_t i = 1; i <= 4; ++i) {
      auto col = plus.column(i);
      if (col.size() != 1 || col[0].degree != 2 * i - 2 ||
          col[0].label.kind != E1Label::IntegerZ) {
        why = "plus-region column i=" + std::to_string(i) + " is not Z";
        return false;
      }
    }
    E1Page minus = e1_page(2, {RegionKind::BelowAnd, 1}, -4, -1);
    auto colm1 = minus.column(-1);
    bool has_z = false, has_free = false;
    for (const auto& e : colm1) {
      if (e.label.kind == E1Label::IntegerZ && e.degree == -4) has_z = true;
      if (e.label.kind == E1Label::Syzygy && e.label.ell == 4 &&
          e.degree == -1)
        has_free = true;
    }
    if (colm1.size() != 2 || !has_z || !has_free) {
      why = "minus-region column i=-1 is not Z at -4 plus R at -1";
      return false;
    }
    return true;
  });

  criterion(6, "genus-one horizontal differential: Zseq, Q_1, HF- top",
            [](std::string& why) {
    DeltaData d = delta_for_genus_one();
    ZseqReport report = validate_zseq(1, d, 2026);
    if (!report.all_pass()) {
      why = "validate_zseq failed:\n" + report.str();
      return false;
    }
    PresentedModule q1 = syzygy_quotient_presentation(1, d, Coeffs::Z);
    if (!q1.same_presentation(syzygy_presentation(1, 1, Coeffs::Z))) {
      why = "Q_1 is not the augmentation ideal";
      return false;
    }
    GradedModuleDescription top = hf_minus_large_positive(1, 1, 0);
    if (top.top().kind != HfSummand::FreeRankOne) {
      why = "HF- top of Y_1 at k=0 is not free of rank one";
      return false;
    }
    return true;
  });

  criterion(7, "skein tree route equals the Wirtinger matrix route on the "
               "bundled corpus", [](std::string& why) {
    int checked = 0;
    for (const auto& knot : knot_corpus()) {
      Laurent tree = theta_from_tree(knot.tree);
      Laurent matrix = alexander_from_diagram(PlanarDiagram::parse(knot.pd));
      if (tree != matrix) {
        why = "disagreement on " + knot.name;
        return false;
      }
      if (!tree.is_symmetric() || tree.augmentation() != 1) {
        why = "bad normalization on " + knot.name;
        return false;
      }
      ++checked;
    }
    if (checked < 10) {
      why = "corpus has fewer than 10 knots";
      return false;
    }
    return true;
  });

  criterion(8, "Novikov quotients: multiply-back through order 20 and "
               "coefficient growth", [](std::string& why) {
    Laurent den = Laurent::parse("t - 2 + t^-1", 1, Coeffs::Z);
    std::vector<std::string> deltas{"1", "t^-1 - 1 + t", "-t^-1 + 3 - t"};
    for (const auto& text : deltas) {
      Laurent delta = Laurent::parse(text, 1, Coeffs::Z);
      S1SurgeryInvariants inv =
          s1_cross_surgery_invariant(delta, Direction::PositivePowers, 25);
      if (!(inv.closed * den).matches_polynomial_through(delta, 20)) {
        why = "multiply-back failed for " + text;
        return false;
      }
    }
    S1SurgeryInvariants unknot = s1_cross_surgery_invariant(
        Laurent::constant(1, 1, Coeffs::Z), Direction::PositivePowers, 25);
    for (int n = 1; n <= 20; ++n)
      if (unknot.closed.coeff(n) != n) {
        why = "coefficient of t^" + std::to_string(n) + " is not n";
        return false;
      }
    return true;
  });

  criterion(9, "cylinder functoriality on 100 seeded unimodular matrices; "
               "linearity of the log-transform combination",
            [](std::string& why) {
    std::mt19937_64 rng(20262026);
    for (int trial = 0; trial < 100; ++trial) {
      ZMat f = random_unimodular(rng);
      ZMat g = random_unimodular(rng);
      std::uniform_int_distribution<long> v(-5, 5);
      for (auto part : {T3Class::Lambda2, T3Class::Lambda1}) {
        T3Class x;
        x.part = part;
        x.coords = {Int(v(rng)), Int(v(rng)), Int(v(rng))};
        if (!(cylinder_action(zmat_mul(f, g), x) ==
              cylinder_action(f, cylinder_action(g, x)))) {
          why = "functoriality failed on trial " + std::to_string(trial);
          return false;
        }
      }
    }
    GroupRing ring = GroupRing::standard(1, Coeffs::Z);
    FormalInvariant b1 = FormalInvariant::generator(ring, 3, "s", 0, Rat(0));
    FormalInvariant b2 = FormalInvariant::generator(ring, 3, "s", 1, Rat(0));
    FormalInvariant b3 = FormalInvariant::generator(ring, 3, "s", 2, Rat(0));
    std::mt19937_64 rng2(999);
    std::uniform_int_distribution<int> v(-7, 7);
    for (int trial = 0; trial < 50; ++trial) {
      int p1 = v(rng2), q1 = v(rng2), r1 = v(rng2);
      int p2 = v(rng2), q2 = v(rng2), r2 = v(rng2);
      FormalInvariant lhs =
          log_transform_combination(p1 + p2, q1 + q2, r1 + r2, b1, b2, b3);
      FormalInvariant rhs = log_transform_combination(p1, q1, r1, b1, b2, b3) +
                            log_transform_combination(p2, q2, r2, b1, b2, b3);
      for (int i = 0; i < 3; ++i)
        if (!(lhs.find("s")->coords[i] == rhs.find("s")->coords[i])) {
          why = "linearity failed on trial " + std::to_string(trial);
          return false;
        }
    }
    return true;
  });

  criterion(10, "verdict engine: distinctness, ties, torus family, and the "
                "hypothesis refusal", [&](std::string& why) {
    VerdictReport a = rim_surgery_verdict(2, 0, {"trefoil", "unknot"});
    if (a.pairs[0].verdict != "smoothly distinct") {
      why = "trefoil vs unknot not distinct";
      return false;
    }
    VerdictReport b = rim_surgery_verdict(2, 0, {"trefoil", "figure-eight"});
    if (b.pairs[0].verdict != "not distinguished by this invariant") {
      why = "trefoil vs figure-eight should tie mod 2";
      return false;
    }
    std::vector<std::string> family;
    for (int n = 1; n <= 8; ++n)
      family.push_back("T(2," + std::to_string(2 * n + 1) + ")");
    VerdictReport c = rim_surgery_verdict(2, 0, family);
    if (!c.all_pairwise_distinct) {
      why = "torus family not pairwise distinct";
      return false;
    }
    bool refused = false;
    try {
      rim_surgery_verdict(2, -3, {"trefoil"});
    } catch (const DomainError&) {
      refused = true;
    }
    if (!refused) {
      why = "hypothesis violation not refused";
      return false;
    }
    if (!cli_path.empty()) {
      std::string cmd = cli_path +
                        " rim-distinguish --genus 2 --n -3 --knots trefoil "
                        ">/dev/null 2>&1";
      int status = std::system(cmd.c_str());
      int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      if (code != 1) {
        why = "CLI refusal exit code is " + std::to_string(code) +
              ", expected 1";
        return false;
      }
    }
    return true;
  });

  criterion(11, "printed-quadratic discrepancy of exactly 1/2 is detected "
                "and reported", [](std::string& why) {
    for (std::int64_t g = 2; g <= 10; ++g) {
      DegreeProfile p = blowup_degree_profile(g);
      // direct endpoint vs the printed quadratic evaluated at l = g-1
      Rat direct = p.row(g - 1).degree_sum;
      Rat printed = p.row(g - 1).printed_quadratic;
      if (direct != make_rat(5, 4) - Rat(g)) {
        why = "direct endpoint wrong at g=" + std::to_string(g);
        return false;
      }
      if (direct - printed != make_rat(1, 2)) {
        why = "discrepancy is not 1/2 at g=" + std::to_string(g);
        return false;
      }
      for (const auto& row : p.rows)
        if (row.discrepancy != make_rat(1, 2)) {
          why = "rowwise discrepancy not 1/2 at g=" + std::to_string(g);
          return false;
        }
      // the report carries the discrepancy
      Json j = to_json(p);
      if (!j.contains("rows") || !j["rows"][0].contains("discrepancy") ||
          j["rows"][0]["discrepancy"].get<std::string>() != "1/2") {
        why = "discrepancy report not emitted";
        return false;
      }
    }
    return true;
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criteria failed\n");
  return failures;
}
