#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hfcalc/corpus.hpp"
#include "hfcalc/json_io.hpp"
#include "hfcalc/novikov.hpp"
#include "hfcalc/pd.hpp"
#include "hfcalc/skein.hpp"

using namespace hfc;

namespace {

void emit(const Json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct KnotData {
  std::string name;
  Laurent alexander;
  std::optional<Laurent> conway;
};

KnotData resolve_knot(const std::string& name, const std::string& pd_text) {
  KnotData out;
  if (!pd_text.empty()) {
    out.name = name.empty() ? "(pd input)" : name;
    out.alexander = alexander_from_diagram(PlanarDiagram::parse(pd_text));
  } else {
    auto k = find_knot(name);
    if (!k) throw DomainError("unknown knot '" + name + "'");
    out.name = k->name;
    out.alexander = k->pd.empty()
                        ? Laurent::constant(1, 1, Coeffs::Z)
                        : alexander_from_diagram(PlanarDiagram::parse(k->pd));
  }
  out.conway = conway_from_alexander(out.alexander);
  return out;
}

Json knot_json(const KnotData& k) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = k.name;
  j["alexander"] = k.alexander.str();
  if (k.conway)
    j["conway"] = k.conway->str({"z"});
  j["mod2_class"] = k.alexander.reduced_mod2().normalized_up_to_unit().str();
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"exact calculator for twisted Floer homology of circle "
               "bundles, Alexander polynomials, and the rim-surgery "
               "distinctness calculus"};
  app.require_subcommand(1);
  bool json_out = false;
  std::uint64_t seed = 2026;
  app.add_flag("--json", json_out, "emit JSON instead of text");
  app.add_option("--seed", seed,
                 "seed for randomized fraction-field evaluation points");

  // hf: circle-bundle Floer homology descriptions
  auto* hf = app.add_subcommand("hf", "twisted Floer homology of a circle bundle");
  hf->fallthrough();
  std::int64_t hf_n = 0, hf_k = 0;
  int hf_g = 1;
  bool hf_minus = false;
  hf->add_option("--degree", hf_n, "bundle degree n")->required();
  hf->add_option("--genus", hf_g, "genus g of the base surface")->required();
  hf->add_option("--spinc", hf_k, "spin^c label k");
  hf->add_flag("--minus", hf_minus, "HF- for n >= 2g-1, |k| = g-1");

  // grading: exact rational grading arithmetic
  auto* grading = app.add_subcommand("grading", "exact grading arithmetic");
  grading->fallthrough();
  bool g_dminus = false, g_dplus = false, g_tau = false, g_dk = false;
  bool g_shift = false, g_profile = false, g_adj = false, g_c1 = false;
  bool g_lattice = false, g_spincs = false;
  std::int64_t g_n = 0, g_k = 0, g_ell = 0, g_m = 0;
  std::int64_t g_genus = 2;
  std::string g_c1sq = "0";
  std::int64_t g_sigma = 0, g_euler = 0;
  grading->add_flag("--dminus", g_dminus, "degree of the relative invariant");
  grading->add_flag("--dplus", g_dplus, "dual degree -d- - 2");
  grading->add_flag("--tau", g_tau, "surgery grading shift tau_{n,k}");
  grading->add_flag("--dk", g_dk, "reduced support degree D(k) at n = 1-2g");
  grading->add_flag("--shift", g_shift, "cobordism degree shift from c1^2, sigma, e");
  grading->add_flag("--blowup-profile", g_profile,
                    "degree maximization profile of the blowup cobordism");
  grading->add_flag("--adjunction", g_adj, "adjunction pairing 2g-2-n");
  grading->add_flag("--spinc-c1", g_c1, "c1 coefficient of the family r_{l,m}");
  grading->add_flag("--lattice", g_lattice, "blowup lattice identities");
  grading->add_flag("--spinc-list", g_spincs, "spin^c labels of Y_n");
  grading->add_option("--n", g_n, "surface square / bundle degree");
  grading->add_option("--genus", g_genus, "genus g");
  grading->add_option("--spinc", g_k, "spin^c label k");
  grading->add_option("--ell", g_ell, "family index l");
  grading->add_option("--m", g_m, "family index m");
  grading->add_option("--c1sq", g_c1sq, "c1^2 as p/q");
  grading->add_option("--sigma", g_sigma, "signature");
  grading->add_option("--euler", g_euler, "Euler characteristic");

  // alexander: matrix-oracle route
  auto* alex = app.add_subcommand("alexander",
                                  "Alexander polynomial from a PD code");
  alex->fallthrough();
  std::string a_pd, a_name;
  bool a_list = false;
  alex->add_option("--pd", a_pd, "PD code X(a,b,c,d);...");
  alex->add_option("--name", a_name, "bundled knot name");
  alex->add_flag("--list", a_list, "list the bundled knots");

  // skein-tree: resolution-tree route
  auto* skein = app.add_subcommand("skein-tree",
                                   "Conway/Alexander polynomial from a "
                                   "resolution tree");
  skein->fallthrough();
  std::string s_file, s_knot;
  skein->add_option("--file", s_file, "JSON resolution tree");
  skein->add_option("--knot", s_knot, "bundled knot name");

  // log-transform
  auto* logt = app.add_subcommand("log-transform",
                                  "logarithmic-transformation calculus on "
                                  "the torus model");
  logt->fallthrough();
  std::int64_t l_p = 0, l_q = 0, l_r = 1;
  std::string l_phi, l_curve = "0,0,1";
  logt->add_option("--p", l_p, "first surgery coefficient");
  logt->add_option("--q", l_q, "second surgery coefficient");
  logt->add_option("--r", l_r, "third surgery coefficient");
  logt->add_option("--phi", l_phi, "3x3 unimodular matrix a,b,c;d,e,f;g,h,i");
  logt->add_option("--curve", l_curve, "curve class x,y,z");

  // rim-distinguish
  auto* rim = app.add_subcommand("rim-distinguish",
                                 "rim-surgery distinctness verdicts");
  rim->fallthrough();
  std::int64_t r_genus = 2, r_n = 0;
  std::string r_knots;
  rim->add_option("--genus", r_genus, "genus of the surface")->required();
  rim->add_option("--n", r_n, "self-intersection of the surface")->required();
  rim->add_option("--knots", r_knots, "comma-separated knot names")->required();

  // koszul
  auto* koszul = app.add_subcommand("koszul",
                                    "Koszul resolution, syzygies, and the "
                                    "horizontal-sequence validator");
  koszul->fallthrough();
  int k_genus = 1;
  bool k_homology = false, k_zseq = false, k_e1 = false;
  int k_syzygy = -1;
  std::string k_delta_file, k_region = "above-and";
  std::int64_t k_cut = 0;
  koszul->add_option("--genus", k_genus, "genus g")->required();
  koszul->add_flag("--homology", k_homology,
                   "fraction-field homology ranks of the resolution");
  koszul->add_option("--syzygy", k_syzygy, "presentation of Z_l");
  koszul->add_flag("--validate-zseq", k_zseq,
                   "check a horizontal differential against the syzygy "
                   "sequence constraints");
  koszul->add_option("--delta-file", k_delta_file,
                     "DeltaData JSON (defaults to the forced genus-one data)");
  koszul->add_flag("--e1", k_e1, "E1 page of a truncation region");
  koszul->add_option("--region", k_region,
                     "region family: below-and | above-or | below-or | above-and");
  koszul->add_option("--cut", k_cut, "region cut parameter k");

  app.parse(argc, argv);

  if (*hf) {
    std::optional<DeltaData> delta;
    if (hf_g == 1) delta = delta_for_genus_one();
    GradedModuleDescription d =
        hf_minus ? hf_minus_large_positive(hf_n, hf_g, hf_k)
        : hf_n < 0 ? hf_plus_large_negative(hf_n, hf_g, hf_k, delta)
                   : hf_plus_large_positive(hf_n, hf_g, hf_k, delta);
    std::ostringstream text;
    text << d.flavor << "(Y_" << hf_n << ", k=" << d.k << "), genus " << hf_g
         << ":";
    for (const auto& s : d.summands) text << "\n  " << s.str();
    emit(to_json(d), json_out, text.str());
    return 0;
  }

  if (*grading) {
    if (g_profile) {
      DegreeProfile p = blowup_degree_profile(g_genus);
      std::ostringstream text;
      text << "degree profile at genus " << g_genus << ":";
      for (const auto& row : p.rows)
        text << "\n  l=" << row.ell << "  D+d = " << rat_str(row.degree_sum)
             << "  (printed quadratic " << rat_str(row.printed_quadratic)
             << ", discrepancy " << rat_str(row.discrepancy) << ")";
      text << "\n  max " << rat_str(p.max_degree_sum) << " at l = +-"
           << (g_genus - 1);
      emit(to_json(p), json_out, text.str());
      return 0;
    }
    if (g_lattice) {
      BlowupLattice lat = blowup_lattice(g_n);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = g_n;
      j["a_square_matrix_route"] = lat.a_square_via_form().str();
      j["a_square_closed_form"] = lat.a_square_closed_form().str();
      j["a_in_kernel_of_B"] = lat.a_in_kernel_of_b();
      j["restriction_identities"] = lat.restriction_identities();
      auto [s_comp, a_comp] = lat.canonical_restriction(g_genus);
      j["canonical_restriction"] =
          Json::array({s_comp.str(), a_comp.str()});
      emit(j, json_out,
           "a^2 = " + lat.a_square_via_form().str() + " (closed form " +
               lat.a_square_closed_form().str() + ")");
      return 0;
    }
    if (g_spincs) {
      auto labels = spinc_enumerate(g_n, static_cast<int>(g_genus));
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = g_n;
      Json arr = Json::array();
      std::ostringstream text;
      for (const auto& l : labels) {
        arr.push_back(to_json(l));
        text << "k=" << l.k << " <2k-n> = " << l.characteristic
             << (l.self_conjugate ? " (self-conjugate)" : "") << "\n";
      }
      j["labels"] = arr;
      emit(j, json_out, text.str());
      return 0;
    }
    Rat value;
    std::string what;
    if (g_dminus) {
      value = relative_invariant_degree(g_n, g_genus).first;
      what = "d_minus";
    } else if (g_dplus) {
      value = relative_invariant_degree(g_n, g_genus).second;
      what = "d_plus";
    } else if (g_tau) {
      value = tau(g_n, g_k);
      what = "tau";
    } else if (g_dk) {
      value = reduced_support_degree(g_genus, g_k);
      what = "D(k)";
    } else if (g_shift) {
      value = degree_shift({parse_rational(g_c1sq), g_sigma, g_euler});
      what = "degree_shift";
    } else if (g_adj) {
      value = Rat(adjunction(g_genus, g_n));
      what = "adjunction";
    } else if (g_c1) {
      value = Rat(spinc_family_c1(g_ell, g_m, g_genus));
      what = "c1_coefficient";
    } else {
      throw CLI::CallForHelp();
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j[what] = rat_str(value);
    emit(j, json_out, rat_str(value));
    return 0;
  }

  if (*alex) {
    if (a_list) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      Json names = Json::array();
      std::ostringstream text;
      for (const auto& k : knot_corpus()) {
        names.push_back(k.name);
        text << k.name << "\n";
      }
      j["knots"] = names;
      emit(j, json_out, text.str());
      return 0;
    }
    if (a_pd.empty() && a_name.empty())
      throw CLI::ValidationError("alexander", "need --pd, --name, or --list");
    KnotData k = resolve_knot(a_name, a_pd);
    emit(knot_json(k), json_out, k.alexander.str());
    return 0;
  }

  if (*skein) {
    SkeinTree tree;
    std::string name = "(tree input)";
    if (!s_file.empty()) {
      tree = skein_tree_from_json(read_file(s_file));
    } else if (!s_knot.empty()) {
      auto k = find_knot(s_knot);
      if (!k) throw DomainError("unknown knot '" + s_knot + "'");
      tree = k->tree;
      name = k->name;
    } else {
      throw CLI::ValidationError("skein-tree", "need --file or --knot");
    }
    Laurent conway = conway_from_tree(tree);
    Laurent alexander = expand_z_square(conway);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = name;
    j["conway"] = conway.str({"z"});
    j["alexander"] = alexander.str();
    j["mod2_class"] = alexander.reduced_mod2().normalized_up_to_unit().str();
    emit(j, json_out, alexander.str());
    return 0;
  }

  if (*logt) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    GroupRing ring = GroupRing::standard(1, Coeffs::Z);
    FormalInvariant b1 = FormalInvariant::generator(ring, 3, "s", 0, Rat(0));
    FormalInvariant b2 = FormalInvariant::generator(ring, 3, "s", 1, Rat(0));
    FormalInvariant b3 = FormalInvariant::generator(ring, 3, "s", 2, Rat(0));
    FormalInvariant comb = log_transform_combination(l_p, l_q, l_r, b1, b2, b3);
    Json coords = Json::array();
    for (const auto& c : comb.find("s")->coords) coords.push_back(c.str());
    j["combination"] = coords;
    std::ostringstream text;
    text << "Psi(" << l_p << "," << l_q << "," << l_r << ") = " << l_p
         << "*Psi(1,0,0) + " << l_q << "*Psi(0,1,0) + " << l_r
         << "*Psi(0,0,1)";
    if (!l_phi.empty()) {
      ZMat phi(3, 3);
      std::istringstream in(l_phi);
      std::string row;
      int i = 0;
      while (std::getline(in, row, ';') && i < 3) {
        std::istringstream rin(row);
        std::string cell;
        int k = 0;
        while (std::getline(rin, cell, ',') && k < 3)
          phi(i, k++) = Int(cell);
        if (k != 3) throw ParseError("--phi needs 3 entries per row");
        ++i;
      }
      if (i != 3) throw ParseError("--phi needs 3 rows");
      Vec3 c;
      std::istringstream cin(l_curve);
      std::string cell;
      int k = 0;
      while (std::getline(cin, cell, ',') && k < 3) c[k++] = Int(cell);
      if (k != 3) throw ParseError("--curve needs 3 entries");
      T3Class img = cylinder_action(phi, t3_theta_image(c));
      j["theta_image"] = t3_theta_image(c).str();
      j["cylinder_image"] = img.str();
      text << "\ncylinder action: " << img.str();
    }
    emit(j, json_out, text.str());
    return 0;
  }

  if (*rim) {
    std::vector<std::string> names;
    std::istringstream in(r_knots);
    std::string item;
    while (std::getline(in, item, ',')) names.push_back(item);
    VerdictReport report = rim_surgery_verdict(r_genus, r_n, names);
    std::ostringstream text;
    text << report.hf_top_structure << "\nblowups applied: "
         << report.blowups_applied;
    for (const auto& p : report.pairs)
      text << "\n" << p.knot_a << " vs " << p.knot_b << ": " << p.verdict;
    emit(to_json(report), json_out, text.str());
    return 0;
  }

  if (*koszul) {
    if (k_zseq) {
      DeltaData delta =
          k_delta_file.empty()
              ? delta_for_genus_one()
              : delta_from_json(Json::parse(read_file(k_delta_file)));
      ZseqReport report = validate_zseq(k_genus, delta, seed);
      emit(to_json(report), json_out, report.str());
      return report.all_pass() ? 0 : 1;
    }
    if (k_e1) {
      RegionKind kind;
      if (k_region == "below-and")
        kind = RegionKind::BelowAnd;
      else if (k_region == "above-or")
        kind = RegionKind::AboveOr;
      else if (k_region == "below-or")
        kind = RegionKind::BelowOr;
      else if (k_region == "above-and")
        kind = RegionKind::AboveAnd;
      else
        throw ParseError("unknown region family '" + k_region + "'");
      E1Page page = e1_page(k_genus, {kind, k_cut}, -k_genus - 2, k_genus + 2);
      std::ostringstream text;
      for (const auto& e : page.entries)
        text << "i=" << e.column << " degree " << e.degree << ": "
             << e.label.str(k_genus) << "\n";
      emit(to_json(page), json_out, text.str());
      return 0;
    }
    if (k_syzygy >= 0) {
      PresentedModule m = syzygy_presentation(k_syzygy, k_genus, Coeffs::Z);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["module"] = "Z_" + std::to_string(k_syzygy);
      j["presentation"] = to_json(m);
      std::ostringstream text;
      text << "Z_" << k_syzygy << ": " << m.generators << " generators, "
           << m.relations.cols() << " relations";
      emit(j, json_out, text.str());
      return 0;
    }
    FreeComplex c = koszul_complex(k_genus, Coeffs::Z);
    if (k_homology) {
      auto ranks = fraction_field_homology_ranks(c, seed);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["homology_ranks"] = ranks;
      std::ostringstream text;
      for (std::size_t i = 0; i < ranks.size(); ++i)
        text << "H_" << i << " generic rank " << ranks[i] << "\n";
      emit(j, json_out, text.str());
      return 0;
    }
    std::ostringstream text;
    text << "Koszul resolution at genus " << k_genus << ", ranks:";
    for (int p = c.lo(); p <= c.hi(); ++p) text << " " << c.rank_at(p);
    emit(to_json(c), json_out, text.str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << "run with a subcommand: hf | grading | alexander | "
                 "skein-tree | log-transform | rim-distinguish | koszul\n"
                 "(--help on a subcommand lists its flags)\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
