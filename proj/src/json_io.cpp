#include "hfcalc/json_io.hpp"

namespace hfc {

namespace {

Json matrix_to_json(const LMat& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      entries.push_back(m(i, k).str());
  j["entries_row_major"] = entries;
  return j;
}

}  // namespace

Json to_json(const PresentedModule& m) {
  Json j;
  j["generators"] = m.generators;
  Json degs = Json::array();
  for (const Rat& d : m.generator_degrees) degs.push_back(rat_str(d));
  j["generator_degrees"] = degs;
  // one row per relation, one entry per generator
  Json rels = Json::array();
  for (std::size_t c = 0; c < m.relations.cols(); ++c) {
    Json row = Json::array();
    for (std::size_t r = 0; r < m.relations.rows(); ++r)
      row.push_back(m.relations(r, c).str());
    rels.push_back(row);
  }
  j["relations"] = rels;
  return j;
}

Json to_json(const HfSummand& s) {
  Json j;
  switch (s.kind) {
    case HfSummand::Tower:
      j["kind"] = "tower";
      j["bottom_degree"] = rat_str(s.degree);
      j["base_degree"] = rat_str(s.tower_base);
      break;
    case HfSummand::TowerBelow:
      j["kind"] = "u_tower_below";
      j["top_degree"] = rat_str(s.degree);
      break;
    case HfSummand::FreeRankOne:
      j["kind"] = "free_rank_one";
      j["degree"] = rat_str(s.degree);
      break;
    case HfSummand::SyzygyQuotient:
      j["kind"] = "syzygy_quotient";
      j["ell"] = s.ell;
      j["degree"] = rat_str(s.degree);
      break;
    case HfSummand::SyzygyKernel:
      j["kind"] = "syzygy_kernel";
      j["ell"] = s.ell;
      j["degree"] = rat_str(s.degree);
      j["u_action_known"] = s.u_action_known;
      break;
    case HfSummand::CyclicUTower:
      j["kind"] = "cyclic_u_tower";
      j["length"] = s.length;
      j["bottom_degree"] = rat_str(s.degree);
      break;
  }
  if (s.has_resolution) j["presentation"] = to_json(s.resolution);
  return j;
}

Json to_json(const GradedModuleDescription& d) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["flavor"] = d.flavor;
  j["genus"] = d.g;
  j["degree"] = d.n;
  j["spinc"] = d.k;
  j["tau"] = rat_str(d.tau_shift);
  Json summands = Json::array();
  for (const auto& s : d.summands) summands.push_back(to_json(s));
  j["summands"] = summands;
  return j;
}

Json to_json(const SpinCLabel& l) {
  Json j;
  j["k"] = l.k;
  j["characteristic"] = l.characteristic;
  j["conjugate_k"] = l.conjugate_k;
  j["self_conjugate"] = l.self_conjugate;
  return j;
}

Json to_json(const E1Page& page) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["genus"] = page.g;
  j["region"] = page.region.str();
  Json entries = Json::array();
  for (const auto& e : page.entries) {
    Json entry;
    entry["column"] = e.column;
    entry["degree"] = e.degree;
    entry["label"] = e.label.str(page.g);
    entries.push_back(entry);
  }
  j["entries"] = entries;
  return j;
}

Json to_json(const FreeComplex& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["positions"] = Json::array();
  for (int p = c.lo(); p <= c.hi(); ++p) {
    Json pos;
    pos["position"] = p;
    pos["rank"] = c.rank_at(p);
    Json degs = Json::array();
    for (const Rat& d : c.gradings_at(p)) degs.push_back(rat_str(d));
    pos["gradings"] = degs;
    if (p > c.lo()) pos["differential"] = matrix_to_json(c.differential_at(p));
    j["positions"].push_back(pos);
  }
  return j;
}

Json to_json(const ZseqReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["all_pass"] = r.all_pass();
  j["structural_errors"] = r.structural_errors;
  Json positions = Json::array();
  for (const auto& p : r.positions) {
    Json pos;
    pos["index"] = p.index;
    pos["status"] = p.status == CheckStatus::ExactPass  ? "pass-exact"
                    : p.status == CheckStatus::GenericPass ? "pass-generic"
                                                           : "fail";
    pos["note"] = p.note;
    positions.push_back(pos);
  }
  j["positions"] = positions;
  return j;
}

Json to_json(const DegreeProfile& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["genus"] = p.g;
  Json rows = Json::array();
  for (const auto& r : p.rows) {
    Json row;
    row["ell"] = r.ell;
    row["m"] = r.m_candidates;
    row["c1_coefficient"] = r.c1_coefficient.str();
    row["cobordism_shift"] = rat_str(r.cobordism_shift);
    row["bottom_degree"] = rat_str(r.bottom_degree);
    row["degree_sum"] = rat_str(r.degree_sum);
    row["printed_quadratic"] = rat_str(r.printed_quadratic);
    row["discrepancy"] = rat_str(r.discrepancy);
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["argmax_ell"] = p.argmax_ells;
  j["max_degree_sum"] = rat_str(p.max_degree_sum);
  j["strictly_increasing_below_top"] = p.strictly_increasing_below_top;
  j["note"] =
      "degree_sum is computed from first principles (c1^2, sigma = -1, e = 1)"
      "; printed_quadratic is the combined closed form as printed in its "
      "source, which is off by the constant 1/2 from the endpoint value "
      "5/4 - g";
  return j;
}

Json to_json(const VerdictReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["genus"] = r.genus;
  j["self_intersection"] = r.self_intersection;
  j["blowups_applied"] = r.blowups_applied;
  j["hf_top_structure"] = r.hf_top_structure;
  j["knots"] = r.knots;
  j["mod2_classes"] = r.mod2_classes;
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json pair;
    pair["pair"] = Json::array({p.knot_a, p.knot_b});
    pair["verdict"] = p.verdict;
    pair["mod2_class_a"] = p.mod2_class_a;
    pair["mod2_class_b"] = p.mod2_class_b;
    pairs.push_back(pair);
  }
  j["pairs"] = pairs;
  j["all_pairwise_distinct"] = r.all_pairwise_distinct;
  return j;
}

Json delta_to_json(const DeltaData& d) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["genus"] = d.g;
  Json mats = Json::array();
  for (const auto& m : d.deltas) mats.push_back(matrix_to_json(m));
  j["deltas"] = mats;
  return j;
}

DeltaData delta_from_json(const Json& j) {
  DeltaData d;
  if (!j.contains("genus") || !j.contains("deltas"))
    throw ParseError("DeltaData JSON needs 'genus' and 'deltas'");
  d.g = j.at("genus").get<int>();
  int nvars = 2 * d.g;
  for (const auto& mj : j.at("deltas")) {
    std::size_t rows = mj.at("rows").get<std::size_t>();
    std::size_t cols = mj.at("cols").get<std::size_t>();
    const auto& entries = mj.at("entries_row_major");
    if (entries.size() != rows * cols)
      throw ParseError("DeltaData JSON: entry count mismatch");
    LMat m = lmat_zero(rows, cols, nvars, Coeffs::Z);
    std::size_t idx = 0;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = Laurent::parse(entries[idx++].get<std::string>(), nvars,
                                 Coeffs::Z);
    d.deltas.push_back(std::move(m));
  }
  d.check_shapes();
  return d;
}

}  // namespace hfc
