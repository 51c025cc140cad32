#include "hfcalc/surgery.hpp"

#include <algorithm>
#include <sstream>

#include "hfcalc/corpus.hpp"

namespace hfc {

GroupRing GroupRing::standard(int nvars, Coeffs ring) {
  return {nvars, ring, Laurent::default_names(nvars)};
}

int GroupRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

FormalInvariant FormalInvariant::generator(const GroupRing& ring, int rank,
                                           const std::string& spinc, int slot,
                                           const Rat& degree) {
  if (slot < 0 || slot >= rank) throw DomainError("generator slot out of range");
  FormalInvariant inv;
  inv.ring = ring;
  inv.rank = rank;
  inv.sign_ambiguity = ring.ring != Coeffs::F2;  // -1 = 1 mod 2
  Component c;
  c.spinc = spinc;
  c.coords.assign(rank, Laurent::zero(ring.nvars, ring.ring));
  c.coords[slot] = Laurent::constant(ring.nvars, 1, ring.ring);
  c.degree = degree;
  inv.components.push_back(std::move(c));
  return inv;
}

const FormalInvariant::Component* FormalInvariant::find(
    const std::string& spinc) const {
  for (const auto& c : components)
    if (c.spinc == spinc) return &c;
  return nullptr;
}

bool FormalInvariant::is_zero() const {
  for (const auto& c : components)
    for (const auto& p : c.coords)
      if (!p.is_zero()) return false;
  return true;
}

FormalInvariant FormalInvariant::reduced_mod2() const {
  FormalInvariant out = *this;
  out.ring.ring = Coeffs::F2;
  out.sign_ambiguity = false;
  for (auto& c : out.components)
    for (auto& p : c.coords) p = p.reduced_mod2();
  return out;
}

FormalInvariant FormalInvariant::scaled(const Laurent& c) const {
  FormalInvariant out = *this;
  for (auto& comp : out.components)
    for (auto& p : comp.coords) p = p * c;
  return out;
}

FormalInvariant FormalInvariant::scaled_int(const Int& c) const {
  return scaled(Laurent::constant(ring.nvars, c, ring.ring));
}

FormalInvariant FormalInvariant::operator+(const FormalInvariant& o) const {
  if (!(ring == o.ring)) throw DomainError("invariant sum: ring mismatch");
  if (rank != o.rank) throw DomainError("invariant sum: rank mismatch");
  FormalInvariant out = *this;
  for (const auto& oc : o.components) {
    bool merged = false;
    for (auto& c : out.components) {
      if (c.spinc != oc.spinc) continue;
      if (c.degree != oc.degree)
        throw DomainError("invariant sum: degree mismatch on component " +
                          c.spinc);
      for (int i = 0; i < rank; ++i) c.coords[i] += oc.coords[i];
      merged = true;
    }
    if (!merged) out.components.push_back(oc);
  }
  out.sign_ambiguity = sign_ambiguity || o.sign_ambiguity;
  out.unit_translation_ambiguity =
      unit_translation_ambiguity || o.unit_translation_ambiguity;
  return out;
}

FormalInvariant log_transform_combination(std::int64_t p, std::int64_t q,
                                          std::int64_t r,
                                          const FormalInvariant& b1,
                                          const FormalInvariant& b2,
                                          const FormalInvariant& b3) {
  if (!(b1.ring == b2.ring) || !(b2.ring == b3.ring))
    throw DomainError("log transform: coefficient rings differ");
  if (b1.rank != b2.rank || b2.rank != b3.rank)
    throw DomainError("log transform: ranks differ");
  return b1.scaled_int(p) + b2.scaled_int(q) + b3.scaled_int(r);
}

Laurent CoefficientProjection::apply(const Laurent& p) const {
  if (p.vars() != source.nvars)
    throw DomainError("projection: polynomial not in the source ring");
  if (static_cast<int>(map.rows()) != target.nvars ||
      static_cast<int>(map.cols()) != source.nvars)
    throw DomainError("projection: matrix shape mismatch");
  Laurent out(target.nvars, p.ring());
  for (const auto& [e, c] : p.terms()) {
    Laurent::Exps ne(target.nvars, 0);
    for (int i = 0; i < target.nvars; ++i) {
      Int acc = 0;
      for (int j = 0; j < source.nvars; ++j) acc += map(i, j) * e[j];
      ne[i] = static_cast<std::int64_t>(acc);
    }
    out += Laurent::monomial(target.nvars, ne, c, p.ring());
  }
  return out;
}

FormalInvariant t_average(const FormalInvariant& family,
                          const CoefficientProjection& projection,
                          const std::vector<std::string>& orbit) {
  if (orbit.empty()) throw DomainError("t_average: empty spin^c orbit");
  if (!(projection.source == family.ring))
    throw DomainError("t_average: projection source ring mismatch");
  FormalInvariant out;
  out.ring = projection.target;
  out.rank = family.rank;
  out.sign_ambiguity = family.sign_ambiguity;
  out.unit_translation_ambiguity = true;
  FormalInvariant::Component sum;
  sum.spinc = orbit.front() + (orbit.size() > 1 ? "+orbit" : "");
  sum.coords.assign(family.rank,
                    Laurent::zero(projection.target.nvars, out.ring.ring));
  bool first = true;
  for (const auto& label : orbit) {
    const auto* c = family.find(label);
    if (!c)
      throw DomainError("t_average: orbit label '" + label +
                        "' missing from the family");
    if (first) {
      sum.degree = c->degree;
      first = false;
    }
    for (int i = 0; i < family.rank; ++i)
      sum.coords[i] += projection.apply(c->coords[i]);
  }
  out.components.push_back(std::move(sum));
  return out;
}

Laurent pair_invariants(const FormalInvariant& x, const FormalInvariant& y) {
  if (!(x.ring == y.ring)) throw DomainError("pairing: ring mismatch");
  if (x.rank != y.rank) throw DomainError("pairing: rank mismatch");
  Laurent total(x.ring.nvars, x.ring.ring);
  for (const auto& cx : x.components) {
    const auto* cy = y.find(cx.spinc);
    if (!cy) continue;
    for (int i = 0; i < x.rank; ++i)
      total += cx.coords[i] * cy->coords[i].involution();
  }
  return total;
}

FormalInvariant knot_surgery_multiply(const FormalInvariant& inv,
                                      const Laurent& delta_univariate,
                                      const std::string& t_class) {
  if (delta_univariate.vars() != 1)
    throw DomainError("knot surgery: Alexander polynomial must be univariate");
  int slot = inv.ring.index_of(t_class);
  if (slot < 0)
    throw DomainError("knot surgery: unknown generator '" + t_class + "'");
  if (inv.sign_ambiguity)
    throw DomainError(
        "knot surgery: resolve the sign first (reduce mod 2, as the formula "
        "is proved with F2 coefficients)");
  // embed Delta(t) at the named generator
  Laurent embedded(inv.ring.nvars, inv.ring.ring);
  for (const auto& [e, c] : delta_univariate.terms()) {
    Laurent::Exps ne(inv.ring.nvars, 0);
    ne[slot] = e[0];
    embedded += Laurent::monomial(inv.ring.nvars, ne, c, inv.ring.ring);
  }
  return inv.scaled(embedded);
}

namespace {

// Divides p by q as a monomial: returns u with p = u * q when u is a
// (+-) monomial, otherwise nullopt. Both nonzero.
std::optional<Laurent> monomial_ratio(const Laurent& p, const Laurent& q) {
  if (p.term_count() != q.term_count()) return std::nullopt;
  auto ip = p.terms().begin();
  auto iq = q.terms().begin();
  // candidate exponent shift from the lexicographically smallest terms
  Laurent::Exps shift(p.vars());
  for (int v = 0; v < p.vars(); ++v)
    shift[v] = ip->first[v] - iq->first[v];
  Int cp = ip->second, cq = iq->second;
  Int sign;
  if (cp == cq)
    sign = 1;
  else if (cp == -cq)
    sign = -1;
  else
    return std::nullopt;
  Laurent u = Laurent::monomial(p.vars(), shift, sign, p.ring());
  if (u * q == p) return u;
  return std::nullopt;
}

}  // namespace

bool unit_equivalent(const FormalInvariant& a, const FormalInvariant& b) {
  if (!(a.ring == b.ring)) throw DomainError("unit_equivalent: ring mismatch");
  if (a.rank != b.rank) throw DomainError("unit_equivalent: rank mismatch");
  bool allow_sign = a.sign_ambiguity || b.sign_ambiguity;
  bool allow_unit = a.unit_translation_ambiguity || b.unit_translation_ambiguity;

  // collect the labels appearing on either side
  std::vector<std::string> labels;
  for (const auto& c : a.components) labels.push_back(c.spinc);
  for (const auto& c : b.components)
    if (!a.find(c.spinc)) labels.push_back(c.spinc);

  Laurent zero(a.ring.nvars, a.ring.ring);
  std::optional<Laurent> unit;
  for (const auto& label : labels) {
    const auto* ca = a.find(label);
    const auto* cb = b.find(label);
    for (int i = 0; i < a.rank; ++i) {
      const Laurent& pa = ca ? ca->coords[i] : zero;
      const Laurent& pb = cb ? cb->coords[i] : zero;
      if (pa.is_zero() != pb.is_zero()) return false;
      if (pa.is_zero()) continue;
      if (unit) {
        // a single unit (including its sign) must work across all components
        if (*unit * pb == pa) continue;
        return false;
      }
      auto u = monomial_ratio(pa, pb);
      if (!u) return false;
      if (!allow_sign && u->terms().begin()->second != 1) return false;
      if (!allow_unit) {
        bool is_one = *u == Laurent::constant(a.ring.nvars, 1, a.ring.ring);
        bool is_minus_one =
            *u == Laurent::constant(a.ring.nvars, -1, a.ring.ring);
        if (!(is_one || (allow_sign && is_minus_one))) return false;
      }
      unit = u;
    }
  }
  return true;
}

Laurent fiber_sum_product(const Laurent& o1, const Laurent& o2) {
  if (o1.vars() != 1 || o2.vars() != 1)
    throw DomainError("fiber sum: expected the single-variable ring");
  if (o1.ring() != o2.ring()) throw DomainError("fiber sum: ring mismatch");
  Laurent factor(1, o1.ring());
  factor += Laurent::monomial(1, {1}, 1, o1.ring());
  factor += Laurent::constant(1, -2, o1.ring());
  factor += Laurent::monomial(1, {-1}, 1, o1.ring());
  return factor * o1 * o2;
}

NovikovSeries fiber_sum_product(const NovikovSeries& o1,
                                const NovikovSeries& o2) {
  if (o1.ring() != o2.ring() || o1.direction() != o2.direction())
    throw DomainError("fiber sum: incompatible series");
  Laurent factor(1, o1.ring());
  factor += Laurent::monomial(1, {1}, 1, o1.ring());
  factor += Laurent::constant(1, -2, o1.ring());
  factor += Laurent::monomial(1, {-1}, 1, o1.ring());
  return (o1 * o2) * factor;
}

S1SurgeryInvariants s1_cross_surgery_invariant(const Laurent& delta,
                                               Direction dir,
                                               std::int64_t order) {
  if (delta.vars() != 1)
    throw DomainError("expected a univariate Alexander polynomial");
  if (!delta.is_symmetric())
    throw DomainError("Alexander polynomial must be symmetric");
  Coeffs ring = delta.ring();
  Laurent den(1, ring);
  den += Laurent::monomial(1, {1}, 1, ring);
  den += Laurent::constant(1, -2, ring);
  den += Laurent::monomial(1, {-1}, 1, ring);
  Laurent tm1 = Laurent::variable_minus_one(1, 0, ring);
  return {novikov_quotient(delta, den, dir, order),
          novikov_quotient(delta, tm1, dir, order)};
}

VerdictReport rim_surgery_verdict(std::int64_t g, std::int64_t n,
                                  const std::vector<std::string>& knot_names) {
  if (g < 1) throw DomainError("rim surgery verdict requires genus >= 1");
  if (n < 2 - 2 * g)
    throw DomainError(
        "hypothesis violated: the self-intersection must satisfy n >= 2-2g "
        "(got n = " +
        std::to_string(n) + " < " + std::to_string(2 - 2 * g) + ")");
  VerdictReport report;
  report.genus = g;
  report.self_intersection = n;
  // blow down to square 2-2g, then once more to 1-2g
  report.blowups_applied = static_cast<int>(n - (1 - 2 * g));

  // boundary of the final complement is the circle bundle of degree 2g-1;
  // the top of its Floer homology must be free of rank one for the
  // multiplication argument to bite
  GradedModuleDescription top =
      hf_minus_large_positive(2 * g - 1, static_cast<int>(g), g - 1);
  const HfSummand& t = top.top();
  if (t.kind != HfSummand::FreeRankOne)
    throw DomainError("top of HF- is not free of rank one");
  report.hf_top_structure =
      "HF-_top(Y_" + std::to_string(2 * g - 1) + ", k=+-" +
      std::to_string(g - 1) + ") = R in degree " + rat_str(t.degree);

  std::vector<Laurent> polys;
  for (const auto& name : knot_names) {
    auto k = find_knot(name);
    if (!k) throw DomainError("unknown knot '" + name + "'");
    Laurent delta = k->pd.empty()
                        ? Laurent::constant(1, 1, Coeffs::Z)
                        : alexander_from_diagram(PlanarDiagram::parse(k->pd));
    polys.push_back(delta);
    report.knots.push_back(name);
  }
  Mod2Partition part = mod2_partition(polys);
  std::vector<std::string> class_of(polys.size());
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    for (std::size_t idx : part.classes[c])
      class_of[idx] = part.canonical_forms[c];
  report.mod2_classes = class_of;

  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      VerdictPair pair;
      pair.knot_a = knot_names[i];
      pair.knot_b = knot_names[j];
      pair.mod2_class_a = class_of[i];
      pair.mod2_class_b = class_of[j];
      pair.verdict = class_of[i] != class_of[j]
                         ? "smoothly distinct"
                         : "not distinguished by this invariant";
      report.pairs.push_back(pair);
    }
  report.all_pairwise_distinct = part.all_distinct();
  return report;
}

}  // namespace hfc
