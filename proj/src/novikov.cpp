#include "hfcalc/novikov.hpp"

#include <limits>
#include <sstream>

namespace hfc {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Signed position of an exponent along the completion direction: larger
// means deeper into the completed (infinite) side.
std::int64_t depth(Direction dir, std::int64_t e) {
  return dir == Direction::PositivePowers ? e : -e;
}

std::int64_t undepth(Direction dir, std::int64_t d) {
  return dir == Direction::PositivePowers ? d : -d;
}

}  // namespace

NovikovSeries::NovikovSeries(Coeffs ring, Direction dir,
                             std::int64_t truncation_order)
    : ring_(ring), dir_(dir), order_(truncation_order) {}

NovikovSeries NovikovSeries::from_polynomial(const Laurent& p, Direction dir) {
  if (p.vars() != 1)
    throw DomainError("Novikov series requires a univariate polynomial");
  NovikovSeries s(p.ring(), dir, undepth(dir, kInf));
  s.exact_ = true;
  for (const auto& [e, c] : p.terms()) s.insert(e[0], c);
  return s;
}

void NovikovSeries::insert(std::int64_t e, const Int& c) {
  Int v = c;
  if (ring_ == Coeffs::F2) v = ((v % 2) + 2) % 2;
  if (v == 0) return;
  auto [it, fresh] = terms_.emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (ring_ == Coeffs::F2) it->second = ((it->second % 2) + 2) % 2;
    if (it->second == 0) terms_.erase(it);
  }
}

Int NovikovSeries::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

NovikovSeries NovikovSeries::truncated(std::int64_t order) const {
  NovikovSeries r(ring_, dir_, order);
  std::int64_t bound = depth(dir_, order);
  if (bound > depth(dir_, order_) && !exact_)
    throw DomainError("cannot extend a truncated Novikov series");
  bool dropped = false;
  for (const auto& [e, c] : terms_) {
    if (depth(dir_, e) <= bound)
      r.insert(e, c);
    else
      dropped = true;
  }
  r.exact_ = exact_ && !dropped;
  if (r.exact_) r.order_ = order_;
  return r;
}

NovikovSeries NovikovSeries::operator+(const NovikovSeries& o) const {
  if (ring_ != o.ring_ || dir_ != o.dir_)
    throw DomainError("Novikov add: incompatible series");
  std::int64_t bound = std::min(depth(dir_, exact_ ? undepth(dir_, kInf) : order_),
                                depth(dir_, o.exact_ ? undepth(dir_, kInf) : o.order_));
  NovikovSeries r(ring_, dir_, undepth(dir_, bound));
  r.exact_ = exact_ && o.exact_;
  for (const auto& [e, c] : terms_)
    if (depth(dir_, e) <= bound) r.insert(e, c);
  for (const auto& [e, c] : o.terms_)
    if (depth(dir_, e) <= bound) r.insert(e, c);
  return r;
}

NovikovSeries NovikovSeries::operator*(const NovikovSeries& o) const {
  if (ring_ != o.ring_ || dir_ != o.dir_)
    throw DomainError("Novikov multiply: incompatible series");
  NovikovSeries r(ring_, dir_, 0);
  if (terms_.empty() || o.terms_.empty()) {
    r.exact_ = true;
    r.order_ = undepth(dir_, kInf);
    return r;
  }
  // Shallowest exponent (the finite side) of each factor.
  auto shallow = [&](const NovikovSeries& s) {
    std::int64_t best = kInf;
    for (const auto& [e, c] : s.terms_) best = std::min(best, depth(dir_, e));
    return best;
  };
  std::int64_t va = exact_ ? kInf : depth(dir_, order_);
  std::int64_t vb = o.exact_ ? kInf : depth(dir_, o.order_);
  std::int64_t bound = std::min(va == kInf ? kInf : va + shallow(o),
                                vb == kInf ? kInf : vb + shallow(*this));
  r.exact_ = exact_ && o.exact_;
  r.order_ = undepth(dir_, std::min(bound, kInf));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      if (depth(dir_, ea + eb) <= bound) r.insert(ea + eb, ca * cb);
  return r;
}

NovikovSeries NovikovSeries::operator*(const Laurent& p) const {
  return *this * from_polynomial(p, dir_);
}

NovikovSeries NovikovSeries::scaled(const Int& c) const {
  NovikovSeries r(ring_, dir_, order_);
  r.exact_ = exact_;
  for (const auto& [e, v] : terms_) r.insert(e, v * c);
  return r;
}

NovikovSeries NovikovSeries::reduced_mod2() const {
  NovikovSeries r(Coeffs::F2, dir_, order_);
  r.exact_ = exact_;
  for (const auto& [e, c] : terms_) r.insert(e, c);
  return r;
}

Laurent NovikovSeries::polynomial_part() const {
  Laurent p(1, ring_);
  for (const auto& [e, c] : terms_)
    p += Laurent::monomial(1, {e}, c, ring_);
  return p;
}

bool NovikovSeries::matches_polynomial_through(const Laurent& p,
                                               std::int64_t order) const {
  if (p.vars() != 1) throw DomainError("expected univariate polynomial");
  std::int64_t bound = depth(dir_, order);
  if (!exact_ && bound > depth(dir_, order_))
    throw DomainError("series not computed through requested order");
  for (const auto& [e, c] : p.terms())
    if (depth(dir_, e[0]) <= bound && coeff(e[0]) != c) return false;
  for (const auto& [e, c] : terms_)
    if (depth(dir_, e) <= bound && p.coeff({e}) != c) return false;
  return true;
}

std::string NovikovSeries::str() const {
  std::ostringstream out;
  out << polynomial_part().str();
  if (!exact_) out << " + O(t^" << order_ << ")";
  return out.str();
}

NovikovSeries novikov_quotient(const Laurent& numerator,
                               const Laurent& denominator, Direction dir,
                               std::int64_t order) {
  if (numerator.vars() != 1 || denominator.vars() != 1)
    throw DomainError("novikov_quotient expects univariate polynomials");
  if (numerator.ring() != denominator.ring())
    throw DomainError("novikov_quotient: coefficient rings differ");
  if (denominator.is_zero()) throw DomainError("novikov_quotient: zero denominator");
  if (order < 0) throw DomainError("novikov_quotient: negative order");

  Coeffs ring = numerator.ring();
  // Leading term of the denominator in the completion direction: smallest
  // exponent for PositivePowers, largest for NegativePowers.
  std::int64_t lead_exp;
  Int lead_coeff;
  if (dir == Direction::PositivePowers) {
    lead_exp = denominator.terms().begin()->first[0];
    lead_coeff = denominator.terms().begin()->second;
  } else {
    lead_exp = denominator.terms().rbegin()->first[0];
    lead_coeff = denominator.terms().rbegin()->second;
  }
  if (ring == Coeffs::Z && lead_coeff != 1 && lead_coeff != -1)
    throw DomainError(
        "novikov_quotient: leading denominator coefficient must be a unit");

  // Run far enough that denominator * result == numerator holds through
  // `order` even after the leading-exponent shift.
  std::int64_t slack = lead_exp < 0 ? -lead_exp : lead_exp;
  std::int64_t run_bound = order + slack;

  NovikovSeries result(ring, dir, undepth(dir, run_bound));
  Laurent rem = numerator;
  while (!rem.is_zero()) {
    std::int64_t e;
    Int c;
    if (dir == Direction::PositivePowers) {
      e = rem.terms().begin()->first[0];
      c = rem.terms().begin()->second;
    } else {
      e = rem.terms().rbegin()->first[0];
      c = rem.terms().rbegin()->second;
    }
    std::int64_t qe = e - lead_exp;
    if (depth(dir, qe) > run_bound) break;
    Int qc = ring == Coeffs::F2 ? Int(1) : c * lead_coeff;  // lead = +-1
    result.insert(qe, qc);
    rem -= Laurent::monomial(1, {qe}, qc, ring) * denominator;
  }
  if (rem.is_zero()) {
    result.exact_ = true;
    result.order_ = undepth(dir, kInf);
  }
  return result;
}

}  // namespace hfc
