#include "hfcalc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace hfc {

Laurent::Laurent(int nvars, Coeffs ring) : nvars_(nvars), ring_(ring) {
  if (nvars < 0) throw DomainError("negative variable count");
}

Laurent Laurent::constant(int nvars, const Int& c, Coeffs ring) {
  Laurent p(nvars, ring);
  p.insert(Exps(nvars, 0), c);
  return p;
}

Laurent Laurent::monomial(int nvars, const Exps& e, const Int& c, Coeffs ring) {
  if (static_cast<int>(e.size()) != nvars)
    throw DomainError("monomial exponent tuple has wrong length");
  Laurent p(nvars, ring);
  p.insert(e, c);
  return p;
}

Laurent Laurent::variable(int nvars, int idx, Coeffs ring) {
  if (idx < 0 || idx >= nvars) throw DomainError("variable index out of range");
  Exps e(nvars, 0);
  e[idx] = 1;
  return monomial(nvars, e, 1, ring);
}

Laurent Laurent::variable_minus_one(int nvars, int idx, Coeffs ring) {
  return variable(nvars, idx, ring) - constant(nvars, 1, ring);
}

Int Laurent::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

bool Laurent::operator==(const Laurent& o) const {
  return nvars_ == o.nvars_ && ring_ == o.ring_ && terms_ == o.terms_;
}

void Laurent::insert(const Exps& e, const Int& c) {
  Int v = c;
  if (ring_ == Coeffs::F2) {
    v = ((v % 2) + 2) % 2;
  }
  if (v == 0) return;
  auto [it, fresh] = terms_.emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (ring_ == Coeffs::F2) it->second = ((it->second % 2) + 2) % 2;
    if (it->second == 0) terms_.erase(it);
  }
}

void Laurent::check_compatible(const Laurent& o, const char* op) const {
  if (nvars_ != o.nvars_)
    throw DomainError(std::string(op) + ": variable counts differ");
  if (ring_ != o.ring_)
    throw DomainError(std::string(op) + ": coefficient rings differ");
}

Laurent Laurent::operator-() const {
  Laurent r(nvars_, ring_);
  for (const auto& [e, c] : terms_) r.insert(e, -c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check_compatible(o, "add");
  if (this == &o) {
    TermMap doubled = terms_;
    for (const auto& [e, c] : doubled) insert(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  check_compatible(o, "subtract");
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  a.check_compatible(b, "multiply");
  Laurent r(a.nvars_, a.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Laurent::Exps e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.insert(e, ca * cb);
    }
  }
  return r;
}

Laurent Laurent::scaled(const Int& c) const {
  Laurent r(nvars_, ring_);
  for (const auto& [e, v] : terms_) r.insert(e, v * c);
  return r;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent acc = constant(nvars_, 1, ring_);
  Laurent base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Laurent Laurent::reduced_mod2() const {
  Laurent r(nvars_, Coeffs::F2);
  for (const auto& [e, c] : terms_) r.insert(e, c);
  return r;
}

Int Laurent::augmentation() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  if (ring_ == Coeffs::F2) s = ((s % 2) + 2) % 2;
  return s;
}

Laurent Laurent::involution() const {
  Laurent r(nvars_, ring_);
  for (const auto& [e, c] : terms_) {
    Exps ne(nvars_);
    for (int i = 0; i < nvars_; ++i) ne[i] = -e[i];
    r.insert(ne, c);
  }
  return r;
}

Laurent Laurent::normalized_up_to_unit() const {
  if (is_zero()) return *this;
  Exps shift(nvars_, std::numeric_limits<std::int64_t>::max());
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) shift[i] = std::min(shift[i], e[i]);
  Laurent r(nvars_, ring_);
  for (const auto& [e, c] : terms_) {
    Exps ne(nvars_);
    for (int i = 0; i < nvars_; ++i) ne[i] = e[i] - shift[i];
    r.insert(ne, c);
  }
  if (ring_ == Coeffs::Z && r.terms_.begin()->second < 0) r = -r;
  return r;
}

Rat Laurent::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DomainError("evaluation point has wrong dimension");
  for (const Rat& x : point)
    if (x == 0) throw DomainError("Laurent evaluation at zero");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term(c);
    for (int i = 0; i < nvars_; ++i) {
      std::int64_t k = e[i];
      Rat base = k >= 0 ? point[i] : Rat(1) / point[i];
      std::uint64_t m = k >= 0 ? k : -k;
      while (m) {
        if (m & 1) term *= base;
        base *= base;
        m >>= 1;
      }
    }
    total += term;
  }
  return total;
}

std::vector<std::string> Laurent::default_names(int nvars) {
  std::vector<std::string> names;
  if (nvars == 1) {
    names.push_back("t");
  } else {
    for (int i = 0; i < nvars; ++i) names.push_back("t" + std::to_string(i + 1));
  }
  return names;
}

std::string Laurent::str() const { return str(default_names(nvars_)); }

std::string Laurent::str(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw DomainError("name list has wrong length");
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool all_zero = std::all_of(e.begin(), e.end(),
                                [](std::int64_t k) { return k == 0; });
    bool wrote = false;
    if (a != 1 || all_zero) {
      out << a.str();
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << names[i];
      if (e[i] != 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  int nvars;
  Coeffs ring;
  const std::vector<std::string>& names;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Int parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected integer at position " +
                                       std::to_string(start) + " in '" + text + "'");
    Int v(text.substr(start, pos - start));
    return neg ? -v : v;
  }

  // variable name or -1 if none matches at current position; longest name wins
  int try_variable() {
    skip_ws();
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < nvars; ++i) {
      const std::string& n = names[i];
      if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
        best = i;
        best_len = n.size();
      }
    }
    if (best >= 0) pos += best_len;
    return best;
  }

  Laurent parse_term() {
    Int coeff = 1;
    Laurent::Exps exps(nvars, 0);
    bool any_factor = false;
    bool expect_factor = false;
    for (;;) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff *= parse_int();
        any_factor = true;
      } else {
        int v = try_variable();
        if (v < 0) {
          if (expect_factor)
            throw ParseError("dangling '*' at position " + std::to_string(pos) +
                             " in '" + text + "'");
          break;
        }
        std::int64_t e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          Int raw = parse_int();
          e = static_cast<std::int64_t>(raw);
        }
        exps[v] += e;
        any_factor = true;
      }
      expect_factor = false;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        expect_factor = true;
        continue;
      }
      // juxtaposition of a further variable is also accepted
      std::size_t save = pos;
      int v = try_variable();
      if (v < 0) {
        pos = save;
        break;
      }
      pos = save;
    }
    if (!any_factor)
      throw ParseError("expected term at position " + std::to_string(pos) +
                       " in '" + text + "'");
    return Laurent::monomial(nvars, exps, coeff, ring);
  }

  Laurent run() {
    Laurent total(nvars, ring);
    bool first = true;
    while (!eof()) {
      int sign = 1;
      skip_ws();
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw ParseError("expected '+' or '-' at position " +
                         std::to_string(pos) + " in '" + text + "'");
      }
      skip_ws();
      if (eof()) throw ParseError("dangling sign in '" + text + "'");
      Laurent term = parse_term();
      total += sign < 0 ? -term : term;
      first = false;
    }
    if (first) throw ParseError("empty polynomial");
    return total;
  }
};

}  // namespace

Laurent Laurent::parse(const std::string& text, int nvars, Coeffs ring) {
  return parse(text, nvars, ring, default_names(nvars));
}

Laurent Laurent::parse(const std::string& text, int nvars, Coeffs ring,
                       const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != nvars)
    throw DomainError("name list has wrong length");
  Parser p{text, 0, nvars, ring, names};
  return p.run();
}

Laurent expand_z_square(const Laurent& conway_in_z) {
  if (conway_in_z.vars() != 1)
    throw DomainError("expand_z_square expects a univariate polynomial");
  Coeffs ring = conway_in_z.ring();
  // t - 2 + t^-1 = (t^{1/2} - t^{-1/2})^2
  Laurent zsq(1, ring);
  zsq += Laurent::monomial(1, {1}, 1, ring);
  zsq += Laurent::constant(1, -2, ring);
  zsq += Laurent::monomial(1, {-1}, 1, ring);
  Laurent out(1, ring);
  for (const auto& [e, c] : conway_in_z.terms()) {
    std::int64_t k = e[0];
    if (k < 0) throw DomainError("negative power of z in Conway polynomial");
    if (k % 2 != 0)
      throw DomainError("odd power of z: not the polynomial of a knot");
    out += zsq.pow(static_cast<unsigned>(k / 2)).scaled(c);
  }
  return out;
}

Laurent conway_from_alexander(const Laurent& alexander) {
  if (alexander.vars() != 1)
    throw DomainError("conway_from_alexander expects a univariate polynomial");
  if (!alexander.is_symmetric())
    throw DomainError("conway_from_alexander expects a symmetric polynomial");
  Coeffs ring = alexander.ring();
  // Peel off the top exponent m with t^m + t^-m = w^m - ..., w = z^2 + 2.
  Laurent rem = alexander;
  Laurent w(1, ring);  // z^2 + 2 in the z variable
  w += Laurent::monomial(1, {2}, 1, ring);
  w += Laurent::constant(1, 2, ring);
  Laurent out(1, ring);
  while (!rem.is_zero()) {
    auto top = rem.terms().rbegin();
    std::int64_t m = top->first[0];
    Int c = top->second;
    if (m < 0) throw DomainError("asymmetric remainder in conway_from_alexander");
    if (m == 0) {
      out += Laurent::constant(1, c, ring);
      rem -= Laurent::constant(1, c, ring);
      continue;
    }
    // subtract c*(t^m + t^-m), add c*(w-expansion of t^m + t^-m)
    Laurent sym(1, ring);
    sym += Laurent::monomial(1, {m}, 1, ring);
    sym += Laurent::monomial(1, {-m}, 1, ring);
    // p_m(w) with p_m = t^m + t^-m as a polynomial in w = t + t^-1:
    // p_0 = 2, p_1 = w, p_m = w p_{m-1} - p_{m-2}
    Laurent prev = Laurent::constant(1, 2, ring);
    Laurent pm = w;
    for (std::int64_t i = 2; i <= m; ++i) {
      Laurent next = w * pm - prev;
      prev = pm;
      pm = next;
    }
    rem -= sym.scaled(c);
    out += pm.scaled(c);
  }
  return out;
}

}  // namespace hfc
