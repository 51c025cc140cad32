#include "hfcalc/pd.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hfcalc/matrix.hpp"

namespace hfc {

PlanarDiagram PlanarDiagram::parse(const std::string& text) {
  PlanarDiagram d;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == ';'))
      ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != 'X' && text[pos] != 'x')
      throw ParseError("PD code: expected 'X' at position " +
                       std::to_string(pos));
    ++pos;
    skip();
    if (pos >= text.size() || (text[pos] != '(' && text[pos] != '['))
      throw ParseError("PD code: expected '(' after X");
    char close = text[pos] == '(' ? ')' : ']';
    ++pos;
    std::int64_t vals[4];
    for (int i = 0; i < 4; ++i) {
      skip();
      std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start) throw ParseError("PD code: expected edge label");
      vals[i] = std::stoll(text.substr(start, pos - start));
      skip();
      if (i < 3) {
        if (pos >= text.size() || text[pos] != ',')
          throw ParseError("PD code: expected ','");
        ++pos;
      }
    }
    if (pos >= text.size() || text[pos] != close)
      throw ParseError("PD code: expected closing bracket");
    ++pos;
    d.crossings_.push_back({vals[0], vals[1], vals[2], vals[3]});
    skip();
  }
  d.validate_and_orient();
  return d;
}

namespace {

// Crossings of the closed 2-strand braid with m crossings, labeled along the
// actual strand walk (passage j has incoming edge j-1 and outgoing edge j,
// under-passages at odd j). Gives a knot for odd m and the two-component
// torus link for even m.
std::vector<Crossing> torus_braid_crossings(int m) {
  std::vector<Crossing> out;
  if (m % 2 == 1) {
    auto w = [&](std::int64_t x) { return (x - 1 + 2 * m) % (2 * m) + 1; };
    for (std::int64_t i = 1; i <= m; ++i) {
      if (i % 2 == 1)
        out.push_back({w(i - 1), w(i + m), w(i), w(i + m - 1)});
      else
        out.push_back({w(i + m - 1), w(i), w(i + m), w(i - 1)});
    }
  } else {
    // two strands, labels 1..m and m+1..2m
    auto c1 = [&](std::int64_t x) { return (x - 1 + m) % m + 1; };
    auto c2 = [&](std::int64_t x) { return m + (x - 1 + m) % m + 1; };
    for (std::int64_t i = 1; i <= m; ++i) {
      if (i % 2 == 1)
        out.push_back({c1(i - 1), c2(i), c1(i), c2(i - 1)});
      else
        out.push_back({c2(i - 1), c1(i), c2(i), c1(i - 1)});
    }
  }
  return out;
}

// Braid-level labeling of the (2, m) pattern: crossing i carries
// (2i-1, 2i+2, 2i, 2i+1) mod 2m. These codes label the two parallel edges of
// each braid level instead of following the strand, so they admit no
// consistent traversal; they are recognized and rebuilt along the walk.
bool is_braid_level_labeling(const std::vector<Crossing>& xs) {
  std::int64_t n = static_cast<std::int64_t>(xs.size());
  if (n < 2) return false;
  std::int64_t edges = 2 * n;
  auto eq = [&](std::int64_t x, std::int64_t y) {
    return (x - y) % edges == 0;
  };
  std::vector<bool> a_seen(edges + 1, false);
  for (const Crossing& x : xs) {
    if (x.a < 1 || x.a > edges || x.a % 2 == 0 || a_seen[x.a]) return false;
    a_seen[x.a] = true;
    if (!eq(x.c, x.a + 1)) return false;
    bool straight = eq(x.d, x.a + 2) && eq(x.b, x.a + 3);
    bool mirrored = eq(x.b, x.a + 2) && eq(x.d, x.a + 3);
    if (!straight && !mirrored) return false;
  }
  return true;
}

}  // namespace

void PlanarDiagram::validate_and_orient() {
  std::int64_t n = static_cast<std::int64_t>(crossings_.size());
  if (n == 0) {
    component_count_ = 1;  // the zero-crossing unknot
    return;
  }
  if (is_braid_level_labeling(crossings_))
    crossings_ = torus_braid_crossings(static_cast<int>(n));

  std::int64_t edges = 2 * n;
  std::map<std::int64_t, int> seen;
  for (const Crossing& x : crossings_)
    for (std::int64_t v : {x.a, x.b, x.c, x.d}) {
      if (v < 1 || v > edges)
        throw ParseError("PD code: edge label " + std::to_string(v) +
                         " out of range 1.." + std::to_string(edges));
      seen[v]++;
    }
  for (auto& [label, count] : seen)
    if (count != 2)
      throw ParseError("PD code: edge label " + std::to_string(label) +
                       " appears " + std::to_string(count) +
                       " times, expected 2");

  // Orient the over-strands: each edge must occur exactly once as a source
  // and once as a target of a passage. Under-passages are fixed (a -> c);
  // the over direction at each crossing is found by backtracking.
  std::vector<int> src(edges + 1, 0), dst(edges + 1, 0);
  for (const Crossing& x : crossings_) {
    src[x.a]++;
    dst[x.c]++;
  }
  for (std::int64_t e = 1; e <= edges; ++e)
    if (src[e] > 1 || dst[e] > 1)
      throw ParseError("PD code: under-strand orientations conflict");

  std::vector<int> choice(n, -1);  // 1: over runs d -> b, 0: over runs b -> d
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == crossings_.size()) return true;
    const Crossing& x = crossings_[i];
    for (int opt = 0; opt < 2; ++opt) {
      std::int64_t in = opt ? x.d : x.b;
      std::int64_t out = opt ? x.b : x.d;
      if (src[in] == 0 && dst[out] == 0) {
        src[in]++;
        dst[out]++;
        choice[i] = opt;
        if (assign(i + 1)) return true;
        src[in]--;
        dst[out]--;
        choice[i] = -1;
      }
    }
    return false;
  };
  if (!assign(0))
    throw ParseError("PD code: no consistent orientation of the over-strands");

  signs_.clear();
  std::map<std::int64_t, std::int64_t> succ;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const Crossing& x = crossings_[i];
    succ[x.a] = x.c;
    // Counterclockwise slots (a at 0, b at 90, c at 180, d at 270 degrees):
    // with the under-strand heading a -> c, an over-strand running d -> b
    // crosses negatively, b -> d positively.
    if (choice[i]) {
      succ[x.d] = x.b;
      signs_.push_back(-1);
    } else {
      succ[x.b] = x.d;
      signs_.push_back(+1);
    }
  }
  std::vector<bool> visited(edges + 1, false);
  component_count_ = 0;
  for (std::int64_t e = 1; e <= edges; ++e) {
    if (visited[e]) continue;
    ++component_count_;
    std::int64_t cur = e;
    while (!visited[cur]) {
      visited[cur] = true;
      cur = succ.at(cur);
    }
  }
}

int PlanarDiagram::writhe() const {
  return std::accumulate(signs_.begin(), signs_.end(), 0);
}

std::string PlanarDiagram::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    if (i) out << ";";
    out << "X(" << crossings_[i].a << "," << crossings_[i].b << ","
        << crossings_[i].c << "," << crossings_[i].d << ")";
  }
  return out.str();
}

Laurent alexander_from_diagram(const PlanarDiagram& d) {
  if (d.component_count() != 1)
    throw DomainError(
        "alexander_from_diagram expects a knot; use the Conway route for "
        "links");
  std::size_t n = d.crossings().size();
  if (n == 0) return Laurent::constant(1, 1, Coeffs::Z);

  // over-arc index per edge (arcs are the Wirtinger generators)
  std::int64_t edges = d.edge_count();
  std::vector<std::int64_t> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int64_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Crossing& x : d.crossings()) parent[find(x.b)] = find(x.d);
  std::map<std::int64_t, int> arc_of_root;
  auto arc = [&](std::int64_t e) {
    std::int64_t r = find(e);
    return arc_of_root.emplace(r, static_cast<int>(arc_of_root.size()))
        .first->second;
  };

  // Alexander matrix rows from x_out = o^{+-1} x_in o^{-+1}:
  //   positive: (1 - t) col_o + t col_in - col_out
  //   negative: (1 - 1/t) col_o + (1/t) col_in - col_out
  std::size_t arcs = 0;
  for (std::int64_t e = 1; e <= edges; ++e)
    arcs = std::max<std::size_t>(arcs, arc(e) + 1);
  if (arcs != n)
    throw DomainError("Wirtinger presentation has unexpected arc count");

  LMat m = lmat_zero(n, arcs, 1, Coeffs::Z);
  Laurent one = Laurent::constant(1, 1, Coeffs::Z);
  Laurent t = Laurent::monomial(1, {1}, 1, Coeffs::Z);
  Laurent tinv = Laurent::monomial(1, {-1}, 1, Coeffs::Z);
  for (std::size_t i = 0; i < n; ++i) {
    const Crossing& x = d.crossings()[i];
    int sign = d.signs()[i];
    int o = arc(x.b);
    int in = arc(x.a);
    int out = arc(x.c);
    if (sign > 0) {
      m(i, o) += one - t;
      m(i, in) += t;
      m(i, out) -= one;
    } else {
      m(i, o) += one - tinv;
      m(i, in) += tinv;
      m(i, out) -= one;
    }
  }

  // Strike the last row and column, then take the determinant by exact
  // rational interpolation: clear t^-1 by scaling with t, so entries have
  // degree <= 2 and the determinant degree is bounded by 2(n-1).
  std::size_t k = n - 1;
  if (k == 0) return Laurent::constant(1, 1, Coeffs::Z);
  int deg_bound = static_cast<int>(2 * k);
  std::vector<Rat> xs, ys;
  for (int p = 0; p <= deg_bound; ++p) {
    Rat x(p + 2);
    QMat q(k, k, Rat(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        q(i, j) = (m(i, j) * t).evaluate({x});
    xs.push_back(x);
    ys.push_back(qmat_det(q));
  }
  // Lagrange interpolation of the degree <= 2k polynomial det(t*M')
  std::vector<Rat> coeffs(deg_bound + 1, Rat(0));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Rat> numpoly{Rat(1)};
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      denom *= xs[i] - xs[j];
      std::vector<Rat> next(numpoly.size() + 1, Rat(0));
      for (std::size_t c = 0; c < numpoly.size(); ++c) {
        next[c + 1] += numpoly[c];
        next[c] -= numpoly[c] * xs[j];
      }
      numpoly = next;
    }
    Rat scale = ys[i] / denom;
    for (std::size_t c = 0; c < numpoly.size() && c < coeffs.size(); ++c)
      coeffs[c] += numpoly[c] * scale;
  }
  Laurent det(1, Coeffs::Z);
  for (int c = 0; c <= deg_bound; ++c) {
    if (coeffs[c] == 0) continue;
    if (boost::multiprecision::denominator(coeffs[c]) != 1)
      throw DomainError("interpolated determinant is not integral");
    det += Laurent::monomial(1, {c},
                             boost::multiprecision::numerator(coeffs[c]),
                             Coeffs::Z);
  }
  if (det.is_zero())
    throw DomainError("Alexander determinant vanished; malformed diagram");

  // normalize: center the exponents, then fix the sign so that Delta(1) = 1
  std::int64_t lo = det.terms().begin()->first[0];
  std::int64_t hi = det.terms().rbegin()->first[0];
  if ((lo + hi) % 2 != 0)
    throw DomainError("Alexander polynomial has odd span; not a knot diagram");
  Laurent shift = Laurent::monomial(1, {-(lo + hi) / 2}, 1, Coeffs::Z);
  Laurent sym = det * shift;
  if (!sym.is_symmetric())
    throw DomainError("Alexander polynomial is not symmetric");
  Int at_one = sym.augmentation();
  if (at_one == -1)
    sym = -sym;
  else if (at_one != 1)
    throw DomainError("Alexander polynomial has |Delta(1)| != 1");
  return sym;
}

PlanarDiagram torus_2m_diagram(int m) {
  if (m < 2) throw DomainError("torus_2m_diagram needs at least two crossings");
  std::ostringstream out;
  auto xs = torus_braid_crossings(m);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ";";
    out << "X(" << xs[i].a << "," << xs[i].b << "," << xs[i].c << ","
        << xs[i].d << ")";
  }
  return PlanarDiagram::parse(out.str());
}

}  // namespace hfc
