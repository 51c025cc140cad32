#include "hfcalc/complex.hpp"

#include <algorithm>
#include <map>

namespace hfc {

FreeComplex::FreeComplex(int lo, int hi, int nvars, Coeffs ring)
    : lo_(lo), hi_(hi), nvars_(nvars), ring_(ring) {
  if (hi < lo) throw DomainError("complex with empty position interval");
  ranks_.assign(hi - lo + 1, 0);
  diffs_.assign(hi - lo + 1, LMat());
  gradings_.assign(hi - lo + 1, {});
}

int FreeComplex::rank_at(int p) const {
  if (p < lo_ || p > hi_) return 0;
  return ranks_[p - lo_];
}

const LMat& FreeComplex::differential_at(int p) const {
  if (p <= lo_ || p > hi_)
    throw DomainError("differential_at: position out of range");
  return diffs_[p - lo_];
}

const std::vector<Rat>& FreeComplex::gradings_at(int p) const {
  if (p < lo_ || p > hi_) throw DomainError("gradings_at: position out of range");
  return gradings_[p - lo_];
}

void FreeComplex::set_rank(int p, int rank) {
  if (p < lo_ || p > hi_) throw DomainError("set_rank: position out of range");
  ranks_[p - lo_] = rank;
}

void FreeComplex::set_differential(int p, LMat d) {
  if (p <= lo_ || p > hi_)
    throw DomainError("set_differential: position out of range");
  diffs_[p - lo_] = std::move(d);
}

void FreeComplex::set_gradings(int p, std::vector<Rat> g) {
  if (p < lo_ || p > hi_) throw DomainError("set_gradings: position out of range");
  gradings_[p - lo_] = std::move(g);
}

void FreeComplex::validate() const {
  for (int p = lo_ + 1; p <= hi_; ++p) {
    const LMat& d = diffs_[p - lo_];
    if (static_cast<int>(d.rows()) != rank_at(p - 1) ||
        static_cast<int>(d.cols()) != rank_at(p))
      throw DomainError("differential shape inconsistent with ranks");
  }
  for (int p = lo_ + 2; p <= hi_; ++p) {
    const LMat& d1 = diffs_[p - 1 - lo_];
    const LMat& d2 = diffs_[p - lo_];
    if (d1.empty() || d2.empty()) continue;
    if (!lmat_is_zero(lmat_mul(d1, d2)))
      throw DomainError("d o d != 0 at position " + std::to_string(p));
  }
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<int>> wedge_basis(int n, int l) {
  std::vector<std::vector<int>> basis;
  if (l < 0 || l > n) return basis;
  std::vector<int> idx(l);
  for (int i = 0; i < l; ++i) idx[i] = i;
  for (;;) {
    basis.push_back(idx);
    int i = l - 1;
    while (i >= 0 && idx[i] == n - l + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (l == 0) basis.assign(1, {});
  return basis;
}

FreeComplex koszul_complex(int g, Coeffs ring) {
  if (g <= 0) throw DomainError("koszul_complex requires g >= 1");
  int n = 2 * g;
  FreeComplex c(0, n, n, ring);
  std::vector<std::vector<std::vector<int>>> bases(n + 1);
  std::vector<std::map<std::vector<int>, int>> index_of(n + 1);
  for (int l = 0; l <= n; ++l) {
    bases[l] = wedge_basis(n, l);
    for (std::size_t i = 0; i < bases[l].size(); ++i)
      index_of[l][bases[l][i]] = static_cast<int>(i);
    c.set_rank(l, static_cast<int>(bases[l].size()));
    c.set_gradings(l, std::vector<Rat>(bases[l].size(), Rat(l - g)));
  }
  for (int l = 1; l <= n; ++l) {
    LMat d = lmat_zero(bases[l - 1].size(), bases[l].size(), n, ring);
    for (std::size_t col = 0; col < bases[l].size(); ++col) {
      const auto& subset = bases[l][col];
      for (int j = 0; j < l; ++j) {
        std::vector<int> reduced;
        for (int m = 0; m < l; ++m)
          if (m != j) reduced.push_back(subset[m]);
        int row = index_of[l - 1][reduced];
        Int sign = (j % 2 == 0) ? 1 : -1;
        d(row, col) +=
            Laurent::variable_minus_one(n, subset[j], ring).scaled(sign);
      }
    }
    c.set_differential(l, std::move(d));
  }
  c.validate();
  return c;
}

std::vector<std::vector<Rat>> evaluation_points(int nvars, int count, Rng& rng) {
  std::vector<std::vector<Rat>> pts;
  for (int p = 0; p < count; ++p) {
    std::vector<Rat> pt;
    for (int i = 0; i < nvars; ++i) {
      std::int64_t v = rng.uniform(2, 97);
      pt.emplace_back(Int(v), Int(1));
    }
    pts.push_back(std::move(pt));
  }
  return pts;
}

std::size_t fraction_field_rank(const LMat& m, int nvars, std::uint64_t seed) {
  if (m.empty()) return 0;
  Rng rng(seed);
  const int rounds = 8;
  for (int r = 0; r < rounds; ++r) {
    auto pts = evaluation_points(nvars, 3, rng);
    std::size_t r0 = qmat_rank(lmat_evaluate(m, pts[0]));
    std::size_t r1 = qmat_rank(lmat_evaluate(m, pts[1]));
    std::size_t r2 = qmat_rank(lmat_evaluate(m, pts[2]));
    if (r0 == r1 && r1 == r2) return r0;
  }
  throw DomainError("fraction_field_rank: evaluation points kept disagreeing");
}

std::vector<int> fraction_field_homology_ranks(const FreeComplex& c,
                                               std::uint64_t seed) {
  c.validate();
  std::vector<int> out(c.hi() - c.lo() + 1, 0);
  std::vector<std::size_t> dranks(c.hi() - c.lo() + 2, 0);
  for (int p = c.lo() + 1; p <= c.hi(); ++p)
    dranks[p - c.lo()] =
        fraction_field_rank(c.differential_at(p), c.nvars(), seed + p);
  for (int p = c.lo(); p <= c.hi(); ++p) {
    std::size_t din = p < c.hi() ? dranks[p + 1 - c.lo()] : 0;
    std::size_t dout = p > c.lo() ? dranks[p - c.lo()] : 0;
    out[p - c.lo()] =
        c.rank_at(p) - static_cast<int>(din) - static_cast<int>(dout);
    if (out[p - c.lo()] < 0)
      throw DomainError("fraction_field_homology_ranks: degenerate evaluation");
  }
  return out;
}

PresentedModule PresentedModule::pruned() const {
  PresentedModule out;
  out.generators = generators;
  out.generator_degrees = generator_degrees;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < relations.rows(); ++i)
      if (!relations(i, j).is_zero()) zero = false;
    if (!zero) keep.push_back(j);
  }
  out.relations = LMat(relations.rows(), keep.size());
  for (std::size_t i = 0; i < relations.rows(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      out.relations(i, j) = relations(i, keep[j]);
  return out;
}

bool PresentedModule::same_presentation(const PresentedModule& o) const {
  PresentedModule a = pruned();
  PresentedModule b = o.pruned();
  return a.generators == b.generators && a.relations == b.relations &&
         a.generator_degrees == b.generator_degrees;
}

PresentedModule syzygy_presentation(int l, int g, Coeffs ring) {
  if (g <= 0) throw DomainError("syzygy_presentation requires g >= 1");
  if (l < 0 || l > 2 * g)
    throw DomainError("syzygy index out of range [0, 2g]");
  FreeComplex koszul = koszul_complex(g, ring);
  PresentedModule m;
  m.generators = static_cast<int>(binomial(2 * g, l));
  if (l < 2 * g) {
    m.relations = koszul.differential_at(l + 1);
  } else {
    m.relations = lmat_zero(1, 0, 2 * g, ring);
  }
  m.generator_degrees.assign(m.generators, Rat(l - g));
  return m;
}

}  // namespace hfc
