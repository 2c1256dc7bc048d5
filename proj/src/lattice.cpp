#include "frobenius/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frobenius/error.hpp"

namespace frob {

std::string_view to_string(RadiusCertificate c) {
  switch (c) {
    case RadiusCertificate::HalfGenerator: return "HalfGenerator";
    case RadiusCertificate::GramSchmidtBox: return "GramSchmidtBox";
    case RadiusCertificate::MinimaChain: return "MinimaChain";
  }
  return "?";
}

mpz_class dot(const IntVector& x, const IntVector& y) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

namespace {

using RatVector = std::vector<mpq_class>;

IntMatrix gram_of(const IntMatrix& basis) {
  const std::size_t n = basis.size();
  IntMatrix g(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      g[i][j] = dot(basis[i], basis[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

// Bareiss fraction-free elimination; exact for integer matrices.
mpz_class determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct GramSchmidt {
  std::vector<RatVector> mu;
  RatVector norms;
};

GramSchmidt gram_schmidt(const IntMatrix& basis) {
  const std::size_t n = basis.size();
  const std::size_t dim = n ? basis[0].size() : 0;
  GramSchmidt gs;
  gs.mu.assign(n, RatVector(n));
  gs.norms.assign(n, 0);
  std::vector<RatVector> star(n, RatVector(dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < dim; ++c) star[i][c] = basis[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class num = 0;
      for (std::size_t c = 0; c < dim; ++c) num += basis[i][c] * star[j][c];
      gs.mu[i][j] = num / gs.norms[j];
      for (std::size_t c = 0; c < dim; ++c) star[i][c] -= gs.mu[i][j] * star[j][c];
    }
    gs.mu[i][i] = 1;
    for (std::size_t c = 0; c < dim; ++c) gs.norms[i] += star[i][c] * star[i][c];
  }
  return gs;
}

mpz_class round_nearest(const mpq_class& q) {
  // floor(q + 1/2)
  mpz_class num = 2 * q.get_num() + q.get_den();
  mpz_class den = 2 * q.get_den();
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

KernelLattice make_lattice(const FrobeniusInstance& inst, IntMatrix basis) {
  KernelLattice lattice{inst, std::move(basis), {}, 0};
  lattice.gram = gram_of(lattice.basis);
  lattice.det_sq = determinant(lattice.gram);
  return lattice;
}

}  // namespace

std::vector<mpq_class> gram_schmidt_norms(const IntMatrix& basis) { return gram_schmidt(basis).norms; }

std::size_t rank_of(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  std::vector<RatVector> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

KernelLattice kernel_basis(const FrobeniusInstance& inst) {
  const std::size_t n = inst.size();
  // Columns of u are the working unimodular transform; row i of u holds
  // coordinate i of every column.
  IntMatrix u(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  IntVector a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<long>(inst[i]);

  for (std::size_t j = 1; j < n; ++j) {
    if (a[j] == 0) continue;
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a[0].get_mpz_t(), a[j].get_mpz_t());
    const mpz_class p = a[j] / g;
    const mpz_class q = a[0] / g;
    for (std::size_t r = 0; r < n; ++r) {
      const mpz_class c0 = u[r][0];
      const mpz_class cj = u[r][j];
      u[r][0] = x * c0 + y * cj;
      u[r][j] = q * cj - p * c0;
    }
    a[0] = g;
    a[j] = 0;
  }
  if (abs(a[0]) != 1) throw Error(ErrorKind::InternalRankError, "tuple is not primitive");

  IntMatrix basis(n - 1, IntVector(n));
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) basis[j - 1][r] = u[r][j];
  }
  KernelLattice lattice = make_lattice(inst, std::move(basis));
  for (const auto& row : lattice.basis) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < n; ++i) s += row[i] * inst[i];
    if (s != 0) throw Error(ErrorKind::InternalRankError, "basis row outside the kernel");
  }
  if (lattice.det_sq != inst.norm_sq()) {
    throw Error(ErrorKind::InternalRankError, "kernel determinant mismatch for " + inst.to_string());
  }
  return lattice;
}

KernelLattice reduce_basis(const KernelLattice& lattice, const mpq_class& delta) {
  if (delta <= mpq_class(1, 4) || delta > 1) throw Error(ErrorKind::ConfigError, "LLL delta outside (1/4, 1]");
  IntMatrix b = lattice.basis;
  const std::size_t n = b.size();
  if (n <= 1) return make_lattice(lattice.inst, std::move(b));

  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      const mpz_class q = round_nearest(gs.mu[k][jj]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[jj][c];
      for (std::size_t l = 0; l < jj; ++l) gs.mu[k][l] -= q * gs.mu[jj][l];
      gs.mu[k][jj] -= q;
    }
    const mpq_class m = gs.mu[k][k - 1];
    if (gs.norms[k] >= (delta - m * m) * gs.norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  KernelLattice reduced = make_lattice(lattice.inst, std::move(b));
  if (reduced.det_sq != lattice.det_sq) throw Error(ErrorKind::InternalRankError, "LLL changed the determinant");
  return reduced;
}

namespace {

class SphereEnumerator {
 public:
  SphereEnumerator(const IntMatrix& basis, std::uint64_t max_nodes, std::uint64_t& nodes)
      : basis_(basis), n_(basis.size()), max_nodes_(max_nodes), nodes_(nodes) {
    const GramSchmidt gs = gram_schmidt(basis);
    mu_.assign(n_, std::vector<double>(n_));
    norms_.assign(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      norms_[i] = gs.norms[i].get_d();
      for (std::size_t j = 0; j < n_; ++j) mu_[i][j] = gs.mu[i][j].get_d();
    }
    x_.assign(n_, 0);
  }

  /// All nonzero lattice vectors with squared norm <= bound, one per +/- pair.
  std::vector<std::pair<mpz_class, IntVector>> collect(const mpz_class& bound) {
    bound_ = bound;
    radius_sq_ = bound.get_d() * (1.0 + 1e-9) + 1e-6;
    found_.clear();
    descend(n_ - 1, 0.0);
    return std::move(found_);
  }

 private:
  void descend(std::size_t level, double partial) {
    double center = 0.0;
    for (std::size_t j = level + 1; j < n_; ++j) center -= static_cast<double>(x_[j]) * mu_[j][level];
    const double slack = radius_sq_ - partial;
    if (slack < 0) return;
    const double reach = std::sqrt(slack / norms_[level]);
    const auto lo = static_cast<long>(std::ceil(center - reach));
    const auto hi = static_cast<long>(std::floor(center + reach));
    for (long xi = lo; xi <= hi; ++xi) {
      if (++nodes_ > max_nodes_) {
        throw Error(ErrorKind::EnumerationBudgetExceeded,
                    "sphere enumeration exceeded " + std::to_string(max_nodes_) + " nodes");
      }
      x_[level] = xi;
      const double d = static_cast<double>(xi) - center;
      const double next = partial + d * d * norms_[level];
      if (next > radius_sq_) continue;
      if (level == 0) {
        record();
      } else {
        descend(level - 1, next);
      }
    }
    x_[level] = 0;
  }

  void record() {
    std::size_t top = n_;
    for (std::size_t i = n_; i-- > 0;) {
      if (x_[i] != 0) {
        top = i;
        break;
      }
    }
    if (top == n_ || x_[top] < 0) return;  // zero vector, or the negative of a kept one
    IntVector v(basis_[0].size(), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x_[i] == 0) continue;
      const mpz_class c = x_[i];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * basis_[i][k];
    }
    mpz_class norm = dot(v, v);
    if (norm <= bound_) found_.emplace_back(std::move(norm), std::move(v));
  }

  const IntMatrix& basis_;
  std::size_t n_;
  std::uint64_t max_nodes_;
  std::uint64_t& nodes_;
  std::vector<std::vector<double>> mu_;
  std::vector<double> norms_;
  std::vector<long> x_;
  mpz_class bound_;
  double radius_sq_ = 0.0;
  std::vector<std::pair<mpz_class, IntVector>> found_;
};

}  // namespace

SuccessiveMinima successive_minima(const KernelLattice& reduced, EnumerationLimits limits) {
  const std::size_t n = reduced.rank();
  SuccessiveMinima sm;
  mpz_class max_row = 0;
  for (const auto& row : reduced.basis) max_row = std::max(max_row, dot(row, row));

  SphereEnumerator enumerator(reduced.basis, limits.max_nodes, sm.nodes);
  mpz_class bound = dot(reduced.basis[0], reduced.basis[0]);
  for (;;) {
    auto candidates = enumerator.collect(bound);
    std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return std::lexicographical_compare(x.second.begin(), x.second.end(), y.second.begin(), y.second.end());
    });
    sm.lambda_sq.clear();
    sm.witnesses.clear();
    for (auto& [norm, v] : candidates) {
      sm.witnesses.push_back(v);
      if (rank_of(sm.witnesses) == sm.witnesses.size()) {
        sm.lambda_sq.push_back(norm);
        if (sm.lambda_sq.size() == n) return sm;
      } else {
        sm.witnesses.pop_back();
      }
    }
    if (bound >= max_row) {
      throw Error(ErrorKind::InternalRankError, "enumeration found fewer than rank independent vectors");
    }
    bound = std::min(mpz_class(2 * bound), max_row);
  }
}

bool is_well_rounded(const SuccessiveMinima& sm) {
  return std::all_of(sm.lambda_sq.begin(), sm.lambda_sq.end(),
                     [&](const mpz_class& x) { return x == sm.lambda_sq.front(); });
}

CoveringRadiusBounds covering_radius_bounds(const KernelLattice& reduced, const SuccessiveMinima& sm,
                                            mpfr_prec_t prec) {
  const RealInterval two = RealInterval::integer(2, prec);
  const RealInterval lambda_top = RealInterval::integer(sm.lambda_sq.back(), prec).sqrt();
  CoveringRadiusBounds out;
  out.lower = lambda_top / two;
  if (reduced.rank() == 1) {
    out.upper = out.lower;
    out.upper_source = RadiusCertificate::HalfGenerator;
    return out;
  }
  const RealInterval chain =
      RealInterval::integer(static_cast<long>(reduced.rank()), prec) * lambda_top / two;
  mpq_class gs_sum = 0;
  for (const auto& b : gram_schmidt_norms(reduced.basis)) gs_sum += b;
  const RealInterval box = RealInterval::rational(gs_sum, prec).sqrt() / two;
  if (mpfr_less_p(box.hi(), chain.hi())) {
    out.upper = box;
    out.upper_source = RadiusCertificate::GramSchmidtBox;
  } else {
    out.upper = chain;
    out.upper_source = RadiusCertificate::MinimaChain;
  }
  return out;
}

GeometryOfNumbersBounds geometry_of_numbers_bounds(const FrobeniusInstance& inst, const SuccessiveMinima& sm,
                                                   mpfr_prec_t prec) {
  const long rank = static_cast<long>(inst.size()) - 1;
  const auto urank = static_cast<unsigned long>(rank);
  const RealInterval one = RealInterval::integer(1, prec);
  const RealInterval two = RealInterval::integer(2, prec);
  const RealInterval r = RealInterval::integer(rank, prec);
  const RealInterval norm = inst.norm(prec);
  const RealInterval kappa = unit_ball_volume(static_cast<unsigned>(rank), prec);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), urank);

  GeometryOfNumbersBounds g;
  g.lambda_top = RealInterval::integer(sm.lambda_sq.back(), prec).sqrt();
  const RealInterval lambda_first = RealInterval::integer(sm.lambda_sq.front(), prec).sqrt();
  const RealInterval det_root = (norm / kappa).root(urank);

  g.radius_half_top = r * g.lambda_top / two;
  g.radius_ratio = r * g.lambda_top / lambda_first * det_root;
  g.radius_det = r * norm / kappa;
  g.lambda_lower = two * (norm / (kappa * RealInterval::integer(fact, prec))).root(urank);
  g.lambda_upper = two * norm / kappa;
  g.wr_radius_upper = r * det_root;
  g.wr_lambda_upper = (two * norm / kappa).root(urank);
  g.wr_lambda_minkowski = two * det_root;

  g.minima_product = one;
  for (const auto& l : sm.lambda_sq) g.minima_product *= RealInterval::integer(l, prec).sqrt();
  g.minkowski_product_upper = two.pow(rank) * norm / kappa;
  return g;
}

}  // namespace frob
