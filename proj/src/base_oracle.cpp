#include "conesep/base_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "conesep/error.hpp"
#include "conesep/lp.hpp"
#include "conesep/nnls.hpp"

namespace conesep {

namespace {

void require_cap(const FinGenCone& P) {
  if (P.count() > kExactGeneratorCap) {
    throw UnsupportedScale("piece has " + std::to_string(P.count()) +
                           " generators; the exact base oracle handles at most " +
                           std::to_string(kExactGeneratorCap));
  }
}

BaseQueryResult make_result(const Vec& c, Vec x) {
  BaseQueryResult r;
  r.value = c.dot(x);
  r.argpoint = std::move(x);
  r.exact = true;
  return r;
}

// ---- l2 -----------------------------------------------------------------

bool in_piece(const Eigen::MatrixXd& G, const Vec& x, double eps) {
  return nnls(G, x).residual <= eps * std::max(1.0, x.norm());
}

BaseQueryResult mu_piece_l2(const FinGenCone& P, const Vec& c, const Tolerances& tol) {
  const Eigen::MatrixXd& G = P.normalized_generators();
  const int m = P.count();
  const int n = P.dim();
  BaseQueryResult best;
  best.value = std::numeric_limits<double>::infinity();
  auto offer = [&](const Vec& x) {
    const double v = c.dot(x);
    if (v < best.value) best = make_result(c, x);
  };
  for (int j = 0; j < m; ++j) offer(G.col(j));

  const unsigned limit = 1u << m;
  for (unsigned mask = 1; mask < limit; ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > n) continue;
    Eigen::MatrixXd F(n, k);
    int at = 0;
    for (int j = 0; j < m; ++j) {
      if (mask & (1u << j)) F.col(at++) = G.col(j);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(F);
    qr.setThreshold(1e-10);
    if (qr.rank() < k) continue;
    const Vec p = F * qr.solve(c);
    Vec x;
    if (p.norm() <= 1e-14 * std::max(1.0, c.norm())) {
      x = F.rowwise().sum();  // <c, .> vanishes on the whole face
      if (x.norm() < 1e-14) continue;
      x.normalize();
    } else {
      x = -p / p.norm();
    }
    if (in_piece(G, x, tol.eps_mem)) offer(x);
  }
  return best;
}

BaseQueryResult sigma_piece_l2(const FinGenCone& P, const Vec& c, const Tolerances& tol) {
  const Vec proj = project_onto_cone(c, P.normalized_generators(), tol);
  const double len = proj.norm();
  if (len > 1e-12 * std::max(1.0, c.norm())) return make_result(c, proj / len);
  BaseQueryResult r = mu_piece_l2(P, Vec(-c), tol);
  r.value = c.dot(r.argpoint);
  return r;
}

// ---- polyhedral norms ---------------------------------------------------

// min <c, G lambda> over lambda >= 0 subject to extra rows on x = G lambda.
// Rows are given as (M x = rhs) with slack columns appended by the caller.
std::optional<Vec> lp_argmin(const Eigen::MatrixXd& G, const Eigen::MatrixXd& M,
                             const Eigen::VectorXd& rhs, int slacks,
                             const Vec& c) {
  const Eigen::Index m = G.cols();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M.rows(), m + slacks);
  A.leftCols(m) = M.leftCols(G.rows()) * G;
  A.rightCols(slacks) = M.rightCols(slacks);
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(m + slacks);
  cost.head(m) = G.transpose() * c;
  const LpResult r = solve_lp(A, rhs, cost);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  if (r.status != LpStatus::Optimal) {
    throw NumericalFailure("base LP failed to reach optimality");
  }
  return Vec(G * r.x.head(m));
}

BaseQueryResult mu_piece_l1(const FinGenCone& P, const Vec& c) {
  const Eigen::MatrixXd& G = P.normalized_generators();
  const int n = P.dim();
  if (n > 12) throw UnsupportedScale("l1 base oracle is limited to dimension 12");
  BaseQueryResult best;
  best.value = std::numeric_limits<double>::infinity();
  // Orthant s: s_i x_i - t_i = 0 (t >= 0), sum s_i x_i = 1.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Eigen::VectorXd s(n);
    for (int i = 0; i < n; ++i) s(i) = (mask & (1u << i)) ? -1.0 : 1.0;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 1, n + n);
    for (int i = 0; i < n; ++i) {
      M(i, i) = s(i);
      M(i, n + i) = -1.0;
    }
    M.block(n, 0, 1, n) = s.transpose();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs(n) = 1.0;
    const auto x = lp_argmin(G, M, rhs, n, c);
    if (x && c.dot(*x) < best.value) best = make_result(c, *x);
  }
  return best;
}

BaseQueryResult mu_piece_linf(const FinGenCone& P, const Vec& c) {
  const Eigen::MatrixXd& G = P.normalized_generators();
  const int n = P.dim();
  BaseQueryResult best;
  best.value = std::numeric_limits<double>::infinity();
  // Face sigma x_i = 1 of the cube: x_j + u_j = 1, -x_j + v_j = 1 (j != i).
  for (int i = 0; i < n; ++i) {
    for (double sigma : {1.0, -1.0}) {
      const int rows = 1 + 2 * (n - 1);
      const int slacks = 2 * (n - 1);
      Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, n + slacks);
      Eigen::VectorXd rhs = Eigen::VectorXd::Ones(rows);
      M(0, i) = sigma;
      int row = 1;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        M(row, j) = 1.0;
        M(row, n + row - 1) = 1.0;
        ++row;
        M(row, j) = -1.0;
        M(row, n + row - 1) = 1.0;
        ++row;
      }
      const auto x = lp_argmin(G, M, rhs, slacks, c);
      if (x && c.dot(*x) < best.value) best = make_result(c, *x);
    }
  }
  return best;
}

BaseQueryResult mu_piece(const FinGenCone& P, const Vec& c, const Tolerances& tol) {
  switch (P.norm().mode()) {
    case NormMode::L2:
      require_cap(P);
      return mu_piece_l2(P, c, tol);
    case NormMode::L1:
      return mu_piece_l1(P, c);
    case NormMode::LInf:
      return mu_piece_linf(P, c);
  }
  return {};
}

BaseQueryResult sigma_piece(const FinGenCone& P, const Vec& c, const Tolerances& tol) {
  if (P.norm().mode() == NormMode::L2) return sigma_piece_l2(P, c, tol);
  BaseQueryResult r = mu_piece(P, Vec(-c), tol);
  r.value = c.dot(r.argpoint);
  return r;
}

}  // namespace

namespace {

// Both extrema are positively homogeneous in c; the piecewise solvers work
// on a unit direction so tiny queries keep full relative accuracy.
Vec unit_direction(const Vec& c) {
  const double n = c.norm();
  return n > 0.0 ? Vec(c / n) : c;
}

}  // namespace

BaseQueryResult mu_base(const ConeUnion& K, const Vec& c, const Tolerances& tol) {
  check_dim(c, K.norm(), "mu_base");
  const Vec u = unit_direction(c);
  BaseQueryResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& P : K.pieces()) {
    BaseQueryResult r = mu_piece(P, u, tol);
    if (r.value < best.value) best = std::move(r);
  }
  best.value = c.dot(best.argpoint);
  return best;
}

BaseQueryResult sigma_base(const ConeUnion& K, const Vec& c, const Tolerances& tol) {
  check_dim(c, K.norm(), "sigma_base");
  const Vec u = unit_direction(c);
  BaseQueryResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (const auto& P : K.pieces()) {
    BaseQueryResult r = sigma_piece(P, u, tol);
    if (r.value > best.value) best = std::move(r);
  }
  best.value = c.dot(best.argpoint);
  return best;
}

bool zero_in_cl_S(const ConeUnion& K, const Tolerances&) {
  const Eigen::MatrixXd G = K.all_normalized_generators();
  Eigen::MatrixXd A(G.rows() + 1, G.cols());
  A.topRows(G.rows()) = G;
  A.bottomRows(1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(G.rows() + 1);
  b(G.rows()) = 1.0;
  const LpResult r = find_feasible(A, b);
  if (r.status == LpStatus::IterationLimit) {
    throw NumericalFailure("zero_in_cl_S: LP hit the iteration limit");
  }
  return r.status == LpStatus::Optimal;
}

namespace {

// Dirichlet(1,...,1) combination of the columns, rescaled to unit norm.
// Falls back to the first column when the combination vanishes.
Vec dirichlet_point(const Eigen::MatrixXd& G, NormMode mode, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Eigen::VectorXd w(G.cols());
    for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = expo(rng);
    const Vec x = G * (w / w.sum());
    const double len = raw_norm(x, mode);
    if (len > 1e-12) return x / len;
  }
  return G.col(0) / raw_norm(G.col(0), mode);
}

// As dirichlet_point, restricted to a random subset of the columns so that
// faces of the base (edges in 3D) are hit with positive probability.
Vec face_dirichlet_point(const Eigen::MatrixXd& G, NormMode mode, std::mt19937_64& rng) {
  const auto m = static_cast<int>(G.cols());
  if (m <= 2) return dirichlet_point(G, mode, rng);
  std::uniform_int_distribution<int> size(2, m);
  std::vector<int> idx(m);
  for (int j = 0; j < m; ++j) idx[j] = j;
  std::shuffle(idx.begin(), idx.end(), rng);
  const int k = size(rng);
  Eigen::MatrixXd F(G.rows(), k);
  for (int j = 0; j < k; ++j) F.col(j) = G.col(idx[j]);
  return dirichlet_point(F, mode, rng);
}

}  // namespace

PointCloud sample_base(const ConeUnion& K, int count, std::uint64_t seed) {
  if (count < 1) throw InputError("sample_base: count must be positive");
  const NormMode mode = K.norm().mode();
  const Eigen::MatrixXd gens = K.all_normalized_generators();
  PointCloud out(K.dim(), count);
  int at = 0;
  for (; at < count && at < gens.cols(); ++at) out.col(at) = gens.col(at);
  std::mt19937_64 rng(seed);
  const auto& pieces = K.pieces();
  for (std::size_t k = 0; at < count; ++at, ++k) {
    const auto& P = pieces[k % pieces.size()];
    out.col(at) = face_dirichlet_point(P.normalized_generators(), mode, rng);
  }
  return out;
}

PointCloud boundary_base_sample(const ConeUnion& A, int count, std::uint64_t seed,
                                const Tolerances& tol) {
  if (A.dim() > 3) {
    throw UnsupportedScale("boundary sampling is limited to dimension 3");
  }
  if (count < 1) throw InputError("boundary_base_sample: count must be positive");
  const NormMode mode = A.norm().mode();
  const auto& pieces = A.pieces();

  std::vector<ConeFacets> facets;
  facets.reserve(pieces.size());
  for (const auto& P : pieces) facets.push_back(cone_facets(P, tol));

  // Strictly interior to piece q (by its halfspace description).
  auto interior_to = [&](std::size_t q, const Vec& x) {
    const ConeFacets& f = facets[q];
    if (!f.full_dimensional) return false;
    for (const auto& nrm : f.inward_normals) {
      if (nrm.dot(x) <= tol.eps_mem) return false;
    }
    return true;
  };

  struct Candidate {
    Vec x;
    std::size_t piece;
    std::optional<Vec> inward;  // facet normal, when x lies on a facet
  };
  std::vector<Candidate> cands;
  std::vector<Candidate> generated;
  std::mt19937_64 rng(seed);

  std::size_t facet_total = 0;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    facet_total += facets[p].full_dimensional ? facets[p].inward_normals.size() : 1;
  }
  const int per_facet =
      std::max(1, static_cast<int>((count + facet_total - 1) / std::max<std::size_t>(1, facet_total)));

  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const Eigen::MatrixXd& G = pieces[p].normalized_generators();
    if (!facets[p].full_dimensional) {
      for (Eigen::Index j = 0; j < G.cols(); ++j) cands.push_back({G.col(j), p, {}});
      for (int s = 0; s < per_facet; ++s) {
        generated.push_back({dirichlet_point(G, mode, rng), p, {}});
      }
      continue;
    }
    for (std::size_t f = 0; f < facets[p].inward_normals.size(); ++f) {
      const auto& idx = facets[p].facet_generators[f];
      const Vec& nrm = facets[p].inward_normals[f];
      Eigen::MatrixXd F(G.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t k = 0; k < idx.size(); ++k) F.col(k) = G.col(idx[k]);
      for (Eigen::Index j = 0; j < F.cols(); ++j) cands.push_back({F.col(j), p, nrm});
      if (F.cols() > 1) {
        for (int s = 0; s < per_facet; ++s) {
          generated.push_back({dirichlet_point(F, mode, rng), p, nrm});
        }
      }
    }
  }
  cands.insert(cands.end(), generated.begin(), generated.end());

  std::vector<Vec> kept;
  for (const auto& c : cands) {
    bool drop = false;
    for (std::size_t q = 0; q < pieces.size() && !drop; ++q) {
      if (q != c.piece && interior_to(q, c.x)) drop = true;
    }
    if (!drop && c.inward) {
      // Covered from the outside by another piece: not a boundary point.
      const Vec probe = c.x - 1e-6 * *c.inward;
      drop = cone_contains(A, probe, tol);
    }
    if (drop) continue;
    bool dup = false;
    for (const auto& k : kept) {
      if ((k - c.x).norm() < 1e-12) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(c.x);
  }

  if (kept.empty()) return PointCloud(A.dim(), 0);
  PointCloud out(A.dim(), count);
  for (int i = 0; i < count; ++i) out.col(i) = kept[i % kept.size()];
  return out;
}

}  // namespace conesep
