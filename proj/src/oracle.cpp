#include "conesep/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "conesep/error.hpp"
#include "conesep/kernels.hpp"

namespace conesep {

namespace {

void require_low_dim(int dim) {
  if (dim > 3) throw UnsupportedScale("brute-force oracle is limited to dimension 3");
}

// Directions of the unit circle / sphere in r coordinates.
Eigen::MatrixXd direction_grid(int r, int count) {
  Eigen::MatrixXd out(r, count);
  if (r == 2) {
    for (int i = 0; i < count; ++i) {
      const double t = 2.0 * std::numbers::pi * i / count;
      out.col(i) << std::cos(t), std::sin(t);
    }
  } else {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / count;
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i;
      out.col(i) << rho * std::cos(phi), rho * std::sin(phi), z;
    }
  }
  return out;
}

void piece_grid(const FinGenCone& P, const OracleConfig& cfg, const Tolerances& tol,
                std::vector<Vec>& pts) {
  const NormMode mode = P.norm().mode();
  const Eigen::MatrixXd& G = P.normalized_generators();
  for (Eigen::Index j = 0; j < G.cols(); ++j) pts.push_back(G.col(j));

  // Generator-pair chords, projected back onto the sphere.
  const int chord = 256;
  for (Eigen::Index i = 0; i < G.cols(); ++i) {
    for (Eigen::Index k = i + 1; k < G.cols(); ++k) {
      for (int s = 1; s < chord; ++s) {
        const double t = static_cast<double>(s) / chord;
        const Vec x = (1.0 - t) * G.col(i) + t * G.col(k);
        const double len = raw_norm(x, mode);
        if (len > 1e-12) pts.push_back(x / len);
      }
    }
  }

  // Unit-ball vertices lying in the piece (kinks of the polyhedral spheres).
  const int n = P.dim();
  if (mode == NormMode::L1) {
    for (int i = 0; i < n; ++i) {
      for (double sgn : {1.0, -1.0}) {
        Vec e = Vec::Zero(n);
        e(i) = sgn;
        if (cone_contains(P, e, tol)) pts.push_back(e);
      }
    }
  } else if (mode == NormMode::LInf) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v(i) = (mask & (1u << i)) ? -1.0 : 1.0;
      if (cone_contains(P, v, tol)) pts.push_back(v);
    }
  }

  // Dense direction grid in the coordinates of span(P).
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(G, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * sv(0)) ++r;
  }
  if (r < 2) return;  // a ray or a line: generators already cover the base
  const Eigen::MatrixXd U = svd.matrixU().leftCols(r);
  const Eigen::MatrixXd reduced = U.transpose() * G;
  const ConeFacets f = facets_of_generators(reduced, tol);
  const int count = r == 2 ? cfg.grid_count : std::min(cfg.grid_count, 1000000);
  const Eigen::MatrixXd dirs = direction_grid(r, count);
  for (int i = 0; i < count; ++i) {
    bool inside = true;
    for (const auto& nrm : f.inward_normals) {
      if (nrm.dot(dirs.col(i)) < -1e-12) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    const Vec x = U * dirs.col(i);
    pts.push_back(x / raw_norm(x, mode));
  }
}

}  // namespace

PointCloud oracle_base_grid(const ConeUnion& K, const OracleConfig& cfg,
                            const Tolerances& tol) {
  require_low_dim(K.dim());
  if (cfg.grid_count < 1000) throw InputError("oracle grid_count must be >= 1000");
  std::vector<Vec> pts;
  for (const auto& P : K.pieces()) piece_grid(P, cfg, tol, pts);
  PointCloud out(K.dim(), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) out.col(i) = pts[i];
  return out;
}

double oracle_mu(const ConeUnion& K, const Vec& c, const OracleConfig& cfg,
                 const Tolerances& tol) {
  check_dim(c, K.norm(), "oracle_mu");
  return kernels::dot_extrema_parallel(oracle_base_grid(K, cfg, tol), c).min;
}

bool oracle_separation(const ConeUnion& K, const ConeUnion& A, const AugPair& cert,
                       const OracleConfig& cfg, const Tolerances& tol) {
  require_low_dim(A.dim());
  const NormMode mode = A.norm().mode();
  const PointCloud ga = oracle_base_grid(A, cfg, tol);
  const PointCloud gk = -oracle_base_grid(K, cfg, tol);
  const auto sa = kernels::margin_scan_parallel(ga, cert.xstar, cert.alpha, mode,
                                                kernels::Side::Outside, tol.eps_sep);
  const auto sk = kernels::margin_scan_parallel(gk, cert.xstar, cert.alpha, mode,
                                                kernels::Side::Inside, tol.eps_sep);
  return sa.phi_failures == 0 && sk.phi_failures == 0;
}

bool oracle_cor_test(const ConeUnion& K, const AugPair& p, const OracleConfig& cfg,
                     const Tolerances& tol) {
  require_low_dim(K.dim());
  const int n = K.dim();
  const PointCloud grid = oracle_base_grid(K, cfg, tol);
  const Eigen::RowVectorXd base = p.xstar.transpose() * grid;

  std::vector<Eigen::VectorXd> dirs;  // (y*, beta) stacked
  for (int i = 0; i <= n; ++i) {
    for (double s : {1.0, -1.0}) {
      Eigen::VectorXd d = Eigen::VectorXd::Zero(n + 1);
      d(i) = s;
      dirs.push_back(d);
    }
  }
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss;
  for (int k = 0; k < cfg.cor_directions; ++k) {
    Eigen::VectorXd d(n + 1);
    for (int i = 0; i <= n; ++i) d(i) = gauss(rng);
    dirs.push_back(d.normalized());
  }

  for (const auto& d : dirs) {
    const Vec y = d.head(n);
    const double beta = d(n);
    const Eigen::RowVectorXd slope = y.transpose() * grid;
    bool found = false;
    for (int k = 1; k <= 20 && !found; ++k) {
      const double eps = std::ldexp(1.0, -k);
      const double a = p.alpha + eps * beta;
      if (a < 0.0) continue;
      const double mu = (base + eps * slope).minCoeff();
      found = mu >= a - tol.eps_mem;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace conesep
