#include "reference.hpp"

#include <cmath>
#include <numbers>

#include "conesep/lp.hpp"

namespace ref {

double norm(const Vec& v, NormMode mode) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    switch (mode) {
      case NormMode::L1:
        s += a;
        break;
      case NormMode::L2:
        s += a * a;
        break;
      case NormMode::LInf:
        s = std::max(s, a);
        break;
    }
  }
  return mode == NormMode::L2 ? std::sqrt(s) : s;
}

bool in_hull_2d(const Vec& w, const std::vector<Vec>& pts, double tol) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((pts[i] - w).norm() <= tol) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec d = pts[j] - pts[i];
      const double len2 = d.squaredNorm();
      if (len2 > 0.0) {
        const double t = std::clamp((w - pts[i]).dot(d) / len2, 0.0, 1.0);
        if ((pts[i] + t * d - w).norm() <= tol) return true;
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        Eigen::Matrix3d M;
        M << pts[i](0), pts[j](0), pts[k](0), pts[i](1), pts[j](1), pts[k](1), 1, 1, 1;
        if (std::abs(M.determinant()) < 1e-14) continue;
        const Eigen::Vector3d lam = M.fullPivLu().solve(Eigen::Vector3d(w(0), w(1), 1.0));
        if (lam.minCoeff() >= -tol) return true;
      }
    }
  }
  return false;
}

Eigen::MatrixXd unit_cloud(const Eigen::MatrixXd& G, NormMode mode, int count,
                           std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Vec> pts;
  for (Eigen::Index j = 0; j < G.cols(); ++j) pts.push_back(G.col(j) / norm(G.col(j), mode));
  while (static_cast<int>(pts.size()) < count) {
    Vec w(G.cols());
    for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = -std::log(1.0 - uni(rng));
    // Sharper weights reach the edges of the base as well.
    if (uni(rng) < 0.5) w = w.array().pow(4.0);
    const Vec x = G * w;
    const double len = norm(x, mode);
    if (len > 1e-12) pts.push_back(x / len);
  }
  Eigen::MatrixXd out(G.rows(), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) out.col(i) = pts[i];
  return out;
}

double cloud_l1_distance(const Eigen::MatrixXd& P, const Eigen::MatrixXd& Q) {
  // sum lambda_i p_i - sum mu_j q_j - dp + dn = 0, sum lambda = sum mu = 1.
  const Eigen::Index n = P.rows(), p = P.cols(), q = Q.cols();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 2, p + q + 2 * n);
  A.block(0, 0, n, p) = P;
  A.block(0, p, n, q) = -Q;
  A.block(0, p + q, n, n) = -Eigen::MatrixXd::Identity(n, n);
  A.block(0, p + q + n, n, n) = Eigen::MatrixXd::Identity(n, n);
  A.block(n, 0, 1, p).setOnes();
  A.block(n + 1, p, 1, q).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 2);
  b(n) = b(n + 1) = 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(A.cols());
  c.tail(2 * n).setOnes();
  const auto r = conesep::solve_lp(A, b, c);
  if (r.status != conesep::LpStatus::Optimal) return std::nan("");
  return r.objective;
}

double scan_mu_2d(const Eigen::MatrixXd& G, NormMode mode, const Vec& c, int steps) {
  // Half-planes of the cone in angular form: x in cone(G) iff x is a
  // nonnegative combination of two adjacent generators (2D).
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < steps; ++s) {
    const double t = 2.0 * std::numbers::pi * s / steps;
    Vec x(2);
    x << std::cos(t), std::sin(t);
    bool inside = false;
    for (Eigen::Index i = 0; i < G.cols() && !inside; ++i) {
      const Vec gi = G.col(i).normalized();
      if ((gi - x).norm() < 1e-12) inside = true;
      for (Eigen::Index j = 0; j < G.cols() && !inside; ++j) {
        if (i == j) continue;
        Eigen::Matrix2d M;
        M << G(0, i), G(0, j), G(1, i), G(1, j);
        if (std::abs(M.determinant()) < 1e-14) continue;
        const Eigen::Vector2d lam = M.inverse() * x;
        if (lam.minCoeff() >= -1e-14) inside = true;
      }
    }
    if (inside) best = std::min(best, c.dot(x / norm(x, mode)));
  }
  for (Eigen::Index j = 0; j < G.cols(); ++j) {
    best = std::min(best, c.dot(G.col(j) / norm(G.col(j), mode)));
  }
  return best;
}

std::vector<Vec> scan_linear_separators_2d(const Eigen::MatrixXd& A,
                                           const Eigen::MatrixXd& K, int steps,
                                           double tol) {
  std::vector<Vec> out;
  for (int s = 0; s < steps; ++s) {
    const double t = 2.0 * std::numbers::pi * s / steps;
    Vec y(2);
    y << std::cos(t), std::sin(t);
    bool ok = true;
    for (Eigen::Index j = 0; j < A.cols() && ok; ++j) ok = y.dot(A.col(j).normalized()) >= -tol;
    for (Eigen::Index j = 0; j < K.cols() && ok; ++j) ok = y.dot(-K.col(j).normalized()) < -tol;
    if (ok) out.push_back(y);
  }
  return out;
}

Vec random_unit(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = g(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Eigen::MatrixXd pointed_generators(const Vec& center, int count, double spread,
                                   std::mt19937_64& rng) {
  Eigen::MatrixXd G(center.size(), count);
  for (int j = 0; j < count; ++j) {
    Vec g;
    do {
      g = center + spread * random_unit(static_cast<int>(center.size()), rng);
    } while (g.dot(center) < 0.2 * g.norm());
    G.col(j) = g;
  }
  return G;
}

namespace {

conesep::ConeUnion build(const std::vector<Eigen::MatrixXd>& raw, const conesep::NormSpec& ns) {
  std::vector<conesep::FinGenCone> pieces;
  for (const auto& G : raw) pieces.push_back(conesep::validate_cone(G, ns));
  return conesep::ConeUnion(std::move(pieces));
}

}  // namespace

conesep::ConeUnion RandomScene::k() const { return build(k_pieces, ns); }
conesep::ConeUnion RandomScene::a() const { return build(a_pieces, ns); }

RandomScene random_scene(int dim, NormMode mode, bool two_pieces, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, dim == 2 ? 2 : 4);
  std::uniform_real_distribution<double> spread(0.2, 1.2);
  RandomScene s;
  s.ns = conesep::NormSpec(mode, dim);
  s.k_pieces.push_back(pointed_generators(random_unit(dim, rng), count(rng), spread(rng), rng));
  const int pieces = two_pieces ? 2 : 1;
  for (int p = 0; p < pieces; ++p) {
    s.a_pieces.push_back(
        pointed_generators(random_unit(dim, rng), count(rng), spread(rng), rng));
  }
  return s;
}

}  // namespace ref
