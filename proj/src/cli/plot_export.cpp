#include "conesep/cli/plot_export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "conesep/base_oracle.hpp"
#include "conesep/bp_cone.hpp"
#include "conesep/error.hpp"

namespace conesep::cli {

namespace {

using Pt = Eigen::Vector2d;

double cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Andrew's monotone chain; returns a closed polygon (first point repeated).
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k);
  return h;
}

void push(std::vector<PlotRow>& rows, const char* label, const Eigen::Ref<const Vec>& p) {
  rows.push_back({label, p(0), p(1)});
}

void rays(std::vector<PlotRow>& rows, const char* label, const ConeUnion& C) {
  const Eigen::MatrixXd G = C.all_normalized_generators();
  for (Eigen::Index j = 0; j < G.cols(); ++j) {
    push(rows, label, Vec::Zero(2));
    push(rows, label, G.col(j));
  }
}

void hull(std::vector<PlotRow>& rows, const char* label, const PointCloud& base,
          bool add_origin) {
  std::vector<Pt> pts;
  for (Eigen::Index j = 0; j < base.cols(); ++j) pts.emplace_back(base(0, j), base(1, j));
  if (add_origin) pts.emplace_back(0.0, 0.0);
  for (const auto& p : convex_hull(std::move(pts))) rows.push_back({label, p.x(), p.y()});
}

Vec unit_at(double theta, NormMode mode) {
  Vec x(2);
  x << std::cos(theta), std::sin(theta);
  return x / raw_norm(x, mode);
}

}  // namespace

std::vector<PlotRow> plot_rows(const ConeUnion& K, const ConeUnion& A,
                               const std::optional<AugPair>& cert, int samples,
                               std::uint64_t seed, const Tolerances&) {
  if (A.dim() != 2) throw UnsupportedScale("plot export needs a 2D scene");
  const NormSpec ns = A.norm();
  const ConeUnion neg_k = K.negated();
  std::vector<PlotRow> rows;
  rays(rows, "A_ray", A);
  rays(rows, "K_ray", neg_k);

  const int n = std::clamp(samples, 1, 2000);
  const PointCloud ba = sample_base(A, n, seed);
  const PointCloud bk = sample_base(neg_k, n, seed + 1);
  for (Eigen::Index j = 0; j < ba.cols(); ++j) push(rows, "A_base", ba.col(j));
  for (Eigen::Index j = 0; j < bk.cols(); ++j) push(rows, "K_base", bk.col(j));
  hull(rows, "A_hull", ba, true);
  hull(rows, "K_hull", bk, false);

  if (!cert) return rows;
  const auto phi = [&](double t) {
    return phi_eval(ns, cert->xstar, cert->alpha, unit_at(t, ns.mode()));
  };
  const int steps = 512;
  const double h = 2.0 * std::numbers::pi / steps;
  for (int i = 0; i < steps; ++i) {
    double lo = i * h, hi = (i + 1) * h;
    double flo = phi(lo), fhi = phi(hi);
    if (flo == 0.0) {
      push(rows, "BP_boundary", Vec::Zero(2));
      push(rows, "BP_boundary", unit_at(lo, ns.mode()));
      continue;
    }
    if ((flo < 0.0) == (fhi < 0.0) || fhi == 0.0) continue;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (lo + hi);
      const double fm = phi(mid);
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    push(rows, "BP_boundary", Vec::Zero(2));
    push(rows, "BP_boundary", unit_at(0.5 * (lo + hi), ns.mode()));
  }

  // {<x*, .> = -alpha} ∩ unit ball.
  const double len2 = cert->xstar.squaredNorm();
  if (len2 > 0.0) {
    const Vec x0 = -cert->alpha * cert->xstar / len2;
    Vec d(2);
    d << -cert->xstar(1), cert->xstar(0);
    d /= std::sqrt(len2);
    const auto f = [&](double t) { return raw_norm(x0 + t * d, ns.mode()); };
    double a = -4.0, b = 4.0;
    for (int k = 0; k < 200; ++k) {
      const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
      if (f(m1) < f(m2)) {
        b = m2;
      } else {
        a = m1;
      }
    }
    const double tmin = 0.5 * (a + b);
    if (f(tmin) <= 1.0) {
      const auto edge = [&](double dir) {
        double in = tmin, out = tmin + dir * 4.0;
        for (int k = 0; k < 100; ++k) {
          const double mid = 0.5 * (in + out);
          (f(mid) <= 1.0 ? in : out) = mid;
        }
        return in;
      };
      push(rows, "hyperplane", x0 + edge(-1.0) * d);
      push(rows, "hyperplane", x0 + edge(1.0) * d);
    }
  }
  return rows;
}

void write_plot_csv(const std::vector<PlotRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write plot file '" + path + "'");
  out << "label,x,y\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g\n", r.label.c_str(), r.x, r.y);
    out << buf;
  }
}

}  // namespace conesep::cli
