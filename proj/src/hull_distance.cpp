#include "conesep/hull_distance.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "conesep/error.hpp"
#include "conesep/nnls.hpp"

namespace conesep {

namespace {

Vec query(const ConvexBody& body, const Vec& d) {
  const double n = d.norm();
  Vec s = body.support(n > 0.0 ? Vec(d / n) : d);
  if (body.add_origin && d.dot(s) < 0.0) return Vec::Zero(d.size());
  return s;
}

struct Atom {
  Vec q;
  Vec p;
};

// Min-norm point of conv{q_i - p_i}: NNLS on [S; 1^T] u ≈ e_{n+1}, then
// w = u / sum(u). The weights do not depend on a uniform rescaling of S, so
// S is brought to unit size; near contact the NNLS gradients would otherwise
// fall below its tolerance.
Eigen::VectorXd min_norm_weights(const std::vector<Atom>& atoms, int dim) {
  const auto k = static_cast<Eigen::Index>(atoms.size());
  Eigen::MatrixXd E(dim + 1, k);
  double scale = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    E.col(i).head(dim) = atoms[i].q - atoms[i].p;
    scale = std::max(scale, E.col(i).head(dim).norm());
    E(dim, i) = 1.0;
  }
  if (scale > 0.0) E.topRows(dim) /= scale;
  Eigen::VectorXd f = Eigen::VectorXd::Zero(dim + 1);
  f(dim) = 1.0;
  const NnlsResult r = nnls(E, f);
  const double total = r.x.sum();
  if (!(total > 0.0)) throw NumericalFailure("min-norm subproblem degenerated");
  return r.x / total;
}

}  // namespace

BodySeparation separate_convex_bodies(const ConvexBody& P, const ConvexBody& Q,
                                      int dim, const Tolerances& tol) {
  const Vec start = Vec::Ones(dim) / std::sqrt(static_cast<double>(dim));
  std::vector<Atom> atoms{{query(Q, -start), query(P, start)}};

  BodySeparation out;
  Eigen::VectorXd w;
  Vec z;
  std::optional<Atom> last_added;
  bool done = false;
  int it = 0;
  for (; it < tol.max_iter; ++it) {
    w = min_norm_weights(atoms, dim);
    std::vector<Atom> kept;
    Eigen::VectorXd wk(w.size());
    Eigen::Index nk = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (w(i) > 0.0) {
        kept.push_back(atoms[i]);
        wk(nk++) = w(i);
      }
    }
    atoms.swap(kept);
    w = wk.head(nk);
    z = Vec::Zero(dim);
    for (std::size_t i = 0; i < atoms.size(); ++i) z += w(i) * (atoms[i].q - atoms[i].p);

    if (z.norm() <= 1e-3 * tol.eps_sep) {
      done = true;
      break;
    }
    Atom next{query(Q, -z), query(P, z)};
    out.gap = z.squaredNorm() - z.dot(next.q - next.p);
    if (out.gap <= tol.eps_sep * tol.eps_sep) {
      done = true;
      break;
    }
    const auto same_atom = [&](const Atom& a) {
      return (a.q - next.q).norm() + (a.p - next.p).norm() < 1e-14;
    };
    bool repeat = last_added && same_atom(*last_added);
    for (const auto& a : atoms) repeat = repeat || same_atom(a);
    if (repeat) {
      done = true;
      break;
    }
    last_added = next;
    atoms.push_back(std::move(next));
  }
  out.iterations = it;

  out.closest_q = Vec::Zero(dim);
  out.closest_p = Vec::Zero(dim);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    out.closest_q += w(i) * atoms[i].q;
    out.closest_p += w(i) * atoms[i].p;
  }
  out.distance = z.norm();
  out.touching = out.distance <= tol.eps_sep;
  if (!done && !out.touching) {
    throw NumericalFailure("closest-pair search hit max_iter with gap " +
                           std::to_string(out.gap));
  }
  if (out.touching) {
    out.witness = 0.5 * (out.closest_p + out.closest_q);
    out.low_margin = out.distance > 1e-3 * tol.eps_sep;
    return out;
  }
  out.xstar = z;
  out.sup_p = z.dot(query(P, z));
  out.inf_q = z.dot(query(Q, -z));
  out.low_margin = !(out.inf_q - out.sup_p > tol.eps_sep * out.distance);
  return out;
}

}  // namespace conesep
