#include "conesep/cones.hpp"

#include <cmath>
#include <string>

#include "conesep/base_oracle.hpp"
#include "conesep/error.hpp"
#include "conesep/lp.hpp"
#include "conesep/nnls.hpp"

namespace conesep {

FinGenCone FinGenCone::negated() const {
  return FinGenCone(-generators_, -normalized_, norm_);
}

ConeUnion::ConeUnion(FinGenCone piece) { pieces_.push_back(std::move(piece)); }

ConeUnion::ConeUnion(std::vector<FinGenCone> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InputError("cone union needs at least one piece");
  for (const auto& p : pieces_) {
    if (!(p.norm() == pieces_.front().norm())) {
      throw InputError("cone union pieces disagree on norm or dimension");
    }
  }
}

namespace {

Eigen::MatrixXd concat(const std::vector<FinGenCone>& pieces, bool normalized) {
  Eigen::Index cols = 0;
  for (const auto& p : pieces) cols += p.count();
  Eigen::MatrixXd out(pieces.front().dim(), cols);
  Eigen::Index at = 0;
  for (const auto& p : pieces) {
    out.middleCols(at, p.count()) =
        normalized ? p.normalized_generators() : p.generators();
    at += p.count();
  }
  return out;
}

}  // namespace

Eigen::MatrixXd ConeUnion::all_normalized_generators() const {
  return concat(pieces_, true);
}

Eigen::MatrixXd ConeUnion::all_generators() const { return concat(pieces_, false); }

ConeUnion ConeUnion::negated() const {
  std::vector<FinGenCone> neg;
  neg.reserve(pieces_.size());
  for (const auto& p : pieces_) neg.push_back(p.negated());
  return ConeUnion(std::move(neg));
}

FinGenCone validate_cone(const Eigen::MatrixXd& raw, const NormSpec& ns,
                         const Tolerances& tol) {
  if (raw.cols() == 0) throw InputError("cone has no generators");
  if (raw.rows() != ns.dim()) {
    throw InputError("generator dimension " + std::to_string(raw.rows()) +
                     " does not match scene dimension " + std::to_string(ns.dim()));
  }
  if (!raw.allFinite()) throw InputError("generator with non-finite entry");

  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < raw.cols(); ++j) {
    const Vec g = raw.col(j);
    if (raw_norm(g, ns.mode()) <= tol.eps_mem) {
      throw InputError("zero generator at column " + std::to_string(j));
    }
    const Vec u = g.normalized();
    bool parallel = false;
    for (Eigen::Index k : keep) {
      if (u.dot(raw.col(k).normalized()) >= 1.0 - tol.eps_mem) {
        parallel = true;
        break;
      }
    }
    if (!parallel) keep.push_back(j);
  }

  Eigen::MatrixXd gens(raw.rows(), static_cast<Eigen::Index>(keep.size()));
  Eigen::MatrixXd unit(raw.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    gens.col(k) = raw.col(keep[k]);
    unit.col(k) = normalized(gens.col(k), ns);
  }
  return FinGenCone(std::move(gens), std::move(unit), ns);
}

namespace {

// lambda >= 0, sum lambda = 1, G lambda = 0.
LpResult zero_in_hull_lp(const Eigen::MatrixXd& G) {
  Eigen::MatrixXd A(G.rows() + 1, G.cols());
  A.topRows(G.rows()) = G;
  A.bottomRows(1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(G.rows() + 1);
  b(G.rows()) = 1.0;
  LpResult r = find_feasible(A, b);
  if (r.status == LpStatus::IterationLimit) {
    throw NumericalFailure("convex-hull LP hit the iteration limit");
  }
  return r;
}

}  // namespace

PointednessResult is_pointed(const FinGenCone& K, const Tolerances&) {
  const LpResult r = zero_in_hull_lp(K.normalized_generators());
  PointednessResult out;
  if (r.status != LpStatus::Optimal) return out;
  out.pointed = false;
  Eigen::Index i = 0;
  r.x.maxCoeff(&i);
  out.lineality_witness = K.normalized_generators().col(i);
  return out;
}

bool cone_contains(const FinGenCone& K, const Vec& x, const Tolerances& tol) {
  check_dim(x, K.norm(), "cone_contains");
  const NnlsResult r = nnls(K.normalized_generators(), x, tol.max_iter);
  return r.residual <= tol.eps_mem * std::max(1.0, x.norm());
}

bool cone_contains(const ConeUnion& K, const Vec& x, const Tolerances& tol) {
  for (const auto& p : K.pieces()) {
    if (cone_contains(p, x, tol)) return true;
  }
  return false;
}

bool dual_cone_membership(const ConeUnion& K, const Vec& y, const Tolerances& tol) {
  check_dim(y, K.norm(), "dual_cone_membership");
  return (y.transpose() * K.all_normalized_generators()).minCoeff() >= -tol.eps_mem;
}

bool sharp_membership(const ConeUnion& K, const Vec& y, const Tolerances& tol) {
  check_dim(y, K.norm(), "sharp_membership");
  if ((y.transpose() * K.all_normalized_generators()).minCoeff() <= tol.eps_mem) {
    return false;
  }
  return mu_base(K, y, tol).value > tol.eps_mem;
}

FinGenCone conv_hull_cone(const ConeUnion& A, const Tolerances& tol) {
  return validate_cone(A.all_generators(), A.norm(), tol);
}

namespace {

// Is P ∩ B = {0}?  P is pointed: a point with unit generator weight is
// never zero, so feasibility of the intersection LP decides.
bool pointed_piece_meets_trivially(const FinGenCone& P, const FinGenCone& B) {
  const Eigen::MatrixXd& Pg = P.normalized_generators();
  const Eigen::MatrixXd& Bg = B.normalized_generators();
  const Eigen::Index n = P.dim();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 1, Pg.cols() + Bg.cols());
  A.block(0, 0, n, Pg.cols()) = Pg;
  A.block(0, Pg.cols(), n, Bg.cols()) = -Bg;
  A.block(n, 0, 1, Pg.cols()).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
  b(n) = 1.0;
  const LpResult r = find_feasible(A, b);
  if (r.status == LpStatus::IterationLimit) {
    throw NumericalFailure("intersection LP hit the iteration limit");
  }
  return r.status != LpStatus::Optimal;
}

// General case: maximise |x_i| over x ∈ P ∩ B with |x_j| <= 1.
bool piece_meets_trivially_box(const FinGenCone& P, const FinGenCone& B,
                               const Tolerances& tol) {
  const Eigen::MatrixXd& Pg = P.normalized_generators();
  const Eigen::MatrixXd& Bg = B.normalized_generators();
  const Eigen::Index n = P.dim(), p = Pg.cols(), q = Bg.cols();
  // variables: lambda (p), mu (q), s (n), t (n)
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3 * n, p + q + 2 * n);
  A.block(0, 0, n, p) = Pg;
  A.block(0, p, n, q) = -Bg;
  A.block(n, 0, n, p) = Pg;
  A.block(n, p + q, n, n).setIdentity();
  A.block(2 * n, 0, n, p) = -Pg;
  A.block(2 * n, p + q + n, n, n).setIdentity();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(3 * n);
  b.tail(2 * n).setOnes();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd c = Eigen::VectorXd::Zero(A.cols());
      c.head(p) = -sign * Pg.row(i).transpose();
      const LpResult r = solve_lp(A, b, c);
      if (r.status == LpStatus::IterationLimit) {
        throw NumericalFailure("intersection LP hit the iteration limit");
      }
      if (r.status == LpStatus::Optimal && -r.objective > tol.eps_mem) return false;
    }
  }
  return true;
}

}  // namespace

bool cones_intersect_trivially(const ConeUnion& A, const FinGenCone& B,
                               const Tolerances& tol) {
  if (!(A.norm() == B.norm())) throw InputError("cones live in different spaces");
  for (const auto& P : A.pieces()) {
    const bool trivial = is_pointed(P, tol).pointed
                             ? pointed_piece_meets_trivially(P, B)
                             : piece_meets_trivially_box(P, B, tol);
    if (!trivial) return false;
  }
  return true;
}

int span_dimension(const FinGenCone& K, const Tolerances& tol) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(K.normalized_generators());
  lu.setThreshold(std::max(tol.eps_mem, 1e-12));
  return static_cast<int>(lu.rank());
}

ConeFacets facets_of_generators(const Eigen::MatrixXd& generators,
                                const Tolerances& tol) {
  const Eigen::Index r = generators.rows();
  if (r > 3) throw UnsupportedScale("facet enumeration is limited to dimension 3");
  ConeFacets out;
  Eigen::MatrixXd U = generators;
  for (Eigen::Index j = 0; j < U.cols(); ++j) U.col(j).normalize();

  Eigen::FullPivLU<Eigen::MatrixXd> lu(U);
  lu.setThreshold(1e-10);
  if (lu.rank() < r) return out;
  out.full_dimensional = true;

  const double slack = std::max(tol.eps_mem, 1e-10);
  auto try_normal = [&](Vec nrm) {
    const double len = nrm.norm();
    if (len < 1e-12) return;
    nrm /= len;
    const Eigen::RowVectorXd vals = nrm.transpose() * U;
    if (vals.minCoeff() < -slack) return;
    for (const auto& existing : out.inward_normals) {
      if (existing.dot(nrm) > 1.0 - 1e-10) return;
    }
    std::vector<int> on;
    for (Eigen::Index j = 0; j < U.cols(); ++j) {
      if (std::abs(vals(j)) <= slack) on.push_back(static_cast<int>(j));
    }
    out.inward_normals.push_back(nrm);
    out.facet_generators.push_back(std::move(on));
  };

  for (Eigen::Index i = 0; i < U.cols(); ++i) {
    if (r == 1) {
      try_normal(U.col(i));
    } else if (r == 2) {
      Vec perp(2);
      perp << -U(1, i), U(0, i);
      try_normal(perp);
      try_normal(-perp);
    } else {
      for (Eigen::Index k = i + 1; k < U.cols(); ++k) {
        const Eigen::Vector3d a = U.col(i), b = U.col(k);
        const Eigen::Vector3d c = a.cross(b);
        try_normal(Vec(c));
        try_normal(Vec(-c));
      }
    }
  }
  return out;
}

ConeFacets cone_facets(const FinGenCone& K, const Tolerances& tol) {
  return facets_of_generators(K.normalized_generators(), tol);
}

}  // namespace conesep
