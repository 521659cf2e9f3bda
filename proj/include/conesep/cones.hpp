#pragma once

#include <optional>
#include <vector>

#include "conesep/geometry.hpp"
#include "conesep/tolerances.hpp"

namespace conesep {

/// Finitely generated convex cone {G lambda : lambda >= 0}.
///
/// Built through validate_cone(); generators are nonzero, pairwise
/// non-parallel, and a unit-norm copy (w.r.t. the scene norm) is cached.
/// Finitely generated cones are closed, so the closure operators of the
/// theory act as the identity on a single piece.
class FinGenCone {
 public:
  const Eigen::MatrixXd& generators() const { return generators_; }
  const Eigen::MatrixXd& normalized_generators() const { return normalized_; }
  const NormSpec& norm() const { return norm_; }
  int dim() const { return norm_.dim(); }
  int count() const { return static_cast<int>(generators_.cols()); }

  /// -K, generated by the negated generators.
  FinGenCone negated() const;

 private:
  friend FinGenCone validate_cone(const Eigen::MatrixXd&, const NormSpec&,
                                  const Tolerances&);
  FinGenCone(Eigen::MatrixXd generators, Eigen::MatrixXd normalized,
             NormSpec norm)
      : generators_(std::move(generators)),
        normalized_(std::move(normalized)),
        norm_(norm) {}

  Eigen::MatrixXd generators_;
  Eigen::MatrixXd normalized_;
  NormSpec norm_;
};

/// Finite union of finitely generated cones; how nonconvex cones are
/// represented. A single FinGenCone converts implicitly.
class ConeUnion {
 public:
  ConeUnion(FinGenCone piece);  // NOLINT(google-explicit-constructor)
  explicit ConeUnion(std::vector<FinGenCone> pieces);

  const std::vector<FinGenCone>& pieces() const { return pieces_; }
  const NormSpec& norm() const { return pieces_.front().norm(); }
  int dim() const { return norm().dim(); }
  bool is_convex_piece() const { return pieces_.size() == 1; }

  /// All normalized generators of all pieces, column-concatenated.
  Eigen::MatrixXd all_normalized_generators() const;
  Eigen::MatrixXd all_generators() const;

  ConeUnion negated() const;

 private:
  std::vector<FinGenCone> pieces_;
};

/// Rejects empty / zero / wrong-dimension generator lists, merges parallel
/// generators (cosine >= 1 - eps_mem) and caches unit-norm copies.
FinGenCone validate_cone(const Eigen::MatrixXd& raw, const NormSpec& ns,
                         const Tolerances& tol = {});

struct PointednessResult {
  bool pointed = true;
  std::optional<Vec> lineality_witness;  // x with x, -x in K (unit norm)
};

/// K is pointed iff 0 is not in conv(normalized generators).
PointednessResult is_pointed(const FinGenCone& K, const Tolerances& tol = {});

/// Membership of x in the piece, by NNLS residual <= eps_mem * max(1, ||x||_2).
bool cone_contains(const FinGenCone& K, const Vec& x, const Tolerances& tol = {});
bool cone_contains(const ConeUnion& K, const Vec& x, const Tolerances& tol = {});

/// y in K^+ (equivalently (conv K)^+): <y, g> >= -eps_mem on every generator.
bool dual_cone_membership(const ConeUnion& K, const Vec& y,
                          const Tolerances& tol = {});

/// y in K^#: strictly positive on K \ {0}. Checked on the normalized
/// generators and on the whole norm-base through mu_base.
bool sharp_membership(const ConeUnion& K, const Vec& y,
                      const Tolerances& tol = {});

/// cl(conv A) as one finitely generated cone (generator lists concatenated).
FinGenCone conv_hull_cone(const ConeUnion& A, const Tolerances& tol = {});

/// True iff every piece P of A satisfies P ∩ B = {0}.
bool cones_intersect_trivially(const ConeUnion& A, const FinGenCone& B,
                               const Tolerances& tol = {});

/// Rank of the generator matrix (dimension of the linear span of the piece).
int span_dimension(const FinGenCone& K, const Tolerances& tol = {});

/// Halfspace description of a full-dimensional cone in dimension <= 3.
///
/// `inward_normals` are unit (l2) normals with <n, x> >= 0 on the cone; each
/// comes with the generator indices lying on its facet. An empty normal list
/// with full rank means the cone is the whole space.
struct ConeFacets {
  bool full_dimensional = false;
  std::vector<Vec> inward_normals;
  std::vector<std::vector<int>> facet_generators;
};

/// Works on a raw generator matrix (r x m, r <= 3) so the brute-force oracle
/// can reuse it in reduced span coordinates.
ConeFacets facets_of_generators(const Eigen::MatrixXd& generators,
                                const Tolerances& tol = {});
ConeFacets cone_facets(const FinGenCone& K, const Tolerances& tol = {});

}  // namespace conesep
