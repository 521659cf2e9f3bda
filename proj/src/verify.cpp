#include "conesep/base_oracle.hpp"
#include "conesep/error.hpp"
#include "conesep/kernels.hpp"
#include "conesep/separation.hpp"

namespace conesep {

namespace {

// Base samples, raw generators, and generators at two extra scales (the
// homogeneous check must not depend on the length of the point).
PointCloud with_generators(const PointCloud& base, const Eigen::MatrixXd& gens,
                           double sign) {
  const Eigen::Index g = gens.cols();
  PointCloud out(base.rows(), base.cols() + 3 * g);
  out.leftCols(base.cols()) = sign * base;
  out.middleCols(base.cols(), g) = sign * gens;
  out.middleCols(base.cols() + g, g) = sign * 1e-3 * gens;
  out.rightCols(g) = sign * 1e3 * gens;
  return out;
}

VerificationResult scan_sides(const ConeUnion& K, const PointCloud& a_points,
                              const AugPair& cert, int sample_count,
                              std::uint64_t seed, const Tolerances& tol) {
  const NormMode mode = K.norm().mode();
  const PointCloud k_points = with_generators(
      sample_base(K, sample_count, seed ^ 0x9e3779b97f4a7c15ULL), K.all_generators(), -1.0);
  const auto sa = kernels::margin_scan_parallel(a_points, cert.xstar, cert.alpha, mode,
                                                kernels::Side::Outside, tol.eps_sep);
  const auto sk = kernels::margin_scan_parallel(k_points, cert.xstar, cert.alpha, mode,
                                                kernels::Side::Inside, tol.eps_sep);
  VerificationResult r;
  r.min_margin_a = sa.count ? sa.phi_min : 0.0;
  r.max_margin_k = sk.phi_max;
  r.ok = sa.phi_failures == 0 && sk.phi_failures == 0;
  r.base_ok = sa.base_failures == 0 && sk.base_failures == 0;
  r.disagreements = sa.disagreements + sk.disagreements;
  r.samples = sa.count + sk.count;
  return r;
}

void check_cert(const ConeUnion& K, const ConeUnion& A, const AugPair& cert) {
  if (!(K.norm() == A.norm())) throw InputError("K and A live in different spaces");
  check_dim(cert.xstar, K.norm(), "certificate x*");
  if (cert.alpha < 0.0) throw InputError("certificate alpha must be >= 0");
}

}  // namespace

VerificationResult verify_strict_separation(const ConeUnion& K, const ConeUnion& A,
                                            const AugPair& cert, int sample_count,
                                            std::uint64_t seed, const Tolerances& tol) {
  check_cert(K, A, cert);
  const PointCloud a_points =
      with_generators(sample_base(A, sample_count, seed), A.all_generators(), 1.0);
  return scan_sides(K, a_points, cert, sample_count, seed, tol);
}

VerificationResult verify_boundary_separation(const ConeUnion& K, const ConeUnion& A,
                                              const AugPair& cert, int sample_count,
                                              std::uint64_t seed,
                                              const Tolerances& tol) {
  check_cert(K, A, cert);
  const PointCloud a_points = boundary_base_sample(A, sample_count, seed, tol);
  return scan_sides(K, a_points, cert, sample_count, seed, tol);
}

}  // namespace conesep
