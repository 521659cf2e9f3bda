// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "builders.hpp"
#include "conesep/augmented_dual.hpp"
#include "conesep/base_oracle.hpp"
#include "conesep/bp_cone.hpp"
#include "conesep/error.hpp"
#include "conesep/lp.hpp"
#include "conesep/oracle.hpp"
#include "conesep/separation.hpp"
#include "reference.hpp"

using namespace conesep;
using namespace build;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Residual of the best convex combination of the columns of V reaching w,
// by LP: min sum(s+ + s-) over V lambda + s+ - s- = w, sum lambda = 1.
double hull_residual(const Eigen::MatrixXd& V, const Vec& w) {
  const Eigen::Index n = V.rows(), m = V.cols();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 1, m + 2 * n);
  A.topLeftCorner(n, m) = V;
  A.block(0, m, n, n) = Eigen::MatrixXd::Identity(n, n);
  A.block(0, m + n, n, n) = -Eigen::MatrixXd::Identity(n, n);
  A.block(n, 0, 1, m).setOnes();
  Eigen::VectorXd b(n + 1);
  b << w, 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(m + 2 * n);
  c.tail(2 * n).setOnes();
  const LpResult r = solve_lp(A, b, c);
  return r.status == LpStatus::Optimal ? r.objective : INFINITY;
}

Eigen::MatrixXd with_origin(const Eigen::MatrixXd& V) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(V.rows(), V.cols() + 1);
  out.leftCols(V.cols()) = V;
  return out;
}

// ---------------------------------------------------------------------------

Outcome c1_sector_scene() {
  const ConeUnion K = sectors_k(), A = sectors_a();
  const AnalysisReport an = check_necessary_conditions(K, A);
  const SeparationVerdict v = strict_bp_separation(K, A);
  if (!an.a_meets_conv_neg_k_trivially || an.zero_in_cl_s_neg_k) {
    return {false, "necessary-condition booleans wrong"};
  }
  if (v.separated || !v.obstruction || v.obstruction->reason != ObstructionReason::HullsIntersect) {
    return {false, "solver did not report a hull intersection"};
  }
  const Vec& w = v.obstruction->witness_point;
  const double ra = hull_residual(with_origin(A.all_normalized_generators()), w);
  const double rk = hull_residual(K.negated().all_normalized_generators(), w);
  const bool ok = ra <= 1e-9 && rk <= 1e-9;
  return {ok, fmt("witness (%.12g, %.12g), LP residuals %.2e / %.2e", w(0), w(1), ra, rk)};
}

Outcome c2_hull_witness() {
  const Vec w = v({0.5, 0.5});
  const std::vector<Vec> sa = {Vec::Zero(2), xl(0.0), xl(0.2), xl(0.8), xl(1.0)};
  const std::vector<Vec> snk = {xl(0.4), xl(0.6)};
  const bool cara = ref::in_hull_2d(w, sa, 1e-12) && ref::in_hull_2d(w, snk, 1e-12);
  Eigen::MatrixXd SA(2, 5), SK(2, 2);
  for (int j = 0; j < 5; ++j) SA.col(j) = sa[j];
  SK << snk[0], snk[1];
  const double ra = hull_residual(SA, w), rk = hull_residual(SK, w);
  return {cara && ra <= 1e-12 && rk <= 1e-12,
          fmt("(0.5, 0.5) in both hulls; LP residuals %.2e / %.2e", ra, rk)};
}

struct SweepStats {
  int scenes = 0, separated = 0, touching = 0, regenerated = 0, failures = 0;
  int certificates = 0;
  std::size_t disagreements = 0, samples = 0;
  std::string first_failure;
};

// Reference l1 distance between sampled hulls of cl S_A^0 and cl S_{-K}.
// Sub-hulls are inside the true hulls, so a zero reference proves contact.
double reference_gap(const ref::RandomScene& sc, std::mt19937_64& rng) {
  const int dim = sc.ns.dim();
  const int per_piece = dim == 2 ? 400 : 2000;
  std::vector<Eigen::MatrixXd> aclouds;
  Eigen::Index total = 1;
  for (const auto& G : sc.a_pieces) {
    aclouds.push_back(ref::unit_cloud(G, sc.ns.mode(), per_piece, rng));
    total += aclouds.back().cols();
  }
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(dim, total);
  Eigen::Index at = 1;
  for (const auto& C : aclouds) {
    P.middleCols(at, C.cols()) = C;
    at += C.cols();
  }
  const Eigen::MatrixXd Q = -ref::unit_cloud(sc.k_pieces[0], sc.ns.mode(), per_piece, rng);
  return ref::cloud_l1_distance(P, Q);
}

Outcome c3_c4_sweep(SweepStats& st) {
  std::mt19937_64 rng(2024);
  const NormMode modes[] = {NormMode::L1, NormMode::L2, NormMode::LInf};
  for (int dim : {2, 3}) {
    const int target = dim == 2 ? 200 : 50;
    for (int i = 0; i < target; ++i) {
      const NormMode m = modes[i % 3];
      const bool two = i % 2 == 1;
      ref::RandomScene sc;
      double gap = 0.0;
      for (;;) {
        sc = ref::random_scene(dim, m, two, rng);
        gap = reference_gap(sc, rng);
        if (gap <= 1e-6 || gap > 0.05) break;
        ++st.regenerated;
      }
      ++st.scenes;
      const auto fail = [&](const std::string& why) {
        if (st.first_failure.empty()) st.first_failure = fmt("dim %d #%d: ", dim, i) + why;
        ++st.failures;
      };
      try {
        const ConeUnion K = sc.k(), A = sc.a();
        const SeparationVerdict verdict = strict_bp_separation(K, A);
        const bool expect_sep = gap > 1e-6;
        (expect_sep ? st.separated : st.touching) += 1;
        if (verdict.separated != expect_sep) {
          fail(fmt("reference gap %.3g but separated=%d", gap, verdict.separated));
          continue;
        }
        if ((verdict.hull_distance > 1e-6) != verdict.separated) {
          fail(fmt("hull distance %.3g vs separated=%d", verdict.hull_distance, verdict.separated));
          continue;
        }
        if (!verdict.separated) continue;
        const auto& c = *verdict.certificate;
        ++st.certificates;
        const VerificationResult ver =
            verify_strict_separation(K, A, make_aug_pair(c.xstar, c.alpha), 10000, 100 + i);
        st.disagreements += ver.disagreements;
        st.samples += ver.samples;
        if (!ver.ok || ver.min_margin_a < 1e-7 || ver.max_margin_k > -1e-7) {
          fail(fmt("verification failed (margins %.3g / %.3g)", ver.min_margin_a, ver.max_margin_k));
        } else if (!c.aug_class.in_aw_sharp || !(c.alpha > 0.0)) {
          fail("certificate not strictly positive");
        }
      } catch (const Error& e) {
        fail(std::string("exception: ") + e.what());
      }
    }
  }
  const bool ok = st.failures == 0 && st.separated > 0 && st.touching > 0;
  std::string d = fmt("%d scenes (%d separated, %d touching, %d regenerated), %d failures",
                      st.scenes, st.separated, st.touching, st.regenerated, st.failures);
  if (!st.first_failure.empty()) d += "; first: " + st.first_failure;
  return {ok, d};
}

Outcome c4_equivalence(const SweepStats& st) {
  return {st.certificates > 0 && st.disagreements == 0,
          fmt("%d certificates, %zu samples, %zu disagreements", st.certificates, st.samples,
              st.disagreements)};
}

// A mix of pointed and non-pointed cones; the pair's alpha is a multiple of
// mu kept away from the tie except for exact ties at a generator.
Outcome c5_augmented_dual() {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 4);
  const NormMode modes[] = {NormMode::L1, NormMode::L2, NormMode::LInf};
  int cor_checked = 0, cor_mismatch = 0, zero_checked = 0, zero_mismatch = 0, ties = 0;
  for (int dim : {2, 3}) {
    int done = 0;
    while (done < 100) {
      const NormMode m = modes[done % 3];
      const NormSpec ns(m, dim);
      Eigen::MatrixXd G;
      if (uni(rng) < 0.7) {
        G = ref::pointed_generators(ref::random_unit(dim, rng), count(rng), 1.2, rng);
      } else {
        G.resize(dim, count(rng));
        for (Eigen::Index j = 0; j < G.cols(); ++j) G.col(j) = ref::random_unit(dim, rng);
      }
      const ConeUnion K(validate_cone(G, ns));

      // zero_in_cl_S against the positive-pair construction.
      bool constructed = false;
      if (const auto y = find_sharp_functional(K)) {
        try {
          constructed = construct_positive_pair(K, *y).alpha > 0.0;
        } catch (const PreconditionError&) {
        }
      }
      ++zero_checked;
      zero_mismatch += (!zero_in_cl_S(K)) != constructed;

      Vec xs = ref::random_unit(dim, rng);
      if (const auto y = find_sharp_functional(K); y && uni(rng) < 0.6) xs = y->normalized();
      const BaseQueryResult mu = mu_base(K, xs);
      if (std::abs(mu.value) < 0.2 * xs.norm()) continue;
      double t;
      const double r = uni(rng);
      if (r < 0.1) {
        t = 0.0;
      } else if (r < 0.2) {
        bool at_generator = false;
        const Eigen::MatrixXd& N = K.pieces()[0].normalized_generators();
        for (Eigen::Index j = 0; j < N.cols(); ++j) {
          at_generator = at_generator || (N.col(j) - mu.argpoint).norm() < 1e-12;
        }
        if (!at_generator || mu.value <= 0.0) continue;
        t = 1.0;
        ++ties;
      } else if (r < 0.6) {
        t = 0.05 + 0.85 * uni(rng);
      } else {
        t = 1.1 + 0.4 * uni(rng);
      }
      const AugPair p = make_aug_pair(xs, t * std::abs(mu.value));
      ++cor_checked;
      cor_mismatch += oracle_cor_test(K, p) != classify_aug_pair(K, p).in_cor_a_plus;
      ++done;
    }
  }
  return {cor_mismatch == 0 && zero_mismatch == 0,
          fmt("cor: %d pairs (%d exact ties), %d mismatches; zero-in-base: %d cones, %d mismatches",
              cor_checked, ties, cor_mismatch, zero_checked, zero_mismatch)};
}

Outcome c6_alpha_interval() {
  const ConeUnion K = two_rays_k(), A = two_rays_a();
  const SeparationVerdict v = strict_bp_separation(K, A);
  if (!v.separated || !v.certificate->alpha_interval) return {false, "no certificate / interval"};
  const auto [d1, d2] = *v.certificate->alpha_interval;
  const double lo = 1.0 / std::sqrt(5.0);
  const bool close = std::abs(d1 - lo) <= 1e-6 && std::abs(d2 - 1.0) <= 1e-6;
  const ConeUnion hull(conv_hull_cone(K));
  int verified = 0;
  for (int i = 1; i <= 10; ++i) {
    const double a = d1 + 1e-7 + (d2 - d1 - 2e-7) * i / 11.0;
    const AugPair p = make_aug_pair(v.certificate->xstar, a);
    verified += classify_aug_pair(hull, p).in_a_sharp &&
                verify_strict_separation(hull, A, p, 10000, i).ok;
  }
  return {close && verified == 10,
          fmt("interval (%.9f, %.9f), expected (%.9f, 1); %d/10 interior alphas verify", d1, d2,
              lo, verified)};
}

Outcome c7_bishop_phelps() {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> uni(0.05, 0.95);
  const NormMode modes[] = {NormMode::L1, NormMode::L2, NormMode::LInf};
  const double eps = Tolerances{}.eps_mem;
  long long mismatches = 0, compared = 0, banded = 0;
  for (int k = 0; k < 20; ++k) {
    const int dim = 2 + k % 3;
    const NormSpec ns(modes[k % 3], dim);
    Vec xs(dim);
    for (int i = 0; i < dim; ++i) xs(i) = g(rng);
    const double alpha = uni(rng) * dual_norm_eval(xs, ns);
    const BPCone C(ns, xs, alpha);
    const Vec ystar = -xs / alpha;
    const BPCone D = bp_from_functional(ns, ystar);
    for (int s = 0; s < 100000; ++s) {
      Vec x(dim);
      for (int i = 0; i < dim; ++i) x(i) = g(rng);
      // C(y*) evaluated from its definition.
      const double slack = ystar.dot(x) - ref::norm(x, ns.mode());
      const double phi = C.phi(x);
      if (std::abs(slack) <= eps || std::abs(phi) <= eps) {
        ++banded;
        continue;
      }
      ++compared;
      const bool in_c = bp_member(C, x);
      mismatches += (in_c != (slack >= 0.0)) + (in_c != bp_member(D, x));
    }
  }
  return {mismatches == 0, fmt("%lld points compared, %lld in the boundary band, %lld mismatches",
                               compared, banded, mismatches)};
}

Outcome c8_mu_oracle() {
  const ConeUnion Q(quadrant());
  const double a1 = mu_base(Q, v({1, 1})).value;
  const double a2 = mu_base(Q, v({-1, -1})).value;
  const bool anchors = std::abs(a1 - 1.0) <= 1e-9 && std::abs(a2 + std::sqrt(2.0)) <= 1e-9;
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> count(1, 4);
  const NormMode modes[] = {NormMode::L1, NormMode::L2, NormMode::LInf};
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const NormSpec ns(modes[k % 3], 2);
    const auto G = ref::pointed_generators(ref::random_unit(2, rng), count(rng), 1.0, rng);
    const ConeUnion K(validate_cone(G, ns));
    const Vec c = ref::random_unit(2, rng);
    worst = std::max(worst, std::abs(mu_base(K, c).value - oracle_mu(K, c)));
  }
  return {anchors && worst <= 5e-3,
          fmt("anchors %.15g / %.15g; worst |exact - grid| = %.3g over 100 instances", a1, a2, worst)};
}

Outcome c9_cone_hyperplane() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> count(1, 4);
  const NormMode modes[] = {NormMode::L1, NormMode::L2, NormMode::LInf};
  const Tolerances tol;
  int failures = 0, found = 0;
  const auto draw = [&](const Vec& h, int dim) {
    Eigen::MatrixXd G(dim, count(rng));
    for (Eigen::Index j = 0; j < G.cols(); ++j) {
      Vec gcol;
      do {
        gcol = ref::random_unit(dim, rng);
      } while (h.dot(gcol) < 0.05);
      G.col(j) = gcol;
    }
    return G;
  };
  for (int k = 0; k < 100; ++k) {
    const int dim = 2 + k % 2;
    const NormSpec ns(modes[k % 3], dim);
    const Vec h = ref::random_unit(dim, rng);
    // <h, a> > 0 on A and <h, k> > 0 on K, so A meets -K only at 0 and K is pointed.
    const ConeUnion A(validate_cone(draw(h, dim), ns));
    const FinGenCone K = validate_cone(draw(h, dim), ns);
    try {
      const auto x = separate_cone_hyperplane(A, K);
      if (!x) {
        ++failures;
        continue;
      }
      ++found;
      const PointCloud sa = sample_base(A, 10000, k);
      const PointCloud sk = -sample_base(ConeUnion(K), 10000, k + 1000);
      const double amin = std::min((x->transpose() * A.all_normalized_generators()).minCoeff(),
                                   (x->transpose() * sa).minCoeff());
      const double kmax = std::max((x->transpose() * (-K.normalized_generators())).maxCoeff(),
                                   (x->transpose() * sk).maxCoeff());
      if (!(amin >= -tol.eps_mem && kmax < -tol.eps_sep)) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  return {failures == 0, fmt("%d/100 separators found, %d failures", found, failures)};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto t_all = clock::now();
  int failed = 0;
  const auto report = [&](const char* id, const char* title, const std::function<Outcome()>& fn) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%s %s %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failed += !o.pass;
  };
  SweepStats sweep;
  report("C1", "sector scene obstruction", c1_sector_scene);
  report("C2", "hull witness", c2_hull_witness);
  report("C3", "separation sweep", [&] { return c3_c4_sweep(sweep); });
  report("C4", "scaled vs base check", [&] { return c4_equivalence(sweep); });
  report("C5", "augmented dual", c5_augmented_dual);
  report("C6", "alpha interval", c6_alpha_interval);
  report("C7", "Bishop-Phelps identity", c7_bishop_phelps);
  report("C8", "mu oracle", c8_mu_oracle);
  report("C9", "cone hyperplane", c9_cone_hyperplane);
  std::printf("%d/9 criteria passed in %.1fs\n", 9 - failed,
              std::chrono::duration<double>(clock::now() - t_all).count());
  return failed == 0 ? 0 : 1;
}
