#include "conesep/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "conesep/error.hpp"

namespace conesep {

namespace {

// Dense simplex tableau. Rows 0..m-1 are constraints, row m holds the
// reduced costs, the last column the right-hand side.
class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
      : m_(A.rows()), n_(A.cols()) {
    T_ = Eigen::MatrixXd::Zero(m_ + 1, n_ + m_ + 1);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double s = b(i) < 0.0 ? -1.0 : 1.0;
      T_.row(i).head(n_) = s * A.row(i);
      T_(i, n_ + i) = 1.0;
      T_(i, rhs()) = s * b(i);
    }
    basis_.resize(m_);
    for (Eigen::Index i = 0; i < m_; ++i) basis_[i] = static_cast<int>(n_ + i);
    allowed_.assign(n_ + m_, 1);
    row_alive_.assign(m_, 1);
  }

  Eigen::Index rhs() const { return n_ + m_; }

  void set_objective(const Eigen::VectorXd& cost) {
    T_.row(m_).setZero();
    T_.row(m_).head(cost.size()) = cost.transpose();
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double cb = T_(m_, basis_[i]);
      if (cb != 0.0) T_.row(m_) -= cb * T_.row(i);
    }
  }

  double objective() const { return -T_(m_, rhs()); }

  void pivot(Eigen::Index r, Eigen::Index j) {
    T_.row(r) /= T_(r, j);
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i != r && T_(i, j) != 0.0) T_.row(i) -= T_(i, j) * T_.row(r);
    }
    basis_[r] = static_cast<int>(j);
  }

  LpStatus run(const LpOptions& opt, int& iterations) {
    int degenerate_run = 0;
    while (true) {
      if (iterations >= opt.max_iter) return LpStatus::IterationLimit;
      const bool bland = degenerate_run > 50;
      Eigen::Index enter = -1;
      double best = -opt.cost_tol;
      for (Eigen::Index j = 0; j < n_ + m_; ++j) {
        if (!allowed_[j]) continue;
        const double d = T_(m_, j);
        if (d < best) {
          enter = j;
          if (bland) break;
          best = d;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      Eigen::Index leave = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (!row_alive_[i]) continue;
        const double a = T_(i, enter);
        if (a <= opt.pivot_tol) continue;
        const double q = std::max(0.0, T_(i, rhs())) / a;
        if (q < ratio - 1e-14 ||
            (q <= ratio + 1e-14 && leave >= 0 && basis_[i] < basis_[leave])) {
          if (q < ratio) ratio = q;
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      degenerate_run = ratio <= 1e-14 ? degenerate_run + 1 : 0;
      pivot(leave, enter);
      ++iterations;
    }
  }

  // After phase one: pivot basic artificials out or drop redundant rows,
  // then forbid artificial columns.
  void expel_artificials(const LpOptions& opt) {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      Eigen::Index col = -1;
      double best = opt.pivot_tol;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (std::abs(T_(i, j)) > best) {
          best = std::abs(T_(i, j));
          col = j;
        }
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        row_alive_[i] = 0;
      }
    }
    for (Eigen::Index j = n_; j < n_ + m_; ++j) allowed_[j] = 0;
  }

  Eigen::VectorXd solution() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (row_alive_[i] && basis_[i] < n_) x(basis_[i]) = std::max(0.0, T_(i, rhs()));
    }
    return x;
  }

 private:
  Eigen::Index m_, n_;
  Eigen::MatrixXd T_;
  std::vector<int> basis_;
  std::vector<char> allowed_;
  std::vector<char> row_alive_;
};

LpResult phase_one(Tableau& tab, const Eigen::VectorXd& b, Eigen::Index n,
                   const LpOptions& opt) {
  LpResult out;
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(n + b.size());
  cost.tail(b.size()).setOnes();
  tab.set_objective(cost);
  const LpStatus st = tab.run(opt, out.iterations);
  if (st == LpStatus::IterationLimit) {
    out.status = st;
    return out;
  }
  const double infeas = tab.objective();
  if (infeas > opt.feas_tol * std::max(1.0, b.lpNorm<1>())) {
    out.status = LpStatus::Infeasible;
    out.objective = infeas;
    return out;
  }
  tab.expel_artificials(opt);
  out.status = LpStatus::Optimal;
  out.x = tab.solution();
  return out;
}

void check_shapes(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  if (A.rows() != b.size()) throw InputError("LP: row count mismatch");
  if (!A.allFinite() || !b.allFinite()) throw InputError("LP: non-finite data");
}

}  // namespace

LpResult find_feasible(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                       const LpOptions& opt) {
  check_shapes(A, b);
  Tableau tab(A, b);
  return phase_one(tab, b, A.cols(), opt);
}

LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                  const Eigen::VectorXd& c, const LpOptions& opt) {
  check_shapes(A, b);
  if (c.size() != A.cols()) throw InputError("LP: cost size mismatch");
  Tableau tab(A, b);
  LpResult p1 = phase_one(tab, b, A.cols(), opt);
  if (p1.status != LpStatus::Optimal) return p1;

  LpResult out;
  out.iterations = p1.iterations;
  tab.set_objective(c);
  out.status = tab.run(opt, out.iterations);
  out.x = tab.solution();
  out.objective = c.dot(out.x);
  return out;
}

}  // namespace conesep
