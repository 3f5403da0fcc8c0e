#include "excc/simplex_lp.hpp"

#include <cmath>
#include <vector>

#include "excc/error.hpp"

namespace excc {
namespace {

constexpr double kCostTol = 1e-10;
constexpr double kPivotTol = 1e-9;
constexpr int kMaxIterations = 200000;
constexpr int kStallBeforeBland = 50;

// Revised simplex for  minimize cost^T y  s.t.  M y = h, y >= 0. The basis
// matrix is refactorized every iteration; it has one row per primal unknown,
// so this stays cheap and avoids drift from repeated tableau updates.
class RevisedSimplex {
 public:
  RevisedSimplex(Eigen::MatrixXd m, Eigen::VectorXd h) : rows_(m.rows()), cols_(m.cols()) {
    flip_.assign(static_cast<std::size_t>(rows_), false);
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (h(i) < 0.0) {
        m.row(i) *= -1.0;
        h(i) = -h(i);
        flip_[static_cast<std::size_t>(i)] = true;
      }
    }
    matrix_.resize(rows_, cols_ + rows_);
    matrix_ << m, Eigen::MatrixXd::Identity(rows_, rows_);
    rhs_ = h;
    basis_.resize(static_cast<std::size_t>(rows_));
    for (Eigen::Index i = 0; i < rows_; ++i) basis_[static_cast<std::size_t>(i)] = cols_ + i;
    refresh();
  }

  int optimize(const Eigen::VectorXd& cost, Eigen::Index allowed) {
    int iterations = 0;
    int stalled = 0;
    while (true) {
      if (++iterations > kMaxIterations) throw NumericalError("simplex iteration limit reached");
      const Eigen::VectorXd y = lut_.solve(basic(cost));
      const bool bland = stalled >= kStallBeforeBland;
      Eigen::Index entering = -1;
      double most_negative = -kCostTol;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        const double reduced = cost(j) - y.dot(matrix_.col(j));
        if (reduced < most_negative) {
          entering = j;
          if (bland) break;
          most_negative = reduced;
        }
      }
      if (entering < 0) return iterations;

      const Eigen::VectorXd direction = lu_.solve(matrix_.col(entering));
      Eigen::Index leaving = -1;
      double best_ratio = 0.0;
      for (Eigen::Index i = 0; i < rows_; ++i) {
        if (direction(i) <= kPivotTol) continue;
        const double ratio = std::max(level_(i), 0.0) / direction(i);
        const bool better = leaving < 0 || ratio < best_ratio - 1e-13 ||
                            (ratio <= best_ratio + 1e-13 &&
                             (bland ? basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)]
                                    : direction(i) > direction(leaving)));
        if (better) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) throw NumericalError("linear program is unbounded");
      stalled = best_ratio <= 1e-13 ? stalled + 1 : 0;
      replace(leaving, entering);
    }
  }

  // Swaps zero-level artificials for structural columns where possible.
  void expel_artificials() {
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < cols_) continue;
      const Eigen::RowVectorXd row = lut_.solve(Eigen::VectorXd::Unit(rows_, i)).transpose() * matrix_;
      for (Eigen::Index j = 0; j < cols_; ++j) {
        if (!in_basis_[static_cast<std::size_t>(j)] && std::abs(row(j)) > 1e-7) {
          replace(i, j);
          break;
        }
      }
    }
  }

  double objective(const Eigen::VectorXd& cost) const { return basic(cost).dot(level_); }

  // Simplex multipliers in terms of the original row signs.
  Eigen::VectorXd multipliers(const Eigen::VectorXd& cost) const {
    Eigen::VectorXd y = lut_.solve(basic(cost));
    for (Eigen::Index i = 0; i < rows_; ++i)
      if (flip_[static_cast<std::size_t>(i)]) y(i) = -y(i);
    return y;
  }

  Eigen::Index structural() const noexcept { return cols_; }
  Eigen::Index total_columns() const noexcept { return cols_ + rows_; }

 private:
  Eigen::VectorXd basic(const Eigen::VectorXd& cost) const {
    Eigen::VectorXd out(rows_);
    for (Eigen::Index i = 0; i < rows_; ++i) out(i) = cost(basis_[static_cast<std::size_t>(i)]);
    return out;
  }

  void replace(Eigen::Index row, Eigen::Index column) {
    basis_[static_cast<std::size_t>(row)] = column;
    refresh();
  }

  void refresh() {
    in_basis_.assign(static_cast<std::size_t>(cols_ + rows_), false);
    Eigen::MatrixXd b(rows_, rows_);
    for (Eigen::Index i = 0; i < rows_; ++i) {
      b.col(i) = matrix_.col(basis_[static_cast<std::size_t>(i)]);
      in_basis_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = true;
    }
    lu_.compute(b);
    lut_.compute(b.transpose());
    level_ = lu_.solve(rhs_);
  }

  Eigen::Index rows_;
  Eigen::Index cols_;
  Eigen::MatrixXd matrix_;
  Eigen::VectorXd rhs_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> in_basis_;
  std::vector<bool> flip_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lut_;
  Eigen::VectorXd level_;
};

}  // namespace

LpSolution solve_lp(const InequalityLp& lp) {
  const Eigen::Index vars = lp.a.cols();
  const Eigen::Index cons = lp.a.rows();
  if (lp.b.size() != cons || lp.c.size() != vars) throw DomainError("linear program dimensions do not match");

  RevisedSimplex simplex(lp.a.transpose(), -lp.c);
  const Eigen::Index total = simplex.total_columns();

  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(total);
  phase1.tail(vars).setOnes();
  LpSolution out;
  out.iterations = simplex.optimize(phase1, total);
  if (simplex.objective(phase1) > 1e-8) throw NumericalError("linear program is infeasible");
  simplex.expel_artificials();

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(total);
  phase2.head(cons) = lp.b;
  out.iterations += simplex.optimize(phase2, simplex.structural());

  // Strong duality: the primal optimum is minus the dual optimum, and the
  // dual multipliers are a primal solution.
  out.value = -simplex.objective(phase2);
  out.x = simplex.multipliers(phase2);
  return out;
}

}  // namespace excc
