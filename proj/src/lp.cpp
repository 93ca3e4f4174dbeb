#include "stabpoly/lp.hpp"

#include <stdexcept>
#include <vector>

#include "stabpoly/graph.hpp"

namespace stabpoly {

namespace {

class Tableau {
 public:
  Tableau(const RationalMatrix& a, const RationalVector& b) : m_(a.rows()), n_(a.cols()) {
    for (Eigen::Index i = 0; i < m_; ++i)
      if (b(i) < 0) art_rows_.push_back(i);
    cols_ = n_ + m_ + static_cast<Eigen::Index>(art_rows_.size());
    t_ = RationalMatrix::Zero(m_ + 1, cols_ + 1);
    basis_.resize(m_);
    Eigen::Index art = n_ + m_;
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Rational sign = b(i) < 0 ? Rational(-1) : Rational(1);
      t_.row(i).head(n_) = sign * a.row(i);
      t_(i, n_ + i) = sign;
      t_(i, cols_) = sign * b(i);
      if (b(i) < 0) {
        t_(i, art) = 1;
        basis_[i] = art++;
      } else {
        basis_[i] = n_ + i;
      }
    }
    allowed_.assign(cols_, true);
  }

  bool phase_one() {
    if (art_rows_.empty()) return true;
    RationalVector c = RationalVector::Zero(cols_);
    for (Eigen::Index j = n_ + m_; j < cols_; ++j) c(j) = -1;
    set_objective(c);
    if (!optimize()) throw std::logic_error("phase one cannot be unbounded");
    if (t_(m_, cols_) != 0) return false;
    // Drive remaining artificial variables out of the basis.
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + m_) continue;
      for (Eigen::Index j = 0; j < n_ + m_; ++j)
        if (t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
    }
    for (Eigen::Index j = n_ + m_; j < cols_; ++j) allowed_[j] = false;
    return true;
  }

  LPSolution phase_two(const RationalVector& objective) {
    RationalVector c = RationalVector::Zero(cols_);
    c.head(n_) = objective;
    set_objective(c);
    LPSolution sol;
    if (!optimize()) {
      sol.status = LPStatus::Unbounded;
      return sol;
    }
    sol.status = LPStatus::Optimal;
    sol.value = t_(m_, cols_);
    sol.x = RationalVector::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i)
      if (basis_[i] < n_) sol.x(basis_[i]) = t_(i, cols_);
    return sol;
  }

 private:
  void set_objective(const RationalVector& c) {
    cost_ = c;
    t_.row(m_).setZero();
    t_.row(m_).head(cols_) = -c.transpose();
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Rational cb = c(basis_[i]);
      if (cb != 0) t_.row(m_) += cb * t_.row(i);
    }
  }

  // Returns false when unbounded.
  bool optimize() {
    bool bland = false;
    int degenerate_run = 0;
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < cols_; ++j) {
        if (!allowed_[j] || t_(m_, j) >= 0) continue;
        if (enter < 0 || (!bland && t_(m_, j) < t_(m_, enter))) enter = j;
        if (bland) break;
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rational best;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Rational ratio = t_(i, cols_) / t_(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      if (best == 0) {
        if (++degenerate_run > 32) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Rational inv = Rational(1) / t_(r, c);
    t_.row(r) *= inv;
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational f = t_(i, c);
      for (Eigen::Index j = 0; j <= cols_; ++j)
        if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  Eigen::Index m_;
  Eigen::Index n_;
  Eigen::Index cols_ = 0;
  std::vector<Eigen::Index> art_rows_;
  RationalMatrix t_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> allowed_;
  RationalVector cost_;
};

}  // namespace

LPSolution maximize(const RationalVector& c, const RationalMatrix& a, const RationalVector& b) {
  if (a.cols() != c.size() || a.rows() != b.size()) throw DomainError("LP dimensions do not agree");
  Tableau t(a, b);
  if (!t.phase_one()) return LPSolution{};
  return t.phase_two(c);
}

bool feasible(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) throw DomainError("LP dimensions do not agree");
  Tableau t(a, b);
  return t.phase_one();
}

}  // namespace stabpoly
