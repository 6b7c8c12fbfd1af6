#include "outer/lp.hpp"

#include "outer/error.hpp"

namespace outer {

void LinearProgram::add_row(std::vector<Rational> coeffs, Rational rhs) {
  if (coeffs.size() != c.size()) throw Error("constraint row has the wrong number of coefficients");
  a.push_back(std::move(coeffs));
  b.push_back(std::move(rhs));
}

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp) : n_(lp.num_variables()), m_(static_cast<int>(lp.b.size())) {
    for (int i = 0; i < m_; ++i) {
      if (lp.b[static_cast<std::size_t>(i)] < 0) ++k_;
    }
    cols_ = n_ + m_ + k_;
    rows_.assign(static_cast<std::size_t>(m_), std::vector<Rational>(static_cast<std::size_t>(cols_ + 1), 0));
    basis_.assign(static_cast<std::size_t>(m_), -1);
    int art = n_ + m_;
    for (int i = 0; i < m_; ++i) {
      auto& row = rows_[static_cast<std::size_t>(i)];
      const auto& ai = lp.a[static_cast<std::size_t>(i)];
      if (static_cast<int>(ai.size()) != n_) throw Error("constraint row has the wrong number of coefficients");
      const bool flip = lp.b[static_cast<std::size_t>(i)] < 0;
      for (int j = 0; j < n_; ++j) row[static_cast<std::size_t>(j)] = flip ? Rational(-ai[static_cast<std::size_t>(j)]) : ai[static_cast<std::size_t>(j)];
      row[static_cast<std::size_t>(n_ + i)] = flip ? -1 : 1;
      row[static_cast<std::size_t>(cols_)] = flip ? Rational(-lp.b[static_cast<std::size_t>(i)]) : lp.b[static_cast<std::size_t>(i)];
      if (flip) {
        row[static_cast<std::size_t>(art)] = 1;
        basis_[static_cast<std::size_t>(i)] = art++;
      } else {
        basis_[static_cast<std::size_t>(i)] = n_ + i;
      }
    }
  }

  // Phase 1. Returns false when the program is infeasible.
  bool find_feasible() {
    if (k_ == 0) return true;
    std::vector<Rational> cost(static_cast<std::size_t>(cols_), 0);
    for (int j = n_ + m_; j < cols_; ++j) cost[static_cast<std::size_t>(j)] = -1;
    set_objective(cost);
    if (!optimize(cols_)) throw InternalError("phase one of the simplex method is unbounded");
    if (obj_[static_cast<std::size_t>(cols_)] != 0) return false;
    // Drive remaining artificial variables out of the basis.
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_ + m_) continue;
      int col = -1;
      for (int j = 0; j < n_ + m_; ++j) {
        if (rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --i;
      }
    }
    return true;
  }

  // Phase 2 on the original objective. Returns false when unbounded.
  bool maximize(const std::vector<Rational>& c) {
    std::vector<Rational> cost(static_cast<std::size_t>(cols_), 0);
    for (int j = 0; j < n_; ++j) cost[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
    set_objective(cost);
    return optimize(n_ + m_);
  }

  Rational value() const { return -obj_[static_cast<std::size_t>(cols_)]; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n_) x[static_cast<std::size_t>(basis_[i])] = rows_[i][static_cast<std::size_t>(cols_)];
    }
    return x;
  }

 private:
  void set_objective(const std::vector<Rational>& cost) {
    obj_.assign(static_cast<std::size_t>(cols_ + 1), 0);
    for (int j = 0; j < cols_; ++j) obj_[static_cast<std::size_t>(j)] = cost[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[static_cast<std::size_t>(basis_[i])];
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) obj_[static_cast<std::size_t>(j)] -= cb * rows_[i][static_cast<std::size_t>(j)];
    }
  }

  // Bland's rule: lowest improving column enters, lowest basic index breaks ratio ties.
  bool optimize(int allowed_columns) {
    while (true) {
      int col = -1;
      for (int j = 0; j < allowed_columns; ++j) {
        if (obj_[static_cast<std::size_t>(j)] > 0) {
          col = j;
          break;
        }
      }
      if (col < 0) return true;
      int row = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
        const Rational& aij = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
        if (aij <= 0) continue;
        Rational ratio = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_)] / aij;
        if (row < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(row)])) {
          row = i;
          best = ratio;
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }

  void pivot(int r, int col) {
    auto& pr = rows_[static_cast<std::size_t>(r)];
    const Rational p = pr[static_cast<std::size_t>(col)];
    for (auto& x : pr) x /= p;
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational f = row[static_cast<std::size_t>(col)];
      if (f == 0) return;
      for (int j = 0; j <= cols_; ++j) {
        if (pr[static_cast<std::size_t>(j)] != 0) row[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
      }
    };
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (i != r) eliminate(rows_[static_cast<std::size_t>(i)]);
    }
    if (!obj_.empty()) eliminate(obj_);
    basis_[static_cast<std::size_t>(r)] = col;
  }

  int n_;
  int m_;
  int k_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  std::vector<Rational> obj_;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  if (lp.a.size() != lp.b.size()) throw Error("constraint matrix and right-hand side differ in length");
  Tableau t(lp);
  LpResult r;
  if (!t.find_feasible()) {
    r.status = LpStatus::infeasible;
    return r;
  }
  if (!t.maximize(lp.c)) {
    r.status = LpStatus::unbounded;
    return r;
  }
  r.status = LpStatus::optimal;
  r.value = t.value();
  r.x = t.solution();
  return r;
}

}  // namespace outer
