#include "splitcut/lp.hpp"

#include <stdexcept>

namespace splitcut {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::infeasible:
      return "infeasible";
    case LpStatus::unbounded:
      return "unbounded";
  }
  return "unknown";
}

LpProblem::LpProblem(std::size_t num_vars) : num_vars_(num_vars), objective_(num_vars) {}

void LpProblem::set_objective(std::vector<Rational> c) {
  require_same_dim(c.size(), num_vars_, "LP objective");
  objective_ = std::move(c);
}

void LpProblem::add_row(std::vector<Rational> coeffs, RowSense sense, Rational rhs) {
  require_same_dim(coeffs.size(), num_vars_, "LP row");
  rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

using Row = std::vector<mpq_class>;

// Tableau over the standard form [A_std | I_art] x = b with b >= 0.
class Tableau {
 public:
  Tableau(const LpProblem& p) : m_(p.num_rows()) {
    const auto& rows = p.rows();
    std::size_t slacks = 0;
    for (const auto& r : rows) {
      if (r.sense != RowSense::equal) ++slacks;
    }
    n_orig_ = p.num_vars();
    n_std_ = n_orig_ + slacks;
    width_ = n_std_ + m_;
    t_.assign(m_, Row(width_));
    b_.resize(m_);
    sign_.assign(m_, 1);
    basis_.resize(m_);
    std::size_t slack = n_orig_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& r = rows[i];
      for (std::size_t j = 0; j < n_orig_; ++j) t_[i][j] = r.coeffs[j].mpq();
      if (r.sense == RowSense::greater_equal) t_[i][slack++] = -1;
      if (r.sense == RowSense::less_equal) t_[i][slack++] = 1;
      b_[i] = r.rhs.mpq();
      if (sgn(b_[i]) < 0) {
        sign_[i] = -1;
        b_[i] = -b_[i];
        for (std::size_t j = 0; j < n_std_; ++j) t_[i][j] = -t_[i][j];
      }
      t_[i][n_std_ + i] = 1;
      basis_[i] = n_std_ + i;
    }
  }

  std::size_t rows() const { return m_; }
  std::size_t standard_columns() const { return n_std_; }
  std::size_t original_columns() const { return n_orig_; }
  std::size_t pivots() const { return pivots_; }

  void set_cost(Row cost) {
    cost_ = std::move(cost);
    reduced_ = cost_;
    value_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const mpq_class& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(t_[i][j]) != 0) reduced_[j] -= cb * t_[i][j];
      }
      value_ += cb * b_[i];
    }
  }

  const mpq_class& value() const { return value_; }

  // Runs Bland's rule over columns [0, limit). Returns the column of an
  // unbounded ray, or width_ when optimal.
  std::size_t run(std::size_t limit) {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return width_;
      std::size_t leave = m_;
      mpq_class best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        mpq_class ratio = b_[i] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return enter;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const mpq_class piv = t_[r][c];
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(t_[r][j]) != 0) t_[r][j] /= piv;
    }
    b_[r] /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const mpq_class factor = t_[i][c];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(t_[r][j]) != 0) t_[i][j] -= factor * t_[r][j];
      }
      b_[i] -= factor * b_[r];
    }
    if (sgn(reduced_[c]) != 0) {
      const mpq_class factor = reduced_[c];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(t_[r][j]) != 0) reduced_[j] -= factor * t_[r][j];
      }
      value_ += factor * b_[r];
    }
    basis_[r] = c;
  }

  // Pivots zero-level artificial variables out of the basis where a
  // non-artificial column allows it; rows that stay artificial are redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_std_) continue;
      for (std::size_t j = 0; j < n_std_; ++j) {
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // Row multipliers for the original (unflipped) rows: y = D B^{-T} c_B.
  std::vector<Rational> multipliers() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      mpq_class acc;
      for (std::size_t k = 0; k < m_; ++k) {
        const mpq_class& cb = cost_[basis_[k]];
        if (sgn(cb) != 0) acc += cb * t_[k][n_std_ + i];
      }
      if (sign_[i] < 0) acc = -acc;
      y[i] = Rational(acc);
    }
    return y;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_orig_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_orig_) x[basis_[i]] = Rational(b_[i]);
    }
    return x;
  }

  std::vector<Rational> ray(std::size_t c) const {
    std::vector<Rational> d(n_orig_);
    if (c < n_orig_) d[c] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_orig_) d[basis_[i]] = Rational(mpq_class(-t_[i][c]));
    }
    return d;
  }

 private:
  std::size_t m_;
  std::size_t n_orig_ = 0;
  std::size_t n_std_ = 0;
  std::size_t width_ = 0;
  std::vector<Row> t_;
  Row b_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  Row cost_;
  Row reduced_;
  mpq_class value_;
  std::size_t pivots_ = 0;
};

Rational row_activity(const std::vector<Rational>& coeffs, const std::vector<Rational>& x) {
  mpq_class acc;
  for (std::size_t j = 0; j < coeffs.size(); ++j) acc += coeffs[j].mpq() * x[j].mpq();
  return Rational(acc);
}

bool sense_holds(RowSense sense, const Rational& lhs, const Rational& rhs) {
  switch (sense) {
    case RowSense::equal:
      return lhs == rhs;
    case RowSense::greater_equal:
      return lhs >= rhs;
    case RowSense::less_equal:
      return lhs <= rhs;
  }
  return false;
}

bool multiplier_sign_ok(RowSense sense, const Rational& y) {
  if (sense == RowSense::greater_equal) return y.sign() >= 0;
  if (sense == RowSense::less_equal) return y.sign() <= 0;
  return true;
}

bool primal_feasible(const LpProblem& p, const std::vector<Rational>& x) {
  if (x.size() != p.num_vars()) return false;
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  for (const auto& r : p.rows()) {
    if (!sense_holds(r.sense, row_activity(r.coeffs, x), r.rhs)) return false;
  }
  return true;
}

// y^T A, column by column.
std::vector<Rational> transpose_times(const LpProblem& p, const std::vector<Rational>& y) {
  std::vector<mpq_class> acc(p.num_vars());
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (y[i].is_zero()) continue;
    const auto& coeffs = p.rows()[i].coeffs;
    for (std::size_t j = 0; j < p.num_vars(); ++j) acc[j] += y[i].mpq() * coeffs[j].mpq();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& a : acc) out.emplace_back(std::move(a));
  return out;
}

}  // namespace

LpOutcome solve(const LpProblem& problem) {
  Tableau tab(problem);
  const std::size_t m = tab.rows();
  const std::size_t n_std = tab.standard_columns();
  LpOutcome out;

  Row phase1(n_std + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n_std + i] = 1;
  tab.set_cost(std::move(phase1));
  tab.run(n_std);
  if (sgn(tab.value()) > 0) {
    out.status = LpStatus::infeasible;
    out.farkas = tab.multipliers();
    out.pivots = tab.pivots();
    if (!verify(problem, out)) throw std::logic_error("simplex produced an unverifiable Farkas certificate");
    return out;
  }

  tab.drive_out_artificials();
  Row phase2(n_std + m);
  for (std::size_t j = 0; j < problem.num_vars(); ++j) phase2[j] = problem.objective()[j].mpq();
  tab.set_cost(std::move(phase2));
  const std::size_t ray_col = tab.run(n_std);
  out.primal = tab.primal();
  out.pivots = tab.pivots();
  if (ray_col != n_std + m) {
    out.status = LpStatus::unbounded;
    out.ray = tab.ray(ray_col);
  } else {
    out.status = LpStatus::optimal;
    out.optimum = Rational(tab.value());
    out.duals = tab.multipliers();
  }
  if (!verify(problem, out)) throw std::logic_error("simplex produced an unverifiable certificate");
  return out;
}

bool verify(const LpProblem& p, const LpOutcome& o) {
  const auto& rows = p.rows();
  switch (o.status) {
    case LpStatus::optimal: {
      if (!primal_feasible(p, o.primal) || o.duals.size() != p.num_rows()) return false;
      if (row_activity(p.objective(), o.primal) != o.optimum) return false;
      Rational dual_value;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!multiplier_sign_ok(rows[i].sense, o.duals[i])) return false;
        dual_value += o.duals[i] * rows[i].rhs;
      }
      const auto ya = transpose_times(p, o.duals);
      for (std::size_t j = 0; j < p.num_vars(); ++j) {
        if (ya[j] > p.objective()[j]) return false;
      }
      return dual_value == o.optimum;
    }
    case LpStatus::infeasible: {
      if (o.farkas.size() != p.num_rows()) return false;
      Rational yb;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!multiplier_sign_ok(rows[i].sense, o.farkas[i])) return false;
        yb += o.farkas[i] * rows[i].rhs;
      }
      for (const auto& v : transpose_times(p, o.farkas)) {
        if (v.sign() > 0) return false;
      }
      return yb.sign() > 0;
    }
    case LpStatus::unbounded: {
      if (!primal_feasible(p, o.primal) || o.ray.size() != p.num_vars()) return false;
      for (const auto& v : o.ray) {
        if (v.sign() < 0) return false;
      }
      for (const auto& r : rows) {
        if (!sense_holds(r.sense, row_activity(r.coeffs, o.ray), Rational(0))) return false;
      }
      return row_activity(p.objective(), o.ray).sign() < 0;
    }
  }
  return false;
}

}  // namespace splitcut
