#pragma once

#include <chanorder/matrix.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chanorder {

// maximize objective . x  subject to  constraints x = rhs, x >= 0.
struct LPProblem {
  RMatrix constraints;             // rows = equalities, cols = variables
  std::vector<Rational> rhs;       // length rows
  std::vector<Rational> objective; // length cols
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Optimal outcomes carry a basic feasible solution with its exact objective
// value; infeasible outcomes carry an exact Farkas vector y with
// y' A <= 0 componentwise and y' rhs > 0.
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> solution;
  Rational objective_value = 0;
  std::vector<Rational> farkas;
};

namespace detail {

// Dense rational tableau simplex with Bland's rule (smallest entering index;
// smallest basis index among tied minimum ratios), which cannot cycle and
// makes output reproducible. Phase 1 starts from an all-artificial basis;
// when the phase-1 optimum is negative, the Farkas vector is read off the
// artificial reduced costs.
class Simplex {
 public:
  Simplex(const RMatrix& a, const std::vector<Rational>& b,
          const std::vector<Rational>& objective)
      : n_(a.cols()), art_(a.rows()), flip_(a.rows(), false) {
    const std::size_t m = a.rows();
    tab_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n_ + art_ + 1);
      const bool flip = b[i] < 0;
      flip_[i] = flip;
      for (std::size_t j = 0; j < n_; ++j) row[j] = flip ? Rational(-a(i, j)) : a(i, j);
      row[n_ + i] = 1;
      row[n_ + art_] = flip ? Rational(-b[i]) : b[i];
      tab_.push_back(std::move(row));
      basis_.push_back(n_ + i);
    }
    objective_ = objective;
  }

  LPOutcome run() {
    LPOutcome outcome;

    // Phase 1: maximize minus the sum of artificials. With the artificial
    // basis the reduced cost of original column j is the column sum.
    reduced_.assign(n_ + art_, Rational(0));
    value_ = 0;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] += tab_[i][j];
      value_ -= rhs(i);
    }
    iterate(/*phase1=*/true);
    if (value_ < 0) {
      outcome.status = LPStatus::Infeasible;
      outcome.farkas.resize(art_);
      for (std::size_t i = 0; i < art_; ++i) {
        // reduced cost of artificial i is -1 - y_i for simplex multipliers y;
        // -y separates, and row flips map it back to the original system.
        Rational yi = Rational(1) + reduced_[n_ + i];
        outcome.farkas[i] = flip_[i] ? Rational(-yi) : yi;
      }
      return outcome;
    }

    drive_out_artificials();

    // Phase 2 over the original columns only.
    reduced_.assign(n_ + art_, Rational(0));
    value_ = 0;
    for (std::size_t j = 0; j < n_; ++j) reduced_[j] = objective_[j];
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      const Rational& cb = basis_[i] < n_ ? objective_[basis_[i]] : zero_;
      if (cb == 0) continue;
      value_ += cb * rhs(i);
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] -= cb * tab_[i][j];
    }
    if (!iterate(/*phase1=*/false)) {
      outcome.status = LPStatus::Unbounded;
      return outcome;
    }

    outcome.status = LPStatus::Optimal;
    outcome.solution.assign(n_, Rational(0));
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (basis_[i] < n_) outcome.solution[basis_[i]] = rhs(i);
    }
    outcome.objective_value = value_;
    return outcome;
  }

 private:
  Rational& rhs(std::size_t i) { return tab_[i][n_ + art_]; }

  // Returns false on unboundedness (phase 2 only).
  bool iterate(bool phase1) {
    const std::size_t limit = phase1 ? n_ + art_ : n_;
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;

      std::size_t leave = tab_.size();
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (tab_[i][enter] <= 0) continue;
        const Rational ratio = rhs(i) / tab_[i][enter];
        if (leave == tab_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == tab_.size()) {
        if (phase1) throw std::logic_error("phase-1 objective cannot be unbounded");
        return false;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    std::vector<Rational>& prow = tab_[r];
    const Rational inv = Rational(1) / prow[e];
    for (Rational& cell : prow) cell *= inv;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == r || tab_[i][e] == 0) continue;
      const Rational factor = tab_[i][e];
      for (std::size_t j = 0; j < prow.size(); ++j) tab_[i][j] -= factor * prow[j];
    }
    const Rational rcost = reduced_[e];
    if (rcost != 0) {
      value_ += rcost * prow[n_ + art_];
      for (std::size_t j = 0; j < n_ + art_; ++j) reduced_[j] -= rcost * prow[j];
    }
    basis_[r] = e;
  }

  // At a zero phase-1 optimum some artificials can linger in the basis at
  // value 0; pivot them to an original column or drop the (redundant) row.
  void drive_out_artificials() {
    for (std::size_t i = tab_.size(); i-- > 0;) {
      if (basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (tab_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < n_) {
        pivot(i, col);
      } else {
        tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t n_;
  std::size_t art_;
  std::vector<bool> flip_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  std::vector<Rational> objective_;
  Rational value_ = 0;
  const Rational zero_ = 0;
};

}  // namespace detail

inline LPOutcome solve(const LPProblem& problem) {
  if (problem.rhs.size() != problem.constraints.rows() ||
      problem.objective.size() != problem.constraints.cols()) {
    throw std::invalid_argument("LP dimensions are inconsistent");
  }
  detail::Simplex simplex(problem.constraints, problem.rhs, problem.objective);
  return simplex.run();
}

inline LPOutcome feasible(const RMatrix& constraints, const std::vector<Rational>& rhs) {
  return solve(LPProblem{constraints, rhs,
                         std::vector<Rational>(constraints.cols(), Rational(0))});
}

// Exact re-check of an outcome against its problem; tests run this on every
// solver return.
inline bool outcome_consistent(const LPProblem& p, const LPOutcome& o) {
  switch (o.status) {
    case LPStatus::Optimal: {
      if (o.solution.size() != p.constraints.cols()) return false;
      Rational objective = 0;
      for (std::size_t j = 0; j < o.solution.size(); ++j) {
        if (o.solution[j] < 0) return false;
        objective += p.objective[j] * o.solution[j];
      }
      if (objective != o.objective_value) return false;
      for (std::size_t i = 0; i < p.constraints.rows(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < p.constraints.cols(); ++j) {
          lhs += p.constraints(i, j) * o.solution[j];
        }
        if (lhs != p.rhs[i]) return false;
      }
      return true;
    }
    case LPStatus::Infeasible: {
      if (o.farkas.size() != p.constraints.rows()) return false;
      Rational ytb = 0;
      for (std::size_t i = 0; i < p.constraints.rows(); ++i) ytb += o.farkas[i] * p.rhs[i];
      if (!(ytb > 0)) return false;
      for (std::size_t j = 0; j < p.constraints.cols(); ++j) {
        Rational yta = 0;
        for (std::size_t i = 0; i < p.constraints.rows(); ++i) {
          yta += o.farkas[i] * p.constraints(i, j);
        }
        if (yta > 0) return false;
      }
      return true;
    }
    case LPStatus::Unbounded:
      return true;
  }
  return false;
}

// Assembles maximize c.x, A x = b, x >= 0 from mixed =/<=/>= rows; one slack
// (or surplus) variable is appended per inequality in row order, so variable
// indices and solver output are stable across runs.
class StandardFormBuilder {
 public:
  using Terms = std::vector<std::pair<std::size_t, Rational>>;

  std::size_t add_variable() { return n_vars_++; }

  void set_objective(std::size_t var, Rational coefficient) {
    objective_.emplace_back(var, std::move(coefficient));
  }

  void add_eq(Terms terms, Rational rhs) { add_row(std::move(terms), Rel::Eq, std::move(rhs)); }
  void add_le(Terms terms, Rational rhs) { add_row(std::move(terms), Rel::Le, std::move(rhs)); }
  void add_ge(Terms terms, Rational rhs) { add_row(std::move(terms), Rel::Ge, std::move(rhs)); }

  std::size_t variable_count() const { return n_vars_; }

  LPProblem build() const {
    std::size_t slacks = 0;
    for (const Row& row : rows_) {
      if (row.rel != Rel::Eq) ++slacks;
    }
    const std::size_t total = n_vars_ + slacks;
    if (rows_.empty() || total == 0) throw std::invalid_argument("empty LP");
    RMatrix a(rows_.size(), total);
    std::vector<Rational> b(rows_.size());
    std::size_t next_slack = n_vars_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Row& row = rows_[i];
      for (const auto& [var, coef] : row.terms) a(i, var) += coef;
      if (row.rel == Rel::Le) a(i, next_slack++) = 1;
      if (row.rel == Rel::Ge) a(i, next_slack++) = -1;
      b[i] = row.rhs;
    }
    std::vector<Rational> c(total, Rational(0));
    for (const auto& [var, coef] : objective_) c[var] += coef;
    return LPProblem{std::move(a), std::move(b), std::move(c)};
  }

 private:
  enum class Rel { Eq, Le, Ge };
  struct Row {
    Terms terms;
    Rel rel;
    Rational rhs;
  };

  void add_row(Terms terms, Rel rel, Rational rhs) {
    for (const auto& [var, coef] : terms) {
      if (var >= n_vars_) throw std::invalid_argument("constraint references unknown variable");
      (void)coef;
    }
    rows_.push_back(Row{std::move(terms), rel, std::move(rhs)});
  }

  std::size_t n_vars_ = 0;
  std::vector<Row> rows_;
  std::vector<std::pair<std::size_t, Rational>> objective_;
};

}  // namespace chanorder
