#include "tsaudit/lp.hpp"

#include <string>

#include "tsaudit/errors.hpp"

namespace tsaudit {

std::size_t LinearProgram::add_variable(Rational cost, std::optional<Rational> lo,
                                        std::optional<Rational> hi) {
  objective.push_back(std::move(cost));
  lower.push_back(std::move(lo));
  upper.push_back(std::move(hi));
  for (auto& row : constraints) row.coeffs.emplace_back();
  return objective.size() - 1;
}

void LinearProgram::add_constraint(RationalVector coeffs, Relation relation, Rational rhs) {
  constraints.push_back(Constraint{std::move(coeffs), relation, std::move(rhs)});
}

void check_well_formed(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (lp.lower.size() != n || lp.upper.size() != n) {
    throw StructureError("bound vectors have " + std::to_string(lp.lower.size()) + "/" +
                         std::to_string(lp.upper.size()) + " entries for " +
                         std::to_string(n) + " variables");
  }
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    if (lp.constraints[r].coeffs.size() != n) {
      throw StructureError("constraint row " + std::to_string(r) + " has " +
                           std::to_string(lp.constraints[r].coeffs.size()) +
                           " coefficients for " + std::to_string(n) + " variables");
    }
  }
}

std::string LpOutcome::status_name() const {
  if (optimal()) return "optimal";
  if (infeasible()) return "infeasible";
  return "unbounded";
}

namespace {

using Q = mpq_class;

// Working problem: columns are n structurals, m row slacks, then one
// artificial per row that needed one. Row r reads a_r . x + s_r (+ sigma w_r) = b_r.
class Simplex {
 public:
  Simplex(const LinearProgram& lp, const SolveOptions& options)
      : lp_(lp), options_(options), n_(lp.num_vars()), m_(lp.constraints.size()) {}

  LpOutcome run();

 private:
  struct Bound {
    bool has = false;
    Q value;
  };

  enum class Step { Optimal, Unbounded };

  void setup();
  Step iterate(const std::vector<Q>& cost);
  void compute_reduced_costs(const std::vector<Q>& cost);
  void pivot(std::size_t row, std::size_t col);
  LpOutcome infeasible_from_phase_one() const;
  LpOutcome optimal_from_phase_two(const std::vector<Q>& cost) const;

  bool at_lower(std::size_t j) const { return lo_[j].has && value_[j] == lo_[j].value; }
  bool at_upper(std::size_t j) const { return hi_[j].has && value_[j] == hi_[j].value; }

  const LinearProgram& lp_;
  const SolveOptions& options_;
  std::size_t n_;
  std::size_t m_;
  std::size_t cols_ = 0;

  std::vector<std::vector<Q>> tab_;  // B^-1 [A I D], m_ x cols_
  std::vector<Q> value_;
  std::vector<Bound> lo_;
  std::vector<Bound> hi_;
  std::vector<std::size_t> basis_;   // basic column of each row
  std::vector<long> row_of_;         // row of a basic column, -1 if nonbasic
  std::vector<bool> artificial_;
  std::vector<Q> reduced_;
  std::size_t iterations_ = 0;

  // Filled when phase two stops on an unbounded direction.
  std::size_t ray_col_ = 0;
  int ray_dir_ = 0;
};

void Simplex::setup() {
  std::vector<Q> residual(m_);
  value_.assign(n_ + m_, Q(0));
  lo_.assign(n_ + m_, Bound{});
  hi_.assign(n_ + m_, Bound{});
  for (std::size_t j = 0; j < n_; ++j) {
    if (lp_.lower[j]) lo_[j] = Bound{true, lp_.lower[j]->raw()};
    if (lp_.upper[j]) hi_[j] = Bound{true, lp_.upper[j]->raw()};
    if (lo_[j].has) {
      value_[j] = lo_[j].value;
    } else if (hi_[j].has) {
      value_[j] = hi_[j].value;
    }
  }
  std::vector<int> sigma(m_, 0);
  std::size_t artificial_count = 0;
  for (std::size_t r = 0; r < m_; ++r) {
    const auto& row = lp_.constraints[r];
    Q rho = row.rhs.raw();
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(row.coeffs[j].raw()) != 0 && sgn(value_[j]) != 0) rho -= row.coeffs[j].raw() * value_[j];
    }
    const std::size_t s = n_ + r;
    switch (row.relation) {
      case Relation::LessEqual:
        lo_[s] = Bound{true, Q(0)};
        break;
      case Relation::GreaterEqual:
        hi_[s] = Bound{true, Q(0)};
        break;
      case Relation::Equal:
        lo_[s] = Bound{true, Q(0)};
        hi_[s] = Bound{true, Q(0)};
        break;
    }
    const bool slack_ok = (!lo_[s].has || rho >= lo_[s].value) && (!hi_[s].has || rho <= hi_[s].value);
    if (!slack_ok) {
      sigma[r] = sgn(rho);
      ++artificial_count;
    }
    residual[r] = rho;
  }

  cols_ = n_ + m_ + artificial_count;
  value_.resize(cols_);
  lo_.resize(cols_);
  hi_.resize(cols_);
  artificial_.assign(cols_, false);
  row_of_.assign(cols_, -1);
  basis_.assign(m_, 0);
  tab_.assign(m_, std::vector<Q>(cols_));

  std::size_t next_art = n_ + m_;
  for (std::size_t r = 0; r < m_; ++r) {
    const auto& row = lp_.constraints[r];
    const std::size_t s = n_ + r;
    auto& t = tab_[r];
    for (std::size_t j = 0; j < n_; ++j) t[j] = row.coeffs[j].raw();
    t[s] = 1;
    if (sigma[r] == 0) {
      basis_[r] = s;
      row_of_[s] = static_cast<long>(r);
      value_[s] = residual[r];
    } else {
      const std::size_t w = next_art++;
      artificial_[w] = true;
      lo_[w] = Bound{true, Q(0)};
      // Scale the row so the artificial's column is a unit vector.
      if (sigma[r] < 0) {
        for (auto& v : t) v = -v;
      }
      t[w] = 1;
      basis_[r] = w;
      row_of_[w] = static_cast<long>(r);
      value_[w] = abs(residual[r]);
      value_[s] = 0;
    }
  }
}

void Simplex::compute_reduced_costs(const std::vector<Q>& cost) {
  reduced_ = cost;
  Q scratch;
  for (std::size_t r = 0; r < m_; ++r) {
    const Q& cb = cost[basis_[r]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(tab_[r][j]) == 0) continue;
      mpq_mul(scratch.get_mpq_t(), cb.get_mpq_t(), tab_[r][j].get_mpq_t());
      mpq_sub(reduced_[j].get_mpq_t(), reduced_[j].get_mpq_t(), scratch.get_mpq_t());
    }
  }
}

void Simplex::pivot(std::size_t row, std::size_t col) {
  Q scratch;
  const Q p = tab_[row][col];
  auto& pr = tab_[row];
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(pr[j]) != 0) pr[j] /= p;
  }
  for (std::size_t r = 0; r < m_; ++r) {
    if (r == row || sgn(tab_[r][col]) == 0) continue;
    const Q factor = tab_[r][col];
    auto& tr = tab_[r];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(pr[j]) == 0) continue;
      mpq_mul(scratch.get_mpq_t(), factor.get_mpq_t(), pr[j].get_mpq_t());
      mpq_sub(tr[j].get_mpq_t(), tr[j].get_mpq_t(), scratch.get_mpq_t());
    }
  }
  if (sgn(reduced_[col]) != 0) {
    const Q factor = reduced_[col];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(pr[j]) == 0) continue;
      mpq_mul(scratch.get_mpq_t(), factor.get_mpq_t(), pr[j].get_mpq_t());
      mpq_sub(reduced_[j].get_mpq_t(), reduced_[j].get_mpq_t(), scratch.get_mpq_t());
    }
  }
  const std::size_t leaving = basis_[row];
  row_of_[leaving] = -1;
  basis_[row] = col;
  row_of_[col] = static_cast<long>(row);
}

Simplex::Step Simplex::iterate(const std::vector<Q>& cost) {
  compute_reduced_costs(cost);
  while (true) {
    if (++iterations_ > options_.max_iterations) {
      throw InternalError("simplex exceeded " + std::to_string(options_.max_iterations) +
                          " iterations");
    }
    // Bland: lowest-index improving nonbasic column.
    std::size_t enter = cols_;
    int dir = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row_of_[j] >= 0) continue;
      const int d = sgn(reduced_[j]);
      if (d > 0 && !at_upper(j)) {
        enter = j;
        dir = 1;
        break;
      }
      if (d < 0 && !at_lower(j)) {
        enter = j;
        dir = -1;
        break;
      }
    }
    if (enter == cols_) return Step::Optimal;

    // Ratio test. Moving the entering column by dir * t changes the basic
    // variable of row r at rate -tab[r][enter] * dir.
    bool limited = false;
    Q best;
    std::size_t leave_row = m_;
    bool flip = false;
    if (lo_[enter].has && hi_[enter].has) {
      best = hi_[enter].value - lo_[enter].value;
      limited = true;
      flip = true;
    }
    for (std::size_t r = 0; r < m_; ++r) {
      const int a = sgn(tab_[r][enter]);
      if (a == 0) continue;
      const int rate = -a * dir;
      const std::size_t b = basis_[r];
      Q room;
      if (rate < 0) {
        if (!lo_[b].has) continue;
        room = (value_[b] - lo_[b].value) / abs(tab_[r][enter]);
      } else {
        if (!hi_[b].has) continue;
        room = (hi_[b].value - value_[b]) / abs(tab_[r][enter]);
      }
      const bool better = !limited || room < best ||
                          (room == best && !flip && leave_row < m_ && b < basis_[leave_row]);
      if (better) {
        best = room;
        leave_row = r;
        limited = true;
        flip = false;
      }
    }
    if (!limited) {
      ray_col_ = enter;
      ray_dir_ = dir;
      return Step::Unbounded;
    }

    // Apply the step to all values.
    if (sgn(best) != 0) {
      const Q delta = dir > 0 ? best : Q(-best);
      value_[enter] += delta;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(tab_[r][enter]) == 0) continue;
        value_[basis_[r]] -= tab_[r][enter] * delta;
      }
    }
    if (flip) {
      value_[enter] = dir > 0 ? hi_[enter].value : lo_[enter].value;
      continue;
    }
    const std::size_t leaving = basis_[leave_row];
    const int rate = -sgn(tab_[leave_row][enter]) * dir;
    value_[leaving] = rate < 0 ? lo_[leaving].value : hi_[leaving].value;
    pivot(leave_row, enter);
    if (artificial_[leaving]) {
      hi_[leaving] = Bound{true, Q(0)};
    }
  }
}

LpOutcome Simplex::infeasible_from_phase_one() const {
  Infeasible cert;
  cert.y.resize(m_);
  cert.lambda.resize(n_);
  cert.mu.resize(n_);
  for (std::size_t r = 0; r < m_; ++r) {
    // Phase-one row dual is -reduced[slack]; the certificate negates it.
    cert.y[r] = Rational(reduced_[n_ + r]);
  }
  for (std::size_t j = 0; j < n_; ++j) {
    if (row_of_[j] >= 0) continue;
    const int d = sgn(reduced_[j]);
    if (d < 0) {
      cert.lambda[j] = Rational(Q(-reduced_[j]));
    } else if (d > 0) {
      cert.mu[j] = Rational(Q(-reduced_[j]));
    }
  }
  return LpOutcome{std::move(cert)};
}

LpOutcome Simplex::optimal_from_phase_two(const std::vector<Q>& cost) const {
  Optimal opt;
  opt.x.resize(n_);
  opt.row_duals.resize(m_);
  opt.lower_duals.resize(n_);
  opt.upper_duals.resize(n_);
  Q value;
  for (std::size_t j = 0; j < n_; ++j) {
    opt.x[j] = Rational(value_[j]);
    value += cost[j] * value_[j];
  }
  opt.value = Rational(value);
  for (std::size_t r = 0; r < m_; ++r) opt.row_duals[r] = Rational(Q(-reduced_[n_ + r]));
  for (std::size_t j = 0; j < n_; ++j) {
    if (row_of_[j] >= 0) continue;
    const int d = sgn(reduced_[j]);
    if (d < 0) {
      opt.lower_duals[j] = Rational(reduced_[j]);
    } else if (d > 0) {
      opt.upper_duals[j] = Rational(reduced_[j]);
    }
  }
  return LpOutcome{std::move(opt)};
}

LpOutcome Simplex::run() {
  // Crossed bounds are infeasible without any row.
  for (std::size_t j = 0; j < n_; ++j) {
    if (lp_.lower[j] && lp_.upper[j] && *lp_.lower[j] > *lp_.upper[j]) {
      Infeasible cert;
      cert.y.resize(m_);
      cert.lambda.resize(n_);
      cert.mu.resize(n_);
      cert.lambda[j] = 1;
      cert.mu[j] = -1;
      return LpOutcome{std::move(cert)};
    }
  }

  setup();

  bool any_artificial = false;
  for (bool a : artificial_) any_artificial = any_artificial || a;
  if (any_artificial) {
    std::vector<Q> phase_one(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (artificial_[j]) phase_one[j] = -1;
    }
    iterate(phase_one);
    Q total;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (artificial_[j]) total += value_[j];
    }
    if (sgn(total) > 0) return infeasible_from_phase_one();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (artificial_[j]) hi_[j] = Bound{true, Q(0)};
    }
  }

  std::vector<Q> cost(cols_);
  for (std::size_t j = 0; j < n_; ++j) cost[j] = lp_.objective[j].raw();
  if (iterate(cost) == Step::Unbounded) {
    Unbounded unb;
    unb.point.resize(n_);
    unb.ray.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) unb.point[j] = Rational(value_[j]);
    if (ray_col_ < n_) unb.ray[ray_col_] = ray_dir_;
    for (std::size_t r = 0; r < m_; ++r) {
      const std::size_t b = basis_[r];
      if (b < n_ && sgn(tab_[r][ray_col_]) != 0) {
        unb.ray[b] = Rational(Q(-tab_[r][ray_col_] * ray_dir_));
      }
    }
    return LpOutcome{std::move(unb)};
  }
  return optimal_from_phase_two(cost);
}

bool row_holds(const Constraint& row, const Rational& lhs) {
  switch (row.relation) {
    case Relation::LessEqual:
      return lhs <= row.rhs;
    case Relation::GreaterEqual:
      return lhs >= row.rhs;
    case Relation::Equal:
      return lhs == row.rhs;
  }
  return false;
}

// Column sums A^T y.
RationalVector transpose_times(const LinearProgram& lp, const RationalVector& y) {
  RationalVector out(lp.num_vars());
  mpq_class scratch;
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    if (y[r].is_zero()) continue;
    const auto& c = lp.constraints[r].coeffs;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!c[j].is_zero()) out[j].add_product(c[j], y[r], scratch);
    }
  }
  return out;
}

bool row_multiplier_signs(const LinearProgram& lp, const RationalVector& y, int le_sign) {
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    const int s = y[r].sign();
    switch (lp.constraints[r].relation) {
      case Relation::LessEqual:
        if (s == -le_sign) return false;
        break;
      case Relation::GreaterEqual:
        if (s == le_sign) return false;
        break;
      case Relation::Equal:
        break;
    }
  }
  return true;
}

bool verify_optimal(const LinearProgram& lp, const Optimal& opt) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.constraints.size();
  if (opt.x.size() != n || opt.row_duals.size() != m || opt.lower_duals.size() != n ||
      opt.upper_duals.size() != n) {
    return false;
  }
  if (!is_feasible_point(lp, opt.x)) return false;
  if (dot(lp.objective, opt.x) != opt.value) return false;
  if (!row_multiplier_signs(lp, opt.row_duals, 1)) return false;
  RationalVector recon = transpose_times(lp, opt.row_duals);
  Rational dual_value;
  for (std::size_t r = 0; r < m; ++r) dual_value += opt.row_duals[r] * lp.constraints[r].rhs;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& dl = opt.lower_duals[j];
    const auto& du = opt.upper_duals[j];
    if (dl.sign() > 0 || du.sign() < 0) return false;
    if (!dl.is_zero()) {
      if (!lp.lower[j]) return false;
      dual_value += dl * *lp.lower[j];
    }
    if (!du.is_zero()) {
      if (!lp.upper[j]) return false;
      dual_value += du * *lp.upper[j];
    }
    if (recon[j] + dl + du != lp.objective[j]) return false;
  }
  return dual_value == opt.value;
}

bool verify_infeasible(const LinearProgram& lp, const Infeasible& cert) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.constraints.size();
  if (cert.y.size() != m || cert.lambda.size() != n || cert.mu.size() != n) return false;
  if (!row_multiplier_signs(lp, cert.y, -1)) return false;
  RationalVector combo = transpose_times(lp, cert.y);
  Rational bound_value;
  for (std::size_t r = 0; r < m; ++r) bound_value += cert.y[r] * lp.constraints[r].rhs;
  for (std::size_t j = 0; j < n; ++j) {
    if (cert.lambda[j].sign() < 0 || cert.mu[j].sign() > 0) return false;
    if (!cert.lambda[j].is_zero()) {
      if (!lp.lower[j]) return false;
      bound_value += cert.lambda[j] * *lp.lower[j];
    }
    if (!cert.mu[j].is_zero()) {
      if (!lp.upper[j]) return false;
      bound_value += cert.mu[j] * *lp.upper[j];
    }
    if (!(combo[j] + cert.lambda[j] + cert.mu[j]).is_zero()) return false;
  }
  return bound_value.sign() > 0;
}

bool verify_unbounded(const LinearProgram& lp, const Unbounded& unb) {
  const std::size_t n = lp.num_vars();
  if (unb.point.size() != n || unb.ray.size() != n) return false;
  if (!is_feasible_point(lp, unb.point)) return false;
  if (dot(lp.objective, unb.ray).sign() <= 0) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower[j] && unb.ray[j].sign() < 0) return false;
    if (lp.upper[j] && unb.ray[j].sign() > 0) return false;
  }
  for (const auto& row : lp.constraints) {
    const int s = dot(row.coeffs, unb.ray).sign();
    if (row.relation == Relation::LessEqual && s > 0) return false;
    if (row.relation == Relation::GreaterEqual && s < 0) return false;
    if (row.relation == Relation::Equal && s != 0) return false;
  }
  return true;
}

}  // namespace

LpOutcome solve(const LinearProgram& lp, const SolveOptions& options) {
  check_well_formed(lp);
  Simplex simplex(lp, options);
  return simplex.run();
}

bool is_feasible_point(const LinearProgram& lp, const RationalVector& x) {
  if (x.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  for (const auto& row : lp.constraints) {
    if (!row_holds(row, dot(row.coeffs, x))) return false;
  }
  return true;
}

bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome) {
  try {
    check_well_formed(lp);
  } catch (const StructureError&) {
    return false;
  }
  if (outcome.optimal()) return verify_optimal(lp, outcome.as_optimal());
  if (outcome.infeasible()) return verify_infeasible(lp, outcome.as_infeasible());
  return verify_unbounded(lp, outcome.as_unbounded());
}

}  // namespace tsaudit
