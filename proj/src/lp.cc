// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctn/lp.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ctn {
namespace {

std::atomic<std::uint64_t> g_solves{0};
std::atomic<std::uint64_t> g_optimal{0};
std::atomic<std::uint64_t> g_infeasible{0};
std::atomic<std::uint64_t> g_certificate_failures{0};

const char* RelationSymbol(Relation r) {
  switch (r) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

enum class ColumnKind { kStructural, kSlack, kArtificial };

struct Column {
  ColumnKind kind = ColumnKind::kStructural;
  int var = -1;   // structural: originating variable
  int sign = 1;   // structural: x_var = offset + sign * z
  std::vector<std::pair<int, mpq_class>> entries;  // (row, coefficient)
  mpq_class cost;                                  // phase-two cost
};

// The program rewritten as  min c.z  s.t.  A z = b,  z >= 0,  b >= 0.
// Rows are the original constraints followed by one row per finite upper
// bound. Variables with a finite lower bound are shifted, free ones split.
class StandardForm {
 public:
  explicit StandardForm(const LinearProgram& lp) {
    const int n = lp.num_variables();
    const bool maximize = lp.sense == Sense::kMaximize;
    offset_.assign(n, 0);
    var_columns_.assign(n, {});
    for (int j = 0; j < n; ++j) {
      const VariableBounds& b = lp.bounds()[j];
      mpq_class c = lp.objective()[j].mpq();
      if (maximize) c = -c;
      if (b.lower) {
        offset_[j] = b.lower->mpq();
        AddStructural(j, 1, c);
      } else {
        AddStructural(j, 1, c);
        AddStructural(j, -1, -c);
      }
    }
    // Row data before normalization.
    for (const LinearConstraint& con : lp.constraints()) {
      std::vector<std::pair<int, mpq_class>> terms;
      for (const LpTerm& t : con.terms) terms.emplace_back(t.var, t.coef.mpq());
      AddRow(terms, con.relation, con.rhs.mpq());
    }
    upper_row_of_var_.assign(n, -1);
    for (int j = 0; j < n; ++j) {
      const VariableBounds& b = lp.bounds()[j];
      if (!b.upper) continue;
      upper_row_of_var_[j] = static_cast<int>(rhs_.size());
      AddRow({{j, mpq_class(1)}}, Relation::kLessEqual, b.upper->mpq());
    }
    num_original_rows_ = lp.num_constraints();
    // Slack columns, then artificials for rows lacking a +1 slack.
    const int m = num_rows();
    initial_basis_.assign(m, -1);
    for (int r = 0; r < m; ++r) {
      if (relation_[r] == Relation::kEqual) continue;
      const int coef = (relation_[r] == Relation::kLessEqual ? 1 : -1) *
                       row_sign_[r];
      Column col;
      col.kind = ColumnKind::kSlack;
      col.entries.emplace_back(r, mpq_class(coef));
      columns_.push_back(std::move(col));
      if (coef == 1) initial_basis_[r] = static_cast<int>(columns_.size()) - 1;
    }
    for (int r = 0; r < m; ++r) {
      if (initial_basis_[r] >= 0) continue;
      Column col;
      col.kind = ColumnKind::kArtificial;
      col.entries.emplace_back(r, mpq_class(1));
      columns_.push_back(std::move(col));
      initial_basis_[r] = static_cast<int>(columns_.size()) - 1;
    }
  }

  int num_rows() const { return static_cast<int>(rhs_.size()); }
  int num_columns() const { return static_cast<int>(columns_.size()); }
  const Column& column(int k) const { return columns_[k]; }
  const mpq_class& rhs(int r) const { return rhs_[r]; }
  int row_sign(int r) const { return row_sign_[r]; }
  int num_original_rows() const { return num_original_rows_; }
  int upper_row_of_var(int j) const { return upper_row_of_var_[j]; }
  const mpq_class& offset(int j) const { return offset_[j]; }
  const std::vector<int>& initial_basis() const { return initial_basis_; }
  const std::vector<int>& var_columns(int j) const { return var_columns_[j]; }

 private:
  void AddStructural(int var, int sign, mpq_class cost) {
    Column col;
    col.kind = ColumnKind::kStructural;
    col.var = var;
    col.sign = sign;
    col.cost = std::move(cost);
    var_columns_[var].push_back(static_cast<int>(columns_.size()));
    columns_.push_back(std::move(col));
  }

  void AddRow(const std::vector<std::pair<int, mpq_class>>& terms,
              Relation relation, const mpq_class& rhs) {
    const int r = static_cast<int>(rhs_.size());
    mpq_class b = rhs;
    for (const auto& [var, a] : terms) b -= a * offset_[var];
    const int sign = sgn(b) < 0 ? -1 : 1;
    if (sign < 0) b = -b;
    for (const auto& [var, a] : terms) {
      for (int k : var_columns_[var]) {
        mpq_class v = a * columns_[k].sign;
        if (sign < 0) v = -v;
        columns_[k].entries.emplace_back(r, std::move(v));
      }
    }
    rhs_.push_back(std::move(b));
    row_sign_.push_back(sign);
    relation_.push_back(relation);
  }

  std::vector<Column> columns_;
  std::vector<std::vector<int>> var_columns_;
  std::vector<mpq_class> offset_;
  std::vector<mpq_class> rhs_;
  std::vector<int> row_sign_;
  std::vector<Relation> relation_;
  std::vector<int> upper_row_of_var_;
  std::vector<int> initial_basis_;
  int num_original_rows_ = 0;
};

// Revised simplex with an explicit dense basis inverse.
class RevisedSimplex {
 public:
  explicit RevisedSimplex(const StandardForm& form)
      : form_(form), m_(form.num_rows()) {
    basis_ = form.initial_basis();
    row_of_column_.assign(form.num_columns(), -1);
    for (int r = 0; r < m_; ++r) row_of_column_[basis_[r]] = r;
    binv_.assign(m_, std::vector<mpq_class>(m_, 0));
    for (int r = 0; r < m_; ++r) binv_[r][r] = 1;
    xb_.resize(m_);
    for (int r = 0; r < m_; ++r) xb_[r] = form.rhs(r);
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Minimizes with the given per-column costs over eligible columns.
  Outcome Run(const std::vector<mpq_class>& cost,
              const std::vector<bool>& eligible) {
    while (true) {
      const std::vector<mpq_class> y = Duals(cost);
      int entering = -1;
      for (int k = 0; k < form_.num_columns(); ++k) {
        if (row_of_column_[k] >= 0 || !eligible[k]) continue;
        if (sgn(ReducedCost(k, cost[k], y)) < 0) {
          entering = k;
          break;
        }
      }
      if (entering < 0) return Outcome::kOptimal;
      const std::vector<mpq_class> u = Ftran(entering);
      int leave = -1;
      mpq_class best;
      for (int r = 0; r < m_; ++r) {
        if (sgn(u[r]) <= 0) continue;
        mpq_class ratio = xb_[r] / u[r];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return Outcome::kUnbounded;
      Pivot(leave, entering, u);
    }
  }

  std::vector<mpq_class> Duals(const std::vector<mpq_class>& cost) const {
    std::vector<mpq_class> y(m_, 0);
    for (int r = 0; r < m_; ++r) {
      const mpq_class& c = cost[basis_[r]];
      if (sgn(c) == 0) continue;
      for (int k = 0; k < m_; ++k) {
        if (sgn(binv_[r][k]) != 0) y[k] += c * binv_[r][k];
      }
    }
    return y;
  }

  mpq_class ReducedCost(int k, const mpq_class& c,
                        const std::vector<mpq_class>& y) const {
    mpq_class d = c;
    for (const auto& [row, a] : form_.column(k).entries) {
      if (sgn(y[row]) != 0) d -= y[row] * a;
    }
    return d;
  }

  std::vector<mpq_class> Ftran(int k) const {
    std::vector<mpq_class> u(m_, 0);
    for (const auto& [row, a] : form_.column(k).entries) {
      for (int r = 0; r < m_; ++r) {
        if (sgn(binv_[r][row]) != 0) u[r] += binv_[r][row] * a;
      }
    }
    return u;
  }

  void Pivot(int leave, int entering, const std::vector<mpq_class>& u) {
    const mpq_class piv = u[leave];
    for (int k = 0; k < m_; ++k) {
      if (sgn(binv_[leave][k]) != 0) binv_[leave][k] /= piv;
    }
    xb_[leave] /= piv;
    for (int r = 0; r < m_; ++r) {
      if (r == leave || sgn(u[r]) == 0) continue;
      for (int k = 0; k < m_; ++k) {
        if (sgn(binv_[leave][k]) != 0) binv_[r][k] -= u[r] * binv_[leave][k];
      }
      xb_[r] -= u[r] * xb_[leave];
    }
    row_of_column_[basis_[leave]] = -1;
    basis_[leave] = entering;
    row_of_column_[entering] = leave;
    ++pivots_;
  }

  // Pivots zero-level artificials out of the basis where possible. Rows
  // where no other column has a nonzero entry are redundant; their
  // artificial stays basic at zero and is never touched again.
  void DriveOutArtificials() {
    for (int r = 0; r < m_; ++r) {
      if (form_.column(basis_[r]).kind != ColumnKind::kArtificial) continue;
      for (int k = 0; k < form_.num_columns(); ++k) {
        if (row_of_column_[k] >= 0) continue;
        if (form_.column(k).kind == ColumnKind::kArtificial) continue;
        mpq_class entry = 0;
        for (const auto& [row, a] : form_.column(k).entries) {
          if (sgn(binv_[r][row]) != 0) entry += binv_[r][row] * a;
        }
        if (sgn(entry) != 0) {
          Pivot(r, k, Ftran(k));
          break;
        }
      }
    }
  }

  mpq_class ArtificialLevel() const {
    mpq_class s = 0;
    for (int r = 0; r < m_; ++r) {
      if (form_.column(basis_[r]).kind == ColumnKind::kArtificial) s += xb_[r];
    }
    return s;
  }

  std::vector<mpq_class> ColumnValues() const {
    std::vector<mpq_class> z(form_.num_columns(), 0);
    for (int r = 0; r < m_; ++r) z[basis_[r]] = xb_[r];
    return z;
  }

  int pivots() const { return pivots_; }

 private:
  const StandardForm& form_;
  int m_;
  std::vector<int> basis_;
  std::vector<int> row_of_column_;
  std::vector<std::vector<mpq_class>> binv_;
  std::vector<mpq_class> xb_;
  int pivots_ = 0;
};

// Original-space primal point from standard-form column values.
RatVec RecoverPrimal(const LinearProgram& lp, const StandardForm& form,
                     const std::vector<mpq_class>& z) {
  RatVec x;
  x.reserve(lp.num_variables());
  for (int j = 0; j < lp.num_variables(); ++j) {
    mpq_class v = form.offset(j);
    for (int k : form.var_columns(j)) v += form.column(k).sign * z[k];
    x.emplace_back(v);
  }
  return x;
}

// Column sums  sum_r m_r a_rj  over the program's own constraints.
std::vector<mpq_class> ConstraintColumnSums(const LinearProgram& lp,
                                            const RatVec& m) {
  std::vector<mpq_class> s(lp.num_variables(), 0);
  for (int r = 0; r < lp.num_constraints(); ++r) {
    if (m[r].IsZero()) continue;
    for (const LpTerm& t : lp.constraints()[r].terms) {
      s[t.var] += m[r].mpq() * t.coef.mpq();
    }
  }
  return s;
}

LpResult ExtractOptimal(const LinearProgram& lp, const StandardForm& form,
                        const RevisedSimplex& simplex,
                        const std::vector<mpq_class>& cost) {
  LpResult result;
  result.status = LpStatus::kOptimal;
  result.primal = RecoverPrimal(lp, form, simplex.ColumnValues());
  mpq_class opt = 0;
  for (int j = 0; j < lp.num_variables(); ++j) {
    opt += lp.objective()[j].mpq() * result.primal[j].mpq();
  }
  result.optimum = Rat(opt);

  const std::vector<mpq_class> y = simplex.Duals(cost);
  const bool maximize = lp.sense == Sense::kMaximize;
  auto original_dual = [&](int r) {
    mpq_class v = y[r] * form.row_sign(r);
    if (maximize) v = -v;
    return Rat(v);
  };
  const int n = lp.num_variables();
  result.row_multipliers.reserve(lp.num_constraints());
  for (int r = 0; r < lp.num_constraints(); ++r) {
    result.row_multipliers.push_back(original_dual(r));
  }
  result.upper_bound_multipliers.assign(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    const int r = form.upper_row_of_var(j);
    if (r >= 0) result.upper_bound_multipliers[j] = original_dual(r);
  }
  // Whatever stationarity leaves over is carried by the lower bound.
  const std::vector<mpq_class> sums =
      ConstraintColumnSums(lp, result.row_multipliers);
  result.lower_bound_multipliers.assign(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    if (!lp.bounds()[j].lower) continue;
    result.lower_bound_multipliers[j] =
        Rat(mpq_class(lp.objective()[j].mpq() - sums[j] -
                      result.upper_bound_multipliers[j].mpq()));
  }
  return result;
}

LpResult ExtractFarkas(const LinearProgram& lp, const StandardForm& form,
                       const RevisedSimplex& simplex,
                       const std::vector<mpq_class>& phase_one_cost) {
  LpResult result;
  result.status = LpStatus::kInfeasible;
  const std::vector<mpq_class> y = simplex.Duals(phase_one_cost);
  const int n = lp.num_variables();
  auto multiplier = [&](int r) { return mpq_class(-y[r] * form.row_sign(r)); };
  std::vector<mpq_class> rows(lp.num_constraints());
  for (int r = 0; r < lp.num_constraints(); ++r) rows[r] = multiplier(r);
  std::vector<mpq_class> upper(n, 0), lower(n, 0);
  for (int j = 0; j < n; ++j) {
    const int r = form.upper_row_of_var(j);
    if (r >= 0) upper[j] = multiplier(r);
  }
  std::vector<mpq_class> sums(n, 0);
  for (int r = 0; r < lp.num_constraints(); ++r) {
    if (sgn(rows[r]) == 0) continue;
    for (const LpTerm& t : lp.constraints()[r].terms) {
      sums[t.var] += rows[r] * t.coef.mpq();
    }
  }
  mpq_class total = 0;
  for (int r = 0; r < lp.num_constraints(); ++r) {
    total += rows[r] * lp.constraints()[r].rhs.mpq();
  }
  for (int j = 0; j < n; ++j) {
    if (lp.bounds()[j].lower) {
      lower[j] = -(sums[j] + upper[j]);
      total += lower[j] * lp.bounds()[j].lower->mpq();
    }
    if (lp.bounds()[j].upper) total += upper[j] * lp.bounds()[j].upper->mpq();
  }
  // total < 0 by construction; normalize so the contradiction reads 0 <= -1.
  const mpq_class scale = -1 / total;
  for (const mpq_class& v : rows) result.row_multipliers.emplace_back(v * scale);
  for (int j = 0; j < n; ++j) {
    result.lower_bound_multipliers.emplace_back(lower[j] * scale);
    result.upper_bound_multipliers.emplace_back(upper[j] * scale);
  }
  return result;
}

LpResult SolveUnverified(const LinearProgram& lp) {
  StandardForm form(lp);
  RevisedSimplex simplex(form);
  const int ncols = form.num_columns();

  std::vector<mpq_class> phase_one(ncols, 0);
  std::vector<bool> eligible(ncols, true);
  bool has_artificial = false;
  for (int k = 0; k < ncols; ++k) {
    if (form.column(k).kind == ColumnKind::kArtificial) {
      phase_one[k] = 1;
      eligible[k] = false;
      has_artificial = true;
    }
  }
  if (has_artificial) {
    simplex.Run(phase_one, eligible);
    if (sgn(simplex.ArtificialLevel()) > 0) {
      LpResult r = ExtractFarkas(lp, form, simplex, phase_one);
      r.pivots = simplex.pivots();
      return r;
    }
    simplex.DriveOutArtificials();
  }

  std::vector<mpq_class> cost(ncols, 0);
  for (int k = 0; k < ncols; ++k) cost[k] = form.column(k).cost;
  if (simplex.Run(cost, eligible) == RevisedSimplex::Outcome::kUnbounded) {
    LpResult r;
    r.status = LpStatus::kUnbounded;
    r.primal = RecoverPrimal(lp, form, simplex.ColumnValues());
    r.pivots = simplex.pivots();
    return r;
  }
  LpResult r = ExtractOptimal(lp, form, simplex, cost);
  r.pivots = simplex.pivots();
  return r;
}

}  // namespace

int LinearProgram::AddVariable(std::string name, Rat objective,
                               std::optional<Rat> lower,
                               std::optional<Rat> upper) {
  names_.push_back(std::move(name));
  objective_.push_back(std::move(objective));
  bounds_.push_back({std::move(lower), std::move(upper)});
  return static_cast<int>(names_.size()) - 1;
}

int LinearProgram::AddConstraint(std::vector<LpTerm> terms, Relation relation,
                                 Rat rhs, std::string name) {
  std::map<int, mpq_class> merged;
  for (const LpTerm& t : terms) {
    if (t.var < 0 || t.var >= num_variables()) {
      throw std::out_of_range("constraint refers to unknown variable");
    }
    merged[t.var] += t.coef.mpq();
  }
  LinearConstraint con;
  for (auto& [var, coef] : merged) {
    if (sgn(coef) != 0) con.terms.push_back({var, Rat(coef)});
  }
  con.relation = relation;
  con.rhs = std::move(rhs);
  con.name = std::move(name);
  constraints_.push_back(std::move(con));
  return static_cast<int>(constraints_.size()) - 1;
}

std::string LinearProgram::Dump() const {
  std::ostringstream os;
  os << (sense == Sense::kMaximize ? "maximize" : "minimize") << "\n  obj:";
  bool any = false;
  for (int j = 0; j < num_variables(); ++j) {
    if (objective_[j].IsZero()) continue;
    os << " + " << objective_[j] << " " << names_[j];
    any = true;
  }
  if (!any) os << " 0";
  os << "\nsubject to\n";
  for (int r = 0; r < num_constraints(); ++r) {
    const LinearConstraint& c = constraints_[r];
    os << "  " << (c.name.empty() ? "c" + std::to_string(r) : c.name) << ":";
    if (c.terms.empty()) os << " 0";
    for (const LpTerm& t : c.terms) os << " + " << t.coef << " " << names_[t.var];
    os << " " << RelationSymbol(c.relation) << " " << c.rhs << "\n";
  }
  os << "bounds\n";
  for (int j = 0; j < num_variables(); ++j) {
    const VariableBounds& b = bounds_[j];
    os << "  ";
    if (!b.lower && !b.upper) {
      os << names_[j] << " free\n";
      continue;
    }
    if (b.lower) os << *b.lower << " <= ";
    os << names_[j];
    if (b.upper) os << " <= " << *b.upper;
    os << "\n";
  }
  return os.str();
}

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpResult SolveLp(const LinearProgram& lp) {
  LpResult result = SolveUnverified(lp);
  ++g_solves;
  if (result.status == LpStatus::kOptimal) ++g_optimal;
  if (result.status == LpStatus::kInfeasible) ++g_infeasible;
  const std::string problem = VerifyLpResult(lp, result);
  if (!problem.empty()) {
    ++g_certificate_failures;
    throw std::logic_error("LP certificate failed verification: " + problem +
                           "\n" + lp.Dump());
  }
  return result;
}

std::string VerifyLpResult(const LinearProgram& lp, const LpResult& result) {
  const int n = lp.num_variables();
  const int m = lp.num_constraints();
  const bool maximize = lp.sense == Sense::kMaximize;

  auto feasible_point = [&](const RatVec& x) -> std::string {
    if (static_cast<int>(x.size()) != n) return "primal has wrong size";
    for (int r = 0; r < m; ++r) {
      const LinearConstraint& c = lp.constraints()[r];
      mpq_class lhs = 0;
      for (const LpTerm& t : c.terms) lhs += t.coef.mpq() * x[t.var].mpq();
      const int s = cmp(lhs, c.rhs.mpq());
      if ((c.relation == Relation::kLessEqual && s > 0) ||
          (c.relation == Relation::kGreaterEqual && s < 0) ||
          (c.relation == Relation::kEqual && s != 0)) {
        return "primal violates constraint " + std::to_string(r);
      }
    }
    for (int j = 0; j < n; ++j) {
      const VariableBounds& b = lp.bounds()[j];
      if (b.lower && x[j] < *b.lower) return "primal below lower bound";
      if (b.upper && x[j] > *b.upper) return "primal above upper bound";
    }
    return "";
  };

  if (result.status == LpStatus::kUnbounded) return feasible_point(result.primal);

  if (static_cast<int>(result.row_multipliers.size()) != m ||
      static_cast<int>(result.lower_bound_multipliers.size()) != n ||
      static_cast<int>(result.upper_bound_multipliers.size()) != n) {
    return "multiplier vectors have wrong size";
  }
  for (int j = 0; j < n; ++j) {
    if (!lp.bounds()[j].lower && !result.lower_bound_multipliers[j].IsZero()) {
      return "multiplier on absent lower bound";
    }
    if (!lp.bounds()[j].upper && !result.upper_bound_multipliers[j].IsZero()) {
      return "multiplier on absent upper bound";
    }
  }

  // Sign pattern: for Farkas (and maximization duals), <= rows carry
  // nonnegative weights and >= rows nonpositive ones; minimization flips.
  const bool flip = result.status == LpStatus::kOptimal && !maximize;
  auto sign_ok = [&](const Rat& y, Relation rel) {
    int s = y.Sign();
    if (flip) s = -s;
    if (rel == Relation::kLessEqual) return s >= 0;
    if (rel == Relation::kGreaterEqual) return s <= 0;
    return true;
  };
  for (int r = 0; r < m; ++r) {
    if (!sign_ok(result.row_multipliers[r], lp.constraints()[r].relation)) {
      return "multiplier sign wrong on constraint " + std::to_string(r);
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!sign_ok(result.lower_bound_multipliers[j], Relation::kGreaterEqual) ||
        !sign_ok(result.upper_bound_multipliers[j], Relation::kLessEqual)) {
      return "bound multiplier sign wrong on variable " + std::to_string(j);
    }
  }

  std::vector<mpq_class> sums = ConstraintColumnSums(lp, result.row_multipliers);
  mpq_class combined_rhs = 0;
  for (int r = 0; r < m; ++r) {
    combined_rhs += result.row_multipliers[r].mpq() * lp.constraints()[r].rhs.mpq();
  }
  for (int j = 0; j < n; ++j) {
    sums[j] += result.lower_bound_multipliers[j].mpq() +
               result.upper_bound_multipliers[j].mpq();
    if (lp.bounds()[j].lower) {
      combined_rhs +=
          result.lower_bound_multipliers[j].mpq() * lp.bounds()[j].lower->mpq();
    }
    if (lp.bounds()[j].upper) {
      combined_rhs +=
          result.upper_bound_multipliers[j].mpq() * lp.bounds()[j].upper->mpq();
    }
  }

  if (result.status == LpStatus::kInfeasible) {
    for (int j = 0; j < n; ++j) {
      if (sgn(sums[j]) != 0) return "Farkas combination not zero";
    }
    if (combined_rhs != -1) return "Farkas right-hand side not -1";
    return "";
  }

  if (std::string p = feasible_point(result.primal); !p.empty()) return p;
  mpq_class primal_obj = 0;
  for (int j = 0; j < n; ++j) {
    if (sums[j] != lp.objective()[j].mpq()) return "dual stationarity fails";
    primal_obj += lp.objective()[j].mpq() * result.primal[j].mpq();
  }
  if (primal_obj != result.optimum.mpq()) return "reported optimum mismatch";
  if (primal_obj != combined_rhs) return "strong duality fails";
  return "";
}

FeasibilityResult CheckFeasible(const LinearProgram& lp) {
  LinearProgram zero = lp;
  for (int j = 0; j < zero.num_variables(); ++j) zero.set_objective(j, 0);
  FeasibilityResult out;
  out.certificate = SolveLp(zero);
  out.feasible = out.certificate.status != LpStatus::kInfeasible;
  if (out.feasible) out.witness = out.certificate.primal;
  return out;
}

LpStats GetLpStats() {
  return {g_solves.load(), g_optimal.load(), g_infeasible.load(),
          g_certificate_failures.load()};
}

void ResetLpStats() {
  g_solves = 0;
  g_optimal = 0;
  g_infeasible = 0;
  g_certificate_failures = 0;
}

}  // namespace ctn
