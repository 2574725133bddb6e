#pragma once

// Exact rational feasibility for systems { A x = b, C x >= d, C' x > d' }.
//
// Two independent routes are provided: a dense two-phase simplex with Bland's
// rule (the default) and Fourier-Motzkin elimination with strictness
// tracking. Both first eliminate the equalities exactly and work in the
// parameters of the affine solution space.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "tropsev/matrix.hpp"

namespace tropsev {

enum class Relation { Equal, GreaterEqual, Greater };

struct LinearConstraint {
  RationalRow coeffs;
  Relation relation;
  Rational rhs;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t variables) : variables_(variables) {}

  std::size_t variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  void add(RationalRow coeffs, Relation rel, Rational rhs) {
    if (coeffs.size() != variables_) throw InvariantBreach("constraint width mismatch");
    constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
  void add_equal(RationalRow c, Rational rhs) { add(std::move(c), Relation::Equal, std::move(rhs)); }
  void add_greater_equal(RationalRow c, Rational rhs) {
    add(std::move(c), Relation::GreaterEqual, std::move(rhs));
  }
  void add_greater(RationalRow c, Rational rhs) { add(std::move(c), Relation::Greater, std::move(rhs)); }
  void add_less(RationalRow c, Rational rhs) {
    for (auto& v : c) v = -v;
    add(std::move(c), Relation::Greater, -rhs);
  }

 private:
  std::size_t variables_;
  std::vector<LinearConstraint> constraints_;
};

struct LpResult {
  bool feasible = false;
  RationalRow witness;  // satisfies every constraint when feasible
};

/// Inequality over parameters: coeffs . t (>= or >) rhs.
struct ParamInequality {
  RationalRow coeffs;
  Rational rhs;
  bool strict = false;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, RationalRow(cols + 1, Rational(0))), obj_(cols + 1, Rational(0)),
        basis_(rows, 0), cols_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  RationalRow& objective() { return obj_; }
  const RationalRow& row(std::size_t r) const { return a_[r]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / a_[r][c];
    for (auto& x : a_[r]) x *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t k = 0; k <= cols_; ++k)
        if (a_[r][k] != 0) a_[i][k] -= f * a_[r][k];
    }
    if (obj_[c] != 0) {
      const Rational f = obj_[c];
      for (std::size_t k = 0; k <= cols_; ++k)
        if (a_[r][k] != 0) obj_[k] -= f * a_[r][k];
    }
    basis_[r] = c;
  }

  /// Minimises the objective (reduced costs in obj_, -value in obj_[cols]).
  /// Columns with allowed[c] == false never enter. Returns false if unbounded.
  bool minimise(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c)
        if (allowed[c] && obj_[c] < 0) {
          enter = c;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = a_.size();
      Rational best;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = a_[r][cols_] / a_[r][enter];
        if (leave == a_.size() || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter);
    }
  }

 private:
  std::vector<RationalRow> a_;
  RationalRow obj_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace detail

/// Simplex route. Maximises a common slack tau <= 1 on the strict rows; the
/// strict system is feasible iff the optimum is positive.
inline LpResult simplex_feasible(std::size_t vars, const std::vector<ParamInequality>& ineqs) {
  LpResult out;
  std::vector<const ParamInequality*> rows;
  bool any_strict = false;
  for (const auto& q : ineqs) {
    bool zero = std::all_of(q.coeffs.begin(), q.coeffs.end(), [](const Rational& v) { return v == 0; });
    if (zero) {
      if (q.strict ? !(0 > q.rhs) : !(0 >= q.rhs)) return out;
      continue;
    }
    rows.push_back(&q);
    any_strict |= q.strict;
  }
  if (rows.empty()) {
    out.feasible = true;
    out.witness.assign(vars, Rational(0));
    return out;
  }

  // Columns: t+ (vars), t- (vars), tau (if strict), surplus per row,
  // bound slack for tau, artificial per row.
  const std::size_t m = rows.size() + (any_strict ? 1 : 0);
  const std::size_t tau = 2 * vars;
  const std::size_t surplus0 = tau + (any_strict ? 1 : 0);
  const std::size_t bound_slack = surplus0 + rows.size();
  const std::size_t art0 = bound_slack + (any_strict ? 1 : 0);
  const std::size_t ncols = art0 + m;
  detail::Tableau t(m, ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& q = *rows[i];
    const int flip = q.rhs < 0 ? -1 : 1;
    for (std::size_t k = 0; k < vars; ++k) {
      t.at(i, k) = flip * q.coeffs[k];
      t.at(i, vars + k) = -flip * q.coeffs[k];
    }
    if (q.strict) t.at(i, tau) = -flip;
    t.at(i, surplus0 + i) = -flip;
    t.rhs(i) = flip * q.rhs;
  }
  if (any_strict) {
    const std::size_t r = rows.size();
    t.at(r, tau) = 1;
    t.at(r, bound_slack) = 1;
    t.rhs(r) = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    t.at(i, art0 + i) = 1;
    t.basis()[i] = art0 + i;
  }
  // Phase one: minimise the sum of artificials.
  auto& obj = t.objective();
  for (std::size_t c = 0; c <= ncols; ++c) {
    if (c >= art0 && c < ncols) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t.row(i)[c];
    obj[c] = -s;
  }
  std::vector<bool> allowed(ncols, true);
  t.minimise(allowed);
  if (obj[ncols] != 0) return out;  // min sum of artificials > 0

  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] < art0) continue;
    for (std::size_t c = 0; c < art0; ++c)
      if (t.row(i)[c] != 0) {
        t.pivot(i, c);
        break;
      }
  }
  for (std::size_t c = art0; c < ncols; ++c) allowed[c] = false;

  if (any_strict) {
    // Phase two: minimise -tau.
    std::fill(obj.begin(), obj.end(), Rational(0));
    obj[tau] = -1;
    for (std::size_t i = 0; i < m; ++i)
      if (t.basis()[i] == tau) {
        for (std::size_t c = 0; c <= ncols; ++c) obj[c] += t.row(i)[c];
      }
    t.minimise(allowed);
  }

  RationalRow z(ncols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) z[t.basis()[i]] = t.row(i)[ncols];
  if (any_strict && z[tau] <= 0) return out;
  out.feasible = true;
  out.witness.resize(vars);
  for (std::size_t k = 0; k < vars; ++k) out.witness[k] = z[k] - z[vars + k];
  return out;
}

/// Fourier-Motzkin route, with back substitution for a witness.
inline LpResult fourier_motzkin_feasible(std::size_t vars,
                                         const std::vector<ParamInequality>& ineqs) {
  LpResult out;
  auto normalise = [](ParamInequality q) {
    for (const auto& c : q.coeffs)
      if (c != 0) {
        const Rational s = abs(c);
        for (auto& v : q.coeffs) v /= s;
        q.rhs /= s;
        break;
      }
    return q;
  };
  auto dedupe = [](std::vector<ParamInequality> v) {
    // Same left-hand side: keep the strongest bound.
    std::map<RationalRow, ParamInequality> best;
    for (auto& q : v) {
      auto it = best.find(q.coeffs);
      if (it == best.end()) {
        best.emplace(q.coeffs, q);
      } else if (q.rhs > it->second.rhs || (q.rhs == it->second.rhs && q.strict)) {
        it->second = q;
      }
    }
    std::vector<ParamInequality> r;
    for (auto& [k, q] : best) r.push_back(std::move(q));
    return r;
  };

  // levels[k] holds the system over t_0..t_k (before eliminating t_k).
  std::vector<std::vector<ParamInequality>> levels(vars + 1);
  std::vector<ParamInequality> cur;
  for (const auto& q : ineqs) cur.push_back(normalise(q));
  cur = dedupe(std::move(cur));
  for (std::size_t k = vars; k-- > 0;) {
    levels[k] = cur;
    std::vector<ParamInequality> pos, neg, next;
    for (auto& q : cur) {
      const int s = sign(q.coeffs[k]);
      (s > 0 ? pos : s < 0 ? neg : next).push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        ParamInequality c;
        const Rational wp = -n.coeffs[k], wn = p.coeffs[k];
        c.coeffs.resize(vars);
        for (std::size_t j = 0; j < vars; ++j) c.coeffs[j] = wp * p.coeffs[j] + wn * n.coeffs[j];
        c.coeffs[k] = 0;
        c.rhs = wp * p.rhs + wn * n.rhs;
        c.strict = p.strict || n.strict;
        next.push_back(normalise(std::move(c)));
      }
    cur = dedupe(std::move(next));
  }
  for (const auto& q : cur)
    if (q.strict ? !(0 > q.rhs) : !(0 >= q.rhs)) return out;

  RationalRow t(vars, Rational(0));
  for (std::size_t k = 0; k < vars; ++k) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rational lo, hi;
    for (const auto& q : levels[k]) {
      if (q.coeffs[k] == 0) continue;
      Rational rest = q.rhs;
      for (std::size_t j = 0; j < k; ++j) rest -= q.coeffs[j] * t[j];
      const Rational bound = rest / q.coeffs[k];
      if (q.coeffs[k] > 0) {
        if (!has_lo || bound > lo || (bound == lo && q.strict)) {
          lo = bound;
          lo_strict = q.strict;
        }
        has_lo = true;
      } else {
        if (!has_hi || bound < hi || (bound == hi && q.strict)) {
          hi = bound;
          hi_strict = q.strict;
        }
        has_hi = true;
      }
    }
    if (has_lo && has_hi) {
      t[k] = (lo == hi) ? lo : (lo + hi) / 2;
      if (lo == hi && (lo_strict || hi_strict)) throw InvariantBreach("Fourier-Motzkin back substitution failed");
    } else if (has_lo) {
      t[k] = lo_strict ? Rational(lo + 1) : lo;
    } else if (has_hi) {
      t[k] = hi_strict ? Rational(hi - 1) : hi;
    }
  }
  out.feasible = true;
  out.witness = std::move(t);
  return out;
}

namespace detail {

/// Exact phase one on rows s_i = h_i + a_i . y >= 0 in dictionary form: free
/// variables are pivoted out first, then a single artificial variable.
inline bool closure_exact(std::size_t vars, std::vector<RationalRow> a, RationalRow h) {
  std::vector<bool> live(a.size(), true);
  std::vector<std::size_t> cols;  // surviving nonbasic columns (slacks of eliminated rows)
  RationalRow scratch;
  for (std::size_t j = 0; j < vars; ++j) {
    std::size_t piv = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (live[i] && a[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv == a.size()) continue;
    // y_j = (s_piv - h_piv - sum_{k != j} a_piv,k N_k) / a_piv,j; column j becomes s_piv.
    const Rational inv = 1 / a[piv][j];
    RationalRow& pr = a[piv];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == piv || !live[i] || a[i][j] == 0) continue;
      const Rational f = a[i][j] * inv;
      for (std::size_t k = 0; k < vars; ++k)
        if (k != j && pr[k] != 0) a[i][k] -= f * pr[k];
      h[i] -= f * h[piv];
      a[i][j] = f;
    }
    live[piv] = false;
    cols.push_back(j);
  }
  // Remaining columns: eliminated y's (now slack variables >= 0); other y's vanished.
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (live[i]) rows.push_back(i);
  const std::size_t n = cols.size();
  const std::size_t m = rows.size();
  // Dictionary: basic_r = b_r + sum_c d[r][c] N_c, columns 0..n-1 slacks, column n the artificial x0.
  std::vector<RationalRow> d(m, RationalRow(n + 1));
  RationalRow b(m);
  std::vector<std::size_t> basic(m), nonbasic(n + 1);
  std::size_t worst = m;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) d[r][c] = a[rows[r]][cols[c]];
    d[r][n] = 1;
    b[r] = h[rows[r]];
    basic[r] = n + 1 + r;
    if (b[r] < 0 && (worst == m || b[r] < b[worst])) worst = r;
  }
  if (worst == m) return true;
  for (std::size_t c = 0; c <= n; ++c) nonbasic[c] = c;
  RationalRow obj(n + 1, Rational(0));  // maximise -x0
  obj[n] = -1;
  Rational obj0 = 0;

  auto pivot = [&](std::size_t r, std::size_t e) {
    // basic_r = b_r + sum d_rc N_c  ->  N_e = (basic_r - b_r - sum_{c != e} d_rc N_c) / d_re
    const Rational inv = 1 / d[r][e];
    RationalRow& row = d[r];
    b[r] = -b[r] * inv;
    for (std::size_t c = 0; c <= n; ++c)
      if (c != e) row[c] = -row[c] * inv;
    row[e] = inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || d[i][e] == 0) continue;
      const Rational f = d[i][e];
      b[i] += f * b[r];
      for (std::size_t c = 0; c <= n; ++c)
        if (c != e) d[i][c] += f * row[c];
      d[i][e] = f * row[e];
    }
    if (obj[e] != 0) {
      const Rational f = obj[e];
      obj0 += f * b[r];
      for (std::size_t c = 0; c <= n; ++c)
        if (c != e) obj[c] += f * row[c];
      obj[e] = f * row[e];
    }
    std::swap(basic[r], nonbasic[e]);
  };

  pivot(worst, n);
  for (;;) {
    if (obj0 == 0) return true;
    std::size_t e = n + 1;
    for (std::size_t c = 0; c <= n; ++c)
      if (sign(obj[c]) > 0 && (e == n + 1 || nonbasic[c] < nonbasic[e])) e = c;
    if (e == n + 1) return false;
    std::size_t r = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sign(d[i][e]) >= 0) continue;
      const Rational ratio = -b[i] / d[i][e];
      if (r == m || ratio < best || (ratio == best && basic[i] < basic[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == m) return true;  // objective unbounded above: cannot happen for -x0, treat as feasible
    pivot(r, e);
  }
}

/// Floating-point guess for the same problem. verdict 1: feasible, rows
/// tight at the vertex found; verdict -1: infeasible, rows carrying the
/// Farkas multipliers; verdict 0: no guess. Rows are d_i . y + b_i >= 0.
struct FloatGuess {
  int verdict = 0;
  std::vector<std::size_t> rows;
};

inline FloatGuess closure_float(std::size_t vars, std::vector<std::vector<double>> d, std::vector<double> b) {
  const std::size_t m = d.size();
  FloatGuess out;
  double scale = 1;
  for (std::size_t i = 0; i < m; ++i) {
    d[i].resize(vars + 1, 0.0);
    double norm = 0;
    for (std::size_t j = 0; j < vars; ++j) norm = std::max(norm, std::abs(d[i][j]));
    if (norm == 0) {
      if (b[i] < 0) {
        out.verdict = -1;
        out.rows = {i};
        return out;
      }
      continue;
    }
    for (std::size_t j = 0; j < vars; ++j) d[i][j] /= norm;
    b[i] /= norm;
    scale = std::max(scale, std::abs(b[i]));
  }
  const double tol = 1e-9 * scale;
  const double ztol = 1e-11;
  // Variable ids: slacks 0..m-1, y m..m+vars-1, artificial m+vars.
  std::vector<std::size_t> basic(m), nonbasic(vars + 1);
  for (std::size_t i = 0; i < m; ++i) basic[i] = i;
  for (std::size_t c = 0; c <= vars; ++c) nonbasic[c] = m + c;
  std::vector<double> obj(vars + 1, 0.0);
  double obj0 = 0;
  std::vector<bool> active(m, true);  // rows whose basic variable may leave

  auto pivot = [&](std::size_t r, std::size_t e) {
    const double inv = 1 / d[r][e];
    auto& row = d[r];
    b[r] = -b[r] * inv;
    for (std::size_t c = 0; c <= vars; ++c)
      if (c != e) row[c] = -row[c] * inv;
    row[e] = inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || d[i][e] == 0) continue;
      const double f = d[i][e];
      b[i] += f * b[r];
      for (std::size_t c = 0; c <= vars; ++c)
        if (c != e) d[i][c] += f * row[c];
      d[i][e] = f * row[e];
    }
    if (obj[e] != 0) {
      const double f = obj[e];
      obj0 += f * b[r];
      for (std::size_t c = 0; c <= vars; ++c)
        if (c != e) obj[c] += f * row[c];
      obj[e] = f * row[e];
    }
    std::swap(basic[r], nonbasic[e]);
  };

  // Free variables enter first and never leave.
  for (std::size_t j = 0; j < vars; ++j) {
    std::size_t r = m;
    for (std::size_t i = 0; i < m; ++i)
      if (active[i] && std::abs(d[i][j]) > ztol && (r == m || std::abs(d[i][j]) > std::abs(d[r][j]))) r = i;
    if (r == m) continue;
    pivot(r, j);
    active[r] = false;
  }
  const std::size_t art = vars;
  std::size_t worst = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (!active[i]) continue;
    d[i][art] = 1;
    if (b[i] < -tol && (worst == m || b[i] < b[worst])) worst = i;
  }
  auto tight_rows = [&] {
    std::vector<std::size_t> rows;
    for (std::size_t c = 0; c <= vars; ++c)
      if (nonbasic[c] < m) rows.push_back(nonbasic[c]);
    return rows;
  };
  if (worst == m) {
    out.verdict = 1;
    out.rows = tight_rows();
    return out;
  }
  obj[art] = -1;
  pivot(worst, art);
  for (int guard = 0; guard < 1000; ++guard) {
    if (obj0 > -tol) {
      out.verdict = 1;
      out.rows = tight_rows();
      return out;
    }
    std::size_t e = vars + 1;
    for (std::size_t c = 0; c <= vars; ++c)
      if ((nonbasic[c] < m || nonbasic[c] == m + vars) && obj[c] > ztol &&
          (e == vars + 1 || nonbasic[c] < nonbasic[e]))
        e = c;
    if (e == vars + 1) {
      out.verdict = -1;
      for (std::size_t c = 0; c <= vars; ++c)
        if (nonbasic[c] < m && obj[c] < -ztol) out.rows.push_back(nonbasic[c]);
      return out;
    }
    std::size_t r = m;
    double best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!active[i] || d[i][e] >= -ztol) continue;
      const double ratio = -b[i] / d[i][e];
      if (r == m || ratio < best - ztol || (std::abs(ratio - best) <= ztol && basic[i] < basic[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == m) return out;
    pivot(r, e);
  }
  return out;
}

}  // namespace detail

/// Feasibility of the closure {coeffs . t >= rhs} (strictness ignored).
/// Optional equalities coeffs . t = rhs are substituted away first.
inline bool closure_feasible(std::size_t vars, const std::vector<ParamInequality>& ineqs,
                             const std::vector<ParamInequality>& equalities = {}) {
  // Row i: s_i = h_i + a_i . t >= 0.
  std::vector<RationalRow> a;
  RationalRow h;
  for (const auto& q : ineqs) {
    a.push_back(q.coeffs);
    h.push_back(-q.rhs);
  }
  std::vector<RationalRow> eqs;
  RationalRow eh;
  for (const auto& q : equalities) {
    eqs.push_back(q.coeffs);
    eh.push_back(-q.rhs);
  }
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    const RationalRow& er = eqs[k];
    std::size_t j = 0;
    while (j < vars && er[j] == 0) ++j;
    if (j == vars) {
      if (eh[k] != 0) return false;
      continue;
    }
    const Rational inv = 1 / er[j];
    auto substitute = [&](RationalRow& row, Rational& c) {
      if (row[j] == 0) return;
      const Rational f = row[j] * inv;
      for (std::size_t c2 = 0; c2 < vars; ++c2)
        if (er[c2] != 0) row[c2] -= f * er[c2];
      c -= f * eh[k];
    };
    for (std::size_t i = k + 1; i < eqs.size(); ++i) substitute(eqs[i], eh[i]);
    for (std::size_t i = 0; i < a.size(); ++i) substitute(a[i], h[i]);
  }
  return detail::closure_exact(vars, std::move(a), std::move(h));
}

/// An inequality coeffs . y + constant >= 0 held by reference, with a
/// floating-point copy of the same numbers.
struct GuidedRow {
  const RationalRow* coeffs;
  const Rational* constant;
  const std::vector<double>* approx;  // coeffs then constant
};

/// Feasibility of the closure of the rows, optionally on the hyperplane
/// eq_coeffs . y = eq_rhs. A floating-point phase one proposes either a
/// vertex, checked exactly, or an infeasible subsystem, re-solved exactly on
/// its own; anything unconfirmed falls back to the exact solve.
inline bool closure_feasible_guided(std::size_t vars, const std::vector<GuidedRow>& rows,
                                    const RationalRow* eq_coeffs = nullptr, const Rational* eq_rhs = nullptr) {
  const std::size_t m = rows.size();
  std::vector<std::vector<double>> d(m);
  std::vector<double> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    d[i].assign(rows[i].approx->begin(), rows[i].approx->begin() + static_cast<std::ptrdiff_t>(vars));
    b[i] = (*rows[i].approx)[vars];
  }
  std::size_t pivot = vars;
  if (eq_coeffs) {
    for (std::size_t j = 0; j < vars; ++j)
      if ((*eq_coeffs)[j] != 0 && (pivot == vars || abs((*eq_coeffs)[j]) > abs((*eq_coeffs)[pivot]))) pivot = j;
    if (pivot == vars) {
      if (*eq_rhs != 0) return false;
      eq_coeffs = nullptr;
    }
  }
  if (eq_coeffs) {
    std::vector<double> e(vars);
    for (std::size_t j = 0; j < vars; ++j) e[j] = (*eq_coeffs)[j].get_d();
    const double r = eq_rhs->get_d();
    for (std::size_t i = 0; i < m; ++i) {
      const double f = d[i][pivot] / e[pivot];
      if (f == 0) continue;
      for (std::size_t j = 0; j < vars; ++j) d[i][j] -= f * e[j];
      d[i][pivot] = 0;
      b[i] += f * r;
    }
  }

  // Exact subsystem on the given rows, equality substituted.
  auto exact = [&](const std::vector<std::size_t>& ids) {
    std::vector<RationalRow> a;
    RationalRow h;
    a.reserve(ids.size());
    h.reserve(ids.size());
    for (std::size_t i : ids) {
      a.push_back(*rows[i].coeffs);
      h.push_back(*rows[i].constant);
    }
    if (eq_coeffs) {
      const RationalRow& er = *eq_coeffs;
      const Rational inv = 1 / er[pivot];
      Rational f, t;
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (sgn(a[r][pivot]) == 0) continue;
        f = a[r][pivot] * inv;
        for (std::size_t j = 0; j < vars; ++j)
          if (sgn(er[j]) != 0) {
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), er[j].get_mpq_t());
            mpq_sub(a[r][j].get_mpq_t(), a[r][j].get_mpq_t(), t.get_mpq_t());
          }
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), eq_rhs->get_mpq_t());
        mpq_add(h[r].get_mpq_t(), h[r].get_mpq_t(), t.get_mpq_t());
      }
    }
    return detail::closure_exact(vars, std::move(a), std::move(h));
  };

  const auto guess = detail::closure_float(vars, std::move(d), std::move(b));
  if (guess.verdict > 0) {
    RationalMatrix aug;
    for (std::size_t i : guess.rows) {
      RationalRow r = *rows[i].coeffs;
      r.push_back(-*rows[i].constant);
      aug.push_back(std::move(r));
    }
    if (eq_coeffs) {
      RationalRow r = *eq_coeffs;
      r.push_back(*eq_rhs);
      aug.push_back(std::move(r));
    }
    RationalRow y(vars, Rational(0));
    bool ok = true;
    if (!aug.empty()) {
      auto sol = solve_affine(std::move(aug), vars);
      ok = sol.consistent;
      if (ok) y = std::move(sol.origin);
    }
    Rational v, t;
    for (std::size_t i = 0; ok && i < m; ++i) {
      v = *rows[i].constant;
      const RationalRow& c = *rows[i].coeffs;
      for (std::size_t j = 0; j < vars; ++j)
        if (sgn(c[j]) != 0 && sgn(y[j]) != 0) {
          mpq_mul(t.get_mpq_t(), c[j].get_mpq_t(), y[j].get_mpq_t());
          mpq_add(v.get_mpq_t(), v.get_mpq_t(), t.get_mpq_t());
        }
      ok = sgn(v) >= 0;
    }
    if (ok) return true;
  } else if (guess.verdict < 0) {
    if (guess.rows.size() == 1 && eq_coeffs) {
      // One row against the hyperplane: a multiple of the equality with the wrong constant.
      const RationalRow& a = *rows[guess.rows[0]].coeffs;
      const RationalRow& er = *eq_coeffs;
      const Rational f = a[pivot] / er[pivot];
      bool parallel = true;
      for (std::size_t j = 0; j < vars && parallel; ++j) parallel = a[j] == f * er[j];
      if (parallel && sign(Rational(*rows[guess.rows[0]].constant + f * *eq_rhs)) < 0) return false;
    }
    if (!exact(guess.rows)) return false;
  }
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  return exact(all);
}

enum class LpMethod { Simplex, FourierMotzkin };

/// Exact feasibility of a mixed equality / inequality / strict system. When
/// feasible, the returned witness satisfies every constraint.
inline LpResult rational_lp_feasible(const LinearSystem& sys,
                                     LpMethod method = LpMethod::Simplex) {
  const std::size_t n = sys.variables();
  RationalMatrix eq;
  for (const auto& c : sys.constraints())
    if (c.relation == Relation::Equal) {
      RationalRow r = c.coeffs;
      r.push_back(c.rhs);
      eq.push_back(std::move(r));
    }
  AffineSolution aff;
  if (eq.empty()) {
    aff.consistent = true;
    aff.origin.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      RationalRow e(n, Rational(0));
      e[i] = 1;
      aff.basis.push_back(std::move(e));
    }
  } else {
    aff = solve_affine(std::move(eq), n);
  }
  if (!aff.consistent) return {};

  const std::size_t k = aff.basis.size();
  std::vector<ParamInequality> ineqs;
  for (const auto& c : sys.constraints()) {
    if (c.relation == Relation::Equal) continue;
    ParamInequality q;
    q.coeffs.assign(k, Rational(0));
    q.rhs = c.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j] == 0) continue;
      q.rhs -= c.coeffs[j] * aff.origin[j];
      for (std::size_t b = 0; b < k; ++b) q.coeffs[b] += c.coeffs[j] * aff.basis[b][j];
    }
    q.strict = c.relation == Relation::Greater;
    ineqs.push_back(std::move(q));
  }
  LpResult param = method == LpMethod::Simplex ? simplex_feasible(k, ineqs)
                                               : fourier_motzkin_feasible(k, ineqs);
  if (!param.feasible) return {};
  LpResult out;
  out.feasible = true;
  out.witness = aff.origin;
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t j = 0; j < n; ++j) out.witness[j] += param.witness[b] * aff.basis[b][j];
  return out;
}

}  // namespace tropsev
