#include "flagsym/simplex.hpp"

#include <stdexcept>

namespace flagsym::lp {

namespace {

struct Tableau {
  int ncols = 0;
  std::vector<std::vector<Rational>> rows;  // m x ncols
  std::vector<Rational> rhs;                // m, kept >= 0
  std::vector<int> basis;                   // basic column per row
  std::vector<bool> artificial;             // per column

  void pivot(int row, int col) {
    const Rational p = rows[row][col];
    for (auto& v : rows[row]) v /= p;
    rhs[row] /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == row) continue;
      const Rational f = rows[r][col];
      if (f == 0) continue;
      for (int c = 0; c < ncols; ++c) rows[r][c] -= f * rows[row][c];
      rhs[r] -= f * rhs[row];
    }
    basis[row] = col;
  }

  // Bland's rule: entering = lowest eligible column with positive reduced
  // cost; leaving = minimum ratio, ties broken by lowest basic variable.
  // Returns true at optimality, throws Unbounded via status out-param.
  enum class Step { Optimal, Pivoted, Unbounded };

  Step step(const std::vector<Rational>& cost, bool allow_artificial) {
    const int m = static_cast<int>(rows.size());
    int entering = -1;
    for (int j = 0; j < ncols; ++j) {
      if (!allow_artificial && artificial[j]) continue;
      Rational rc = cost[j];
      for (int i = 0; i < m; ++i) {
        if (cost[basis[i]] != 0 && rows[i][j] != 0) {
          rc -= cost[basis[i]] * rows[i][j];
        }
      }
      if (rc > 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return Step::Optimal;

    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (rows[i][entering] > 0) {
        Rational ratio = rhs[i] / rows[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
    }
    if (leaving < 0) return Step::Unbounded;
    pivot(leaving, entering);
    return Step::Pivoted;
  }

  Status optimize(const std::vector<Rational>& cost, bool allow_artificial) {
    while (true) {
      switch (step(cost, allow_artificial)) {
        case Step::Optimal:
          return Status::Optimal;
        case Step::Unbounded:
          return Status::Unbounded;
        case Step::Pivoted:
          break;
      }
    }
  }
};

}  // namespace

Result maximize(const std::vector<Rational>& objective,
                const std::vector<Constraint>& constraints) {
  const int nv = static_cast<int>(objective.size());
  const int m = static_cast<int>(constraints.size());

  // Column layout: structural | slack/surplus | artificial.
  int extras = 0, artificials = 0;
  for (const auto& c : constraints) {
    if (static_cast<int>(c.coeff.size()) != nv) {
      throw std::invalid_argument("constraint arity mismatch");
    }
    const bool flip = c.rhs < 0;
    const Relation rel =
        flip ? (c.rel == Relation::LessEq
                    ? Relation::GreaterEq
                    : (c.rel == Relation::GreaterEq ? Relation::LessEq
                                                    : Relation::Equal))
             : c.rel;
    if (rel != Relation::Equal) ++extras;
    if (rel != Relation::LessEq) ++artificials;
  }

  Tableau tab;
  tab.ncols = nv + extras + artificials;
  tab.rows.assign(m, std::vector<Rational>(tab.ncols, Rational(0)));
  tab.rhs.assign(m, Rational(0));
  tab.basis.assign(m, -1);
  tab.artificial.assign(tab.ncols, false);

  int next_extra = nv;
  int next_artificial = nv + extras;
  for (int i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    const bool flip = c.rhs < 0;
    Relation rel = c.rel;
    if (flip) {
      rel = rel == Relation::LessEq
                ? Relation::GreaterEq
                : (rel == Relation::GreaterEq ? Relation::LessEq : rel);
    }
    for (int j = 0; j < nv; ++j) {
      tab.rows[i][j] = flip ? -c.coeff[j] : c.coeff[j];
    }
    tab.rhs[i] = flip ? -c.rhs : c.rhs;
    switch (rel) {
      case Relation::LessEq:
        tab.rows[i][next_extra] = 1;
        tab.basis[i] = next_extra++;
        break;
      case Relation::GreaterEq:
        tab.rows[i][next_extra] = -1;
        ++next_extra;
        [[fallthrough]];
      case Relation::Equal:
        tab.rows[i][next_artificial] = 1;
        tab.artificial[next_artificial] = true;
        tab.basis[i] = next_artificial++;
        break;
    }
  }

  // Phase 1: drive the artificial variables to zero.
  if (artificials > 0) {
    std::vector<Rational> phase1(tab.ncols, Rational(0));
    for (int j = nv + extras; j < tab.ncols; ++j) phase1[j] = -1;
    if (tab.optimize(phase1, true) != Status::Optimal) {
      throw std::logic_error("phase-1 objective cannot be unbounded");
    }
    Rational infeasibility = 0;
    for (int i = 0; i < m; ++i) {
      if (tab.artificial[tab.basis[i]]) infeasibility += tab.rhs[i];
    }
    if (infeasibility > 0) return {Status::Infeasible, Rational(0), {}};
    // Pivot lingering artificials out of the (degenerate) basis; rows with
    // no structural support are redundant and can stay parked at zero.
    for (int i = 0; i < m; ++i) {
      if (!tab.artificial[tab.basis[i]]) continue;
      for (int j = 0; j < nv + extras; ++j) {
        if (tab.rows[i][j] != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> cost(tab.ncols, Rational(0));
  for (int j = 0; j < nv; ++j) cost[j] = objective[j];
  const Status status = tab.optimize(cost, false);
  if (status == Status::Unbounded) return {Status::Unbounded, Rational(0), {}};

  Result result;
  result.status = Status::Optimal;
  result.point.assign(nv, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < nv) result.point[tab.basis[i]] = tab.rhs[i];
  }
  result.objective = 0;
  for (int j = 0; j < nv; ++j) result.objective += objective[j] * result.point[j];
  return result;
}

}  // namespace flagsym::lp
