#pragma once

#include <vector>

#include "flagsym/rational.hpp"

namespace flagsym::lp {

enum class Relation { LessEq, Equal, GreaterEq };

struct Constraint {
  std::vector<Rational> coeff;
  Relation rel = Relation::LessEq;
  Rational rhs = 0;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational objective = 0;
  std::vector<Rational> point;
};

/// maximize objective . x  subject to the constraints and x >= 0.
/// Exact two-phase simplex with Bland's rule; termination is guaranteed
/// and every pivot is deterministic.
Result maximize(const std::vector<Rational>& objective,
                const std::vector<Constraint>& constraints);

}  // namespace flagsym::lp
