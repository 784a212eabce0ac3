#include "flagsym/families.hpp"

#include <random>
#include <sstream>

#include "flagsym/isoclass.hpp"

namespace flagsym {

namespace {

void check_family_range(int n, int k) {
  if (n < 4 || n > kMaxPlayers) {
    throw std::invalid_argument("family needs 4 <= n <= " +
                                std::to_string(kMaxPlayers));
  }
  if (k < 1 || k > n - 3) {
    throw std::invalid_argument("family index must satisfy 1 <= k <= n-3");
  }
}

// lambda as a linear map of the free parameters; no positivity demanded, so
// unit parameter vectors can pass through to build kernel directions.
std::vector<Rational> family_lambda(int n, int k,
                                    const std::vector<Rational>& p) {
  auto chain = [&](int i, int j) {
    Rational sum = 0;
    for (int a = i; a < j; ++a) sum += p[a - 1];  // p[a-1] = l_{a(a+1)}
    return sum;
  };
  std::vector<Rational> values(edge_count(n), Rational(0));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Rational v;
      if (j < n || i > k) {
        v = chain(i, j);
      } else if (i == 1) {
        v = p[n - 1];  // l_{1n} is the free exceptional parameter
      } else {
        v = chain(1, i) + p[n - 1];  // l_{in} = l_{12}+...+l_{(i-1)i}+l_{1n}
      }
      values[edge_index(n, i, j)] = std::move(v);
    }
  }
  return values;
}

}  // namespace

FamilyParams FamilyParams::unit(int n, int k) {
  check_family_range(n, k);
  return FamilyParams{n, k, std::vector<Rational>(n, Rational(1))};
}

Tournament family_tournament(int n, int k) {
  check_family_range(n, k);
  std::vector<int> bits;
  bits.reserve(edge_count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bits.push_back(j == n && i <= k ? 0 : 1);
    }
  }
  return Tournament::from_bits(n, bits);
}

MetricSpec family_metric(const FamilyParams& p) {
  check_family_range(p.n, p.k);
  if (static_cast<int>(p.free.size()) != p.n) {
    throw std::invalid_argument("family needs exactly n free parameters");
  }
  for (const Rational& v : p.free) {
    if (v <= 0) {
      throw std::invalid_argument("family parameters must be positive");
    }
  }
  return MetricSpec(p.n, family_lambda(p.n, p.k, p.free));
}

std::vector<std::vector<Rational>> family_basis(int n, int k) {
  check_family_range(n, k);
  std::vector<std::vector<Rational>> basis;
  basis.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::vector<Rational> unit(n, Rational(0));
    unit[a] = 1;
    basis.push_back(family_lambda(n, k, unit));
  }
  return basis;
}

std::vector<std::vector<Rational>> family_matrix_values(const FamilyParams& p) {
  const MetricSpec m = family_metric(p);
  std::vector<std::vector<Rational>> matrix(
      p.n, std::vector<Rational>(p.n, Rational(0)));
  for (int i = 1; i <= p.n; ++i) {
    for (int j = 1; j <= p.n; ++j) {
      if (i != j) matrix[i - 1][j - 1] = m.lambda(i, j);
    }
  }
  return matrix;
}

std::vector<std::vector<std::string>> family_matrix_symbolic(int n, int k) {
  check_family_range(n, k);
  auto param_name = [&](int a) {
    // parameter a = l_{a(a+1)} for a < n, l_{1n} for a = n
    std::ostringstream name;
    if (a < n) {
      name << "l" << a << "_" << a + 1;
    } else {
      name << "l1_" << n;
    }
    return name.str();
  };
  const auto basis = family_basis(n, k);
  std::vector<std::vector<std::string>> matrix(
      n, std::vector<std::string>(n, "0"));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int e = edge_index(n, i, j);
      std::string entry;
      for (int a = 1; a <= n; ++a) {
        const Rational& c = basis[a - 1][e];
        if (c == 0) continue;
        if (!entry.empty()) entry += "+";
        if (c != 1) entry += rational_to_string(c) + "*";
        entry += param_name(a);
      }
      matrix[i - 1][j - 1] = entry.empty() ? "0" : entry;
    }
  }
  return matrix;
}

FamilyCheck verify_family(int n, int k, unsigned seed, int random_trials) {
  check_family_range(n, k);
  FamilyCheck check;
  check.n = n;
  check.k = k;

  const Tournament t = family_tournament(n, k);
  const ConstraintSystem cs = constraint_system(t);
  const SolutionSpace sol = solve_family(t);
  check.dimension = sol.dimension;
  check.dimension_matches = sol.dimension == n;
  if (!check.dimension_matches) {
    check.failures.push_back("kernel dimension " + std::to_string(sol.dimension) +
                             " != n = " + std::to_string(n));
  }
  check.feasible = sol.verdict == Verdict::FeasibleInterior;
  if (!check.feasible) {
    check.failures.push_back("solver reports no strictly positive metric");
  }

  // Randomized positive parameters must classify as (1,2)-symplectic.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 20), den(1, 10);
  check.classified_12s = true;
  for (int trial = 0; trial <= random_trials; ++trial) {
    FamilyParams params{n, k, {}};
    params.free.reserve(n);
    for (int a = 0; a < n; ++a) {
      params.free.push_back(trial == 0 ? Rational(1)
                                       : make_rational(num(rng), den(rng)));
    }
    const MetricSpec m = family_metric(params);
    if (classify_metric(t, m) != MetricClass::OneTwoSymplectic) {
      check.classified_12s = false;
      std::string desc = "trial " + std::to_string(trial) + " params";
      for (const auto& v : params.free) desc += " " + rational_to_string(v);
      check.failures.push_back("classification failed: " + desc);
      break;
    }
  }

  // Mutual span containment, exactly: every closed-form direction satisfies
  // every row, and every solver basis vector is reproduced by the parameters
  // read off its chain-edge coordinates.
  check.span_matches = true;
  const auto closed_form = family_basis(n, k);
  for (std::size_t b = 0; b < closed_form.size() && check.span_matches; ++b) {
    for (const ConstraintRow& row : cs.rows) {
      if (cs.eval_row(row, closed_form[b]) != 0) {
        check.span_matches = false;
        check.failures.push_back(
            "closed-form direction " + std::to_string(b + 1) +
            " violates triple (" + std::to_string(row.triple[0]) + "," +
            std::to_string(row.triple[1]) + "," + std::to_string(row.triple[2]) +
            ")");
        break;
      }
    }
  }
  for (std::size_t b = 0; b < sol.basis.size() && check.span_matches; ++b) {
    std::vector<Rational> params(n);
    for (int a = 1; a < n; ++a) {
      params[a - 1] = sol.basis[b][edge_index(n, a, a + 1)];
    }
    params[n - 1] = sol.basis[b][edge_index(n, 1, n)];
    if (family_lambda(n, k, params) != sol.basis[b]) {
      check.span_matches = false;
      check.failures.push_back("solver basis vector " + std::to_string(b + 1) +
                               " lies outside the closed-form span");
    }
  }
  if (check.dimension != n) check.span_matches = false;

  // Distinctness across k at fixed n (n >= 5). Score multisets separate two
  // indices only when the formula range n >= 2k+1 covers both; the k and
  // n-1-k tournaments are reversal-duals with one shared multiset, so the
  // general test is canonical-code inequality.
  if (n < 2 * k + 1) {
    check.notes.push_back("score formula range n >= 2k+1 not met; multiset "
                          "may coincide with k = " + std::to_string(n - 1 - k));
  }
  if (n >= 5) {
    const ScoreVector mine = sorted_scores(t);
    for (int other = 1; other <= n - 3; ++other) {
      if (other == k) continue;
      const Tournament ot = family_tournament(n, other);
      const bool same_scores = sorted_scores(ot) == mine;
      if (same_scores && n >= 2 * k + 1 && n >= 2 * other + 1) {
        check.distinct_from_other_k = false;
        check.failures.push_back("score multiset collides with k = " +
                                 std::to_string(other) +
                                 " inside the formula range");
      }
      if (n <= 12) {
        if (are_isomorphic(t, ot)) {
          check.distinct_from_other_k = false;
          check.failures.push_back("isomorphic to the k = " +
                                   std::to_string(other) + " tournament");
        }
      } else if (same_scores) {
        check.notes.push_back("isomorphism with k = " + std::to_string(other) +
                              " undecided (canonical codes need n <= 12)");
      }
    }
  }
  return check;
}

}  // namespace flagsym
