#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "flagsym/rational.hpp"
#include "flagsym/tournament.hpp"

namespace flagsym {

/// Edge variables are the unordered pairs {i,j}, i < j, in the same order
/// as the text-code bits.
int edge_count(int n);
int edge_index(int n, int i, int j);
std::vector<std::pair<int, int>> edge_list(int n);

/// Positive weights lambda_{ij} on unordered pairs: one invariant metric.
class MetricSpec {
 public:
  /// values over the edge order; every entry must be > 0.
  MetricSpec(int n, std::vector<Rational> values);

  static MetricSpec uniform(int n, const Rational& value = Rational(1));

  int players() const { return n_; }
  const Rational& lambda(int i, int j) const;
  const std::vector<Rational>& values() const { return values_; }
  MetricSpec scaled(const Rational& factor) const;

 private:
  int n_;
  std::vector<Rational> values_;
};

/// Where the triple's elementary 3-form lives: cyclic triples contribute to
/// the (3,0)+(0,3) part, transitive ones to (2,1)+(1,2).
enum class FormComponent { Pure30_03, Mixed21_12 };

struct TripleReport {
  std::array<int, 3> triple{};
  TripleClass cls = TripleClass::Transitive;
  Rational coefficient;
  FormComponent component = FormComponent::Mixed21_12;
};

/// C_ijk = eps_ij l_ij - eps_ik l_ik + eps_jk l_jk. Requires i < j < k.
Rational triple_coefficient(const Tournament& t, const MetricSpec& m,
                            int i, int j, int k);

/// One report per triple i < j < k, lexicographic. The (1,2)-part of the
/// differential of the Kahler form vanishes iff every transitive-class
/// coefficient is zero.
std::vector<TripleReport> d_omega_report(const Tournament& t, const MetricSpec& m);

enum class MetricClass { Kahler, OneTwoSymplectic, None };

/// Kahler iff the tournament is transitive and all coefficients vanish;
/// OneTwoSymplectic iff all transitive-class coefficients vanish (and not
/// Kahler). Cyclic coefficients never vanish for a positive metric, so
/// "almost Kahler, non-integrable" cannot occur.
MetricClass classify_metric(const Tournament& t, const MetricSpec& m);

const char* to_string(MetricClass c);

/// Homogeneous system over the edge variables: one row per transitive
/// triple i < j < k (lexicographic) with coefficients
/// (+eps_ij on {i,j}, -eps_ik on {i,k}, +eps_jk on {j,k}).
struct ConstraintRow {
  std::array<int, 3> triple{};
  std::array<int, 3> columns{};
  std::array<int, 3> coeffs{};
};

struct ConstraintSystem {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<ConstraintRow> rows;

  std::vector<std::vector<int>> dense_rows() const;
  /// Sum of coefficient*value over one row.
  Rational eval_row(const ConstraintRow& row, const std::vector<Rational>& values) const;
};

ConstraintSystem constraint_system(const Tournament& t);

enum class Verdict { FeasibleInterior, Infeasible };

/// Stiemke-style witness that no strictly positive kernel vector exists:
/// a rational combination of the rows whose edge-wise result is
/// componentwise >= 0 and not identically zero.
struct FarkasCertificate {
  std::vector<Rational> row_multipliers;
  std::vector<Rational> combination;
};

struct SolutionSpace {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int dimension = 0;
  std::vector<std::vector<Rational>> basis;  // RREF, free variables in edge order
  Verdict verdict = Verdict::Infeasible;
  /// FeasibleInterior only: a kernel point with sum 1 and every coordinate
  /// >= margin > 0 (margin is the LP optimum).
  std::vector<Rational> sample;
  Rational margin = 0;
  /// Infeasible only.
  FarkasCertificate certificate;
};

/// Exact kernel (fraction-free elimination) plus strict-positivity decision
/// by exact LP: maximize t subject to the kernel parametrization,
/// sum lambda = 1 and lambda_e >= t. Requires n >= 2 (n = 2 has no triples:
/// dimension 1, trivially feasible).
SolutionSpace solve_family(const Tournament& t);

/// Substitutes the certificate back into the system.
bool verify_farkas(const ConstraintSystem& cs, const FarkasCertificate& cert);

/// {"n", "edges", "dimension", "basis", "verdict", "margin", "sample",
/// "certificate"} with rationals rendered as "p/q" strings; see README.
nlohmann::ordered_json solution_to_json(const SolutionSpace& s);

}  // namespace flagsym
