#include "flagsym/symplectic.hpp"

#include <stdexcept>

#include "flagsym/linalg.hpp"
#include "flagsym/simplex.hpp"

namespace flagsym {

int edge_count(int n) { return n * (n - 1) / 2; }

int edge_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) {
    throw std::invalid_argument("edge index needs distinct players in 1..n");
  }
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

std::vector<std::pair<int, int>> edge_list(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

MetricSpec::MetricSpec(int n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 2 || n_ > kMaxPlayers) {
    throw std::invalid_argument("metric player count out of range");
  }
  if (static_cast<int>(values_.size()) != edge_count(n_)) {
    throw std::invalid_argument("metric needs one weight per unordered pair");
  }
  for (std::size_t e = 0; e < values_.size(); ++e) {
    if (values_[e] <= 0) {
      throw std::invalid_argument("metric weight must be positive at edge " +
                                  std::to_string(e));
    }
  }
}

MetricSpec MetricSpec::uniform(int n, const Rational& value) {
  return MetricSpec(n, std::vector<Rational>(edge_count(n), value));
}

const Rational& MetricSpec::lambda(int i, int j) const {
  return values_[edge_index(n_, i, j)];
}

MetricSpec MetricSpec::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("metric scale must be positive");
  std::vector<Rational> scaled = values_;
  for (auto& v : scaled) v *= factor;
  return MetricSpec(n_, std::move(scaled));
}

Rational triple_coefficient(const Tournament& t, const MetricSpec& m,
                            int i, int j, int k) {
  if (m.players() != t.players()) {
    throw std::invalid_argument("metric and tournament sizes differ");
  }
  if (!(1 <= i && i < j && j < k && k <= t.players())) {
    throw std::invalid_argument("triple must satisfy 1 <= i < j < k <= n");
  }
  return Rational(t.eps(i, j)) * m.lambda(i, j) -
         Rational(t.eps(i, k)) * m.lambda(i, k) +
         Rational(t.eps(j, k)) * m.lambda(j, k);
}

std::vector<TripleReport> d_omega_report(const Tournament& t, const MetricSpec& m) {
  if (m.players() != t.players()) {
    throw std::invalid_argument("metric and tournament sizes differ");
  }
  const int n = t.players();
  std::vector<TripleReport> reports;
  reports.reserve(n * (n - 1) * (n - 2) / 6);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        TripleReport r;
        r.triple = {i, j, k};
        r.cls = triple_class(t, i, j, k);
        r.coefficient = triple_coefficient(t, m, i, j, k);
        r.component = r.cls == TripleClass::Cyclic ? FormComponent::Pure30_03
                                                   : FormComponent::Mixed21_12;
        reports.push_back(std::move(r));
      }
    }
  }
  return reports;
}

MetricClass classify_metric(const Tournament& t, const MetricSpec& m) {
  bool transitive_all_zero = true;
  bool any_cyclic = false;
  for (const TripleReport& r : d_omega_report(t, m)) {
    if (r.cls == TripleClass::Cyclic) {
      any_cyclic = true;
      if (r.coefficient == 0) {
        throw std::logic_error("cyclic triple coefficient vanished for a positive metric");
      }
    } else if (r.coefficient != 0) {
      transitive_all_zero = false;
    }
  }
  if (!transitive_all_zero) return MetricClass::None;
  return any_cyclic ? MetricClass::OneTwoSymplectic : MetricClass::Kahler;
}

const char* to_string(MetricClass c) {
  switch (c) {
    case MetricClass::Kahler:
      return "kahler";
    case MetricClass::OneTwoSymplectic:
      return "one-two-symplectic";
    case MetricClass::None:
      return "none";
  }
  return "?";
}

ConstraintSystem constraint_system(const Tournament& t) {
  const int n = t.players();
  ConstraintSystem cs;
  cs.n = n;
  cs.edges = edge_list(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (triple_class(t, i, j, k) == TripleClass::Cyclic) continue;
        ConstraintRow row;
        row.triple = {i, j, k};
        row.columns = {edge_index(n, i, j), edge_index(n, i, k),
                       edge_index(n, j, k)};
        row.coeffs = {t.eps(i, j), -t.eps(i, k), t.eps(j, k)};
        cs.rows.push_back(row);
      }
    }
  }
  return cs;
}

std::vector<std::vector<int>> ConstraintSystem::dense_rows() const {
  std::vector<std::vector<int>> dense(rows.size(),
                                      std::vector<int>(edges.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int a = 0; a < 3; ++a) {
      dense[r][rows[r].columns[a]] += rows[r].coeffs[a];
    }
  }
  return dense;
}

Rational ConstraintSystem::eval_row(const ConstraintRow& row,
                                    const std::vector<Rational>& values) const {
  if (values.size() != edges.size()) {
    throw std::invalid_argument("row evaluation needs one value per edge");
  }
  Rational sum = 0;
  for (int a = 0; a < 3; ++a) {
    sum += Rational(row.coeffs[a]) * values[row.columns[a]];
  }
  return sum;
}

namespace {

// Stiemke witness: y with A^T y componentwise >= 0 and nonzero. Exactly one
// of "strictly positive kernel vector" / "such a witness" exists, so this
// must be feasible whenever the positivity LP fails.
FarkasCertificate stiemke_certificate(const ConstraintSystem& cs) {
  const int r = static_cast<int>(cs.rows.size());
  const int e = static_cast<int>(cs.edges.size());
  const auto dense = cs.dense_rows();

  // Variables (y+, y-); constraints: -(A^T y)_edge <= 0 and sum_e (A^T y)_e = 1.
  std::vector<lp::Constraint> constraints;
  constraints.reserve(e + 1);
  for (int col = 0; col < e; ++col) {
    lp::Constraint c;
    c.coeff.assign(2 * r, Rational(0));
    for (int row = 0; row < r; ++row) {
      c.coeff[row] = -dense[row][col];
      c.coeff[r + row] = dense[row][col];
    }
    c.rel = lp::Relation::LessEq;
    c.rhs = 0;
    constraints.push_back(std::move(c));
  }
  lp::Constraint norm;
  norm.coeff.assign(2 * r, Rational(0));
  for (int row = 0; row < r; ++row) {
    Rational row_sum = 0;
    for (int col = 0; col < e; ++col) row_sum += dense[row][col];
    norm.coeff[row] = row_sum;
    norm.coeff[r + row] = -row_sum;
  }
  norm.rel = lp::Relation::Equal;
  norm.rhs = 1;
  constraints.push_back(std::move(norm));

  const lp::Result lpres =
      lp::maximize(std::vector<Rational>(2 * r, Rational(0)), constraints);
  if (lpres.status != lp::Status::Optimal) {
    throw std::logic_error("Stiemke alternative violated: no certificate found");
  }

  FarkasCertificate cert;
  cert.row_multipliers.resize(r);
  for (int row = 0; row < r; ++row) {
    cert.row_multipliers[row] = lpres.point[row] - lpres.point[r + row];
  }
  cert.combination.assign(e, Rational(0));
  for (int row = 0; row < r; ++row) {
    if (cert.row_multipliers[row] == 0) continue;
    for (int col = 0; col < e; ++col) {
      cert.combination[col] += cert.row_multipliers[row] * dense[row][col];
    }
  }
  return cert;
}

}  // namespace

bool verify_farkas(const ConstraintSystem& cs, const FarkasCertificate& cert) {
  const int r = static_cast<int>(cs.rows.size());
  const int e = static_cast<int>(cs.edges.size());
  if (static_cast<int>(cert.row_multipliers.size()) != r ||
      static_cast<int>(cert.combination.size()) != e) {
    return false;
  }
  const auto dense = cs.dense_rows();
  bool nonzero = false;
  for (int col = 0; col < e; ++col) {
    Rational z = 0;
    for (int row = 0; row < r; ++row) {
      z += cert.row_multipliers[row] * dense[row][col];
    }
    if (z != cert.combination[col]) return false;
    if (z < 0) return false;
    if (z > 0) nonzero = true;
  }
  return nonzero;
}

SolutionSpace solve_family(const Tournament& t) {
  const ConstraintSystem cs = constraint_system(t);
  const int e = static_cast<int>(cs.edges.size());

  SolutionSpace sol;
  sol.n = cs.n;
  sol.edges = cs.edges;

  const KernelBasis kb = kernel_basis(cs.dense_rows(), e);
  sol.dimension = static_cast<int>(kb.basis.size());
  sol.basis = kb.basis;

  auto certify_infeasible = [&cs](SolutionSpace& s) {
    s.verdict = Verdict::Infeasible;
    s.certificate = stiemke_certificate(cs);
    if (!verify_farkas(cs, s.certificate)) {
      throw std::logic_error("infeasibility certificate fails substitution");
    }
  };

  const int d = sol.dimension;
  if (d == 0) {
    certify_infeasible(sol);
    return sol;
  }

  // maximize t with lambda = B x, sum_e lambda_e = 1, lambda_e >= t.
  // Variables (x+, x-, t+, t-), all >= 0.
  const int nv = 2 * d + 2;
  std::vector<lp::Constraint> constraints;
  constraints.reserve(e + 1);
  for (int col = 0; col < e; ++col) {
    lp::Constraint c;
    c.coeff.assign(nv, Rational(0));
    for (int f = 0; f < d; ++f) {
      c.coeff[f] = -kb.basis[f][col];
      c.coeff[d + f] = kb.basis[f][col];
    }
    c.coeff[2 * d] = 1;
    c.coeff[2 * d + 1] = -1;
    c.rel = lp::Relation::LessEq;
    c.rhs = 0;
    constraints.push_back(std::move(c));
  }
  lp::Constraint norm;
  norm.coeff.assign(nv, Rational(0));
  for (int f = 0; f < d; ++f) {
    Rational col_sum = 0;
    for (int col = 0; col < e; ++col) col_sum += kb.basis[f][col];
    norm.coeff[f] = col_sum;
    norm.coeff[d + f] = -col_sum;
  }
  norm.rel = lp::Relation::Equal;
  norm.rhs = 1;
  constraints.push_back(std::move(norm));

  std::vector<Rational> objective(nv, Rational(0));
  objective[2 * d] = 1;
  objective[2 * d + 1] = -1;

  const lp::Result lpres = lp::maximize(objective, constraints);
  if (lpres.status == lp::Status::Unbounded) {
    throw std::logic_error("positivity margin cannot be unbounded");
  }
  if (lpres.status == lp::Status::Optimal && lpres.objective > 0) {
    sol.verdict = Verdict::FeasibleInterior;
    sol.margin = lpres.objective;
    sol.sample.assign(e, Rational(0));
    for (int f = 0; f < d; ++f) {
      const Rational x = lpres.point[f] - lpres.point[d + f];
      if (x == 0) continue;
      for (int col = 0; col < e; ++col) {
        sol.sample[col] += x * kb.basis[f][col];
      }
    }
    for (int col = 0; col < e; ++col) {
      if (sol.sample[col] < sol.margin) {
        throw std::logic_error("LP sample violates its own margin");
      }
    }
    return sol;
  }

  certify_infeasible(sol);
  return sol;
}

nlohmann::ordered_json solution_to_json(const SolutionSpace& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : s.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["dimension"] = s.dimension;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& vec : s.basis) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : vec) row.push_back(rational_to_string(v));
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  j["verdict"] = s.verdict == Verdict::FeasibleInterior ? "feasible_interior"
                                                        : "infeasible";
  if (s.verdict == Verdict::FeasibleInterior) {
    j["margin"] = rational_to_string(s.margin);
    nlohmann::ordered_json sample = nlohmann::ordered_json::array();
    for (const auto& v : s.sample) sample.push_back(rational_to_string(v));
    j["sample"] = std::move(sample);
    j["certificate"] = nullptr;
  } else {
    j["margin"] = nullptr;
    j["sample"] = nullptr;
    nlohmann::ordered_json cert;
    nlohmann::ordered_json mult = nlohmann::ordered_json::array();
    for (const auto& v : s.certificate.row_multipliers) {
      mult.push_back(rational_to_string(v));
    }
    nlohmann::ordered_json comb = nlohmann::ordered_json::array();
    for (const auto& v : s.certificate.combination) {
      comb.push_back(rational_to_string(v));
    }
    cert["row_multipliers"] = std::move(mult);
    cert["combination"] = std::move(comb);
    j["certificate"] = std::move(cert);
  }
  return j;
}

}  // namespace flagsym
