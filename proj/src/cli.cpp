#include "flagsym/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "flagsym/families.hpp"
#include "flagsym/isoclass.hpp"
#include "flagsym/survey.hpp"
#include "flagsym/symplectic.hpp"
#include "flagsym/tournament.hpp"

namespace flagsym {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string edge_name(int i, int j) {
  return "l" + std::to_string(i) + "_" + std::to_string(j);
}

std::string join_ints(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<Rational> parse_params(const std::string& text) {
  std::vector<Rational> params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    params.push_back(rational_from_string(item));
  }
  return params;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- classify

int run_classify(const std::string& code, const std::string& format,
                 std::ostream& out) {
  const Tournament t = Tournament::from_code(code);
  const int n = t.players();
  const ScoreVector score = score_vector(t);
  const ScoreVector sorted = sorted_scores(t);
  const bool integrable = is_transitive(t);
  const bool parabolic = n >= 3 && is_parabolic(t);
  const auto cycle = n >= 3 ? hamiltonian_cycle(t) : std::nullopt;
  std::optional<FourProfile> profile;
  if (n >= 4) profile = four_subtournament_profile(t);
  const int cyclic = three_cycle_count(t);
  const int transitive = n * (n - 1) * (n - 2) / 6 - cyclic;

  std::vector<std::array<int, 3>> cyclic_triples;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (triple_class(t, i, j, k) == TripleClass::Cyclic) {
          cyclic_triples.push_back({i, j, k});
        }
      }
    }
  }

  if (format == "json") {
    ordered_json j;
    j["code"] = t.code();
    j["n"] = n;
    j["score"] = score;
    j["sorted_score"] = sorted;
    j["integrable"] = integrable;
    j["parabolic"] = parabolic;
    j["hamiltonian"] = cycle.has_value();
    j["hamiltonian_cycle"] = cycle ? ordered_json(*cycle) : ordered_json(nullptr);
    j["forbidden4"] = profile && profile->has_forbidden();
    j["witness"] = profile && profile->forbidden_witness
                       ? ordered_json(*profile->forbidden_witness)
                       : ordered_json(nullptr);
    j["triples"] = {{"transitive", transitive}, {"cyclic", cyclic}};
    j["cyclic_triples"] = cyclic_triples;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "code,n,integrable,parabolic,hamiltonian,forbidden4,"
           "transitive_triples,cyclic_triples,score,witness\n";
    out << t.code() << ',' << n << ',' << integrable << ',' << parabolic << ','
        << cycle.has_value() << ',' << (profile && profile->has_forbidden())
        << ',' << transitive << ',' << cyclic << ',' << join_ints(score, " ")
        << ',';
    if (profile && profile->forbidden_witness) {
      const auto& w = *profile->forbidden_witness;
      out << w[0] << ' ' << w[1] << ' ' << w[2] << ' ' << w[3];
    }
    out << '\n';
  } else {
    out << "code:        " << t.code() << '\n';
    out << "players:     " << n << '\n';
    out << "score:       (" << join_ints(score, ", ") << ")  sorted ("
        << join_ints(sorted, ", ") << ")\n";
    out << "integrable:  " << yes_no(integrable) << '\n';
    out << "parabolic:   " << yes_no(parabolic) << '\n';
    out << "hamiltonian: " << yes_no(cycle.has_value());
    if (cycle) {
      out << "  (cycle " << join_ints(*cycle, " -> ") << " -> " << (*cycle)[0]
          << ")";
    }
    out << '\n';
    out << "forbidden4:  ";
    if (!profile) {
      out << "n/a (n < 4)\n";
    } else if (profile->forbidden_witness) {
      const auto& w = *profile->forbidden_witness;
      out << "yes  (witness {" << w[0] << ", " << w[1] << ", " << w[2] << ", "
          << w[3] << "})\n";
    } else {
      out << "no\n";
    }
    out << "triples:     " << transitive << " transitive, " << cyclic
        << " cyclic";
    if (!cyclic_triples.empty()) {
      out << "  cyclic:";
      for (const auto& tr : cyclic_triples) {
        out << " (" << tr[0] << "," << tr[1] << "," << tr[2] << ")";
      }
    }
    out << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- solve

int run_solve(const std::string& code, const std::string& format,
              bool integer_sample, std::ostream& out) {
  const Tournament t = Tournament::from_code(code);
  const SolutionSpace sol = solve_family(t);

  if (format == "json") {
    ordered_json j;
    j["code"] = t.code();
    ordered_json solution = solution_to_json(sol);
    for (auto& [key, value] : solution.items()) {
      j[key] = std::move(value);
    }
    if (integer_sample && sol.verdict == Verdict::FeasibleInterior) {
      ordered_json scaled = ordered_json::array();
      for (const Integer& v : scale_to_integers(sol.sample)) {
        scaled.push_back(v.get_str());
      }
      j["sample_integer"] = std::move(scaled);
    }
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "kind,index,i,j,value\n";
    for (std::size_t b = 0; b < sol.basis.size(); ++b) {
      for (std::size_t e = 0; e < sol.edges.size(); ++e) {
        out << "basis," << b + 1 << ',' << sol.edges[e].first << ','
            << sol.edges[e].second << ',' << rational_to_string(sol.basis[b][e])
            << '\n';
      }
    }
    if (sol.verdict == Verdict::FeasibleInterior) {
      for (std::size_t e = 0; e < sol.edges.size(); ++e) {
        out << "sample,1," << sol.edges[e].first << ',' << sol.edges[e].second
            << ',' << rational_to_string(sol.sample[e]) << '\n';
      }
    } else {
      for (std::size_t r = 0; r < sol.certificate.row_multipliers.size(); ++r) {
        out << "certificate_multiplier," << r + 1 << ",,,"
            << rational_to_string(sol.certificate.row_multipliers[r]) << '\n';
      }
      for (std::size_t e = 0; e < sol.edges.size(); ++e) {
        out << "certificate_combination,1," << sol.edges[e].first << ','
            << sol.edges[e].second << ','
            << rational_to_string(sol.certificate.combination[e]) << '\n';
      }
    }
  } else {
    out << "code:      " << t.code() << '\n';
    out << "dimension: " << sol.dimension << '\n';
    out << "verdict:   "
        << (sol.verdict == Verdict::FeasibleInterior ? "feasible (interior point exists)"
                                                     : "infeasible")
        << '\n';
    for (std::size_t b = 0; b < sol.basis.size(); ++b) {
      out << "basis " << b + 1 << ":  ";
      bool first = true;
      for (std::size_t e = 0; e < sol.edges.size(); ++e) {
        if (sol.basis[b][e] == 0) continue;
        if (!first) out << "  ";
        out << edge_name(sol.edges[e].first, sol.edges[e].second) << "="
            << rational_to_string(sol.basis[b][e]);
        first = false;
      }
      out << '\n';
    }
    if (sol.verdict == Verdict::FeasibleInterior) {
      out << "margin:    " << rational_to_string(sol.margin) << '\n';
      out << "sample:   ";
      const auto integers = scale_to_integers(sol.sample);
      for (std::size_t e = 0; e < sol.edges.size(); ++e) {
        out << ' ' << edge_name(sol.edges[e].first, sol.edges[e].second) << "="
            << (integer_sample ? integers[e].get_str()
                               : rational_to_string(sol.sample[e]));
      }
      out << '\n';
    } else {
      out << "certificate multipliers:";
      for (const auto& v : sol.certificate.row_multipliers) {
        out << ' ' << rational_to_string(v);
      }
      out << '\n';
      out << "certificate combination:";
      for (std::size_t e = 0; e < sol.edges.size(); ++e) {
        if (sol.certificate.combination[e] == 0) continue;
        out << ' ' << edge_name(sol.edges[e].first, sol.edges[e].second) << "="
            << rational_to_string(sol.certificate.combination[e]);
      }
      out << '\n';
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------ family

int run_family(int n, int k, const std::string& params_text, bool emit_matrix,
               const std::string& format, std::ostream& out) {
  FamilyParams params;
  if (params_text.empty()) {
    params = FamilyParams::unit(n, k);
  } else {
    params = FamilyParams{n, k, parse_params(params_text)};
  }
  const Tournament t = family_tournament(n, k);
  const MetricSpec metric = family_metric(params);
  const MetricClass cls = classify_metric(t, metric);
  const SolutionSpace sol = solve_family(t);
  const auto matrix = family_matrix_values(params);
  const auto symbolic =
      emit_matrix ? family_matrix_symbolic(n, k)
                  : std::vector<std::vector<std::string>>{};

  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["code"] = t.code();
    j["score"] = sorted_scores(t);
    j["dimension"] = sol.dimension;
    ordered_json p = ordered_json::array();
    for (const auto& v : params.free) p.push_back(rational_to_string(v));
    j["params"] = std::move(p);
    j["classification"] = to_string(cls);
    ordered_json m = ordered_json::array();
    for (const auto& row : matrix) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back(rational_to_string(v));
      m.push_back(std::move(r));
    }
    j["matrix"] = std::move(m);
    if (emit_matrix) j["matrix_symbolic"] = symbolic;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << (emit_matrix ? "i,j,value,symbolic\n" : "i,j,value\n");
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        out << i << ',' << j << ','
            << rational_to_string(matrix[i - 1][j - 1]);
        if (emit_matrix) out << ',' << symbolic[i - 1][j - 1];
        out << '\n';
      }
    }
  } else {
    out << "family (n=" << n << ", k=" << k << ")\n";
    out << "code:           " << t.code() << '\n';
    out << "score:          (" << join_ints(sorted_scores(t), ", ") << ")\n";
    out << "dimension:      " << sol.dimension << '\n';
    out << "params:        ";
    for (const auto& v : params.free) out << ' ' << rational_to_string(v);
    out << '\n';
    out << "classification: " << to_string(cls) << '\n';
    out << "matrix:\n";
    for (int i = 0; i < n; ++i) {
      out << " ";
      for (int j = 0; j < n; ++j) {
        out << ' ' << rational_to_string(matrix[i][j]);
      }
      out << '\n';
    }
    if (emit_matrix) {
      out << "matrix (symbolic):\n";
      for (int i = 0; i < n; ++i) {
        out << " ";
        for (int j = 0; j < n; ++j) out << ' ' << symbolic[i][j];
        out << '\n';
      }
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------ census

int run_census(int n, const std::string& out_path, int jobs,
               std::ostream& out) {
  const std::vector<CensusRecord> records = census(n, jobs);

  std::string path = out_path;
  if (path.empty()) {
    if (const char* cache = std::getenv("FLAGSYM_CACHE_DIR");
        cache && *cache) {
      std::filesystem::path dir(cache);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) {
        throw std::runtime_error("cannot create cache directory " +
                                 dir.string() + ": " + ec.message());
      }
      path = (dir / ("census-n" + std::to_string(n) + ".jsonl")).string();
    }
  }

  if (path.empty()) {
    write_census_jsonl(records, out);
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open census output file " + path);
    }
    write_census_jsonl(records, file);
    if (!file) {
      throw std::runtime_error("write failed for census output file " + path);
    }
    out << "wrote " << records.size() << " records to " << path << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& target, int n_max, int jobs, unsigned seed,
               const std::string& format, std::ostream& out) {
  bool ok = true;
  ordered_json jreport = ordered_json::array();

  if (target == "theorem-2.2") {
    for (int n = 4; n <= std::min(n_max, 8); ++n) {
      const Theorem22Report r = verify_theorem22(n, jobs);
      ok = ok && r.ok();
      if (format == "json") {
        ordered_json j;
        j["n"] = r.n;
        j["classes"] = r.classes;
        j["forbidden_classes"] = r.forbidden_classes;
        j["certificates_verified"] = r.certificates_verified;
        j["violations"] = r.violations;
        jreport.push_back(std::move(j));
      } else {
        out << (r.ok() ? "PASS" : "FAIL") << " theorem-2.2 n=" << n << ": "
            << r.forbidden_classes << " forbidden classes of " << r.classes
            << ", " << r.certificates_verified << " certificates verified";
        for (const auto& v : r.violations) out << "; " << v;
        out << '\n';
      }
    }
  } else if (target == "theorem-3.1") {
    for (int n = 4; n <= std::min(n_max, kMaxPlayers); ++n) {
      const int k_max = n == 4 ? 1 : n - 3;
      for (int k = 1; k <= k_max; ++k) {
        const FamilyCheck c = verify_family(n, k, seed);
        ok = ok && c.passed();
        if (format == "json") {
          ordered_json j;
          j["n"] = n;
          j["k"] = k;
          j["dimension"] = c.dimension;
          j["passed"] = c.passed();
          j["failures"] = c.failures;
          jreport.push_back(std::move(j));
        } else {
          out << (c.passed() ? "PASS" : "FAIL") << " theorem-3.1 n=" << n
              << " k=" << k << ": dimension " << c.dimension;
          for (const auto& f : c.failures) out << "; " << f;
          out << '\n';
        }
      }
    }
  } else if (target == "wolf-gray") {
    for (int n = 3; n <= std::min(n_max, 7); ++n) {
      const NormalMetricReport r = normal_metric_survey(n);
      const bool pass =
          n == 3 ? r.accepting.size() == 1 &&
                       !is_transitive(Tournament::from_code(r.accepting[0]))
                 : r.accepting.empty();
      ok = ok && pass;
      if (format == "json") {
        ordered_json j;
        j["n"] = n;
        j["classes"] = r.classes;
        j["accepting"] = r.accepting;
        j["passed"] = pass;
        jreport.push_back(std::move(j));
      } else {
        out << (pass ? "PASS" : "FAIL") << " wolf-gray n=" << n << ": "
            << r.accepting.size() << " of " << r.classes
            << " classes accept the normal metric\n";
      }
    }
  } else if (target == "families-4sub") {
    for (int n = 4; n <= std::min(n_max, 8); ++n) {
      const int k_max = n == 4 ? 1 : n - 3;
      for (int k = 1; k <= k_max; ++k) {
        const Tournament t = family_tournament(n, k);
        const FourProfile profile = four_subtournament_profile(t);
        const bool pass = !profile.has_forbidden() && is_hamiltonian(t);
        ok = ok && pass;
        if (format == "json") {
          ordered_json j;
          j["n"] = n;
          j["k"] = k;
          j["transitive"] = profile.count(FourClass::Transitive);
          j["strong"] = profile.count(FourClass::Strong);
          j["forbidden"] = profile.count(FourClass::CycleWithSink) +
                           profile.count(FourClass::CycleWithSource);
          j["hamiltonian"] = is_hamiltonian(t);
          j["passed"] = pass;
          jreport.push_back(std::move(j));
        } else {
          out << (pass ? "PASS" : "FAIL") << " families-4sub n=" << n
              << " k=" << k << ": " << profile.count(FourClass::Transitive)
              << " transitive, " << profile.count(FourClass::Strong)
              << " strong 4-subtournaments\n";
        }
      }
    }
  } else {
    throw std::invalid_argument("unknown verification target: " + target);
  }

  if (format == "json") {
    ordered_json j;
    j["target"] = target;
    j["ok"] = ok;
    j["results"] = std::move(jreport);
    out << j.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

// -------------------------------------------------------------- conjecture

int run_conjecture(int which, int n, int jobs, const std::string& format,
                   std::ostream& out) {
  if (which == 1) {
    const Conjecture1Report r = verify_conjecture1(n, jobs);
    if (format == "json") {
      ordered_json j;
      j["conjecture"] = 1;
      j["n"] = r.n;
      j["classes"] = r.classes;
      j["admitting"] = r.admitting;
      j["forbidden"] = r.forbidden;
      j["hard_violations"] = r.hard_violations;
      j["converse_counterexamples"] = r.converse_counterexamples;
      j["equivalence_holds"] = r.equivalence_holds();
      out << j.dump(2) << '\n';
    } else {
      out << "conjecture 1, n=" << n << ": " << r.classes << " classes, "
          << r.admitting << " admitting, " << r.forbidden
          << " containing a forbidden 4-subtournament\n";
      out << "hard direction (forbidden => not admitting): "
          << (r.hard_violations.empty() ? "holds"
                                        : "VIOLATED — theorem contradicted")
          << '\n';
      for (const auto& v : r.hard_violations) out << "  violation: " << v << '\n';
      out << "converse (clean => admitting): "
          << (r.converse_counterexamples.empty()
                  ? "holds on this census (experimental evidence)"
                  : "fails on this census")
          << '\n';
      for (const auto& c : r.converse_counterexamples) {
        out << "  counterexample: " << c << '\n';
      }
    }
    return r.hard_violations.empty() ? kExitOk : kExitVerificationFailure;
  }

  const Conjecture2Report r = verify_conjecture2(n, jobs);
  if (format == "json") {
    ordered_json j;
    j["conjecture"] = 2;
    j["n"] = r.n;
    j["admitting_nonintegrable"] = r.admitting_nonintegrable;
    j["counterexamples"] = r.counterexamples;
    j["holds"] = r.holds();
    out << j.dump(2) << '\n';
  } else {
    out << "conjecture 2, n=" << n << ": " << r.admitting_nonintegrable
        << " admitting non-integrable classes\n";
    out << "all n-dimensional: "
        << (r.holds() ? "holds on this census (experimental evidence)"
                      : "fails on this census")
        << '\n';
    for (const auto& c : r.counterexamples) out << "  counterexample: " << c << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ normal

int run_normal(int n, const std::string& format, std::ostream& out) {
  const NormalMetricReport r = normal_metric_survey(n);
  if (format == "json") {
    ordered_json j;
    j["n"] = r.n;
    j["classes"] = r.classes;
    j["accepting"] = r.accepting;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "n,classes,accepting_code\n";
    if (r.accepting.empty()) {
      out << r.n << ',' << r.classes << ",\n";
    }
    for (const auto& code : r.accepting) {
      out << r.n << ',' << r.classes << ',' << code << '\n';
    }
  } else {
    out << "normal metric survey, n=" << n << ": " << r.accepting.size()
        << " of " << r.classes << " classes accept\n";
    for (const auto& code : r.accepting) out << "  " << code << '\n';
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"(1,2)-symplectic metrics on full flag manifolds, via tournaments"};
  app.name("flagsym");
  app.require_subcommand(1);

  std::string format = "text";
  unsigned seed = 2024;
  int jobs = 1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };

  std::string classify_code;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Combinatorial flags of one tournament");
  classify_cmd->add_option("--tournament", classify_code, "Code \"n:bits\"")
      ->required();
  add_format(classify_cmd);

  std::string solve_code;
  bool integer_sample = false;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Kernel and strict positivity of the triple system");
  solve_cmd->add_option("--tournament", solve_code, "Code \"n:bits\"")
      ->required();
  solve_cmd->add_flag("--integer-sample", integer_sample,
                      "Scale the sample metric to integers");
  add_format(solve_cmd);

  int family_n = 0, family_k = 0;
  std::string family_params;
  bool emit_matrix = false;
  CLI::App* family_cmd = app.add_subcommand(
      "family", "Closed-form metric family for the (n, k) tournament");
  family_cmd->add_option("--n", family_n, "Players")->required();
  family_cmd->add_option("--k", family_k, "Family index (1..n-3)")->required();
  family_cmd->add_option("--params", family_params,
                         "Comma-separated positive rationals, n of them");
  family_cmd->add_flag("--emit-matrix", emit_matrix,
                       "Include the symbolic matrix");
  add_format(family_cmd);

  int census_n = 0;
  std::string census_out;
  CLI::App* census_cmd =
      app.add_subcommand("census", "Classify every isomorphism class (JSONL)");
  census_cmd->add_option("--n", census_n, "Players (3..8)")->required();
  census_cmd->add_option("--out", census_out,
                         "Output path (default: stdout, or "
                         "$FLAGSYM_CACHE_DIR/census-n<N>.jsonl if set)");
  census_cmd->add_option("--jobs", jobs, "Parallel workers")
      ->check(CLI::PositiveNumber);

  std::string verify_target;
  int n_max = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Machine verification sweeps");
  verify_cmd
      ->add_option("--target", verify_target,
                   "theorem-2.2 | theorem-3.1 | wolf-gray | families-4sub")
      ->required()
      ->check(CLI::IsMember(
          {"theorem-2.2", "theorem-3.1", "wolf-gray", "families-4sub"}));
  verify_cmd->add_option("--n-max", n_max, "Largest player count")->required();
  verify_cmd->add_option("--jobs", jobs, "Parallel workers")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
  add_format(verify_cmd);

  int which = 0, conjecture_n = 0;
  CLI::App* conjecture_cmd =
      app.add_subcommand("conjecture", "Census-backed conjecture experiments");
  conjecture_cmd->add_option("--which", which, "1 or 2")
      ->required()
      ->check(CLI::Range(1, 2));
  conjecture_cmd->add_option("--n", conjecture_n, "Players (4..8)")->required();
  conjecture_cmd->add_option("--jobs", jobs, "Parallel workers")
      ->check(CLI::PositiveNumber);
  add_format(conjecture_cmd);

  int normal_n = 0;
  CLI::App* normal_cmd = app.add_subcommand(
      "normal", "Which classes accept the all-equal metric");
  normal_cmd->add_option("--n", normal_n, "Players (3..7)")->required();
  add_format(normal_cmd);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify_code, format, out);
    if (solve_cmd->parsed()) {
      return run_solve(solve_code, format, integer_sample, out);
    }
    if (family_cmd->parsed()) {
      return run_family(family_n, family_k, family_params, emit_matrix, format,
                        out);
    }
    if (census_cmd->parsed()) return run_census(census_n, census_out, jobs, out);
    if (verify_cmd->parsed()) {
      return run_verify(verify_target, n_max, jobs, seed, format, out);
    }
    if (conjecture_cmd->parsed()) {
      return run_conjecture(which, conjecture_n, jobs, format, out);
    }
    if (normal_cmd->parsed()) return run_normal(normal_n, format, out);
    err << "no subcommand selected\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
}

}  // namespace flagsym
