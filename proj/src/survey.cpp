#include "flagsym/survey.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "flagsym/families.hpp"
#include "flagsym/isoclass.hpp"
#include "flagsym/symplectic.hpp"

namespace flagsym {

namespace {

std::vector<std::pair<std::string, std::pair<int, int>>> family_code_table(int n) {
  std::vector<std::pair<std::string, std::pair<int, int>>> table;
  if (n < 4) return table;
  for (int k = 1; k <= n - 3; ++k) {
    table.emplace_back(canonical_code(family_tournament(n, k)),
                       std::make_pair(n, k));
  }
  return table;
}

void enforce_hard_invariants(const CensusRecord& r, int n) {
  if (r.forbidden4 && r.admits12s) {
    throw std::logic_error("census invariant violated: forbidden class " +
                           r.code + " admits a (1,2)-symplectic metric");
  }
  const bool canonical_scores = [&] {
    for (int i = 0; i < n; ++i) {
      if (r.score[i] != i) return false;
    }
    return true;
  }();
  if (r.integrable != canonical_scores) {
    throw std::logic_error("census invariant violated: integrability and score "
                           "criterion disagree on " + r.code);
  }
  if (r.integrable && !(r.admits12s && r.dimension == n - 1)) {
    throw std::logic_error("census invariant violated: integrable class " +
                           r.code + " without its Kahler family");
  }
}

}  // namespace

CensusRecord census_record(
    const Tournament& t,
    const std::vector<std::pair<std::string, std::pair<int, int>>>& family_codes) {
  const int n = t.players();
  CensusRecord r;
  r.code = t.code();
  r.score = sorted_scores(t);
  r.integrable = is_transitive(t);
  r.parabolic = is_parabolic(t);
  r.hamiltonian = is_hamiltonian(t);
  if (n >= 4) {
    const FourProfile profile = four_subtournament_profile(t);
    r.forbidden4 = profile.has_forbidden();
    r.witness = profile.forbidden_witness;
  }
  const SolutionSpace sol = solve_family(t);
  r.admits12s = sol.verdict == Verdict::FeasibleInterior;
  r.dimension = sol.dimension;
  for (const auto& [code, nk] : family_codes) {
    if (code == r.code) {
      r.family = nk;
      break;
    }
  }
  return r;
}

std::vector<CensusRecord> census(int n, int jobs) {
  if (n < 3 || n > 8) {
    throw std::invalid_argument("census supports 3 <= n <= 8");
  }
  const std::vector<std::string> codes = enumerate_classes(n);
  const auto family_codes = family_code_table(n);

  std::vector<CensusRecord> records(codes.size());
  auto work = [&](std::size_t index) {
    records[index] =
        census_record(Tournament::from_code(codes[index]), family_codes);
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < codes.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<int>(jobs, static_cast<int>(codes.size()));
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= codes.size()) break;
          work(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const CensusRecord& r : records) enforce_hard_invariants(r, n);
  return records;
}

std::string census_record_json_line(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["code"] = r.code;
  j["score"] = r.score;
  j["integrable"] = r.integrable;
  j["parabolic"] = r.parabolic;
  j["hamiltonian"] = r.hamiltonian;
  j["forbidden4"] = r.forbidden4;
  if (r.witness) {
    j["witness"] = *r.witness;
  } else {
    j["witness"] = nullptr;
  }
  j["admits12s"] = r.admits12s;
  j["dimension"] = r.dimension;
  if (r.family) {
    j["family"] = {r.family->first, r.family->second};
  } else {
    j["family"] = nullptr;
  }
  return j.dump();
}

void write_census_jsonl(const std::vector<CensusRecord>& records,
                        std::ostream& out) {
  for (const CensusRecord& r : records) {
    out << census_record_json_line(r) << '\n';
  }
}

std::vector<CensusRecord> read_census_jsonl(std::istream& in) {
  std::vector<CensusRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& err) {
      throw std::runtime_error("census line " + std::to_string(lineno) +
                               ": " + err.what());
    }
    CensusRecord r;
    r.code = j.at("code").get<std::string>();
    r.score = j.at("score").get<std::vector<int>>();
    r.integrable = j.at("integrable").get<bool>();
    r.parabolic = j.at("parabolic").get<bool>();
    r.hamiltonian = j.at("hamiltonian").get<bool>();
    r.forbidden4 = j.at("forbidden4").get<bool>();
    if (!j.at("witness").is_null()) {
      r.witness = j.at("witness").get<std::array<int, 4>>();
    }
    r.admits12s = j.at("admits12s").get<bool>();
    r.dimension = j.at("dimension").get<int>();
    if (!j.at("family").is_null()) {
      const auto fam = j.at("family").get<std::vector<int>>();
      if (fam.size() != 2) {
        throw std::runtime_error("census line " + std::to_string(lineno) +
                                 ": family must be [n, k]");
      }
      r.family = std::make_pair(fam[0], fam[1]);
    }
    records.push_back(std::move(r));
  }
  return records;
}

Theorem22Report verify_theorem22(int n, int jobs) {
  if (n < 4 || n > 8) {
    throw std::invalid_argument("theorem-2.2 verification supports 4 <= n <= 8");
  }
  Theorem22Report report;
  report.n = n;
  const std::vector<CensusRecord> records = census(n, jobs);
  report.classes = static_cast<int>(records.size());
  for (const CensusRecord& r : records) {
    if (!r.forbidden4) continue;
    ++report.forbidden_classes;
    if (r.admits12s) {
      report.violations.push_back(r.code + ": forbidden class admits");
      continue;
    }
    const Tournament t = Tournament::from_code(r.code);
    const SolutionSpace sol = solve_family(t);
    if (sol.verdict != Verdict::Infeasible) {
      report.violations.push_back(r.code + ": solver verdict changed on recompute");
    } else if (!verify_farkas(constraint_system(t), sol.certificate)) {
      report.violations.push_back(r.code + ": Farkas certificate fails substitution");
    } else {
      ++report.certificates_verified;
    }
  }
  return report;
}

Conjecture1Report verify_conjecture1(int n, int jobs) {
  if (n < 4 || n > 8) {
    throw std::invalid_argument("conjecture 1 experiment supports 4 <= n <= 8");
  }
  Conjecture1Report report;
  report.n = n;
  const std::vector<CensusRecord> records = census(n, jobs);
  report.classes = static_cast<int>(records.size());
  for (const CensusRecord& r : records) {
    if (r.admits12s) ++report.admitting;
    if (r.forbidden4) ++report.forbidden;
    if (r.forbidden4 && r.admits12s) report.hard_violations.push_back(r.code);
    if (!r.forbidden4 && !r.admits12s) {
      report.converse_counterexamples.push_back(r.code);
    }
  }
  return report;
}

Conjecture2Report verify_conjecture2(int n, int jobs) {
  if (n < 4 || n > 8) {
    throw std::invalid_argument("conjecture 2 experiment supports 4 <= n <= 8");
  }
  Conjecture2Report report;
  report.n = n;
  for (const CensusRecord& r : census(n, jobs)) {
    if (!r.admits12s || r.integrable) continue;
    ++report.admitting_nonintegrable;
    if (r.dimension != n) {
      report.counterexamples.push_back(r.code + ": dimension " +
                                       std::to_string(r.dimension));
    }
  }
  return report;
}

NormalMetricReport normal_metric_survey(int n) {
  if (n < 3 || n > 7) {
    throw std::invalid_argument("normal metric survey supports 3 <= n <= 7");
  }
  NormalMetricReport report;
  report.n = n;
  const std::vector<std::string> codes = enumerate_classes(n);
  report.classes = static_cast<int>(codes.size());
  for (const std::string& code : codes) {
    const Tournament t = Tournament::from_code(code);
    if (classify_metric(t, MetricSpec::uniform(n)) != MetricClass::None) {
      report.accepting.push_back(code);
    }
  }
  return report;
}

}  // namespace flagsym
