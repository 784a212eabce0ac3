#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagsym/tournament.hpp"

namespace flagsym {

/// One classification row per isomorphism class.
struct CensusRecord {
  std::string code;            // canonical code
  std::vector<int> score;      // sorted ascending
  bool integrable = false;
  bool parabolic = false;
  bool hamiltonian = false;
  bool forbidden4 = false;
  std::optional<std::array<int, 4>> witness;
  bool admits12s = false;
  int dimension = 0;           // kernel dimension, reported even when infeasible
  std::optional<std::pair<int, int>> family;  // (n, k) when a closed-form family

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// Classifies one class representative. family_codes maps canonical codes of
/// the closed-form family tournaments to their (n, k).
CensusRecord census_record(
    const Tournament& t,
    const std::vector<std::pair<std::string, std::pair<int, int>>>& family_codes);

/// Full census over enumerate_classes(n), deterministic order. jobs > 1
/// distributes classes across threads; the output is identical regardless.
/// Requires 3 <= n <= 8. Throws if a record violates the hard invariants
/// (forbidden class admitting, or integrable without an (n-1)-dim family).
std::vector<CensusRecord> census(int n, int jobs = 1);

std::string census_record_json_line(const CensusRecord& r);
void write_census_jsonl(const std::vector<CensusRecord>& records, std::ostream& out);
std::vector<CensusRecord> read_census_jsonl(std::istream& in);

struct Theorem22Report {
  int n = 0;
  int classes = 0;
  int forbidden_classes = 0;
  int certificates_verified = 0;
  std::vector<std::string> violations;  // forbidden classes that admit or lack a valid certificate

  bool ok() const { return violations.empty(); }
};

/// Every class containing a forbidden 4-subtournament must be infeasible
/// with a Farkas certificate that verifies by substitution.
Theorem22Report verify_theorem22(int n, int jobs = 1);

struct Conjecture1Report {
  int n = 0;
  int classes = 0;
  int admitting = 0;
  int forbidden = 0;
  /// Hard direction (theorem): forbidden classes that admit. Must be empty.
  std::vector<std::string> hard_violations;
  /// Converse (conjectural): clean classes that do not admit. Reported only.
  std::vector<std::string> converse_counterexamples;

  bool equivalence_holds() const {
    return hard_violations.empty() && converse_counterexamples.empty();
  }
};

Conjecture1Report verify_conjecture1(int n, int jobs = 1);

struct Conjecture2Report {
  int n = 0;
  int admitting_nonintegrable = 0;
  std::vector<std::string> counterexamples;  // admitting non-integrable classes with dimension != n

  bool holds() const { return counterexamples.empty(); }
};

Conjecture2Report verify_conjecture2(int n, int jobs = 1);

struct NormalMetricReport {
  int n = 0;
  int classes = 0;
  std::vector<std::string> accepting;  // classes whose normal metric is (1,2)-symplectic
};

/// Evaluates the all-equal metric on every class. No LP involved.
NormalMetricReport normal_metric_survey(int n);

}  // namespace flagsym
