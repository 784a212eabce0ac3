#pragma once

#include <string>
#include <vector>

#include "flagsym/symplectic.hpp"
#include "flagsym/tournament.hpp"

namespace flagsym {

/// Free parameters of the degree-k family on n players, read as
/// (l_{12}, l_{23}, ..., l_{(n-1)n}, l_{1n}); all strictly positive.
struct FamilyParams {
  int n = 0;
  int k = 0;
  std::vector<Rational> free;

  static FamilyParams unit(int n, int k);
};

/// The family tournament: canonical orientation except n -> i for i <= k.
/// Its cyclic triples are exactly {(i, j, n) : i <= k < j < n}.
/// Requires n >= 4, 1 <= k <= n-3.
Tournament family_tournament(int n, int k);

/// Closed-form metric: l_ij is the consecutive-chain sum
/// l_{i(i+1)} + ... + l_{(j-1)j}, except l_{in} for i <= k which equals
/// l_{12} + ... + l_{(i-1)i} + l_{1n} (l_{1n} itself is free).
MetricSpec family_metric(const FamilyParams& p);

/// Images of the unit parameter vectors: n kernel vectors spanning the
/// closed-form family (entries 0/1 sums, no positivity requirement).
std::vector<std::vector<Rational>> family_basis(int n, int k);

/// Full n x n matrix of the closed-form metric entries (0 diagonal).
std::vector<std::vector<Rational>> family_matrix_values(const FamilyParams& p);

/// Same matrix with symbolic entries, e.g. "l1_2+l2_3"; "0" on the diagonal.
std::vector<std::vector<std::string>> family_matrix_symbolic(int n, int k);

struct FamilyCheck {
  int n = 0;
  int k = 0;
  int dimension = 0;
  bool classified_12s = false;      // randomized positive params classify as (1,2)-symplectic
  bool dimension_matches = false;   // solver kernel dimension == n
  bool feasible = false;            // strict positivity holds
  bool span_matches = false;        // closed form and solver kernel span each other
  bool distinct_from_other_k = true;  // n >= 5: no other k gives an isomorphic tournament
  std::vector<std::string> failures;  // violating triple / vector descriptions
  std::vector<std::string> notes;     // e.g. score formula precondition n >= 2k+1 not met

  bool passed() const {
    return classified_12s && dimension_matches && feasible && span_matches &&
           distinct_from_other_k;
  }
};

/// Cross-validates the closed form against the independent solver:
/// randomized classification, kernel dimension, mutual span containment by
/// exact substitution, and pairwise distinctness across k at fixed n.
/// Distinctness is decided by canonical code: the k and n-1-k tournaments
/// are reversal-duals sharing one score multiset whenever n <= 2k, so score
/// multisets alone separate only formula-range pairs (n >= 2k+1 for both).
FamilyCheck verify_family(int n, int k, unsigned seed = 2024, int random_trials = 5);

}  // namespace flagsym
