#pragma once

#include <string>
#include <vector>

#include "flagsym/tournament.hpp"

namespace flagsym {

/// Lexicographically minimal "n:bits" code over all player relabelings.
/// Idempotent and invariant under relabeling. Requires n <= 12.
std::string canonical_code(const Tournament& t);

/// Canonical-code equality, with a score-multiset prefilter that rejects
/// without canonicalizing. Requires a.players() == b.players().
bool are_isomorphic(const Tournament& a, const Tournament& b);

/// One canonical code per isomorphism class, sorted. Built by augmentation:
/// each (n-1)-class is extended by all 2^(n-1) orientation vectors for the
/// new player, canonicalized and deduplicated. Requires 2 <= n <= 8.
std::vector<std::string> enumerate_classes(int n);

/// Independent route: canonicalizes all 2^C(n,2) labeled tournaments.
/// Requires 2 <= n <= 7 (2^21 codes at the top).
std::vector<std::string> enumerate_classes_brute_force(int n);

}  // namespace flagsym
