#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagsym {

inline constexpr int kMaxPlayers = 16;

/// Raised when a tournament text code cannot be decoded.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A complete orientation of K_n: every pair of players {i, j} carries one
/// arc. Players are 1-based. eps(i, j) is the skew sign: +1 when i beats j,
/// -1 when j beats i, 0 on the diagonal. Values are immutable once built.
///
/// Text form: "n:bits", bits over pairs (1,2),(1,3),...,(1,n),(2,3),...,
/// (n-1,n); bit 1 means i -> j for i < j. This order is frozen — persisted
/// census files depend on it.
class Tournament {
 public:
  /// Decodes "n:bits". Errors name the offending bit index.
  static Tournament from_code(const std::string& code);

  /// bits[k] in {0,1}, pair order as in the text code.
  static Tournament from_bits(int n, const std::vector<int>& bits);

  /// Canonical tournament T_n: i -> j iff i < j.
  static Tournament canonical(int n);

  /// Parabolic pattern with the identity relabeling: for i < j,
  /// i -> j when j - i is odd, j -> i when j - i is even. Requires n >= 3.
  static Tournament parabolic_reference(int n);

  int players() const { return n_; }
  int eps(int i, int j) const;
  bool beats(int i, int j) const { return eps(i, j) == +1; }

  /// Bitmask of players beaten by i (bit j set iff i -> j).
  std::uint32_t out_mask(int i) const;
  /// Bitmask of players beating i.
  std::uint32_t in_mask(int i) const;

  std::string code() const;

  /// new_label[i-1] is the new label of player i; must be a bijection on 1..n.
  Tournament relabel(const std::vector<int>& new_label) const;

  /// Restriction to a strictly increasing subset (size >= 2), players
  /// relabeled 1..|keep| preserving order.
  Tournament subtournament(const std::vector<int>& keep) const;

  /// Arc-reversed tournament.
  Tournament reversed() const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.beats_ == b.beats_;
  }

 private:
  explicit Tournament(int n);
  void set_arc(int winner, int loser);

  int n_ = 0;
  std::array<std::uint32_t, kMaxPlayers + 1> beats_{};
};

/// Out-degrees, entry i-1 for player i.
using ScoreVector = std::vector<int>;

enum class TripleClass { Cyclic, Transitive };

ScoreVector score_vector(const Tournament& t);
ScoreVector sorted_scores(const Tournament& t);

/// Requires 1 <= i < j < k <= n. Cyclic iff the triple carries a 3-cycle.
TripleClass triple_class(const Tournament& t, int i, int j, int k);

/// Number of cyclic triples. Equals C(n,3) - sum_i C(s_i, 2).
int three_cycle_count(const Tournament& t);

/// True iff the dominance relation is transitive; equivalent to a sorted
/// score vector (0, 1, ..., n-1) and to the absence of 3-cycles. A true
/// verdict means the associated almost complex structure is integrable.
bool is_transitive(const Tournament& t);

/// Returns an n-cycle as a player sequence (each player once, every
/// consecutive arc and the closing arc oriented forward), or nullopt.
/// Decided via strong connectivity, which is equivalent for tournaments;
/// the cycle is grown by insertion so a certificate is always produced.
/// Requires n >= 3.
std::optional<std::vector<int>> hamiltonian_cycle(const Tournament& t);
bool is_hamiltonian(const Tournament& t);

/// True iff t is isomorphic to parabolic_reference(n). Requires n >= 3.
bool is_parabolic(const Tournament& t);

/// The four isomorphism classes of 4-tournaments, identified by sorted
/// score multiset: {0,1,2,3}, {1,1,2,2}, {0,2,2,2}, {1,1,1,3}.
/// The last two are the obstruction classes of the metric-existence
/// theorem (a 3-cycle plus a player losing to all / beating all).
enum class FourClass { Transitive, Strong, CycleWithSink, CycleWithSource };

bool is_forbidden(FourClass c);

/// Classifies a 4-player tournament.
FourClass four_class_of(const Tournament& four);

struct FourProfile {
  std::array<std::int64_t, 4> counts{};  // indexed by FourClass
  std::optional<std::array<int, 4>> forbidden_witness;

  bool has_forbidden() const { return forbidden_witness.has_value(); }
  std::int64_t count(FourClass c) const {
    return counts[static_cast<int>(c)];
  }
};

/// Classifies every 4-subset; the witness is the lexicographically first
/// forbidden subset, if any. Requires n >= 4.
FourProfile four_subtournament_profile(const Tournament& t);

}  // namespace flagsym
