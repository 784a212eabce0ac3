#include "flagsym/tournament.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace flagsym {

namespace {

void check_player_count(int n) {
  if (n < 2 || n > kMaxPlayers) {
    throw std::invalid_argument("player count out of range 2.." +
                                std::to_string(kMaxPlayers) + ": " +
                                std::to_string(n));
  }
}

int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace

Tournament::Tournament(int n) : n_(n) { check_player_count(n); }

void Tournament::set_arc(int winner, int loser) {
  beats_[winner] |= 1u << loser;
}

Tournament Tournament::from_bits(int n, const std::vector<int>& bits) {
  check_player_count(n);
  if (static_cast<int>(bits.size()) != pair_count(n)) {
    throw std::invalid_argument("expected " + std::to_string(pair_count(n)) +
                                " bits, got " + std::to_string(bits.size()));
  }
  Tournament t(n);
  int idx = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++idx) {
      if (bits[idx] != 0 && bits[idx] != 1) {
        throw std::invalid_argument("bit value out of {0,1} at index " +
                                    std::to_string(idx));
      }
      if (bits[idx]) {
        t.set_arc(i, j);
      } else {
        t.set_arc(j, i);
      }
    }
  }
  return t;
}

Tournament Tournament::from_code(const std::string& code) {
  auto colon = code.find(':');
  if (colon == std::string::npos) {
    throw ParseError("tournament code missing ':' separator: \"" + code + "\"");
  }
  int n = 0;
  const char* first = code.data();
  const char* last = code.data() + colon;
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || colon == 0) {
    throw ParseError("invalid player count in code: \"" + code + "\"");
  }
  if (n < 2 || n > kMaxPlayers) {
    throw ParseError("player count out of range 2.." +
                     std::to_string(kMaxPlayers) + ": " + std::to_string(n));
  }
  const std::string bits = code.substr(colon + 1);
  const int expected = pair_count(n);
  if (static_cast<int>(bits.size()) != expected) {
    throw ParseError("expected " + std::to_string(expected) + " bits, got " +
                     std::to_string(bits.size()));
  }
  for (int idx = 0; idx < expected; ++idx) {
    if (bits[idx] != '0' && bits[idx] != '1') {
      throw ParseError("non-bit character at bit index " + std::to_string(idx));
    }
  }
  std::vector<int> values(expected);
  for (int idx = 0; idx < expected; ++idx) values[idx] = bits[idx] - '0';
  return from_bits(n, values);
}

Tournament Tournament::canonical(int n) {
  check_player_count(n);
  Tournament t(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) t.set_arc(i, j);
  }
  return t;
}

Tournament Tournament::parabolic_reference(int n) {
  if (n < 3) throw std::invalid_argument("parabolic pattern needs n >= 3");
  check_player_count(n);
  Tournament t(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((j - i) % 2 == 1) {
        t.set_arc(i, j);
      } else {
        t.set_arc(j, i);
      }
    }
  }
  return t;
}

int Tournament::eps(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw std::invalid_argument("player index out of range 1.." +
                                std::to_string(n_));
  }
  if (i == j) return 0;
  return (beats_[i] >> j) & 1u ? +1 : -1;
}

std::uint32_t Tournament::out_mask(int i) const { return beats_[i]; }

std::uint32_t Tournament::in_mask(int i) const {
  std::uint32_t mask = 0;
  for (int j = 1; j <= n_; ++j) {
    if (j != i && ((beats_[j] >> i) & 1u)) mask |= 1u << j;
  }
  return mask;
}

std::string Tournament::code() const {
  std::string out = std::to_string(n_) + ":";
  out.reserve(out.size() + pair_count(n_));
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      out.push_back(((beats_[i] >> j) & 1u) ? '1' : '0');
    }
  }
  return out;
}

Tournament Tournament::relabel(const std::vector<int>& new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw std::invalid_argument("relabeling must assign all " +
                                std::to_string(n_) + " players");
  }
  std::vector<bool> seen(n_ + 1, false);
  for (int v : new_label) {
    if (v < 1 || v > n_ || seen[v]) {
      throw std::invalid_argument("relabeling is not a bijection on 1.." +
                                  std::to_string(n_));
    }
    seen[v] = true;
  }
  Tournament t(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i != j && ((beats_[i] >> j) & 1u)) {
        t.set_arc(new_label[i - 1], new_label[j - 1]);
      }
    }
  }
  return t;
}

Tournament Tournament::subtournament(const std::vector<int>& keep) const {
  if (keep.size() < 2) {
    throw std::invalid_argument("subtournament needs at least 2 players");
  }
  for (std::size_t a = 0; a < keep.size(); ++a) {
    if (keep[a] < 1 || keep[a] > n_) {
      throw std::invalid_argument("subtournament player out of range: " +
                                  std::to_string(keep[a]));
    }
    if (a > 0 && keep[a] <= keep[a - 1]) {
      throw std::invalid_argument(
          "subtournament players must be strictly increasing");
    }
  }
  const int m = static_cast<int>(keep.size());
  Tournament t(m);
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      if (a != b && ((beats_[keep[a - 1]] >> keep[b - 1]) & 1u)) {
        t.set_arc(a, b);
      }
    }
  }
  return t;
}

Tournament Tournament::reversed() const {
  Tournament t(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i != j && ((beats_[i] >> j) & 1u)) t.set_arc(j, i);
    }
  }
  return t;
}

ScoreVector score_vector(const Tournament& t) {
  ScoreVector s(t.players());
  for (int i = 1; i <= t.players(); ++i) {
    s[i - 1] = std::popcount(t.out_mask(i));
  }
  return s;
}

ScoreVector sorted_scores(const Tournament& t) {
  ScoreVector s = score_vector(t);
  std::sort(s.begin(), s.end());
  return s;
}

TripleClass triple_class(const Tournament& t, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= t.players())) {
    throw std::invalid_argument("triple must satisfy 1 <= i < j < k <= n");
  }
  const int eij = t.eps(i, j), ejk = t.eps(j, k), eik = t.eps(i, k);
  const bool cyclic = (eij == +1 && ejk == +1 && eik == -1) ||
                      (eij == -1 && ejk == -1 && eik == +1);
  return cyclic ? TripleClass::Cyclic : TripleClass::Transitive;
}

int three_cycle_count(const Tournament& t) {
  const int n = t.players();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (triple_class(t, i, j, k) == TripleClass::Cyclic) ++count;
      }
    }
  }
  return count;
}

bool is_transitive(const Tournament& t) { return three_cycle_count(t) == 0; }

namespace {

bool strongly_connected(const Tournament& t) {
  const int n = t.players();
  const std::uint32_t all = ((1u << n) - 1u) << 1;
  auto reach = [&](bool forward) {
    std::uint32_t seen = 1u << 1;
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 1; v <= n; ++v) {
        if ((frontier >> v) & 1u) {
          next |= forward ? t.out_mask(v) : t.in_mask(v);
        }
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all;
  };
  return reach(true) && reach(false);
}

}  // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const Tournament& t) {
  const int n = t.players();
  if (n < 3) throw std::invalid_argument("Hamiltonicity needs n >= 3");
  if (!strongly_connected(t)) return std::nullopt;

  // Seed with a 3-cycle; a strong tournament on >= 3 players has one.
  std::vector<int> cycle;
  for (int i = 1; i <= n && cycle.empty(); ++i) {
    for (int j = i + 1; j <= n && cycle.empty(); ++j) {
      for (int k = j + 1; k <= n && cycle.empty(); ++k) {
        if (triple_class(t, i, j, k) == TripleClass::Cyclic) {
          if (t.beats(i, j)) {
            cycle = {i, j, k};  // i -> j -> k -> i
          } else {
            cycle = {i, k, j};  // i -> k -> j -> i
          }
        }
      }
    }
  }
  if (cycle.empty()) {
    throw std::logic_error("strong tournament without a 3-cycle");
  }

  std::vector<bool> used(n + 1, false);
  for (int v : cycle) used[v] = true;

  while (static_cast<int>(cycle.size()) < n) {
    bool grew = false;
    // A vertex with both a win and a loss against the cycle slots between
    // some consecutive pair.
    for (int v = 1; v <= n && !grew; ++v) {
      if (used[v]) continue;
      const int m = static_cast<int>(cycle.size());
      for (int a = 0; a < m; ++a) {
        const int x = cycle[a], y = cycle[(a + 1) % m];
        if (t.beats(x, v) && t.beats(v, y)) {
          cycle.insert(cycle.begin() + a + 1, v);
          used[v] = true;
          grew = true;
          break;
        }
      }
    }
    if (grew) continue;
    // Remaining vertices either dominate the cycle or are dominated by it.
    // Strong connectivity forces an arc from the dominated side to the
    // dominating side; splice that pair in.
    std::vector<int> dominating, dominated;
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (t.beats(v, cycle[0])) {
        dominating.push_back(v);
      } else {
        dominated.push_back(v);
      }
    }
    int from = 0, to = 0;
    for (int l : dominated) {
      for (int d : dominating) {
        if (t.beats(l, d)) {
          from = l;
          to = d;
          break;
        }
      }
      if (from) break;
    }
    if (!from) {
      throw std::logic_error("cycle insertion stuck in a strong tournament");
    }
    cycle.insert(cycle.begin() + 1, {from, to});  // cycle[0] -> from -> to -> cycle[1]
    used[from] = used[to] = true;
  }

  for (int a = 0; a < n; ++a) {
    if (!t.beats(cycle[a], cycle[(a + 1) % n])) {
      throw std::logic_error("constructed cycle has a backward arc");
    }
  }
  return cycle;
}

bool is_hamiltonian(const Tournament& t) {
  return hamiltonian_cycle(t).has_value();
}

FourClass four_class_of(const Tournament& four) {
  if (four.players() != 4) {
    throw std::invalid_argument("four_class_of needs exactly 4 players");
  }
  const ScoreVector s = sorted_scores(four);
  if (s == ScoreVector{0, 1, 2, 3}) return FourClass::Transitive;
  if (s == ScoreVector{1, 1, 2, 2}) return FourClass::Strong;
  if (s == ScoreVector{0, 2, 2, 2}) return FourClass::CycleWithSink;
  if (s == ScoreVector{1, 1, 1, 3}) return FourClass::CycleWithSource;
  throw std::logic_error("impossible 4-tournament score multiset");
}

bool is_forbidden(FourClass c) {
  return c == FourClass::CycleWithSink || c == FourClass::CycleWithSource;
}

FourProfile four_subtournament_profile(const Tournament& t) {
  const int n = t.players();
  if (n < 4) throw std::invalid_argument("4-subtournament profile needs n >= 4");
  FourProfile profile;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          const FourClass cls = four_class_of(t.subtournament({a, b, c, d}));
          ++profile.counts[static_cast<int>(cls)];
          if (is_forbidden(cls) && !profile.forbidden_witness) {
            profile.forbidden_witness = {a, b, c, d};
          }
        }
      }
    }
  }
  return profile;
}

}  // namespace flagsym
