#include "flagsym/isoclass.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <mutex>
#include <set>

namespace flagsym {

namespace {

// Minimal-code search. The code is read row-major, so emitting one row per
// chosen vertex keeps the compared prefix contiguous. An ordered partition
// of the unplaced players constrains the remaining order: the next vertex
// comes from the first cell, its row is minimized by putting its losses
// before its wins inside every cell, and the cells split accordingly
// (partition refinement). Branching happens only on row-pattern ties.
struct CanonSearch {
  int n = 0;
  int total_bits = 0;
  std::array<std::uint32_t, kMaxPlayers + 1> out{};
  std::array<std::uint32_t, kMaxPlayers + 1> in{};
  std::vector<std::uint8_t> acc;
  std::vector<std::uint8_t> best;
  bool have_best = false;

  void run(const Tournament& t) {
    n = t.players();
    total_bits = n * (n - 1) / 2;
    for (int v = 1; v <= n; ++v) {
      out[v] = t.out_mask(v);
      in[v] = t.in_mask(v);
    }
    acc.clear();
    acc.reserve(total_bits);
    std::vector<std::uint32_t> cells = {((1u << n) - 1u) << 1};
    search(cells);
  }

  void search(const std::vector<std::uint32_t>& cells) {
    if (cells.empty()) {
      if (!have_best || acc < best) {
        best = acc;
        have_best = true;
      }
      return;
    }

    // Row pattern of candidate v: per cell, zeros (losses of v) then ones.
    // Patterns share a length, so an integer with MSB-first bits compares
    // lexicographically.
    std::uint32_t best_pattern = ~0u;
    int pattern_len = 0;
    std::vector<int> candidates;
    const std::uint32_t first = cells.front();
    for (int v = 1; v <= n; ++v) {
      if (!((first >> v) & 1u)) continue;
      std::uint32_t pattern = 0;
      int len = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        std::uint32_t cell = cells[c];
        if (c == 0) cell &= ~(1u << v);
        const int zeros = std::popcount(cell & in[v]);
        const int ones = std::popcount(cell & out[v]);
        pattern = (pattern << (zeros + ones)) | ((1u << ones) - 1u);
        len += zeros + ones;
      }
      pattern_len = len;
      if (candidates.empty() || pattern < best_pattern) {
        best_pattern = pattern;
        candidates.assign(1, v);
      } else if (pattern == best_pattern) {
        candidates.push_back(v);
      }
    }

    const std::size_t mark = acc.size();
    for (int b = pattern_len - 1; b >= 0; --b) {
      acc.push_back(static_cast<std::uint8_t>((best_pattern >> b) & 1u));
    }
    if (have_best &&
        std::memcmp(acc.data(), best.data(), acc.size()) > 0) {
      acc.resize(mark);
      return;  // every completion of this prefix exceeds the incumbent
    }

    std::vector<std::uint32_t> refined;
    refined.reserve(cells.size() * 2);
    for (int v : candidates) {
      refined.clear();
      for (std::size_t c = 0; c < cells.size(); ++c) {
        std::uint32_t cell = cells[c];
        if (c == 0) cell &= ~(1u << v);
        const std::uint32_t losers = cell & in[v];
        const std::uint32_t winners = cell & out[v];
        if (losers) refined.push_back(losers);
        if (winners) refined.push_back(winners);
      }
      search(refined);
    }
    acc.resize(mark);
  }
};

}  // namespace

std::string canonical_code(const Tournament& t) {
  const int n = t.players();
  if (n > 12) {
    throw std::invalid_argument("canonical_code supports n <= 12");
  }
  CanonSearch search;
  search.run(t);
  std::string code = std::to_string(n) + ":";
  code.reserve(code.size() + search.best.size());
  for (std::uint8_t bit : search.best) code.push_back(bit ? '1' : '0');
  return code;
}

bool are_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.players() != b.players()) {
    throw std::invalid_argument("isomorphism test needs equal player counts");
  }
  if (sorted_scores(a) != sorted_scores(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

std::vector<std::string> enumerate_classes(int n) {
  if (n < 2 || n > 8) {
    throw std::invalid_argument("class enumeration supports 2 <= n <= 8");
  }
  std::vector<std::string> classes = {"2:0"};
  for (int m = 3; m <= n; ++m) {
    std::set<std::string> next;
    for (const std::string& code : classes) {
      const Tournament base = Tournament::from_code(code);
      const int arcs = m - 1;
      for (std::uint32_t vec = 0; vec < (1u << arcs); ++vec) {
        std::vector<int> bits;
        bits.reserve(m * (m - 1) / 2);
        for (int i = 1; i < m; ++i) {
          for (int j = i + 1; j < m; ++j) {
            bits.push_back(base.beats(i, j) ? 1 : 0);
          }
          bits.push_back((vec >> (i - 1)) & 1u);  // pair (i, m)
        }
        next.insert(canonical_code(Tournament::from_bits(m, bits)));
      }
    }
    classes.assign(next.begin(), next.end());
  }
  return classes;
}

std::vector<std::string> enumerate_classes_brute_force(int n) {
  if (n < 2 || n > 7) {
    throw std::invalid_argument("brute-force enumeration supports 2 <= n <= 7");
  }
  const int bits = n * (n - 1) / 2;
  std::set<std::string> classes;
  std::vector<int> values(bits);
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    for (int b = 0; b < bits; ++b) values[b] = (mask >> b) & 1u;
    classes.insert(canonical_code(Tournament::from_bits(n, values)));
  }
  return {classes.begin(), classes.end()};
}

namespace {

struct ParabolicReference {
  ScoreVector scores;
  std::string code;
};

const ParabolicReference& parabolic_data(int n) {
  static std::mutex mutex;
  static std::map<int, ParabolicReference> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const Tournament ref = Tournament::parabolic_reference(n);
    it = cache.emplace(n, ParabolicReference{sorted_scores(ref),
                                             canonical_code(ref)})
             .first;
  }
  return it->second;
}

}  // namespace

bool is_parabolic(const Tournament& t) {
  const int n = t.players();
  if (n < 3) throw std::invalid_argument("parabolicity needs n >= 3");
  const ParabolicReference& ref = parabolic_data(n);
  if (sorted_scores(t) != ref.scores) return false;
  return canonical_code(t) == ref.code;
}

}  // namespace flagsym
