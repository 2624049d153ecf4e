#pragma once

#include <array>
#include <utility>
#include <vector>

namespace doodle::detail {

// A pairing of the four endpoints of two chords into two cyclically adjacent
// position sites.  Shared by the move finder and the quiver reduction.
struct PairMatching {
  int chord_a;
  int chord_b;
  std::array<std::pair<int, int>, 2> sites;
};

// All matchings over a cyclic id sequence.  Sites are (p, p+1 mod m) with
// disjoint position sets; each site holds one endpoint of each chord.
inline std::vector<PairMatching> find_pair_matchings(const std::vector<int>& ids) {
  const int m = static_cast<int>(ids.size());
  std::vector<PairMatching> out;
  if (m < 4) return out;
  std::vector<std::pair<int, int>> sites;  // candidate adjacent sites
  for (int p = 0; p < m; ++p) {
    int q = (p + 1) % m;
    if (ids[p] != ids[q]) sites.push_back({p, q});
  }
  for (size_t i = 0; i < sites.size(); ++i) {
    for (size_t j = i + 1; j < sites.size(); ++j) {
      auto [a1, b1] = sites[i];
      auto [a2, b2] = sites[j];
      if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
      int ca = ids[a1], cb = ids[b1];
      if ((ids[a2] == ca && ids[b2] == cb) || (ids[a2] == cb && ids[b2] == ca)) {
        out.push_back({std::min(ca, cb), std::max(ca, cb), {sites[i], sites[j]}});
      }
    }
  }
  return out;
}

}  // namespace doodle::detail
