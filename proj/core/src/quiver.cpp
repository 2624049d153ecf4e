#include "doodle/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pair_sites.hpp"

namespace doodle {

QuiverDiagram::QuiverDiagram(std::vector<int> ids, std::vector<int> labels) {
  const int m = static_cast<int>(ids.size());
  if (labels.size() != ids.size())
    throw std::invalid_argument("quiver diagram: one label per endpoint required");
  if (m % 2 != 0) throw std::invalid_argument("quiver diagram: odd endpoint count");
  for (int l : labels)
    if (l < 0) throw std::invalid_argument("quiver diagram: labels must be non-negative");

  if (m > 0) {
    // Canonical rotation: the whole renumbered id sequence is compared first,
    // labels break ties only among rotations realizing the canonical
    // underlying diagram.  The stored frame is therefore the canonical chord
    // diagram with the least label vector over its symmetry group.
    auto make = [&](int shift) {
      std::pair<std::vector<int>, std::vector<int>> out;
      out.first.resize(m);
      out.second.resize(m);
      std::vector<int> remap(m / 2, -1);
      int next = 0;
      for (int i = 0; i < m; ++i) {
        int src = (i + shift) % m;
        int id = ids[src];
        if (id < 0 || id >= m / 2)
          throw std::invalid_argument("quiver diagram: chord id out of range");
        if (remap[id] < 0) remap[id] = next++;
        out.first[i] = remap[id];
        out.second[i] = labels[src];
      }
      return out;
    };
    auto best = make(0);
    for (int r = 1; r < m; ++r) {
      auto cand = make(r);
      if (cand < best) best = std::move(cand);
    }
    ids_ = std::move(best.first);
    labels_ = std::move(best.second);
  }

  std::vector<int> count(m / 2, 0), sum(m / 2, 0);
  for (int i = 0; i < m; ++i) {
    count[ids_[i]]++;
    sum[ids_[i]] += labels_[i];
  }
  for (int c = 0; c < m / 2; ++c) {
    if (count[c] != 2)
      throw std::invalid_argument("quiver diagram: each chord id must appear exactly twice");
    if (sum[c] < 1)
      throw std::invalid_argument("quiver diagram: chord label sum must be at least 1");
  }
}

ChordDiagramU QuiverDiagram::underlying() const { return ChordDiagramU(ids_); }

std::vector<std::pair<int, int>> QuiverDiagram::chord_positions() const {
  std::vector<std::pair<int, int>> pos(chords(), {-1, -1});
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
    auto& p = pos[ids_[i]];
    (p.first < 0 ? p.first : p.second) = i;
  }
  return pos;
}

std::string QuiverDiagram::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < ids_.size(); ++i) {
    if (i) os << ' ';
    os << (ids_[i] + 1) << ':' << labels_[i];
  }
  return os.str();
}

int degree(const QuiverDiagram& q) {
  return std::accumulate(q.labels().begin(), q.labels().end(), 0);
}

std::vector<ReductionSite> reduction_sites(const QuiverDiagram& q) {
  // Merges are performed on nested (non-crossing) adjacent pairs only: on
  // those the reduced form is independent of the merge order.  Crossing
  // adjacencies still hold as relations in the algebra but merging them
  // breaks the uniqueness of the reduced diagram.
  std::vector<ReductionSite> out;
  for (const detail::PairMatching& pm : detail::find_pair_matchings(q.ids())) {
    if (q.ids()[pm.sites[0].first] == q.ids()[pm.sites[1].first]) continue;
    out.push_back({pm.chord_a, pm.chord_b, pm.sites});
  }
  return out;
}

std::vector<std::pair<int, int>> adjacent_chord_pairs(const QuiverDiagram& q) {
  // Both the nested and the crossing configuration count as adjacent.
  std::vector<std::pair<int, int>> out;
  for (const detail::PairMatching& pm : detail::find_pair_matchings(q.ids())) {
    std::pair<int, int> p{pm.chord_a, pm.chord_b};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuiverDiagram reduce_step(const QuiverDiagram& q, const ReductionSite& site) {
  const auto& ids = q.ids();
  const auto& labels = q.labels();
  const int m = static_cast<int>(ids.size());
  // Validate against the current diagram.
  bool ok = false;
  for (const ReductionSite& s : reduction_sites(q))
    ok |= s.chord_a == site.chord_a && s.chord_b == site.chord_b && s.sites == site.sites;
  if (!ok) throw std::invalid_argument("stale reduction site");

  // Keep chord_a; at each site its endpoint absorbs the label of chord_b's.
  std::vector<int> new_ids, new_labels;
  std::vector<int> absorbed(m, 0);
  for (const auto& [p, r] : site.sites) {
    int pa = ids[p] == site.chord_a ? p : r;
    int pb = ids[p] == site.chord_a ? r : p;
    absorbed[pa] += labels[pb];
  }
  for (int i = 0; i < m; ++i) {
    if (ids[i] == site.chord_b) continue;
    new_ids.push_back(ids[i]);
    new_labels.push_back(labels[i] + absorbed[i]);
  }
  // Compact ids after dropping chord_b.
  for (int& id : new_ids)
    if (id > site.chord_b) --id;
  return QuiverDiagram(std::move(new_ids), std::move(new_labels));
}

QuiverDiagram reduce(const QuiverDiagram& q) {
  QuiverDiagram cur = q;
  for (;;) {
    auto sites = reduction_sites(cur);
    if (sites.empty()) return cur;
    // First site in canonical position order keeps the result deterministic;
    // confluence makes the choice immaterial.
    const ReductionSite* best = &sites[0];
    for (const ReductionSite& s : sites)
      if (s.sites < best->sites) best = &s;
    cur = reduce_step(cur, *best);
  }
}

bool is_reduced(const QuiverDiagram& q) { return reduction_sites(q).empty(); }

QuiverDiagram from_arrow(const ArrowDiagram& d) {
  std::vector<int> ids, labels;
  ids.reserve(d.endpoints().size());
  labels.reserve(d.endpoints().size());
  for (const Endpoint& e : d.endpoints()) {
    ids.push_back(e.chord);
    labels.push_back(e.role == Role::Tail ? 0 : 1);
  }
  return QuiverDiagram(std::move(ids), std::move(labels));
}

bool is_zero_by_isolated_chord(const QuiverDiagram& q) {
  const auto& ids = q.ids();
  const int m = static_cast<int>(ids.size());
  for (int i = 0; i < m; ++i)
    if (m >= 2 && ids[i] == ids[(i + 1) % m]) return true;
  return false;
}

QuiverDiagram cluster_reduce_arrow(const ArrowDiagram& d) {
  return reduce(from_arrow(d));
}

}  // namespace doodle
