#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

using doodle::ArrowDiagram;
using doodle::ChordDiagramU;
using doodle::Endpoint;
using doodle::QuiverDiagram;
using doodle::Rational;
using doodle::Role;

// ---------------------------------------------------------------------------
// Plane-curve enumeration.
//
// A candidate curve is a perfect matching on the 4k half-edge slots of k
// crossings (slot s of vertex v has index 4v+s, slots in ccw order).  The
// curve must traverse all 2k edges in one circuit going straight through
// every crossing, and the map must have spherical Euler characteristic.

namespace {

struct MatchingWalker {
  int k;
  const std::vector<int>& match;  // slot -> slot

  int opposite_out(int slot) const { return (slot & ~3) | ((slot + 2) & 3); }
  int turn_out(int slot) const { return (slot & ~3) | ((slot + 1) & 3); }

  // Straight-ahead circuit from an arrival slot; empty if it is not a single
  // circuit covering every edge exactly once.
  std::vector<int> circuit(int start_arrival) const {
    std::vector<int> arrivals;
    std::vector<char> edge_used(4 * k, 0);  // keyed by min slot of the edge
    int cur = start_arrival;
    for (;;) {
      arrivals.push_back(cur);
      int out = opposite_out(cur);
      int eid = std::min(out, match[out]);
      if (edge_used[eid]) return {};
      edge_used[eid] = 1;
      cur = match[out];
      if (cur == start_arrival) break;
      if (static_cast<int>(arrivals.size()) > 2 * k) return {};
    }
    return static_cast<int>(arrivals.size()) == 2 * k ? arrivals : std::vector<int>{};
  }

  int face_count() const {
    std::vector<char> seen(4 * k, 0);  // directed edges keyed by arrival slot
    int faces = 0;
    for (int a = 0; a < 4 * k; ++a) {
      if (seen[a]) continue;
      ++faces;
      int cur = a;
      while (!seen[cur]) {
        seen[cur] = 1;
        cur = match[turn_out(cur)];
      }
    }
    return faces;
  }

  // Arrow diagram of the curve traced from the given arrival slot.
  ArrowDiagram read(const std::vector<int>& arrivals) const {
    std::vector<int> first_arrival(k, -1);
    std::vector<Role> first_role(k, Role::Tail);
    std::vector<Endpoint> raw;
    // First pass fixes each vertex's two arrival slots in traversal order.
    std::vector<std::pair<int, int>> visits(k, {-1, -1});
    for (int a : arrivals) {
      auto& v = visits[a / 4];
      (v.first < 0 ? v.first : v.second) = a;
    }
    for (int a : arrivals) {
      int vert = a / 4;
      bool first = visits[vert].first == a;
      int a1 = visits[vert].first & 3, a2 = visits[vert].second & 3;
      bool first_is_tail = a2 == ((a1 + 1) & 3);
      Role role = first == first_is_tail ? Role::Tail : Role::Head;
      raw.push_back({vert, role});
    }
    return ArrowDiagram(std::move(raw));
  }
};

void all_matchings(std::vector<int>& match, int slots,
                   const std::function<void(const std::vector<int>&)>& fn) {
  int a = 0;
  while (a < slots && match[a] >= 0) ++a;
  if (a == slots) {
    fn(match);
    return;
  }
  for (int b = a + 1; b < slots; ++b) {
    if (match[b] >= 0) continue;
    match[a] = b;
    match[b] = a;
    all_matchings(match, slots, fn);
    match[a] = match[b] = -1;
  }
}

}  // namespace

std::set<ArrowDiagram> realizable_diagrams(int k) {
  std::set<ArrowDiagram> out;
  if (k == 0) {
    out.insert(ArrowDiagram());
    return out;
  }
  std::vector<int> match(4 * k, -1);
  all_matchings(match, 4 * k, [&](const std::vector<int>& m) {
    MatchingWalker w{k, m};
    // The edge at slot 0, traversed both ways, gives the two orientations of
    // the candidate curve.
    auto c1 = w.circuit(m[0]);
    if (c1.empty()) return;
    int faces = w.face_count();
    if (k - 2 * k + faces != 2) return;
    out.insert(w.read(c1));
    auto c2 = w.circuit(0);
    if (!c2.empty()) out.insert(w.read(c2));
  });
  return out;
}

long long burnside_class_count(int k) {
  if (k == 0) return 1;
  const int m = 2 * k;
  // Raw structures: partner array plus a tail flag per position.
  struct Raw {
    std::vector<int> partner;
    std::vector<char> tail;
  };
  std::vector<Raw> all;
  std::vector<int> partner(m, -1);
  std::function<void(int)> gen = [&](int) {
    int a = 0;
    while (a < m && partner[a] >= 0) ++a;
    if (a == m) {
      // Assign directions: the lexicographically first endpoint of each pair
      // iterates over tail/head.
      std::vector<int> firsts;
      for (int i = 0; i < m; ++i)
        if (i < partner[i]) firsts.push_back(i);
      for (int bits = 0; bits < (1 << k); ++bits) {
        Raw r{partner, std::vector<char>(m, 0)};
        for (int j = 0; j < k; ++j) {
          bool t = bits >> j & 1;
          r.tail[firsts[j]] = t;
          r.tail[partner[firsts[j]]] = !t;
        }
        all.push_back(std::move(r));
      }
      return;
    }
    for (int b = a + 1; b < m; ++b) {
      if (partner[b] >= 0) continue;
      partner[a] = b;
      partner[b] = a;
      gen(0);
      partner[a] = partner[b] = -1;
    }
  };
  gen(0);

  long long fixed_total = 0;
  for (int r = 0; r < m; ++r) {
    for (const Raw& s : all) {
      bool fixed = true;
      for (int i = 0; i < m && fixed; ++i) {
        fixed = s.partner[(i + r) % m] == (s.partner[i] + r) % m &&
                s.tail[(i + r) % m] == s.tail[i];
      }
      fixed_total += fixed;
    }
  }
  return fixed_total / m;
}

std::set<ArrowDiagram> naive_enumerate(int k) {
  std::set<ArrowDiagram> out;
  if (k == 0) {
    out.insert(ArrowDiagram());
    return out;
  }
  const int m = 2 * k;
  std::vector<int> partner(m, -1);
  std::function<void()> gen = [&] {
    int a = 0;
    while (a < m && partner[a] >= 0) ++a;
    if (a == m) {
      std::vector<int> firsts;
      for (int i = 0; i < m; ++i)
        if (i < partner[i]) firsts.push_back(i);
      for (int bits = 0; bits < (1 << k); ++bits) {
        std::vector<Endpoint> raw(m);
        for (int j = 0; j < k; ++j) {
          Role fr = (bits >> j & 1) ? Role::Tail : Role::Head;
          raw[firsts[j]] = {j, fr};
          raw[partner[firsts[j]]] = {j, doodle::opposite(fr)};
        }
        out.insert(ArrowDiagram(std::move(raw)));
      }
      return;
    }
    for (int b = a + 1; b < m; ++b) {
      if (partner[b] >= 0) continue;
      partner[a] = b;
      partner[b] = a;
      gen();
      partner[a] = partner[b] = -1;
    }
  };
  gen();
  return out;
}

std::vector<ChordDiagramU> enumerate_chord_diagrams(int m) {
  std::set<ChordDiagramU> out;
  if (m == 0) return {ChordDiagramU()};
  const int len = 2 * m;
  std::vector<int> partner(len, -1);
  std::function<void()> gen = [&] {
    int a = 0;
    while (a < len && partner[a] >= 0) ++a;
    if (a == len) {
      std::vector<int> ids(len, -1);
      int next = 0;
      for (int i = 0; i < len; ++i) {
        if (ids[i] >= 0) continue;
        ids[i] = ids[partner[i]] = next++;
      }
      out.insert(ChordDiagramU(std::move(ids)));
      return;
    }
    for (int b = a + 1; b < len; ++b) {
      if (partner[b] >= 0) continue;
      partner[a] = b;
      partner[b] = a;
      gen();
      partner[a] = partner[b] = -1;
    }
  };
  gen();
  return {out.begin(), out.end()};
}

QuiverDiagram random_quiver(std::mt19937& rng, int chords, int extra_degree) {
  const int m = 2 * chords;
  std::vector<int> positions(m);
  std::iota(positions.begin(), positions.end(), 0);
  std::vector<int> ids(m, -1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int c = 0; c < chords; ++c) {
    std::uniform_int_distribution<size_t> pick1(0, positions.size() - 1);
    size_t i = pick1(rng);
    int p = positions[i];
    positions.erase(positions.begin() + i);
    std::uniform_int_distribution<size_t> pick2(0, positions.size() - 1);
    size_t j = pick2(rng);
    int q = positions[j];
    positions.erase(positions.begin() + j);
    ids[p] = ids[q] = c;
  }
  std::vector<int> labels(m, 0);
  // One unit per chord keeps the sums valid; the rest lands anywhere.
  for (int c = 0; c < chords; ++c) {
    int side = coin(rng);
    for (int i = 0; i < m; ++i)
      if (ids[i] == c && (side-- == 0)) labels[i] += 1;
  }
  std::uniform_int_distribution<int> pos(0, std::max(0, m - 1));
  for (int e = 0; e < extra_degree; ++e) labels[pos(rng)] += 1;
  return QuiverDiagram(std::move(ids), std::move(labels));
}

// ---------------------------------------------------------------------------
// Relation matrix.

namespace {

// Adjacency matchings on a plain id sequence (independent re-implementation).
struct Match {
  int pa, pb;  // first site positions (a endpoint, b endpoint)
  int qa, qb;  // second site
};

std::vector<Match> adjacency_matchings(const std::vector<int>& ids) {
  const int m = static_cast<int>(ids.size());
  std::vector<Match> out;
  if (m < 4) return out;
  for (int s = 0; s < m; ++s) {
    int s2 = (s + 1) % m;
    if (ids[s] == ids[s2]) continue;
    for (int t = s + 1; t < m; ++t) {
      int t2 = (t + 1) % m;
      if (ids[t] == ids[t2]) continue;
      if (t == s || t == s2 || t2 == s || t2 == s2) continue;
      if (ids[t] == ids[s] && ids[t2] == ids[s2]) {
        out.push_back({s, s2, t, t2});
      } else if (ids[t] == ids[s2] && ids[t2] == ids[s]) {
        out.push_back({s, s2, t2, t});
      }
    }
  }
  return out;
}

QuiverDiagram merge_at(const std::vector<int>& ids, const std::vector<int>& labels,
                       const Match& mm) {
  // Keep the chord of positions (pa, qa); drop the other one.
  const int m = static_cast<int>(ids.size());
  int drop = ids[mm.pb];
  std::vector<int> nids, nlabels;
  for (int i = 0; i < m; ++i) {
    if (ids[i] == drop) continue;
    int l = labels[i];
    if (i == mm.pa) l += labels[mm.pb];
    if (i == mm.qa) l += labels[mm.qb];
    nids.push_back(ids[i]);
    nlabels.push_back(l);
  }
  // Compact ids.
  std::vector<int> remap(m / 2, -1);
  int next = 0;
  for (int& id : nids) {
    if (remap[id] < 0) remap[id] = next++;
    id = remap[id];
  }
  return QuiverDiagram(std::move(nids), std::move(nlabels));
}

bool has_isolated(const std::vector<int>& ids) {
  const int m = static_cast<int>(ids.size());
  for (int i = 0; i < m; ++i)
    if (m >= 2 && ids[i] == ids[(i + 1) % m]) return true;
  return false;
}

// Key predicate: reduced, no isolated chord, and some rotation reproducing
// the canonical id sequence has zeros exactly at the first occurrences.
bool is_basis_key(const QuiverDiagram& q) {
  const auto& ids = q.ids();
  const auto& labels = q.labels();
  const int m = static_cast<int>(ids.size());
  if (m == 0) return true;
  if (has_isolated(ids) || !adjacency_matchings(ids).empty()) return false;
  std::vector<char> is_first(m, 0);
  {
    std::vector<char> seen(m / 2, 0);
    for (int i = 0; i < m; ++i) {
      if (!seen[ids[i]]) {
        is_first[i] = 1;
        seen[ids[i]] = 1;
      }
    }
  }
  for (int r = 0; r < m; ++r) {
    // Rotation must reproduce the canonical id sequence.
    std::vector<int> remap(m / 2, -1);
    int next = 0;
    bool same = true;
    for (int i = 0; i < m && same; ++i) {
      int id = ids[(i + r) % m];
      if (remap[id] < 0) remap[id] = next++;
      same = remap[id] == ids[i];
    }
    if (!same) continue;
    bool marked_zero = true;
    for (int i = 0; i < m && marked_zero; ++i)
      marked_zero = (labels[(i + r) % m] == 0) == static_cast<bool>(is_first[i]);
    if (marked_zero) return true;
  }
  return false;
}

void enumerate_labelings(const ChordDiagramU& c, int n,
                         std::set<QuiverDiagram>& out) {
  const auto& ids = c.ids();
  const int m = static_cast<int>(ids.size());
  if (m == 0) {
    out.insert(QuiverDiagram());
    return;
  }
  std::vector<int> labels(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == m) {
      std::vector<int> sums(m / 2, 0);
      for (int i = 0; i < m; ++i) sums[ids[i]] += labels[i];
      for (int s : sums)
        if (s < 1) return;
      out.insert(QuiverDiagram(ids, labels));
      return;
    }
    for (int l = 0; used + l <= n; ++l) {
      labels[pos] = l;
      rec(pos + 1, used + l);
    }
    labels[pos] = 0;
  };
  rec(0, 0);
}

}  // namespace

RelationSystem::RelationSystem(const std::vector<ChordDiagramU>& starts, int n)
    : n_(n) {
  // Chord diagrams reachable by merges.
  std::set<ChordDiagramU> reach;
  std::vector<ChordDiagramU> queue = starts;
  while (!queue.empty()) {
    ChordDiagramU c = queue.back();
    queue.pop_back();
    if (!reach.insert(c).second) continue;
    std::vector<int> unit(c.ids().size(), 1);
    for (const Match& mm : adjacency_matchings(c.ids())) {
      QuiverDiagram merged = merge_at(c.ids(), unit, mm);
      queue.push_back(merged.underlying());
    }
  }

  std::set<QuiverDiagram> classset;
  for (const ChordDiagramU& c : reach) enumerate_labelings(c, n_, classset);
  classes_.assign(classset.begin(), classset.end());
  for (int i = 0; i < static_cast<int>(classes_.size()); ++i) index_[classes_[i]] = i;

  is_key_.assign(classes_.size(), 0);
  for (size_t i = 0; i < classes_.size(); ++i) is_key_[i] = is_basis_key(classes_[i]);
  keys_ = std::count(is_key_.begin(), is_key_.end(), 1);

  // Elimination columns: non-keys first so pivots prefer them.
  col_of_.assign(classes_.size(), -1);
  class_of_col_.assign(classes_.size(), -1);
  int col = 0;
  for (size_t i = 0; i < classes_.size(); ++i)
    if (!is_key_[i]) {
      col_of_[i] = col;
      class_of_col_[col++] = static_cast<int>(i);
    }
  for (size_t i = 0; i < classes_.size(); ++i)
    if (is_key_[i]) {
      col_of_[i] = col;
      class_of_col_[col++] = static_cast<int>(i);
    }

  // Relation rows.
  std::vector<Row> rows;
  auto add_entry = [&](Row& row, const QuiverDiagram& q, const Rational& c) {
    if (degree(q) > n_) return;  // zero in the truncation
    auto it = index_.find(q);
    if (it == index_.end()) throw std::logic_error("relation reaches an unknown class");
    row[col_of_[it->second]] += c;
  };
  for (const QuiverDiagram& q : classes_) {
    const auto& ids = q.ids();
    const auto& labels = q.labels();
    if (has_isolated(ids)) {
      Row row;
      add_entry(row, q, 1);
      rows.push_back(std::move(row));
    }
    for (const Match& mm : adjacency_matchings(ids)) {
      Row row;
      add_entry(row, q, 1);
      add_entry(row, merge_at(ids, labels, mm), -1);
      rows.push_back(std::move(row));
    }
    auto pos = q.chord_positions();
    for (int c = 0; c < q.chords(); ++c) {
      for (int side = 0; side < 2; ++side) {
        int e = side == 0 ? pos[c].first : pos[c].second;
        int o = side == 0 ? pos[c].second : pos[c].first;
        if (labels[e] < 1) continue;
        Row row;
        add_entry(row, q, 1);
        std::vector<int> l1 = labels;
        l1[e] -= 1;
        l1[o] += 1;
        add_entry(row, QuiverDiagram(ids, l1), 1);
        std::vector<int> l2 = labels;
        l2[o] += 1;
        add_entry(row, QuiverDiagram(ids, l2), 1);
        rows.push_back(std::move(row));
      }
    }
  }

  // Incremental reduced row echelon form.
  for (Row& row : rows) {
    for (auto it = row.begin(); it != row.end();)
      it = it->second.is_zero() ? row.erase(it) : std::next(it);
    reduce_row(row);
    if (row.empty()) continue;
    int lead = row.begin()->first;
    Rational inv = Rational(1) / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    for (auto& [pc, prow] : pivots_) {
      auto hit = prow.find(lead);
      if (hit == prow.end()) continue;
      Rational f = hit->second;
      for (const auto& [c, v] : row) {
        auto [jt, fresh] = prow.emplace(c, 0);
        jt->second -= f * v;
        if (jt->second.is_zero()) prow.erase(jt);
      }
    }
    pivots_.emplace(lead, std::move(row));
  }
  rank_ = static_cast<int>(pivots_.size());

  basis_matches_ = rank_ == class_count() - keys_;
  if (basis_matches_) {
    // Every non-key column must be a pivot.
    for (int c = 0; c < class_count() - keys_; ++c)
      if (!pivots_.count(c)) basis_matches_ = false;
  }
}

void RelationSystem::reduce_row(Row& row) const {
  for (;;) {
    auto it = row.begin();
    const Row* pivot = nullptr;
    int col = -1;
    for (; it != row.end(); ++it) {
      auto p = pivots_.find(it->first);
      if (p != pivots_.end()) {
        pivot = &p->second;
        col = it->first;
        break;
      }
    }
    if (!pivot) return;
    Rational f = row[col];
    for (const auto& [c, v] : *pivot) {
      auto [jt, fresh] = row.emplace(c, 0);
      jt->second -= f * v;
      if (jt->second.is_zero()) row.erase(jt);
    }
  }
}

std::map<QuiverDiagram, Rational> RelationSystem::express(
    const QuiverDiagram& q) const {
  auto it = index_.find(q);
  if (it == index_.end()) throw std::invalid_argument("diagram outside the class set");
  Row row;
  row[col_of_[it->second]] = 1;
  reduce_row(row);
  std::map<QuiverDiagram, Rational> out;
  for (const auto& [c, v] : row) {
    int cls = class_of_col_[c];
    if (!is_key_[cls])
      throw std::logic_error("reduced vector touches a non-key non-pivot column");
    out[classes_[cls]] = v;
  }
  return out;
}

}  // namespace oracle
