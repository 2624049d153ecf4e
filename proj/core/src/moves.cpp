#include "doodle/moves.hpp"

#include <algorithm>
#include <stdexcept>

#include "pair_sites.hpp"

namespace doodle {

namespace {

std::vector<int> id_sequence(const ArrowDiagram& d) {
  std::vector<int> ids;
  ids.reserve(d.endpoints().size());
  for (const Endpoint& e : d.endpoints()) ids.push_back(e.chord);
  return ids;
}

bool site_has_tail_and_head(const ArrowDiagram& d, std::pair<int, int> site) {
  Role r1 = d.endpoints()[site.first].role;
  Role r2 = d.endpoints()[site.second].role;
  return r1 != r2;
}

ArrowDiagram delete_chords(const ArrowDiagram& d, int a, int b) {
  std::vector<Endpoint> raw;
  for (const Endpoint& e : d.endpoints())
    if (e.chord != a && e.chord != b) raw.push_back(e);
  return ArrowDiagram(std::move(raw));
}

int site_min_position(const MoveSite& s) {
  int p = s.sites[0].first;
  if (s.kind == MoveKind::R2) p = std::min(p, s.sites[1].first);
  return std::min(p, s.kind == MoveKind::R2 ? s.sites[1].second : s.sites[0].second);
}

}  // namespace

std::vector<MoveSite> find_r1_sites(const ArrowDiagram& d) {
  std::vector<MoveSite> out;
  const auto& eps = d.endpoints();
  const int m = static_cast<int>(eps.size());
  for (int p = 0; p < m; ++p) {
    int q = (p + 1) % m;
    if (p == q) continue;
    if (eps[p].chord == eps[q].chord) {
      MoveSite s;
      s.kind = MoveKind::R1;
      s.chord_a = eps[p].chord;
      s.sites[0] = {p, q};
      // Each isolated chord is reported once, from its first site only.
      bool dup = false;
      for (const MoveSite& t : out) dup |= t.chord_a == s.chord_a;
      if (!dup) out.push_back(s);
    }
  }
  return out;
}

std::vector<MoveSite> find_r2_sites(const ArrowDiagram& d) {
  std::vector<MoveSite> out;
  auto ids = id_sequence(d);
  for (const detail::PairMatching& pm : detail::find_pair_matchings(ids)) {
    if (!site_has_tail_and_head(d, pm.sites[0])) continue;
    if (!site_has_tail_and_head(d, pm.sites[1])) continue;
    MoveSite s;
    s.kind = MoveKind::R2;
    s.chord_a = pm.chord_a;
    s.chord_b = pm.chord_b;
    s.sites = pm.sites;
    out.push_back(s);
  }
  return out;
}

ArrowDiagram apply_delete(const ArrowDiagram& d, const MoveSite& s) {
  if (s.kind == MoveKind::R1) {
    auto current = find_r1_sites(d);
    for (const MoveSite& c : current)
      if (c.chord_a == s.chord_a && c.sites[0] == s.sites[0])
        return delete_chords(d, s.chord_a, -1);
  } else {
    auto current = find_r2_sites(d);
    for (const MoveSite& c : current)
      if (c == s) return delete_chords(d, s.chord_a, s.chord_b);
  }
  throw std::invalid_argument("stale move site");
}

ArrowDiagram apply_r1_insert(const ArrowDiagram& d, int arc, Role first_role) {
  const int m = static_cast<int>(d.endpoints().size());
  if (arc < 0 || arc > m) throw std::invalid_argument("insertion slot out of range");
  arc = m == 0 ? 0 : arc % m;
  const int c = d.size();
  std::vector<Endpoint> raw;
  raw.reserve(m + 2);
  auto emit_new = [&] {
    raw.push_back({c, first_role});
    raw.push_back({c, opposite(first_role)});
  };
  if (m == 0) {
    emit_new();
  } else {
    for (int i = 0; i < m; ++i) {
      if (i == arc) emit_new();
      raw.push_back(d.endpoints()[i]);
    }
  }
  return ArrowDiagram(std::move(raw));
}

ArrowDiagram apply_r2_insert(const ArrowDiagram& d, int arc1, int arc2,
                             bool crossing, bool flip) {
  const int m = static_cast<int>(d.endpoints().size());
  if (arc1 < 0 || arc1 > m || arc2 < 0 || arc2 > m)
    throw std::invalid_argument("insertion slot out of range");
  if (m > 0) {
    arc1 %= m;
    arc2 %= m;
  } else {
    arc1 = arc2 = 0;
  }
  const int x = d.size(), y = d.size() + 1;
  // Block 1 holds the leading endpoints, block 2 the closing ones.  Each
  // block is one adjacency site with one tail and one head of {x, y}.
  Role xr = flip ? Role::Head : Role::Tail;
  std::array<Endpoint, 2> block1 = {Endpoint{x, xr}, Endpoint{y, opposite(xr)}};
  std::array<Endpoint, 2> block2 =
      crossing ? std::array<Endpoint, 2>{Endpoint{x, opposite(xr)}, Endpoint{y, xr}}
               : std::array<Endpoint, 2>{Endpoint{y, xr}, Endpoint{x, opposite(xr)}};
  std::vector<Endpoint> raw;
  raw.reserve(m + 4);
  if (m == 0) {
    raw.insert(raw.end(), block1.begin(), block1.end());
    raw.insert(raw.end(), block2.begin(), block2.end());
  } else {
    for (int i = 0; i < m; ++i) {
      if (i == arc1) raw.insert(raw.end(), block1.begin(), block1.end());
      if (i == arc2) raw.insert(raw.end(), block2.begin(), block2.end());
      raw.push_back(d.endpoints()[i]);
    }
  }
  return ArrowDiagram(std::move(raw));
}

ArrowDiagram apply_step(const ArrowDiagram& d, const MoveStep& step) {
  return std::visit(
      [&](const auto& s) -> ArrowDiagram {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DeleteStep>) {
          return apply_delete(d, s.site);
        } else if constexpr (std::is_same_v<T, InsertR1Step>) {
          return apply_r1_insert(d, s.arc, s.first_role);
        } else {
          return apply_r2_insert(d, s.arc1, s.arc2, s.crossing, s.flip);
        }
      },
      step);
}

ArrowDiagram replay(const ArrowDiagram& d, const MoveTrace& trace) {
  ArrowDiagram cur = d;
  for (const MoveStep& s : trace.steps) cur = apply_step(cur, s);
  return cur;
}

namespace {

std::vector<MoveSite> all_delete_sites(const ArrowDiagram& d) {
  std::vector<MoveSite> sites = find_r1_sites(d);
  auto r2 = find_r2_sites(d);
  sites.insert(sites.end(), r2.begin(), r2.end());
  std::sort(sites.begin(), sites.end(), [](const MoveSite& a, const MoveSite& b) {
    int pa = site_min_position(a), pb = site_min_position(b);
    if (pa != pb) return pa < pb;
    if (a.kind != b.kind) return a.kind == MoveKind::R1;
    if (a.sites[0] != b.sites[0]) return a.sites[0] < b.sites[0];
    return a.sites[1] < b.sites[1];
  });
  return sites;
}

}  // namespace

std::pair<ArrowDiagram, MoveTrace> minimize(const ArrowDiagram& d) {
  ArrowDiagram cur = d;
  MoveTrace trace;
  for (;;) {
    auto sites = all_delete_sites(cur);
    if (sites.empty()) break;
    trace.steps.push_back(DeleteStep{sites.front()});
    cur = apply_delete(cur, sites.front());
  }
  return {cur, trace};
}

std::pair<ArrowDiagram, MoveTrace> minimize_with(const ArrowDiagram& d,
                                                 std::mt19937& rng) {
  ArrowDiagram cur = d;
  MoveTrace trace;
  for (;;) {
    auto sites = all_delete_sites(cur);
    if (sites.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
    const MoveSite& s = sites[pick(rng)];
    trace.steps.push_back(DeleteStep{s});
    cur = apply_delete(cur, s);
  }
  return {cur, trace};
}

bool is_minimal(const ArrowDiagram& d) {
  return find_r1_sites(d).empty() && find_r2_sites(d).empty();
}

bool equivalent(const ArrowDiagram& d1, const ArrowDiagram& d2) {
  return minimize(d1).first == minimize(d2).first;
}

ArrowDiagram random_arrow_diagram(std::mt19937& rng, int chords) {
  std::vector<int> positions(2 * chords);
  for (int i = 0; i < 2 * chords; ++i) positions[i] = i;
  std::vector<Endpoint> raw(2 * chords);
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
    Role pr = coin(rng) ? Role::Tail : Role::Head;
    raw[p] = {c, pr};
    raw[q] = {c, opposite(pr)};
  }
  return ArrowDiagram(std::move(raw));
}

MoveStep random_geometric_insertion(const ArrowDiagram& d, std::mt19937& rng) {
  const int m = static_cast<int>(d.endpoints().size());
  std::uniform_int_distribution<int> coin(0, 1);
  if (m == 0) {
    // A circle admits kinks and the strand-across-itself pair.
    if (coin(rng)) return InsertR1Step{0, coin(rng) ? Role::Tail : Role::Head};
    return InsertR2Step{0, 0, false, coin(rng) == 1};
  }
  std::uniform_int_distribution<int> kind(0, 2);
  if (kind(rng) == 0) {
    std::uniform_int_distribution<int> slot(0, m - 1);
    return InsertR1Step{slot(rng), coin(rng) ? Role::Tail : Role::Head};
  }
  // Pick two boundary incidences of one face (possibly the same one: a
  // strand pushed across another part of itself).
  auto faces = face_boundaries(rotation_system(d));
  std::uniform_int_distribution<size_t> fpick(0, faces.size() - 1);
  const auto& face = faces[fpick(rng)];
  std::uniform_int_distribution<size_t> epick(0, face.size() - 1);
  auto [arc_a, fwd_a] = face[epick(rng)];
  auto [arc_b, fwd_b] = face[epick(rng)];
  bool nested = fwd_a == fwd_b;
  bool flip = nested ? fwd_a : fwd_b;
  return InsertR2Step{(arc_a + 1) % m, (arc_b + 1) % m, !nested, flip};
}

ArrowDiagram random_realizable_diagram(std::mt19937& rng, int target_chords) {
  ArrowDiagram cur;
  while (cur.size() < target_chords)
    cur = apply_step(cur, random_geometric_insertion(cur, rng));
  return cur;
}

std::pair<ArrowDiagram, MoveTrace> random_walk(const ArrowDiagram& d,
                                               std::mt19937& rng,
                                               const WalkOptions& opt) {
  ArrowDiagram cur = d;
  MoveTrace trace;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int step = 0; step < opt.steps; ++step) {
    auto sites = all_delete_sites(cur);
    bool can_delete = !sites.empty();
    bool can_insert = cur.size() + 2 <= opt.max_chords;
    bool do_insert = can_insert && (!can_delete || coin(rng) == 0);
    if (!do_insert && !can_delete) break;
    if (do_insert) {
      const int m = static_cast<int>(cur.endpoints().size());
      std::uniform_int_distribution<int> slot(0, std::max(0, m - 1));
      if (kind(rng) == 0) {
        InsertR1Step s{slot(rng), coin(rng) ? Role::Tail : Role::Head};
        cur = apply_step(cur, s);
        trace.steps.push_back(s);
      } else {
        InsertR2Step s{slot(rng), slot(rng), coin(rng) == 1, coin(rng) == 1};
        cur = apply_step(cur, s);
        trace.steps.push_back(s);
      }
    } else {
      std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
      DeleteStep s{sites[pick(rng)]};
      cur = apply_step(cur, s);
      trace.steps.push_back(s);
    }
  }
  return {cur, trace};
}

}  // namespace doodle
