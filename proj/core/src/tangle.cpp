#include "doodle/tangle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace doodle {

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

namespace {

// Scalar of the form c0 + c1*eps1 + c2*eps2 + ..., the eps_i positive
// infinitesimals with eps1 >> eps2 >> ...; comparison is lexicographic.
struct EpsScalar {
  std::vector<Rational> c;  // index 0 = finite part

  Rational at(size_t i) const { return i < c.size() ? c[i] : Rational(0); }

  friend EpsScalar operator-(const EpsScalar& a, const EpsScalar& b) {
    EpsScalar r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
    return r;
  }
  EpsScalar scaled(const Rational& s) const {
    EpsScalar r = *this;
    for (auto& v : r.c) v *= s;
    return r;
  }
  friend EpsScalar operator/(const EpsScalar& a, const Rational& d) {
    EpsScalar r = a;
    for (auto& v : r.c) v /= d;
    return r;
  }
  std::strong_ordering cmp(const EpsScalar& o) const {
    size_t m = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < m; ++i) {
      if (at(i) < o.at(i)) return std::strong_ordering::less;
      if (at(i) > o.at(i)) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
};

struct EpsVec2 {
  EpsScalar x, y;
};

EpsScalar eps_cross(const EpsVec2& a, const Vec2& b) {
  return a.x.scaled(b.y) - a.y.scaled(b.x);
}

// Angular order comparator for exact rational directions.
int half_of(const Vec2& v) {
  if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
  return 1;
}

bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

}  // namespace

SingularSite star_tangle(int k) {
  if (k < 3) throw std::invalid_argument("star tangle needs at least 3 branches");
  SingularSite s;
  s.k = k;
  // Fixed direction fixtures, angles strictly increasing with the branch
  // index.  For k <= 6 the directions are spread so that a crossing-free
  // single-cycle closure exists.
  static const std::vector<std::vector<Vec2>> fixture = {
      {{5, 1}, {-3, 4}, {-2, -5}},
      {{5, 1}, {1, 1}, {-1, 3}, {-4, -3}},
      {{5, 1}, {1, 1}, {-1, 3}, {-4, -1}, {-1, -4}},
      {{5, 1}, {1, 1}, {-1, 3}, {-4, -1}, {-1, -4}, {3, -5}},
  };
  if (k <= 6) {
    s.directions = fixture[k - 3];
  } else {
    for (int i = 0; i < k; ++i) s.directions.push_back({1, i});
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (cross(s.directions[i], s.directions[j]) == 0)
        throw std::logic_error("star tangle directions must be pairwise non-parallel");
  for (int i = 0; i + 1 < k; ++i)
    if (!angle_less(s.directions[i], s.directions[i + 1]))
      throw std::logic_error("star tangle directions must have increasing angles");
  return s;
}

int PartialResolution::residual_branches() const {
  int c = 0;
  for (int s : offset_step) c += s == 0;
  return c;
}

PartialResolution resolve_once(const SingularSite& s, bool positive_side) {
  PartialResolution t;
  t.site = s;
  t.offset_step.assign(s.k, 0);
  t.offset_sign.assign(s.k, 0);
  return resolve_once(t, positive_side);
}

PartialResolution resolve_once(const PartialResolution& t, bool positive_side) {
  if (t.resolved()) throw std::invalid_argument("tangle has no singular point left");
  PartialResolution out = t;
  int branch = -1;
  for (int i = t.site.k - 1; i >= 0; --i) {
    if (t.offset_step[i] == 0) {
      branch = i;
      break;
    }
  }
  out.steps = t.steps + 1;
  out.offset_step[branch] = out.steps;
  out.offset_sign[branch] = positive_side ? +1 : -1;
  return out;
}

TangleDiagram extract_diagram(const PartialResolution& t) {
  if (!t.resolved())
    throw std::invalid_argument("tangle still has a singular point");
  const int k = t.site.k;
  std::vector<EpsVec2> offsets(k);
  for (int i = 0; i < k; ++i) {
    EpsVec2 o;
    o.x.c.assign(t.steps + 1, Rational(0));
    o.y.c.assign(t.steps + 1, Rational(0));
    if (t.offset_step[i] > 0) {
      Vec2 p = perp(t.site.directions[i]);
      Rational sg(t.offset_sign[i]);
      o.x.c[t.offset_step[i]] = p.x * sg;
      o.y.c[t.offset_step[i]] = p.y * sg;
    }
    offsets[i] = std::move(o);
  }

  struct Crossing {
    int i, j;             // i < j
    EpsScalar ti, tj;     // curve parameters on each strand
  };
  std::vector<Crossing> crossings;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Vec2& di = t.site.directions[i];
      const Vec2& dj = t.site.directions[j];
      Rational denom = cross(di, dj);
      EpsVec2 delta{offsets[j].x - offsets[i].x, offsets[j].y - offsets[i].y};
      Crossing c;
      c.i = i;
      c.j = j;
      c.ti = eps_cross(delta, dj) / denom;
      c.tj = eps_cross(delta, di) / denom;
      crossings.push_back(std::move(c));
    }
  }

  // Ranks along each strand by exact symbolic position.
  std::vector<std::vector<std::pair<int, int>>> per_strand(k);  // (crossing, which end)
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    per_strand[crossings[c].i].push_back({c, 0});
    per_strand[crossings[c].j].push_back({c, 1});
  }
  std::vector<std::array<int, 2>> rank(crossings.size());
  for (int s = 0; s < k; ++s) {
    auto& list = per_strand[s];
    std::sort(list.begin(), list.end(), [&](auto a, auto b) {
      const EpsScalar& ta = a.second ? crossings[a.first].tj : crossings[a.first].ti;
      const EpsScalar& tb = b.second ? crossings[b.first].tj : crossings[b.first].ti;
      auto c = ta.cmp(tb);
      if (c == std::strong_ordering::equal)
        throw std::logic_error("coincident crossings along a strand");
      return c == std::strong_ordering::less;
    });
    for (int r = 0; r < static_cast<int>(list.size()); ++r)
      rank[list[r].first][list[r].second] = r;
  }

  TangleDiagram out;
  out.strands = k;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    const Crossing& cr = crossings[c];
    bool i_first = cross(t.site.directions[cr.i], t.site.directions[cr.j]) > 0;
    TangleChord ch;
    if (i_first) {
      ch = {cr.i, rank[c][0], cr.j, rank[c][1]};
    } else {
      ch = {cr.j, rank[c][1], cr.i, rank[c][0]};
    }
    out.chords.push_back(ch);
  }
  out.normalize();
  return out;
}

void TangleDiagram::normalize() { std::sort(chords.begin(), chords.end()); }

std::string TangleDiagram::str() const {
  std::ostringstream os;
  os << "strands=" << strands;
  for (const TangleChord& c : chords)
    os << '\n' << '(' << (c.tail_strand + 1) << ',' << (c.tail_rank + 1) << ")->("
       << (c.head_strand + 1) << ',' << (c.head_rank + 1) << ')';
  return os.str();
}

std::vector<ResolutionTerm> complete_resolution(const SingularSite& s) {
  std::vector<ResolutionTerm> out;
  auto walk = [&](auto&& self, const PartialResolution& t, int sign) -> void {
    if (t.resolved()) {
      out.push_back({extract_diagram(t), sign});
      return;
    }
    self(self, resolve_once(t, true), sign);
    self(self, resolve_once(t, false), -sign);
  };
  PartialResolution root;
  root.site = s;
  root.offset_step.assign(s.k, 0);
  root.offset_sign.assign(s.k, 0);
  walk(walk, root, +1);
  return out;
}

TangleSum tangle_subdiagram_sum(const TangleDiagram& t) {
  TangleSum sum;
  const int m = static_cast<int>(t.chords.size());
  if (m > 24) throw std::invalid_argument("too many chords for a subdiagram sum");
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    // Surviving endpoint ranks, compressed per strand.
    std::vector<std::vector<int>> kept(t.strands);
    for (int c = 0; c < m; ++c) {
      if (!(mask >> c & 1)) continue;
      kept[t.chords[c].tail_strand].push_back(t.chords[c].tail_rank);
      kept[t.chords[c].head_strand].push_back(t.chords[c].head_rank);
    }
    for (auto& v : kept) std::sort(v.begin(), v.end());
    auto new_rank = [&](int strand, int old_rank) {
      const auto& v = kept[strand];
      return static_cast<int>(std::lower_bound(v.begin(), v.end(), old_rank) - v.begin());
    };
    TangleDiagram sub;
    sub.strands = t.strands;
    for (int c = 0; c < m; ++c) {
      if (!(mask >> c & 1)) continue;
      const TangleChord& ch = t.chords[c];
      sub.chords.push_back({ch.tail_strand, new_rank(ch.tail_strand, ch.tail_rank),
                            ch.head_strand, new_rank(ch.head_strand, ch.head_rank)});
    }
    sub.normalize();
    sum[sub] += 1;
  }
  return sum;
}

TangleSum signed_subdiagram_sum(const std::vector<ResolutionTerm>& terms) {
  TangleSum total;
  for (const ResolutionTerm& term : terms) {
    for (const auto& [d, c] : tangle_subdiagram_sum(term.diagram)) {
      auto it = total.emplace(d, 0).first;
      it->second += term.sign * c;
      if (it->second == 0) total.erase(it);
    }
  }
  return total;
}

std::optional<int> min_chord_degree(const TangleSum& s) {
  std::optional<int> best;
  for (const auto& [d, c] : s) {
    if (c == 0) continue;
    int deg = static_cast<int>(d.chords.size());
    if (!best || deg < *best) best = deg;
  }
  return best;
}

ClosurePlan closure_plan(const SingularSite& s) {
  const int k = s.k;
  if (k > 8) throw std::invalid_argument("closure search supported for k <= 8");
  // Boundary points in angular order: exit of strand i in direction d_i,
  // entry in direction -d_i.
  struct BPoint {
    Vec2 dir;
    int strand;
    bool is_exit;
  };
  std::vector<BPoint> pts;
  for (int i = 0; i < k; ++i) {
    pts.push_back({s.directions[i], i, true});
    pts.push_back({{-s.directions[i].x, -s.directions[i].y}, i, false});
  }
  std::sort(pts.begin(), pts.end(),
            [](const BPoint& a, const BPoint& b) { return angle_less(a.dir, b.dir); });
  std::vector<int> exit_pos(k), entry_pos(k);
  for (int p = 0; p < 2 * k; ++p)
    (pts[p].is_exit ? exit_pos : entry_pos)[pts[p].strand] = p;

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  auto chords_cross = [&](std::pair<int, int> a, std::pair<int, int> b) {
    auto inside = [&](int x, std::pair<int, int> c) {
      int lo = c.first, hi = c.second;
      if (lo > hi) std::swap(lo, hi);
      return x > lo && x < hi;
    };
    return inside(b.first, a) != inside(b.second, a);
  };
  do {
    // One k-cycle visiting every strand.
    int cur = 0, count = 0;
    do {
      cur = perm[cur];
      ++count;
    } while (cur != 0 && count <= k);
    if (cur != 0 || count != k) continue;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i) arcs.push_back({exit_pos[i], entry_pos[perm[i]]});
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) ok = !chords_cross(arcs[i], arcs[j]);
    if (ok) return ClosurePlan{perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::invalid_argument("no crossing-free single-cycle closure for this site");
}

ArrowDiagram close_up(const TangleDiagram& t, const ClosurePlan& plan,
                      const std::vector<KinkSpec>& kinks) {
  const int k = t.strands;
  if (static_cast<int>(plan.next_strand.size()) != k)
    throw std::invalid_argument("closure plan does not match strand count");
  // Endpoints of each strand in rank order.
  std::vector<std::vector<std::pair<int, Role>>> strand_eps(k);  // (chord, role)
  for (int c = 0; c < static_cast<int>(t.chords.size()); ++c) {
    const TangleChord& ch = t.chords[c];
    auto place = [&](int strand, int rank, Role role) {
      auto& v = strand_eps[strand];
      if (static_cast<int>(v.size()) <= rank) v.resize(rank + 1, {-1, Role::Tail});
      if (v[rank].first != -1)
        throw std::invalid_argument("tangle has duplicate endpoint ranks");
      v[rank] = {c, role};
    };
    place(ch.tail_strand, ch.tail_rank, Role::Tail);
    place(ch.head_strand, ch.head_rank, Role::Head);
  }
  for (const auto& v : strand_eps)
    for (const auto& [c, r] : v)
      if (c == -1) throw std::invalid_argument("tangle endpoint ranks are not dense");

  std::vector<Endpoint> raw;
  int next_chord = static_cast<int>(t.chords.size());
  int strand = 0, visited = 0;
  do {
    for (const auto& [c, role] : strand_eps[strand]) raw.push_back({c, role});
    for (const KinkSpec& kk : kinks) {
      if (kk.after_strand == strand) {
        raw.push_back({next_chord, kk.first_role});
        raw.push_back({next_chord, opposite(kk.first_role)});
        ++next_chord;
      }
    }
    strand = plan.next_strand[strand];
    ++visited;
  } while (strand != 0 && visited <= k);
  if (strand != 0 || visited != k)
    throw std::invalid_argument("closure plan is not a single cycle");
  return ArrowDiagram(std::move(raw));
}

}  // namespace doodle
