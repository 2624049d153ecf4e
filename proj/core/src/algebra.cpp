#include "doodle/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pair_sites.hpp"

namespace doodle {

namespace {

// First-occurrence positions of each chord along the id sequence.
std::vector<int> first_occurrences(const std::vector<int>& ids) {
  std::vector<int> first(ids.size() / 2, -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i)
    if (first[ids[i]] < 0) first[ids[i]] = i;
  return first;
}

// Rotations that reproduce the canonical id sequence (the symmetry group of
// the underlying chord diagram in its canonical frame).
std::vector<int> id_automorphisms(const std::vector<int>& ids) {
  const int m = static_cast<int>(ids.size());
  std::vector<int> result{0};
  for (int r = 1; r < m; ++r) {
    std::vector<int> remap(m / 2, -1);
    int next = 0;
    bool same = true;
    for (int i = 0; i < m && same; ++i) {
      int id = ids[(i + r) % m];
      if (remap[id] < 0) remap[id] = next++;
      same = remap[id] == ids[i];
    }
    if (same) result.push_back(r);
  }
  return result;
}

bool ids_have_isolated(const std::vector<int>& ids) {
  const int m = static_cast<int>(ids.size());
  for (int i = 0; i < m; ++i)
    if (m >= 2 && ids[i] == ids[(i + 1) % m]) return true;
  return false;
}

// Zeros sit exactly at the given marked positions in some rotation that
// reproduces the canonical id sequence.
bool marked_zero_in_some_frame(const QuiverDiagram& q,
                               const std::vector<char>& marked) {
  const auto& ids = q.ids();
  const auto& labels = q.labels();
  const int m = static_cast<int>(ids.size());
  if (m == 0) return true;
  for (int r : id_automorphisms(ids)) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      ok = (labels[(i + r) % m] == 0) == static_cast<bool>(marked[i]);
    if (ok) return true;
  }
  return false;
}

std::vector<char> default_marked_positions(const std::vector<int>& ids) {
  std::vector<char> marked(ids.size(), 0);
  for (int f : first_occurrences(ids)) marked[f] = 1;
  return marked;
}

}  // namespace

std::string encode_basis_key(const QuiverDiagram& key) {
  const auto& ids = key.ids();
  const auto& labels = key.labels();
  const int m = static_cast<int>(ids.size());
  std::ostringstream os;
  os << "deg=" << degree(key) << ";";
  if (m == 0) return os.str();

  // Prefer a rotation whose zeros sit exactly at the first occurrences; pick
  // the least label vector among those.
  std::vector<char> is_first = default_marked_positions(ids);
  std::vector<int> best;
  for (int r : id_automorphisms(ids)) {
    std::vector<int> rot(m);
    for (int i = 0; i < m; ++i) rot[i] = labels[(i + r) % m];
    bool marked_zero = true;
    for (int i = 0; i < m; ++i)
      marked_zero &= (rot[i] == 0) == static_cast<bool>(is_first[i]);
    if (marked_zero && (best.empty() || rot < best)) best = std::move(rot);
  }

  std::vector<std::pair<int, int>> pos(m / 2, {-1, -1});
  for (int i = 0; i < m; ++i) {
    auto& p = pos[ids[i]];
    (p.first < 0 ? p.first : p.second) = i;
  }
  std::sort(pos.begin(), pos.end());

  bool firstc = true;
  if (!best.empty()) {
    for (auto [a, b] : pos) {
      os << (firstc ? " " : ",") << a << '-' << b << ':' << best[b];
      firstc = false;
    }
  } else {
    // Falls outside the standard marking (adapted bases only); internal form.
    for (auto [a, b] : pos) {
      os << (firstc ? " " : ",") << a << '-' << b << ':' << labels[a] << ':' << labels[b];
      firstc = false;
    }
  }
  return os.str();
}

QuiverDiagram decode_basis_key(const std::string& text) {
  size_t semi = text.find(';');
  if (text.rfind("deg=", 0) != 0 || semi == std::string::npos)
    throw std::invalid_argument("basis key: expected 'deg=<d>; ...'");
  long deg = std::stol(text.substr(4, semi - 4));
  std::string rest = text.substr(semi + 1);
  std::vector<std::array<long, 3>> chords;
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t start = item.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    item = item.substr(start);
    size_t dash = item.find('-');
    size_t colon = item.find(':', dash);
    if (dash == std::string::npos || colon == std::string::npos)
      throw std::invalid_argument("basis key: bad chord entry '" + item + "'");
    size_t pos = 0;
    long a = std::stol(item.substr(0, dash), &pos);
    long b = std::stol(item.substr(dash + 1, colon - dash - 1), &pos);
    std::string labpart = item.substr(colon + 1);
    if (labpart.find(':') != std::string::npos)
      throw std::invalid_argument("basis key: adapted-marking keys have no text form");
    long lab = std::stol(labpart);
    chords.push_back({a, b, lab});
  }
  const int m = static_cast<int>(chords.size()) * 2;
  std::vector<int> ids(m, -1), labels(m, 0);
  int idx = 0;
  for (const auto& [a, b, lab] : chords) {
    if (a < 0 || b < 0 || a >= m || b >= m || ids[a] >= 0 || ids[b] >= 0 || a >= b)
      throw std::invalid_argument("basis key: inconsistent positions");
    ids[a] = ids[b] = idx++;
    labels[b] = static_cast<int>(lab);
  }
  QuiverDiagram q(std::move(ids), std::move(labels));
  if (degree(q) != deg) throw std::invalid_argument("basis key: degree mismatch");
  return q;
}

template <class F>
void AlgebraElement<F>::add_term(const QuiverDiagram& key, const F& c) {
  if (coeff_is_zero(c) || degree(key) > n_) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }
}

template <class F>
AlgebraElement<F>& AlgebraElement<F>::operator+=(const AlgebraElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

template <class F>
AlgebraElement<F>& AlgebraElement<F>::negate() {
  for (auto& [k, c] : terms_) c = -c;
  return *this;
}

template <class F>
AlgebraElement<F>& AlgebraElement<F>::operator*=(const F& c) {
  if (coeff_is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

template <class F>
AlgebraElement<F> AlgebraElement<F>::truncated(int n) const {
  AlgebraElement out(n);
  for (const auto& [k, c] : terms_) out.add_term(k, c);
  return out;
}

template <class F>
F AlgebraElement<F>::coefficient(const QuiverDiagram& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? F{} : it->second;
}

template <class F>
bool AlgebraElement<F>::has_nonempty_term() const {
  for (const auto& [k, c] : terms_)
    if (!k.empty()) return true;
  return false;
}

template <class F>
std::string AlgebraElement<F>::str() const {
  std::vector<std::pair<std::string, const F*>> lines;
  lines.reserve(terms_.size());
  for (const auto& [k, c] : terms_) lines.push_back({encode_basis_key(k), &c});
  std::sort(lines.begin(), lines.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  for (const auto& [key, c] : lines) os << coeff_to_string(*c) << ' ' << key << '\n';
  return os.str();
}

template <class F>
AlgebraElement<F> parse_algebra_element(const std::string& text, int truncation) {
  AlgebraElement<F> out(truncation);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t sp = line.find(' ');
    if (sp == std::string::npos)
      throw std::invalid_argument("algebra element: bad line '" + line + "'");
    std::string coeff = line.substr(0, sp);
    QuiverDiagram key = decode_basis_key(line.substr(sp + 1));
    if constexpr (std::is_same_v<F, GF2>) {
      if (coeff != "1" && coeff != "0")
        throw std::invalid_argument("algebra element: bad F2 coefficient '" + coeff + "'");
      out.add_term(key, GF2(coeff == "1" ? 1 : 0));
    } else {
      out.add_term(key, Rational(coeff));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The expansion engine.
//
// A class whose chord diagram still has an adjacent pair equals its merge in
// the algebra, so such classes are delegated to the merged diagram (crossing
// merges included here: they are valid relations even though the reduction
// map only performs the order-independent nested ones).  What remains lives
// over a fully reduced chord diagram, whose sector is closed under the label
// identity D(p,q) + D(p+1,q-1) + D(p+1,q) = 0.  A two-term recursion on
// marked labels resolves that identity only over asymmetric chord diagrams;
// rotational symmetry identifies terms that would otherwise cancel and the
// marked-zero classes pick up extra relations.  Each sector is therefore
// row-reduced once, with pivots preferring non-key classes, and expansions
// are read off the solved form.

template <class F>
struct RewriteContext<F>::Engine {
  struct ColKey {
    bool key;
    QuiverDiagram q;
    friend bool operator<(const ColKey& a, const ColKey& b) {
      if (a.key != b.key) return !a.key;
      return a.q < b.q;
    }
  };
  using Row = std::map<ColKey, F>;

  struct Sector {
    std::map<QuiverDiagram, ColKey> columns;
    std::map<ColKey, Row> pivots;
    std::map<QuiverDiagram, AlgebraElement<F>> memo;
  };

  int n = 0;
  std::map<std::vector<int>, std::vector<char>>* marking_override = nullptr;
  std::map<std::vector<int>, Sector> sectors;
  bool used = false;

  static QuiverDiagram merge_labels(const std::vector<int>& ids,
                                    const std::vector<int>& labels,
                                    const detail::PairMatching& pm) {
    const int m = static_cast<int>(ids.size());
    int keep = pm.chord_a;
    int drop = pm.chord_b;
    std::vector<int> absorbed(m, 0);
    for (const auto& [p, r] : pm.sites) {
      int pk = ids[p] == keep ? p : r;
      int pd = ids[p] == keep ? r : p;
      absorbed[pk] += labels[pd];
    }
    std::vector<int> nids, nlabels;
    for (int i = 0; i < m; ++i) {
      if (ids[i] == drop) continue;
      nids.push_back(ids[i] > drop ? ids[i] - 1 : ids[i]);
      nlabels.push_back(labels[i] + absorbed[i]);
    }
    return QuiverDiagram(std::move(nids), std::move(nlabels));
  }

  std::vector<char> marking_for(const std::vector<int>& ids) const {
    auto ov = marking_override->find(ids);
    return ov != marking_override->end() ? ov->second
                                         : default_marked_positions(ids);
  }

  Sector& sector_for(const std::vector<int>& ids) {
    auto it = sectors.find(ids);
    if (it != sectors.end()) return it->second;
    Sector& sec = sectors[ids];
    std::vector<char> marked = marking_for(ids);

    // Classes: labellings of this diagram with degree <= n.
    const int m = static_cast<int>(ids.size());
    std::vector<int> labels(m, 0);
    auto emit = [&](const QuiverDiagram& q) {
      if (sec.columns.count(q)) return;
      bool key = marked_zero_in_some_frame(q, marked);
      sec.columns.emplace(q, ColKey{key, q});
    };
    auto rec = [&](auto&& self, int pos, int used_deg) -> void {
      if (pos == m) {
        std::vector<int> sums(m / 2, 0);
        for (int i = 0; i < m; ++i) sums[ids[i]] += labels[i];
        for (int s : sums)
          if (s < 1) return;
        emit(QuiverDiagram(ids, labels));
        return;
      }
      for (int l = 0; used_deg + l <= n; ++l) {
        labels[pos] = l;
        self(self, pos + 1, used_deg + l);
      }
      labels[pos] = 0;
    };
    if (m > 0) rec(rec, 0, 0);

    // Relation rows: the label identity at each chord, either endpoint.
    auto add_entry = [&](Row& row, const QuiverDiagram& q, const F& c) {
      if (degree(q) > n) return;
      auto [jt, fresh] = row.emplace(sec.columns.at(q), F{});
      jt->second += c;
      if (coeff_is_zero(jt->second)) row.erase(jt);
    };
    for (const auto& [q, col] : sec.columns) {
      const auto& ql = q.labels();
      auto pos = q.chord_positions();
      for (int c = 0; c < q.chords(); ++c) {
        for (int side = 0; side < 2; ++side) {
          int e = side == 0 ? pos[c].first : pos[c].second;
          int o = side == 0 ? pos[c].second : pos[c].first;
          if (ql[e] < 1) continue;
          Row row;
          add_entry(row, q, coeff_one<F>());
          std::vector<int> l1 = ql;
          l1[e] -= 1;
          l1[o] += 1;
          add_entry(row, QuiverDiagram(q.ids(), l1), coeff_one<F>());
          std::vector<int> l2 = ql;
          l2[o] += 1;
          add_entry(row, QuiverDiagram(q.ids(), l2), coeff_one<F>());
          insert_relation(sec, std::move(row));
        }
      }
    }
    return sec;
  }

  static void reduce_row(const Sector& sec, Row& row) {
    for (;;) {
      const Row* pivot = nullptr;
      for (const auto& [c, v] : row) {
        auto p = sec.pivots.find(c);
        if (p != sec.pivots.end()) {
          pivot = &p->second;
          break;
        }
      }
      if (!pivot) return;
      F f = row.at(pivot->begin()->first);
      for (const auto& [c, v] : *pivot) {
        auto [jt, fresh] = row.emplace(c, F{});
        jt->second -= f * v;
        if (coeff_is_zero(jt->second)) row.erase(jt);
      }
    }
  }

  static void insert_relation(Sector& sec, Row row) {
    reduce_row(sec, row);
    if (row.empty()) return;
    ColKey lead = row.begin()->first;
    if constexpr (std::is_same_v<F, Rational>) {
      Rational inv = Rational(1) / row.begin()->second;
      for (auto& [c, v] : row) v *= inv;
    }
    for (auto& [pc, prow] : sec.pivots) {
      auto hit = prow.find(lead);
      if (hit == prow.end()) continue;
      F f = hit->second;
      for (const auto& [c, v] : row) {
        auto [jt, fresh] = prow.emplace(c, F{});
        jt->second -= f * v;
        if (coeff_is_zero(jt->second)) prow.erase(jt);
      }
    }
    sec.pivots.emplace(lead, std::move(row));
  }

  AlgebraElement<F> expand(QuiverDiagram q) {
    used = true;
    // Delegate along merges until the chord diagram is fully reduced.
    for (;;) {
      if (is_zero_by_isolated_chord(q)) return AlgebraElement<F>(n);
      auto matchings = detail::find_pair_matchings(q.ids());
      if (matchings.empty()) break;
      q = merge_labels(q.ids(), q.labels(), matchings.front());
    }
    if (q.empty()) {
      AlgebraElement<F> out(n);
      out.add_term(QuiverDiagram(), coeff_one<F>());
      return out;
    }
    Sector& sec = sector_for(q.ids());
    auto hit = sec.memo.find(q);
    if (hit != sec.memo.end()) return hit->second;
    Row row;
    row[sec.columns.at(q)] = coeff_one<F>();
    reduce_row(sec, row);
    AlgebraElement<F> out(n);
    for (const auto& [c, v] : row) {
      if (!c.key) throw std::logic_error("expansion did not land on basis keys");
      out.add_term(c.q, v);
    }
    sec.memo.emplace(std::move(q), out);
    return out;
  }
};

template <class F>
RewriteContext<F>::RewriteContext(int truncation) : n_(truncation) {}

template <class F>
RewriteContext<F>::~RewriteContext() = default;

template <class F>
void RewriteContext<F>::override_marking(const QuiverDiagram& reference) {
  std::lock_guard lk(mu_);
  if (engine_ && engine_->used)
    throw std::logic_error("marking override must precede any expansion");
  auto pos = reference.chord_positions();
  std::vector<char> marked(reference.ids().size(), 0);
  for (int c = 0; c < reference.chords(); ++c) {
    int la = reference.labels()[pos[c].first];
    int lb = reference.labels()[pos[c].second];
    if ((la == 0) == (lb == 0))
      throw std::invalid_argument("marking reference must have exactly one zero per chord");
    marked[la == 0 ? pos[c].first : pos[c].second] = 1;
  }
  marking_override_[reference.ids()] = std::move(marked);
}

template <class F>
AlgebraElement<F> RewriteContext<F>::expand(const QuiverDiagram& q) {
  if (degree(q) > n_) return AlgebraElement<F>(n_);
  if (!is_reduced(q)) throw std::invalid_argument("rewrite_to_basis: diagram not reduced");
  if (is_zero_by_isolated_chord(q))
    throw std::invalid_argument("rewrite_to_basis: diagram has an isolated chord");
  std::lock_guard lk(mu_);
  if (!engine_) {
    engine_ = std::make_unique<Engine>();
    engine_->n = n_;
    engine_->marking_override = &marking_override_;
  }
  return engine_->expand(q);
}

template <class F>
AlgebraElement<F> rewrite_to_basis(const QuiverDiagram& q, int truncation) {
  RewriteContext<F> ctx(truncation);
  return ctx.expand(q);
}

AlgebraElement<GF2> reduce_mod2(const AlgebraElement<Rational>& e) {
  AlgebraElement<GF2> out(e.truncation());
  for (const auto& [k, c] : e.terms()) out.add_term(k, coeff_mod2(c));
  return out;
}

GF2 coeff_mod2(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::invalid_argument("coefficient is not integral");
  return GF2(static_cast<int>(boost::multiprecision::numerator(r) % 2 != 0));
}

template class AlgebraElement<Rational>;
template class AlgebraElement<GF2>;
template class RewriteContext<Rational>;
template class RewriteContext<GF2>;
template AlgebraElement<Rational> rewrite_to_basis<Rational>(const QuiverDiagram&, int);
template AlgebraElement<GF2> rewrite_to_basis<GF2>(const QuiverDiagram&, int);
template AlgebraElement<Rational> parse_algebra_element<Rational>(const std::string&, int);
template AlgebraElement<GF2> parse_algebra_element<GF2>(const std::string&, int);

}  // namespace doodle
