#include "doodle/arrow_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace doodle {

namespace {

// Renumbers chord ids by first appearance, starting the scan at `shift`.
template <class Entry, class Id>
std::vector<Entry> renumbered_rotation(const std::vector<Entry>& seq, int shift,
                                       Id get_id, auto set_id) {
  const int m = static_cast<int>(seq.size());
  std::vector<Entry> out;
  out.reserve(m);
  std::vector<int> remap;
  int next = 0;
  for (int i = 0; i < m; ++i) {
    Entry e = seq[(i + shift) % m];
    int id = get_id(e);
    if (id >= static_cast<int>(remap.size())) remap.resize(id + 1, -1);
    if (remap[id] < 0) remap[id] = next++;
    set_id(e, remap[id]);
    out.push_back(e);
  }
  return out;
}

void validate_endpoints(const std::vector<Endpoint>& eps) {
  const int m = static_cast<int>(eps.size());
  if (m % 2 != 0) throw std::invalid_argument("endpoint sequence has odd length");
  const int n = m / 2;
  std::vector<int> tails(n, 0), heads(n, 0);
  for (const Endpoint& e : eps) {
    if (e.chord < 0 || e.chord >= n)
      throw std::invalid_argument("chord id out of range after renumbering");
    (e.role == Role::Tail ? tails : heads)[e.chord]++;
  }
  for (int c = 0; c < n; ++c) {
    if (tails[c] != 1 || heads[c] != 1) {
      std::ostringstream os;
      os << "chord " << (c + 1) << " must appear exactly once as tail and once as head";
      throw std::invalid_argument(os.str());
    }
  }
}

}  // namespace

std::vector<Endpoint> rotated(const std::vector<Endpoint>& eps, int shift) {
  const int m = static_cast<int>(eps.size());
  if (m == 0) return {};
  shift = ((shift % m) + m) % m;
  std::vector<Endpoint> out(eps.begin() + shift, eps.end());
  out.insert(out.end(), eps.begin(), eps.begin() + shift);
  return out;
}

std::vector<Endpoint> canonical_rotation(const std::vector<Endpoint>& raw) {
  const int m = static_cast<int>(raw.size());
  if (m == 0) return {};
  auto get = [](const Endpoint& e) { return e.chord; };
  auto set = [](Endpoint& e, int id) { e.chord = id; };
  std::vector<Endpoint> best = renumbered_rotation(raw, 0, get, set);
  for (int r = 1; r < m; ++r) {
    std::vector<Endpoint> cand = renumbered_rotation(raw, r, get, set);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

ArrowDiagram::ArrowDiagram(std::vector<Endpoint> endpoints) {
  eps_ = canonical_rotation(endpoints);
  validate_endpoints(eps_);
}

int ArrowDiagram::position_of(int chord, Role role) const {
  for (int i = 0; i < static_cast<int>(eps_.size()); ++i)
    if (eps_[i].chord == chord && eps_[i].role == role) return i;
  throw std::invalid_argument("chord not present in diagram");
}

ArrowDiagram parse_gauss(std::string_view text) {
  std::vector<Endpoint> raw;
  std::vector<long> seen_ids;          // original ids in first-appearance order
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2)
      throw std::invalid_argument("bad token '" + tok + "': expected <id><t|h>");
    char rc = tok.back();
    if (rc != 't' && rc != 'h')
      throw std::invalid_argument("bad token '" + tok + "': role must be 't' or 'h'");
    long id = 0;
    for (size_t i = 0; i + 1 < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw std::invalid_argument("bad token '" + tok + "': id must be a positive integer");
      if (id > 1000000) throw std::invalid_argument("chord id too large in '" + tok + "'");
      id = id * 10 + (tok[i] - '0');
    }
    if (id < 1)
      throw std::invalid_argument("bad token '" + tok + "': id must be >= 1");
    auto it = std::find(seen_ids.begin(), seen_ids.end(), id);
    int local;
    if (it == seen_ids.end()) {
      local = static_cast<int>(seen_ids.size());
      seen_ids.push_back(id);
    } else {
      local = static_cast<int>(it - seen_ids.begin());
    }
    raw.push_back({local, rc == 't' ? Role::Tail : Role::Head});
  }
  // Report duplicate-role errors in terms of the input labels.
  {
    std::vector<int> tails(seen_ids.size(), 0), heads(seen_ids.size(), 0);
    for (const Endpoint& e : raw) (e.role == Role::Tail ? tails : heads)[e.chord]++;
    for (size_t c = 0; c < seen_ids.size(); ++c) {
      if (tails[c] > 1 || heads[c] > 1) {
        std::ostringstream os;
        os << "chord " << seen_ids[c] << " appears twice with the same role";
        throw std::invalid_argument(os.str());
      }
      if (tails[c] + heads[c] != 2) {
        std::ostringstream os;
        os << "chord " << seen_ids[c] << " appears only once";
        throw std::invalid_argument(os.str());
      }
    }
  }
  return ArrowDiagram(std::move(raw));
}

std::string serialize(const ArrowDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const Endpoint& e : d.endpoints()) {
    if (!first) os << ' ';
    first = false;
    os << (e.chord + 1) << (e.role == Role::Tail ? 't' : 'h');
  }
  return os.str();
}

ArrowDiagram canonical_form(const ArrowDiagram& d) { return d; }

ChordDiagramU::ChordDiagramU(std::vector<int> ids) {
  const int m = static_cast<int>(ids.size());
  if (m % 2 != 0) throw std::invalid_argument("chord sequence has odd length");
  if (m > 0) {
    auto get = [](int v) { return v; };
    auto set = [](int& v, int id) { v = id; };
    std::vector<int> best = renumbered_rotation(ids, 0, get, set);
    for (int r = 1; r < m; ++r) {
      std::vector<int> cand = renumbered_rotation(ids, r, get, set);
      if (cand < best) best = std::move(cand);
    }
    ids_ = std::move(best);
  }
  std::vector<int> count(ids_.size() / 2 + 1, 0);
  for (int id : ids_) {
    if (id < 0 || id >= static_cast<int>(ids_.size() / 2))
      throw std::invalid_argument("chord id out of range");
    count[id]++;
  }
  for (size_t c = 0; c < ids_.size() / 2; ++c)
    if (count[c] != 2) throw std::invalid_argument("each chord id must appear exactly twice");
}

std::string ChordDiagramU::str() const {
  std::ostringstream os;
  bool first = true;
  for (int id : ids_) {
    if (!first) os << ' ';
    first = false;
    os << (id + 1);
  }
  return os.str();
}

ChordDiagramU underlying_chord_diagram(const ArrowDiagram& d) {
  std::vector<int> ids;
  ids.reserve(d.endpoints().size());
  for (const Endpoint& e : d.endpoints()) ids.push_back(e.chord);
  return ChordDiagramU(std::move(ids));
}

SignedLinearDiagram to_signed_linear(const ArrowDiagram& d, int basepoint) {
  const int m = static_cast<int>(d.endpoints().size());
  if (m == 0) return {};
  if (basepoint < 0 || basepoint >= m)
    throw std::invalid_argument("basepoint out of range");
  SignedLinearDiagram out;
  out.signs.assign(d.size(), 0);
  std::vector<int> remap(d.size(), -1);
  std::vector<Role> first_role(d.size());
  int next = 0;
  for (int i = 0; i < m; ++i) {
    const Endpoint& e = d.endpoints()[(basepoint + i) % m];
    if (remap[e.chord] < 0) {
      remap[e.chord] = next++;
      first_role[e.chord] = e.role;
    }
    out.sequence.push_back(remap[e.chord]);
  }
  for (int c = 0; c < d.size(); ++c)
    out.signs[remap[c]] = first_role[c] == Role::Tail ? +1 : -1;
  return out;
}

ArrowDiagram from_signed_linear(const SignedLinearDiagram& s) {
  const int n = static_cast<int>(s.signs.size());
  if (static_cast<int>(s.sequence.size()) != 2 * n)
    throw std::invalid_argument("signed diagram: sequence/sign size mismatch");
  std::vector<int> seen(n, 0);
  std::vector<Endpoint> raw;
  raw.reserve(s.sequence.size());
  for (int id : s.sequence) {
    if (id < 0 || id >= n) throw std::invalid_argument("signed diagram: id out of range");
    if (s.signs[id] != +1 && s.signs[id] != -1)
      throw std::invalid_argument("signed diagram: sign must be +1 or -1");
    Role first = s.signs[id] > 0 ? Role::Tail : Role::Head;
    raw.push_back({id, seen[id] == 0 ? first : opposite(first)});
    seen[id]++;
  }
  return ArrowDiagram(std::move(raw));
}

std::string signed_linear_to_string(const SignedLinearDiagram& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.sequence.size(); ++i) {
    if (i) os << ' ';
    os << (s.sequence[i] + 1);
  }
  if (!s.signs.empty()) {
    os << (s.sequence.empty() ? "" : " ") << "signs: ";
    for (size_t c = 0; c < s.signs.size(); ++c) {
      if (c) os << ',';
      os << (c + 1) << '=' << (s.signs[c] > 0 ? '+' : '-');
    }
  }
  return os.str();
}

SignedLinearDiagram parse_signed_linear(std::string_view text) {
  std::string str(text);
  SignedLinearDiagram out;
  size_t block = str.find("signs:");
  std::string seq_part = block == std::string::npos ? str : str.substr(0, block);
  std::istringstream in(seq_part);
  long id;
  std::vector<long> ids;
  while (in >> id) ids.push_back(id);
  if (block != std::string::npos) {
    std::string rest = str.substr(block + 6);
    std::istringstream sin(rest);
    std::string entry;
    while (std::getline(sin, entry, ',')) {
      size_t eq = entry.find('=');
      if (eq == std::string::npos) {
        if (entry.find_first_not_of(" \t\n") == std::string::npos) continue;
        throw std::invalid_argument("signed diagram: bad sign entry '" + entry + "'");
      }
      long c = std::stol(entry.substr(0, eq));
      std::string sv = entry.substr(eq + 1);
      if (sv != "+" && sv != "-")
        throw std::invalid_argument("signed diagram: sign must be + or -");
      if (c < 1) throw std::invalid_argument("signed diagram: id must be >= 1");
      if (static_cast<size_t>(c) > out.signs.size()) out.signs.resize(c, 0);
      out.signs[c - 1] = sv == "+" ? +1 : -1;
    }
  }
  for (long v : ids) {
    if (v < 1) throw std::invalid_argument("signed diagram: id must be >= 1");
    out.sequence.push_back(static_cast<int>(v - 1));
  }
  if (out.signs.size() * 2 != out.sequence.size())
    throw std::invalid_argument("signed diagram: need one sign per chord");
  return out;
}

RotationSystem rotation_system(const ArrowDiagram& d) {
  RotationSystem rs;
  const int n = d.size();
  rs.vertices.resize(n);
  rs.arc_count = 2 * n;
  if (n == 0) return rs;
  const auto& eps = d.endpoints();
  const int m = 2 * n;
  for (int i = 0; i < m; ++i) {
    const Endpoint& e = eps[i];
    int out_slot = e.role == Role::Tail ? kSlotOut1 : kSlotOut2;
    int in_slot = e.role == Role::Tail ? kSlotIn1 : kSlotIn2;
    // Arc i starts at endpoint i; arc (i-1) ends here.
    rs.vertices[e.chord].slot[out_slot] = {i, true};
    rs.vertices[e.chord].slot[in_slot] = {(i + m - 1) % m, false};
  }
  return rs;
}

std::vector<std::vector<std::pair<int, bool>>> face_boundaries(
    const RotationSystem& rs) {
  const int arcs = rs.arc_count;
  std::vector<std::vector<std::pair<int, bool>>> faces;
  if (arcs == 0) return faces;
  // A directed edge is an arc with a travel direction; index 2*arc + dir,
  // dir 0 along the curve.  next(e): land on a slot, turn to the cyclically
  // next slot, depart along the arc attached there.
  struct SlotRef { int vertex; int slot; };
  std::vector<SlotRef> arc_start(arcs), arc_end(arcs);
  for (int v = 0; v < static_cast<int>(rs.vertices.size()); ++v) {
    for (int s = 0; s < 4; ++s) {
      const ArcEnd& ae = rs.vertices[v].slot[s];
      (ae.at_start ? arc_start : arc_end)[ae.arc] = {v, s};
    }
  }
  auto successor = [&](int e) {
    int arc = e / 2;
    bool fwd = (e % 2) == 0;
    SlotRef land = fwd ? arc_end[arc] : arc_start[arc];
    int s = (land.slot + 1) % 4;
    const ArcEnd& dep = rs.vertices[land.vertex].slot[s];
    return 2 * dep.arc + (dep.at_start ? 0 : 1);
  };
  std::vector<char> visited(2 * arcs, 0);
  for (int e = 0; e < 2 * arcs; ++e) {
    if (visited[e]) continue;
    std::vector<std::pair<int, bool>> face;
    int cur = e;
    while (!visited[cur]) {
      visited[cur] = 1;
      face.push_back({cur / 2, cur % 2 == 0});
      cur = successor(cur);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

int face_count(const RotationSystem& rs) {
  return static_cast<int>(face_boundaries(rs).size());
}

int surface_genus(const ArrowDiagram& d) {
  const int n = d.size();
  if (n == 0) return 0;
  int f = face_count(rotation_system(d));
  int chi = n - 2 * n + f;
  int deficit = 2 - chi;
  if (deficit < 0 || deficit % 2 != 0)
    throw std::logic_error("face tracing produced an invalid Euler characteristic");
  return deficit / 2;
}

bool is_realizable(const ArrowDiagram& d) { return surface_genus(d) == 0; }

}  // namespace doodle
