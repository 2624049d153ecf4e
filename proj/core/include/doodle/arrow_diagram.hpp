#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace doodle {

enum class Role : std::uint8_t { Tail = 0, Head = 1 };

constexpr Role opposite(Role r) { return r == Role::Tail ? Role::Head : Role::Tail; }

struct Endpoint {
  int chord = 0;  // 0-based chord id
  Role role = Role::Tail;

  friend constexpr bool operator==(Endpoint, Endpoint) = default;
  friend constexpr auto operator<=>(Endpoint a, Endpoint b) {
    if (auto c = a.chord <=> b.chord; c != 0) return c;
    return static_cast<int>(a.role) <=> static_cast<int>(b.role);
  }
};

/// A chord diagram with directed chords, the combinatorial record of a closed
/// curve on the sphere: the circle is the parameter, each chord joins the two
/// visits of a crossing and points from the branch whose tangent comes first
/// in a positive frame to the other.
///
/// Values are immutable and always stored in canonical rotation: chords are
/// renumbered by first appearance and the token sequence is the
/// lexicographically least one over all rotations (token order: chord number,
/// then tail before head).  Two endpoint sequences that differ by a rotation
/// therefore construct equal values.
class ArrowDiagram {
 public:
  ArrowDiagram() = default;
  explicit ArrowDiagram(std::vector<Endpoint> endpoints);

  int size() const { return static_cast<int>(eps_.size() / 2); }
  const std::vector<Endpoint>& endpoints() const { return eps_; }
  bool empty() const { return eps_.empty(); }

  /// Position of the tail/head endpoint of the given chord.
  int position_of(int chord, Role role) const;

  friend bool operator==(const ArrowDiagram&, const ArrowDiagram&) = default;
  friend auto operator<=>(const ArrowDiagram& a, const ArrowDiagram& b) {
    return a.eps_ <=> b.eps_;
  }

 private:
  std::vector<Endpoint> eps_;
};

/// Parses whitespace-separated tokens "<id><t|h>".  Ids are renumbered by
/// first appearance; the empty string is the empty diagram.  Throws
/// std::invalid_argument on malformed tokens or a chord whose two roles do
/// not appear exactly once each.
ArrowDiagram parse_gauss(std::string_view text);

/// Canonical Gauss code; parse_gauss(serialize(d)) == d.
std::string serialize(const ArrowDiagram& d);

/// Identity on the stored canonical representative.
ArrowDiagram canonical_form(const ArrowDiagram& d);

/// Canonicalizes a raw endpoint sequence without constructing a diagram.
/// Exposed so tests can feed explicit rotations.
std::vector<Endpoint> canonical_rotation(const std::vector<Endpoint>& raw);

std::vector<Endpoint> rotated(const std::vector<Endpoint>& eps, int shift);

/// Chord diagram without directions, equal up to rotation.
class ChordDiagramU {
 public:
  ChordDiagramU() = default;
  explicit ChordDiagramU(std::vector<int> ids);

  int size() const { return static_cast<int>(ids_.size() / 2); }
  const std::vector<int>& ids() const { return ids_; }
  std::string str() const;

  friend bool operator==(const ChordDiagramU&, const ChordDiagramU&) = default;
  friend auto operator<=>(const ChordDiagramU& a, const ChordDiagramU& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<int> ids_;
};

ChordDiagramU underlying_chord_diagram(const ArrowDiagram& d);

/// Based variant for long doodles: a linear (cut-open) chord sequence with a
/// sign per chord, positive when the chord is traversed tail before head.
struct SignedLinearDiagram {
  std::vector<int> sequence;      // chord ids, 0-based, each exactly twice
  std::vector<int> signs;         // per chord, +1 or -1

  friend bool operator==(const SignedLinearDiagram&, const SignedLinearDiagram&) = default;
};

/// Cuts the circle just before `basepoint`.  Inverse of from_signed_linear.
SignedLinearDiagram to_signed_linear(const ArrowDiagram& d, int basepoint);
ArrowDiagram from_signed_linear(const SignedLinearDiagram& s);

std::string signed_linear_to_string(const SignedLinearDiagram& s);
SignedLinearDiagram parse_signed_linear(std::string_view text);

// Combinatorial map induced by a diagram.  Each crossing carries four
// half-edge slots in counter-clockwise order: first-branch outgoing,
// second-branch outgoing, first-branch incoming, second-branch incoming.
// The first branch is the one carrying the chord tail.
enum : int { kSlotOut1 = 0, kSlotOut2 = 1, kSlotIn1 = 2, kSlotIn2 = 3 };

struct ArcEnd {
  int arc = -1;        // skeleton arc index (arc i runs endpoint i -> i+1)
  bool at_start = false;
};

struct RotationVertex {
  std::array<ArcEnd, 4> slot{};
};

struct RotationSystem {
  std::vector<RotationVertex> vertices;
  int arc_count = 0;
};

RotationSystem rotation_system(const ArrowDiagram& d);

/// Face boundaries of the map: each face is the cyclic list of its boundary
/// arcs, flagged true when the boundary traverses the arc along the curve
/// direction.  Empty for the empty diagram.
std::vector<std::vector<std::pair<int, bool>>> face_boundaries(const RotationSystem& rs);

/// Number of face orbits of the rotation system (0 for the empty diagram).
int face_count(const RotationSystem& rs);

/// Genus of the closed orientable surface carrying the diagram's map.
int surface_genus(const ArrowDiagram& d);

/// True iff the canonical surface is the sphere.  The empty diagram is
/// realizable (an embedded circle).
bool is_realizable(const ArrowDiagram& d);

}  // namespace doodle
