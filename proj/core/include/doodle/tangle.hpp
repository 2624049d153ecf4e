#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "doodle/arrow_diagram.hpp"
#include "doodle/fields.hpp"

namespace doodle {

struct Vec2 {
  Rational x, y;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

Rational cross(const Vec2& a, const Vec2& b);
Vec2 perp(const Vec2& v);  // quarter turn in the positive direction

/// A k-fold singular point: k pairwise non-parallel rational directions
/// through the origin, listed in traversal order with strictly increasing
/// angle.  Branch k is the last branch and is split off first.
struct SingularSite {
  int k = 0;
  std::vector<Vec2> directions;
};

/// Throws for k < 3.
SingularSite star_tangle(int k);

/// Combinatorial flat tangle: ordered strands, chords between endpoint ranks.
/// Equality is equality of the combinatorial data.
struct TangleChord {
  int tail_strand, tail_rank, head_strand, head_rank;
  friend bool operator==(const TangleChord&, const TangleChord&) = default;
  friend auto operator<=>(const TangleChord&, const TangleChord&) = default;
};

struct TangleDiagram {
  int strands = 0;
  std::vector<TangleChord> chords;  // kept sorted

  void normalize();
  std::string str() const;  // "strands=<k>" then "(s,r)->(s,r)" per chord
  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;
  friend auto operator<=>(const TangleDiagram&, const TangleDiagram&) = default;
};

/// A star tangle after some one-step resolutions.  Strand i either passes
/// through the origin or is offset by sign * eps_step * perp(direction),
/// with later steps infinitesimally smaller than earlier ones.
struct PartialResolution {
  SingularSite site;
  std::vector<int> offset_step;  // per strand, 0 = unperturbed, else step no.
  std::vector<int> offset_sign;  // per strand, +1/-1, meaningful when step > 0
  int steps = 0;

  int residual_branches() const;
  bool resolved() const { return residual_branches() <= 2; }
};

/// Splits the last still-singular branch off to the given side.
PartialResolution resolve_once(const SingularSite& s, bool positive_side);
PartialResolution resolve_once(const PartialResolution& t, bool positive_side);

/// Reads the combinatorial tangle of a fully resolved star; chords are the
/// pairwise strand crossings, directed by the positive-frame rule.
TangleDiagram extract_diagram(const PartialResolution& t);

struct ResolutionTerm {
  TangleDiagram diagram;
  int sign;
};

/// Alternating sum over the 2^(k-2) complete resolutions, depth-first with
/// the positive side first.
std::vector<ResolutionTerm> complete_resolution(const SingularSite& s);

using TangleSum = std::map<TangleDiagram, long long>;

/// Sum of all chord subsets; ranks are recomputed after deletion.
TangleSum tangle_subdiagram_sum(const TangleDiagram& t);

/// Sum of sign * tangle_subdiagram_sum(term) over resolution terms.
TangleSum signed_subdiagram_sum(const std::vector<ResolutionTerm>& terms);

/// Minimum chord count over surviving terms; empty for the zero sum.
std::optional<int> min_chord_degree(const TangleSum& s);

/// Exit strand i is joined to entry of next_strand[i] outside the disc.
struct ClosurePlan {
  std::vector<int> next_strand;
};

/// A crossing-free closure visiting all strands in one cycle.  Throws when
/// the boundary pattern of the site admits none.
ClosurePlan closure_plan(const SingularSite& s);

/// An isolated extra crossing planted on the closure arc leaving `after_strand`.
struct KinkSpec {
  int after_strand = 0;
  Role first_role = Role::Tail;
};

/// Closes a resolved star tangle into a closed arrow diagram.
ArrowDiagram close_up(const TangleDiagram& t, const ClosurePlan& plan,
                      const std::vector<KinkSpec>& kinks = {});

}  // namespace doodle
