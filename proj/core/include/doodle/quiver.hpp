#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "doodle/arrow_diagram.hpp"

namespace doodle {

/// A chord diagram whose endpoints carry non-negative integer labels, each
/// chord summing to at least 1.  Arrow diagrams embed as quiver diagrams with
/// tails labelled 0 and heads labelled 1.
///
/// Values are canonical: the (id, label) token sequence is the least one over
/// all rotations, ids renumbered by first appearance and compared before
/// labels.  Rotated label assignments therefore construct equal values.
class QuiverDiagram {
 public:
  QuiverDiagram() = default;
  QuiverDiagram(std::vector<int> ids, std::vector<int> labels);

  int chords() const { return static_cast<int>(ids_.size() / 2); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  const std::vector<int>& labels() const { return labels_; }

  ChordDiagramU underlying() const;

  /// Position pair (first occurrence, second occurrence) of each chord.
  std::vector<std::pair<int, int>> chord_positions() const;

  std::string str() const;

  friend bool operator==(const QuiverDiagram&, const QuiverDiagram&) = default;
  friend auto operator<=>(const QuiverDiagram& a, const QuiverDiagram& b) {
    if (auto c = a.ids_ <=> b.ids_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<int> ids_;
  std::vector<int> labels_;
};

/// Sum of all labels.
int degree(const QuiverDiagram& q);

/// One admissible merge of two chords: the pairing of their four endpoints
/// into two cyclically adjacent sites.
struct ReductionSite {
  int chord_a;
  int chord_b;
  std::array<std::pair<int, int>, 2> sites;
};

std::vector<ReductionSite> reduction_sites(const QuiverDiagram& q);

/// Unordered chord pairs admitting a reduction site.
std::vector<std::pair<int, int>> adjacent_chord_pairs(const QuiverDiagram& q);

/// Merges one adjacent pair: the two chords become one, the labels at each
/// adjacency site are added.
QuiverDiagram reduce_step(const QuiverDiagram& q, const ReductionSite& site);

/// Fully reduces q; the result is independent of merge order.
QuiverDiagram reduce(const QuiverDiagram& q);

bool is_reduced(const QuiverDiagram& q);

QuiverDiagram from_arrow(const ArrowDiagram& d);

/// True iff some chord has cyclically adjacent endpoints.  Decides vanishing
/// under the isolated-chord relation; meaningful for reduced diagrams.
bool is_zero_by_isolated_chord(const QuiverDiagram& q);

/// reduce(from_arrow(d)).  On a minimal doodle diagram this collapses each
/// maximal cluster of m parallel same-direction chords to one chord
/// labelled (0, m).
QuiverDiagram cluster_reduce_arrow(const ArrowDiagram& d);

}  // namespace doodle
