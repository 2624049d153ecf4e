#pragma once

#include <array>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "doodle/arrow_diagram.hpp"

namespace doodle {

enum class MoveKind { R1, R2 };

/// A deletable configuration: an isolated chord (R1) or a pair of chords
/// whose endpoints pair up into two cyclically adjacent sites, each holding
/// one tail and one head of different chords (R2).  Positions refer to the
/// canonical rotation of the diagram the site was found in.
struct MoveSite {
  MoveKind kind = MoveKind::R1;
  int chord_a = -1;
  int chord_b = -1;  // unused for R1
  std::array<std::pair<int, int>, 2> sites{};  // adjacent position pairs; R1 uses sites[0]

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

struct DeleteStep {
  MoveSite site;
  friend bool operator==(const DeleteStep&, const DeleteStep&) = default;
};
struct InsertR1Step {
  int arc = 0;
  Role first_role = Role::Tail;
  friend bool operator==(const InsertR1Step&, const InsertR1Step&) = default;
};
struct InsertR2Step {
  int arc1 = 0;
  int arc2 = 0;
  bool crossing = false;
  bool flip = false;
  friend bool operator==(const InsertR2Step&, const InsertR2Step&) = default;
};

using MoveStep = std::variant<DeleteStep, InsertR1Step, InsertR2Step>;

struct MoveTrace {
  std::vector<MoveStep> steps;
};

std::vector<MoveSite> find_r1_sites(const ArrowDiagram& d);
std::vector<MoveSite> find_r2_sites(const ArrowDiagram& d);

/// Removes the chord(s) of a valid site of d.  Throws on a stale site.
ArrowDiagram apply_delete(const ArrowDiagram& d, const MoveSite& s);

/// Inserts an isolated chord at the given arc slot (0..2n, cyclic).
ArrowDiagram apply_r1_insert(const ArrowDiagram& d, int arc, Role first_role);

/// Inserts a deletable pair spanning the two arc slots.  `crossing` picks the
/// interleaved configuration, `flip` swaps which chord leads with its tail.
ArrowDiagram apply_r2_insert(const ArrowDiagram& d, int arc1, int arc2,
                             bool crossing, bool flip);

ArrowDiagram apply_step(const ArrowDiagram& d, const MoveStep& step);
ArrowDiagram replay(const ArrowDiagram& d, const MoveTrace& trace);

/// Applies deleting moves (first site in canonical position order) until none
/// remains.  The fixpoint is the unique minimal representative.
std::pair<ArrowDiagram, MoveTrace> minimize(const ArrowDiagram& d);

/// Uses a caller-supplied site picker; exercised by the confluence tests.
std::pair<ArrowDiagram, MoveTrace> minimize_with(
    const ArrowDiagram& d, std::mt19937& rng);

bool is_minimal(const ArrowDiagram& d);

/// True iff both diagrams minimize to the same canonical minimal diagram.
bool equivalent(const ArrowDiagram& d1, const ArrowDiagram& d2);

// Seeded generators for property tests and the census oracle.

/// Any diagram: uniform random pairing with random chord directions.
ArrowDiagram random_arrow_diagram(std::mt19937& rng, int chords);

/// A random insertion that corresponds to an actual curve move: kinks go
/// anywhere, pair insertions push one strand across another along a common
/// face of the diagram's map, with the pattern dictated by the relative
/// boundary orientation.  Applying the step to a realizable diagram keeps it
/// realizable.
MoveStep random_geometric_insertion(const ArrowDiagram& d, std::mt19937& rng);

/// Realizable by construction: random geometric insertions from the empty
/// diagram.
ArrowDiagram random_realizable_diagram(std::mt19937& rng, int target_chords);

struct WalkOptions {
  int steps = 8;
  int max_chords = 10;
};

/// Random move walk (insertions and deletions); result stays equivalent to d.
std::pair<ArrowDiagram, MoveTrace> random_walk(const ArrowDiagram& d,
                                               std::mt19937& rng,
                                               const WalkOptions& opt);

}  // namespace doodle
