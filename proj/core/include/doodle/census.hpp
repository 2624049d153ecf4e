#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "doodle/arrow_diagram.hpp"
#include "doodle/fields.hpp"

namespace doodle {

/// All arrow diagrams with exactly k chords, one canonical representative
/// per rotation class, in increasing canonical order.
std::vector<ArrowDiagram> enumerate_arrow_diagrams(int k);

/// One doodle equivalence class: class 0 is the trivial doodle.
struct CensusRecord {
  int class_id = 0;
  ArrowDiagram minimal;
  int crossings = 0;
  long long representatives = 0;  // enumerated diagrams minimizing here
  std::string invariant_text;     // serialized invariant of the minimal form
};

struct CensusOptions {
  int kmax = 3;
  int n_extra = 1;  // invariants are computed at truncation kmax + n_extra
  Field field = Field::Q;
  bool force = false;  // required beyond kmax = 6
  int workers = 0;     // 0 = default_workers()
  std::optional<std::filesystem::path> out;  // progress checkpoint + final files
};

/// Worker count from DOODLE_WORKERS, else hardware concurrency.
int default_workers();

/// Largest kmax accepted without `force`; enumeration grows like (2k-1)!!*2^k.
constexpr int kEnumerationGuard = 6;

/// Enumerates all diagrams with <= kmax chords, keeps the realizable ones,
/// minimizes, groups by minimal form and computes class invariants.
std::vector<CensusRecord> build_census(const CensusOptions& opt);

void write_census(const std::filesystem::path& dir,
                  const std::vector<CensusRecord>& records, int kmax);
std::vector<CensusRecord> read_census(const std::filesystem::path& dir);

/// kmax recorded in the census header; -1 when the header is absent.
int read_census_kmax(const std::filesystem::path& dir);

struct TheoremReport {
  bool pass = false;
  std::string json;  // machine-readable report with any counterexamples
};

/// Checks, over a built census: nontriviality of every nontrivial class at
/// truncation equal to its crossing count, pairwise distinctness of the
/// invariants at truncation kmax+1, and leading coefficient 1 for every
/// minimal representative.
TheoremReport verify_theorems(const std::vector<CensusRecord>& census, int kmax,
                              Field field, int workers = 0);

}  // namespace doodle
