#include <algorithm>

#include "doodle/census.hpp"

namespace doodle {

namespace {

// Depth-first fill of the endpoint sequence.  Chords are opened in
// first-appearance order, so every sequence is produced exactly once in
// renumbered form; rotation duplicates are removed by the canonical filter.
void fill(std::vector<Endpoint>& seq, int pos, int opened, int closed, int k,
          std::vector<int>& open_role, std::vector<ArrowDiagram>& out) {
  const int m = 2 * k;
  if (pos == m) {
    if (canonical_rotation(seq) == seq) out.emplace_back(seq);
    return;
  }
  if (opened < k) {
    for (Role r : {Role::Tail, Role::Head}) {
      if (pos == 0 && r == Role::Head) continue;  // canonical forms start 1t
      seq[pos] = {opened, r};
      open_role[opened] = static_cast<int>(r);
      fill(seq, pos + 1, opened + 1, closed, k, open_role, out);
    }
  }
  for (int c = 0; c < opened; ++c) {
    if (open_role[c] < 0) continue;  // already closed
    Role r = opposite(static_cast<Role>(open_role[c]));
    int saved = open_role[c];
    seq[pos] = {c, r};
    open_role[c] = -1;
    fill(seq, pos + 1, opened, closed + 1, k, open_role, out);
    open_role[c] = saved;
  }
}

}  // namespace

std::vector<ArrowDiagram> enumerate_arrow_diagrams(int k) {
  if (k < 0) throw std::invalid_argument("chord count must be non-negative");
  if (k == 0) return {ArrowDiagram()};
  std::vector<ArrowDiagram> out;
  std::vector<Endpoint> seq(2 * k);
  std::vector<int> open_role(k, -1);
  fill(seq, 0, 0, 0, k, open_role, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace doodle
