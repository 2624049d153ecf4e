#pragma once

#include <optional>
#include <string>

#include "doodle/algebra.hpp"
#include "doodle/arrow_diagram.hpp"
#include "doodle/moves.hpp"
#include "doodle/quiver.hpp"

namespace doodle {

/// Value of the degree-n subdiagram-sum invariant of an arrow diagram: the
/// sum, over all chord subsets, of the basis expansion of the reduced quiver
/// diagram of the subdiagram.  Contains the empty key with coefficient 1.
template <class F>
struct InvariantValue {
  ArrowDiagram diagram;
  int n = 0;
  AlgebraElement<F> value;

  /// Header line "diagram=<code> n=<n> field=<Q|F2>" followed by the
  /// algebra-element text.
  std::string str() const;

  friend bool operator==(const InvariantValue& a, const InvariantValue& b) {
    return a.n == b.n && a.value == b.value;
  }
};

struct InvariantOptions {
  int threads = 1;
  /// When set, diagrams over this reference's chord diagram are expanded in
  /// the basis marking the reference's zero endpoints.
  const QuiverDiagram* adapted_marking = nullptr;
};

/// Defined for every arrow diagram, realizable or not; invariant under
/// rotations and under the deletable/insertable moves.
template <class F>
InvariantValue<F> diagram_invariant(const ArrowDiagram& d, int n,
                                    const InvariantOptions& opt = {});

/// Same, sharing a caller-held rewrite context so repeated computations at
/// one truncation reuse the solved sectors.  opt.adapted_marking must be
/// unset; apply markings to the context instead.
template <class F>
InvariantValue<F> diagram_invariant(const ArrowDiagram& d, int n,
                                    RewriteContext<F>& ctx,
                                    const InvariantOptions& opt = {});

/// True iff the invariant has a nonzero coefficient on a nonempty key.
template <class F = Rational>
bool nontriviality(const ArrowDiagram& d, int n);

template <class F = Rational>
bool distinguishes(const ArrowDiagram& d1, const ArrowDiagram& d2, int n);

/// Coefficient of the collapsed-cluster diagram of a minimal d, read in the
/// basis adapted to it.  Requires d minimal with at most n chords; equals 1.
template <class F = Rational>
F leading_coefficient(const ArrowDiagram& d, int n);

template <class F>
InvariantValue<F> parse_invariant(const std::string& text);

extern template struct InvariantValue<Rational>;
extern template struct InvariantValue<GF2>;
extern template InvariantValue<Rational> diagram_invariant<Rational>(
    const ArrowDiagram&, int, const InvariantOptions&);
extern template InvariantValue<GF2> diagram_invariant<GF2>(
    const ArrowDiagram&, int, const InvariantOptions&);
extern template InvariantValue<Rational> diagram_invariant<Rational>(
    const ArrowDiagram&, int, RewriteContext<Rational>&, const InvariantOptions&);
extern template InvariantValue<GF2> diagram_invariant<GF2>(
    const ArrowDiagram&, int, RewriteContext<GF2>&, const InvariantOptions&);
extern template bool nontriviality<Rational>(const ArrowDiagram&, int);
extern template bool nontriviality<GF2>(const ArrowDiagram&, int);
extern template bool distinguishes<Rational>(const ArrowDiagram&, const ArrowDiagram&, int);
extern template bool distinguishes<GF2>(const ArrowDiagram&, const ArrowDiagram&, int);
extern template Rational leading_coefficient<Rational>(const ArrowDiagram&, int);
extern template GF2 leading_coefficient<GF2>(const ArrowDiagram&, int);
extern template InvariantValue<Rational> parse_invariant<Rational>(const std::string&);
extern template InvariantValue<GF2> parse_invariant<GF2>(const std::string&);

}  // namespace doodle
