#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "doodle/fields.hpp"
#include "doodle/quiver.hpp"

namespace doodle {

// Basis keys are quiver diagrams over a reduced chord diagram with one
// endpoint of each chord labelled 0 (the marked endpoint, by default the
// first one met along the canonical rotation).
//
// Text encoding: "deg=<d>; a-b:m,..." with a < b the canonical positions of
// a chord, label 0 at a and m at b, chords listed by increasing a.  Keys
// whose zeros do not sit at first occurrences (they arise only under a
// caller-supplied marking) use the internal form "a-b:la:lb".
std::string encode_basis_key(const QuiverDiagram& key);
QuiverDiagram decode_basis_key(const std::string& text);

/// A finite linear combination of basis keys in the degree-truncated quiver
/// algebra.  Terms of degree above the truncation are dropped on insertion;
/// zero coefficients are never stored.
template <class F>
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(int truncation) : n_(truncation) {}

  int truncation() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<QuiverDiagram, F>& terms() const { return terms_; }

  void add_term(const QuiverDiagram& key, const F& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& negate();
  AlgebraElement& operator*=(const F& c);

  /// Projection onto degrees <= n.
  AlgebraElement truncated(int n) const;

  F coefficient(const QuiverDiagram& key) const;
  F empty_coefficient() const { return coefficient(QuiverDiagram()); }

  /// True iff some nonempty key carries a nonzero coefficient.
  bool has_nonempty_term() const;

  /// One term per line, "<coefficient> <key>", sorted by the key text.
  std::string str() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_ = 0;
  std::map<QuiverDiagram, F> terms_;
};

template <class F>
AlgebraElement<F> parse_algebra_element(const std::string& text, int truncation);

/// Expands reduced quiver diagrams in the basis of marked-endpoint-zero
/// classes.  The label identity D(p,q) = -D(p+1,q-1) - D(p+1,q) drives the
/// expansion; over chord diagrams with rotational symmetry the identified
/// terms satisfy further relations, so the engine row-reduces the full
/// relation system of each merge closure once and caches the solved form.
/// Safe for concurrent use; results do not depend on the call order.
template <class F>
class RewriteContext {
 public:
  explicit RewriteContext(int truncation);
  ~RewriteContext();
  RewriteContext(const RewriteContext&) = delete;
  RewriteContext& operator=(const RewriteContext&) = delete;

  int truncation() const { return n_; }

  /// Marks, for diagrams over reference's chord diagram, the endpoints that
  /// carry 0 in `reference` instead of the default first-met endpoints.
  /// Must be called before any expansion.
  void override_marking(const QuiverDiagram& reference);

  /// q must be reduced with no isolated chord; degree may exceed the
  /// truncation (the result is then zero).
  AlgebraElement<F> expand(const QuiverDiagram& q);

 private:
  struct Engine;

  int n_;
  std::mutex mu_;
  std::unique_ptr<Engine> engine_;
  std::map<std::vector<int>, std::vector<char>> marking_override_;
};

/// One-shot convenience wrapper around RewriteContext.
template <class F>
AlgebraElement<F> rewrite_to_basis(const QuiverDiagram& q, int truncation);

extern template class AlgebraElement<Rational>;
extern template class AlgebraElement<GF2>;
extern template class RewriteContext<Rational>;
extern template class RewriteContext<GF2>;
extern template AlgebraElement<Rational> rewrite_to_basis<Rational>(const QuiverDiagram&, int);
extern template AlgebraElement<GF2> rewrite_to_basis<GF2>(const QuiverDiagram&, int);
extern template AlgebraElement<Rational> parse_algebra_element<Rational>(const std::string&, int);
extern template AlgebraElement<GF2> parse_algebra_element<GF2>(const std::string&, int);

/// Exact element reduced coefficient-wise mod 2; all coefficients must be
/// integral.
AlgebraElement<GF2> reduce_mod2(const AlgebraElement<Rational>& e);

}  // namespace doodle
