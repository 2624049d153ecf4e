#include "doodle/invariant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace doodle {

namespace {

// Chord subsets by increasing size, then by position order within a size.
// Only subsets of size <= n can contribute: reduction preserves degree and
// rewriting never lowers it, so larger subsets die at the truncation.
std::vector<std::vector<int>> contributing_subsets(int chords, int n) {
  std::vector<std::vector<int>> subsets;
  const int cap = std::min(chords, n);
  std::vector<int> comb;
  auto emit = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      subsets.push_back(comb);
      return;
    }
    for (int i = start; i <= chords - remaining; ++i) {
      comb.push_back(i);
      self(self, i + 1, remaining - 1);
      comb.pop_back();
    }
  };
  for (int size = 0; size <= cap; ++size) emit(emit, 0, size);
  return subsets;
}

ArrowDiagram restrict_to(const ArrowDiagram& d, const std::vector<int>& chords) {
  std::vector<Endpoint> raw;
  raw.reserve(chords.size() * 2);
  for (const Endpoint& e : d.endpoints())
    if (std::binary_search(chords.begin(), chords.end(), e.chord)) raw.push_back(e);
  return ArrowDiagram(std::move(raw));
}

template <class F>
AlgebraElement<F> sum_over(const ArrowDiagram& d,
                           const std::vector<std::vector<int>>& subsets,
                           size_t begin, size_t end, RewriteContext<F>& ctx) {
  AlgebraElement<F> acc(ctx.truncation());
  for (size_t i = begin; i < end; ++i) {
    QuiverDiagram q = reduce(from_arrow(restrict_to(d, subsets[i])));
    if (is_zero_by_isolated_chord(q)) continue;
    acc += ctx.expand(q);
  }
  return acc;
}

}  // namespace

template <class F>
InvariantValue<F> diagram_invariant(const ArrowDiagram& d, int n,
                                    RewriteContext<F>& ctx,
                                    const InvariantOptions& opt) {
  if (n < 0) throw std::invalid_argument("truncation degree must be non-negative");
  if (n != ctx.truncation())
    throw std::invalid_argument("shared context has a different truncation");
  auto subsets = contributing_subsets(d.size(), n);

  InvariantValue<F> out{d, n, AlgebraElement<F>(n)};
  int workers = std::max(1, opt.threads);
  if (workers == 1 || subsets.size() < 64) {
    out.value = sum_over(d, subsets, 0, subsets.size(), ctx);
  } else {
    workers = std::min<int>(workers, static_cast<int>(subsets.size()));
    std::vector<AlgebraElement<F>> parts(workers, AlgebraElement<F>(n));
    std::vector<std::thread> pool;
    size_t chunk = (subsets.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      size_t b = w * chunk, e = std::min(subsets.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back([&, b, e, w] { parts[w] = sum_over(d, subsets, b, e, ctx); });
    }
    for (auto& t : pool) t.join();
    for (auto& p : parts) out.value += p;
  }
  return out;
}

template <class F>
InvariantValue<F> diagram_invariant(const ArrowDiagram& d, int n,
                                    const InvariantOptions& opt) {
  if (n < 0) throw std::invalid_argument("truncation degree must be non-negative");
  RewriteContext<F> ctx(n);
  if (opt.adapted_marking) ctx.override_marking(*opt.adapted_marking);
  return diagram_invariant(d, n, ctx, opt);
}

template <class F>
bool nontriviality(const ArrowDiagram& d, int n) {
  return diagram_invariant<F>(d, n).value.has_nonempty_term();
}

template <class F>
bool distinguishes(const ArrowDiagram& d1, const ArrowDiagram& d2, int n) {
  return !(diagram_invariant<F>(d1, n) == diagram_invariant<F>(d2, n));
}

template <class F>
F leading_coefficient(const ArrowDiagram& d, int n) {
  if (!is_minimal(d))
    throw std::invalid_argument("leading_coefficient: diagram is not minimal");
  if (d.size() > n)
    throw std::invalid_argument("leading_coefficient: more chords than the truncation");
  QuiverDiagram r = cluster_reduce_arrow(d);
  InvariantOptions opt;
  opt.adapted_marking = &r;
  return diagram_invariant<F>(d, n, opt).value.coefficient(r);
}

template <class F>
std::string InvariantValue<F>::str() const {
  std::ostringstream os;
  os << "diagram=" << serialize(diagram) << " n=" << n
     << " field=" << field_name<F>() << '\n'
     << value.str();
  return os.str();
}

template <class F>
InvariantValue<F> parse_invariant(const std::string& text) {
  size_t nl = text.find('\n');
  std::string header = text.substr(0, nl);
  if (header.rfind("diagram=", 0) != 0)
    throw std::invalid_argument("invariant: missing 'diagram=' header");
  size_t npos = header.rfind(" n=");
  size_t fpos = header.rfind(" field=");
  if (npos == std::string::npos || fpos == std::string::npos || fpos < npos)
    throw std::invalid_argument("invariant: malformed header");
  std::string code = header.substr(8, npos - 8);
  int n = std::stoi(header.substr(npos + 3, fpos - npos - 3));
  std::string field = header.substr(fpos + 7);
  if (field != field_name<F>())
    throw std::invalid_argument("invariant: field mismatch, got '" + field + "'");
  InvariantValue<F> out{parse_gauss(code), n, AlgebraElement<F>(n)};
  out.value = parse_algebra_element<F>(nl == std::string::npos ? "" : text.substr(nl + 1), n);
  return out;
}

template struct InvariantValue<Rational>;
template struct InvariantValue<GF2>;
template InvariantValue<Rational> diagram_invariant<Rational>(const ArrowDiagram&, int,
                                                              const InvariantOptions&);
template InvariantValue<GF2> diagram_invariant<GF2>(const ArrowDiagram&, int,
                                                    const InvariantOptions&);
template InvariantValue<Rational> diagram_invariant<Rational>(
    const ArrowDiagram&, int, RewriteContext<Rational>&, const InvariantOptions&);
template InvariantValue<GF2> diagram_invariant<GF2>(const ArrowDiagram&, int,
                                                    RewriteContext<GF2>&,
                                                    const InvariantOptions&);
template bool nontriviality<Rational>(const ArrowDiagram&, int);
template bool nontriviality<GF2>(const ArrowDiagram&, int);
template bool distinguishes<Rational>(const ArrowDiagram&, const ArrowDiagram&, int);
template bool distinguishes<GF2>(const ArrowDiagram&, const ArrowDiagram&, int);
template Rational leading_coefficient<Rational>(const ArrowDiagram&, int);
template GF2 leading_coefficient<GF2>(const ArrowDiagram&, int);
template InvariantValue<Rational> parse_invariant<Rational>(const std::string&);
template InvariantValue<GF2> parse_invariant<GF2>(const std::string&);

}  // namespace doodle
