#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace doodle {

// Exact coefficients. Subdiagram expansions stay integral, but the rewrite
// identities are stated over Q, so we keep the rational type throughout.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The two-element field.
struct GF2 {
  std::uint8_t v = 0;

  constexpr GF2() = default;
  constexpr explicit GF2(int x) : v(static_cast<std::uint8_t>(x & 1)) {}

  friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
  friend constexpr GF2 operator-(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
  friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
  constexpr GF2 operator-() const { return *this; }
  GF2& operator+=(GF2 o) { v ^= o.v; return *this; }
  GF2& operator-=(GF2 o) { v ^= o.v; return *this; }
  GF2& operator*=(GF2 o) { v &= o.v; return *this; }
  friend constexpr bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
};

inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }
inline bool coeff_is_zero(GF2 g) { return g.v == 0; }

inline std::string coeff_to_string(const Rational& r) { return r.str(); }
inline std::string coeff_to_string(GF2 g) { return g.v ? "1" : "0"; }

template <class F> constexpr const char* field_name();
template <> constexpr const char* field_name<Rational>() { return "Q"; }
template <> constexpr const char* field_name<GF2>() { return "F2"; }

template <class F> F coeff_one();
template <> inline Rational coeff_one<Rational>() { return Rational(1); }
template <> inline GF2 coeff_one<GF2>() { return GF2(1); }

/// Reduce an exact rational coefficient mod 2 (requires an integral value).
GF2 coeff_mod2(const Rational& r);

enum class Field { Q, F2 };

inline const char* field_label(Field f) { return f == Field::Q ? "Q" : "F2"; }

}  // namespace doodle
