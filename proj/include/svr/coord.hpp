#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace svr {

/// Exact coordinate `base + eps * ε` for a single positive infinitesimal ε.
///
/// Every construction in this library only ever needs integer multiples of
/// ε (1+ε sides, ±ε shifts), so ordering is lexicographic on (base, eps) and
/// no floating tolerance is involved anywhere.
struct Coord {
    std::int64_t base = 0;
    std::int64_t eps = 0;

    constexpr Coord() = default;
    constexpr Coord(std::int64_t b, std::int64_t e = 0) : base(b), eps(e) {}

    constexpr auto operator<=>(const Coord&) const = default;

    constexpr Coord operator+(Coord o) const { return {base + o.base, eps + o.eps}; }
    constexpr Coord operator-(Coord o) const { return {base - o.base, eps - o.eps}; }
    constexpr Coord operator-() const { return {-base, -eps}; }
    constexpr Coord& operator+=(Coord o) { base += o.base; eps += o.eps; return *this; }
    constexpr Coord& operator-=(Coord o) { base -= o.base; eps -= o.eps; return *this; }
    constexpr Coord scaled(std::int64_t k) const { return {base * k, eps * k}; }

    /// Strictly positive in the infinitesimal order.
    constexpr bool positive() const { return *this > Coord{}; }

    std::string str() const;
};

inline constexpr Coord kEpsilon{0, 1};

std::ostream& operator<<(std::ostream& os, Coord c);

/// Closed interval [lo, hi].
struct Interval {
    Coord lo;
    Coord hi;

    constexpr bool contains(Coord c) const { return lo <= c && c <= hi; }
    constexpr bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    constexpr bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
    constexpr Interval shifted(Coord d) const { return {lo + d, hi + d}; }
    constexpr bool operator==(const Interval&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace svr
