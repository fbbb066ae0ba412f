#pragma once

#include <compare>
#include <string>

namespace mota1 {

// Bidegree (s, w): internal degree s and motivic weight w.
// tau sits in (0,1), Sq1 in (1,0), Sq2 in (2,1).
struct Bidegree {
    int s = 0;
    int w = 0;

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.s + b.s, a.w + b.w}; }
    friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.s - b.s, a.w - b.w}; }
    Bidegree operator-() const { return {-s, -w}; }
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline std::string to_string(Bidegree d)
{
    return "(" + std::to_string(d.s) + "," + std::to_string(d.w) + ")";
}

inline constexpr Bidegree kTauDeg{0, 1};
inline constexpr Bidegree kSq1Deg{1, 0};
inline constexpr Bidegree kSq2Deg{2, 1};

}  // namespace mota1
