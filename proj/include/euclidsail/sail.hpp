#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "euclidsail/enumeration.hpp"
#include "euclidsail/lattice.hpp"

namespace euclidsail {

// The sail of a finite-index sublattice of Z^2: the boundary, within the
// closed first quadrant, of the convex hull of its non-zero points there.
// `points` lists every lattice point on the sail polyline (hull vertices
// and lattice points interior to hull edges), ordered by decreasing x,
// from (alpha_x, 0) to (0, omega_y).
struct Sail {
    std::vector<Vec2> points;
    int64_t alpha_x;
    int64_t omega_y;
};

Sail compute_sail(const Sublattice2& L);

// Adjacent pairs of the sail point list. Each pair is a basis of the
// lattice; non-adjacent sail points never are.
std::vector<std::pair<Vec2, Vec2>> consecutive_pairs(const Sail& s);

// Whether independent first-quadrant vectors u, v are consecutive on the
// sail of Zu + Zv: the line through them has finite strictly negative slope.
bool is_sailbasis(const Vec2& u, const Vec2& v);

// A pair of consecutive sail points generating the lattice. Central means
// the open segment between them crosses the diagonal x == y, i.e.
// u.x > u.y and v.x < v.y strictly.
struct SailBasis {
    Vec2 u;  // the member of larger x (below the diagonal when central)
    Vec2 v;  // the member of smaller x (above the diagonal when central)
    bool central;
    Sublattice2 lattice;
};

// The unique central sailbasis, or nullopt when the sail passes through a
// diagonal lattice point (the lattice is then bad).
std::optional<SailBasis> central_sailbasis(const Sublattice2& L);

bool is_bad(const Sublattice2& L);

// For a bad lattice: (diagonal sail point, consecutive sail point below
// the diagonal). The pair generates the lattice.
std::pair<Vec2, Vec2> normalized_sailbasis(const Sublattice2& L);

// All bad sublattices of index n via the normalized-sailbasis
// parametrization: diagonal point (d,d) for d | n, partner (n/d + a, a)
// with a in [0, d) when d^2 < n and a in [d - n/d + 1, d) when d^2 >= n.
std::vector<Sublattice2> enumerate_bad(int64_t n);

// Central sailbasis u = (a,c), v = (d,b)  ->  solution (a,b,c,d).
Solution sailbasis_to_solution(const SailBasis& sb);

// Solution (a,b,c,d) -> the central sailbasis u = (a,c), v = (d,b) of
// Zu + Zv. Throws if (u, v) is not the central sailbasis of that lattice,
// which would signal a bijection bug.
SailBasis solution_to_sailbasis(const Solution& s);

}  // namespace euclidsail
