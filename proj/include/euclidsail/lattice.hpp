#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace euclidsail {

struct Vec2 {
    int64_t x = 0, y = 0;

    friend auto operator<=>(const Vec2&, const Vec2&) = default;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(int64_t k) const { return {x * k, y * k}; }
};

// u.x*v.y - u.y*v.x, overflow-checked.
int64_t cross(const Vec2& u, const Vec2& v);

// Finite-index sublattice of Z^2 in Hermite normal form:
//   Lambda = Z(d,0) + Z(a,m),  d >= 1, m >= 1, 0 <= a < d, index d*m.
// The representation is unique per sublattice.
struct Sublattice2 {
    int64_t d, a, m;

    Sublattice2(int64_t d_, int64_t a_, int64_t m_);

    int64_t index() const;

    friend auto operator<=>(const Sublattice2&, const Sublattice2&) = default;
};

// All sublattices of index n, ordered by d ascending then a ascending.
// There are exactly sigma(n) of them.
std::vector<Sublattice2> enumerate_sublattices(int64_t n);

bool contains(const Sublattice2& L, const Vec2& v);

// HNF triple of Zu + Zv; u, v must be linearly independent.
Sublattice2 from_basis(const Vec2& u, const Vec2& v);

// Least k >= 1 with k*v in L; divides the index.
int64_t order_in_quotient(const Sublattice2& L, const Vec2& v);

// Non-zero lattice points with 0 <= x <= xmax, 0 <= y <= ymax.
std::vector<Vec2> lattice_points_in_box(const Sublattice2& L, int64_t xmax, int64_t ymax);

}  // namespace euclidsail
