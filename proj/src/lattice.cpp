#include "euclidsail/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "euclidsail/counting.hpp"
#include "euclidsail/ints.hpp"

namespace euclidsail {

int64_t cross(const Vec2& u, const Vec2& v) { return det2(u.x, u.y, v.x, v.y); }

Sublattice2::Sublattice2(int64_t d_, int64_t a_, int64_t m_) : d(d_), a(a_), m(m_) {
    if (d < 1 || m < 1 || a < 0 || a >= d)
        throw std::invalid_argument("Sublattice2 requires d >= 1, m >= 1, 0 <= a < d");
}

int64_t Sublattice2::index() const { return checked_mul(d, m); }

std::vector<Sublattice2> enumerate_sublattices(int64_t n) {
    if (n < 1) throw std::invalid_argument("enumerate_sublattices requires n >= 1");
    std::vector<Sublattice2> out;
    for (int64_t d : divisors(n))
        for (int64_t a = 0; a < d; ++a)
            out.emplace_back(d, a, n / d);
    return out;
}

bool contains(const Sublattice2& L, const Vec2& v) {
    if (v.y % L.m != 0) return false;
    int64_t k = v.y / L.m;
    return (v.x - checked_mul(k, L.a)) % L.d == 0;
}

Sublattice2 from_basis(const Vec2& u, const Vec2& v) {
    int64_t det = cross(u, v);
    if (det == 0) throw std::invalid_argument("from_basis requires independent vectors");
    // The y-coordinates of Zu + Zv form gcd(u.y, v.y) Z; a combination w
    // with w.y == m completes the HNF triple, and a is its residue mod d.
    ExtGcd eg = ext_gcd(u.y, v.y);
    int64_t m = eg.g;
    Vec2 w = u * eg.s + v * eg.t;
    int64_t d = std::abs(det) / m;
    int64_t a = ((w.x % d) + d) % d;
    return Sublattice2(d, a, m);
}

int64_t order_in_quotient(const Sublattice2& L, const Vec2& v) {
    int64_t idx = L.index();
    for (int64_t k = 1; k <= idx; ++k)
        if (contains(L, {checked_mul(k, v.x), checked_mul(k, v.y)})) return k;
    throw std::logic_error("element order exceeds the group order");
}

std::vector<Vec2> lattice_points_in_box(const Sublattice2& L, int64_t xmax, int64_t ymax) {
    std::vector<Vec2> out;
    for (int64_t k = 0; checked_mul(k, L.m) <= ymax; ++k) {
        int64_t y = k * L.m;
        int64_t x0 = checked_mul(k, L.a) % L.d;
        for (int64_t x = x0; x <= xmax; x += L.d)
            if (x != 0 || y != 0) out.push_back({x, y});
    }
    return out;
}

}  // namespace euclidsail
