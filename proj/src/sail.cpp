#include "euclidsail/sail.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "euclidsail/counting.hpp"
#include "euclidsail/ints.hpp"

namespace euclidsail {

Sail compute_sail(const Sublattice2& L) {
    int64_t alpha_x = L.d;
    int64_t g = std::gcd(L.a, L.d);
    int64_t omega_y = checked_mul(L.m, L.d / g);
    // The sail lives inside [0, alpha_x] x [0, omega_y]: its endpoints are
    // the minimal non-zero axis points and it is monotone between them, so
    // lattice points outside the box never support it.
    std::vector<Vec2> pts = lattice_points_in_box(L, alpha_x, omega_y);

    Sail sail{{}, alpha_x, omega_y};
    Vec2 cur{alpha_x, 0};
    Vec2 goal{0, omega_y};
    sail.points.push_back(cur);
    while (!(cur == goal)) {
        // Gift wrap towards decreasing x: the next sail point has the
        // largest slope from cur; collinear ties pick the nearest point,
        // which keeps lattice points interior to hull edges in the list.
        bool have = false;
        Vec2 best{};
        for (const Vec2& p : pts) {
            if (p.x >= cur.x) continue;
            if (!have) {
                best = p;
                have = true;
                continue;
            }
            int64_t c = cross(best - cur, p - cur);
            if (c > 0 || (c == 0 && p.x > best.x)) best = p;
        }
        if (!have || best.y <= cur.y)
            throw std::logic_error("sail chain failed to advance");
        sail.points.push_back(best);
        cur = best;
    }
    return sail;
}

std::vector<std::pair<Vec2, Vec2>> consecutive_pairs(const Sail& s) {
    std::vector<std::pair<Vec2, Vec2>> out;
    for (size_t i = 0; i + 1 < s.points.size(); ++i)
        out.emplace_back(s.points[i], s.points[i + 1]);
    return out;
}

bool is_sailbasis(const Vec2& u, const Vec2& v) {
    if (u.x < 0 || u.y < 0 || v.x < 0 || v.y < 0)
        throw std::invalid_argument("is_sailbasis requires first-quadrant vectors");
    if (cross(u, v) == 0)
        throw std::invalid_argument("is_sailbasis requires independent vectors");
    if (u.x == v.x) return false;
    return checked_mul(v.y - u.y, v.x - u.x) < 0;
}

std::optional<SailBasis> central_sailbasis(const Sublattice2& L) {
    Sail s = compute_sail(L);
    for (const Vec2& p : s.points)
        if (p.x == p.y) return std::nullopt;
    // x - y is strictly decreasing along the list, so the sign change is
    // unique.
    for (size_t i = 0; i + 1 < s.points.size(); ++i) {
        const Vec2& u = s.points[i];
        const Vec2& v = s.points[i + 1];
        if (u.x > u.y && v.x < v.y) return SailBasis{u, v, true, L};
    }
    throw std::logic_error("sail has no diagonal point and no central pair");
}

bool is_bad(const Sublattice2& L) { return !central_sailbasis(L).has_value(); }

std::pair<Vec2, Vec2> normalized_sailbasis(const Sublattice2& L) {
    Sail s = compute_sail(L);
    for (size_t i = 0; i < s.points.size(); ++i) {
        if (s.points[i].x != s.points[i].y) continue;
        // Endpoints never lie on the diagonal, so a predecessor exists.
        return {s.points[i], s.points[i - 1]};
    }
    throw std::invalid_argument("normalized_sailbasis requires a bad lattice");
}

std::vector<Sublattice2> enumerate_bad(int64_t n) {
    if (n < 1) throw std::invalid_argument("enumerate_bad requires n >= 1");
    std::vector<Sublattice2> out;
    for (int64_t d : divisors(n)) {
        int64_t q = n / d;
        int64_t a_lo = (static_cast<__int128>(d) * d < n) ? 0 : d - q + 1;
        for (int64_t a = a_lo; a < d; ++a)
            out.push_back(from_basis({d, d}, {q + a, a}));
    }
    return out;
}

Solution sailbasis_to_solution(const SailBasis& sb) {
    if (!sb.central)
        throw std::invalid_argument("sailbasis_to_solution requires a central sailbasis");
    Solution s{sb.u.x, sb.v.y, sb.u.y, sb.v.x, sb.lattice.index()};
    if (det2(s.a, s.c, s.d, s.b) != s.n || std::min(s.a, s.b) <= std::max(s.c, s.d))
        throw std::logic_error("central sailbasis does not yield a solution");
    return s;
}

SailBasis solution_to_sailbasis(const Solution& s) {
    if (s.a < 0 || s.b < 0 || s.c < 0 || s.d < 0 || det2(s.a, s.c, s.d, s.b) != s.n ||
        std::min(s.a, s.b) <= std::max(s.c, s.d))
        throw std::invalid_argument("solution_to_sailbasis requires a valid solution");
    Vec2 u{s.a, s.c};
    Vec2 v{s.d, s.b};
    Sublattice2 L = from_basis(u, v);
    std::optional<SailBasis> cs = central_sailbasis(L);
    if (!cs || !(cs->u == u) || !(cs->v == v))
        throw std::logic_error("solution does not map to the central sailbasis of its lattice");
    return *cs;
}

}  // namespace euclidsail
