#include "euclidsail/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "euclidsail/ints.hpp"

namespace euclidsail {

std::vector<Solution> enumerate_solutions(int64_t n) {
    if (n < 1) throw std::invalid_argument("enumerate_solutions requires n >= 1");
    std::vector<Solution> out;
    std::vector<std::pair<int64_t, int64_t>> cd;
    for (int64_t b = 1; b <= n; ++b) {
        int64_t amin = std::max(b, (n + b - 1) / b);
        int64_t amax = (n + checked_mul(b - 1, b - 1)) / b;
        for (int64_t a = amin; a <= amax; ++a) {
            int64_t k = checked_mul(a, b) - n;
            cd.clear();
            if (k == 0) {
                for (int64_t t = 0; t < b; ++t) {
                    cd.emplace_back(0, t);
                    if (t != 0) cd.emplace_back(t, 0);
                }
            } else {
                for (int64_t e = 1; e * e <= k; ++e) {
                    if (k % e) continue;
                    int64_t f = k / e;
                    if (f >= b) continue;
                    cd.emplace_back(e, f);
                    if (e != f) cd.emplace_back(f, e);
                }
            }
            for (auto [c, d] : cd) {
                out.push_back({a, b, c, d, n});
                if (a != b) out.push_back({b, a, c, d, n});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Solution& x, const Solution& y) { return y < x; });
    return out;
}

std::vector<Solution> enumerate_coprime(int64_t n) {
    std::vector<Solution> out;
    for (const Solution& s : enumerate_solutions(n)) {
        int64_t g = std::gcd(std::gcd(s.a, s.b), std::gcd(s.c, s.d));
        if (g == 1) out.push_back(s);
    }
    return out;
}

Mat2 solution_to_matrix(const Solution& s) {
    return Mat2(s.a, s.c, s.d, s.b);
}

Solution matrix_to_solution(const Mat2& m) {
    if (!is_euclid_reduced(m))
        throw std::invalid_argument("matrix_to_solution requires a Euclid-reduced matrix");
    return Solution{m.a, m.d, m.b, m.c, det(m)};
}

std::vector<Orbit> orbit_decomposition(int64_t n) {
    std::vector<Orbit> orbits;
    std::set<Solution> seen;
    // enumerate_solutions is descending, so the first unseen member of each
    // orbit is its lexicographic maximum.
    for (const Solution& s : enumerate_solutions(n)) {
        if (seen.count(s)) continue;
        std::set<Solution> members{
            {s.a, s.b, s.c, s.d, n},
            {s.b, s.a, s.c, s.d, n},
            {s.a, s.b, s.d, s.c, n},
            {s.b, s.a, s.d, s.c, n},
        };
        Orbit orbit;
        orbit.representative = s;
        orbit.size = static_cast<int>(members.size());
        orbit.members.assign(members.rbegin(), members.rend());
        for (const Solution& m : orbit.members) seen.insert(m);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace euclidsail
