#include "euclidsail/gaussian.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "euclidsail/ints.hpp"

namespace euclidsail {

GaussInt GaussInt::operator+(const GaussInt& o) const {
    return {checked_add(re, o.re), checked_add(im, o.im)};
}

GaussInt GaussInt::operator-(const GaussInt& o) const {
    return {checked_sub(re, o.re), checked_sub(im, o.im)};
}

GaussInt GaussInt::operator-() const { return {checked_sub(0, re), checked_sub(0, im)}; }

GaussInt GaussInt::operator*(const GaussInt& o) const {
    return {det2(re, im, o.im, o.re), checked_add(checked_mul(re, o.im), checked_mul(im, o.re))};
}

GaussInt conj(const GaussInt& x) { return {x.re, -x.im}; }

int64_t norm(const GaussInt& x) {
    return checked_add(checked_mul(x.re, x.re), checked_mul(x.im, x.im));
}

bool solution_holds(const GaussSolution& s) {
    if (!(s.a * s.b + s.c * s.d == s.z)) return false;
    return std::min(norm(s.a), norm(s.b)) > std::max(norm(s.c), norm(s.d));
}

static GaussSolution checked_solution(GaussInt a, GaussInt b, GaussInt c, GaussInt d, GaussInt z,
                                      const char* what) {
    GaussSolution s{a, b, c, d, z};
    if (!solution_holds(s)) throw std::logic_error(what);
    return s;
}

namespace {

// Search key: plain lexicographic order on the eight components.
std::tuple<int64_t, int64_t, int64_t, int64_t, int64_t, int64_t, int64_t, int64_t> key(
    const GaussSolution& s) {
    return {s.a.re, s.a.im, s.b.re, s.b.im, s.c.re, s.c.im, s.d.re, s.d.im};
}

bool in_box(const GaussInt& g, int64_t bound) {
    return g.re >= -bound && g.re <= bound && g.im >= -bound && g.im <= bound;
}

}  // namespace

std::vector<GaussSolution> search_solutions(const GaussInt& z, int64_t bound, bool canonical) {
    if (z == GaussInt{0, 0}) throw std::invalid_argument("search_solutions requires z != 0");
    if (bound < 1) throw std::invalid_argument("search_solutions requires bound >= 1");

    std::vector<GaussInt> box;
    box.reserve(static_cast<size_t>((2 * bound + 1) * (2 * bound + 1)));
    for (int64_t re = -bound; re <= bound; ++re)
        for (int64_t im = -bound; im <= bound; ++im) box.push_back({re, im});
    std::vector<GaussInt> by_norm = box;
    std::sort(by_norm.begin(), by_norm.end(), [](const GaussInt& x, const GaussInt& y) {
        return std::tuple(norm(x), x.re, x.im) < std::tuple(norm(y), y.re, y.im);
    });

    std::vector<GaussSolution> out;
    for (const GaussInt& a : box) {
        int64_t na = norm(a);
        if (na == 0) continue;
        for (const GaussInt& b : box) {
            int64_t nb = norm(b);
            if (nb == 0) continue;
            int64_t t = std::min(na, nb);
            GaussInt w = z - a * b;
            if (w == GaussInt{0, 0}) {
                // c*d == 0: either c == 0 (d free) or d == 0 (c != 0).
                for (const GaussInt& g : by_norm) {
                    if (norm(g) >= t) break;
                    out.push_back({a, b, {0, 0}, g, z});
                    if (!(g == GaussInt{0, 0})) out.push_back({a, b, g, {0, 0}, z});
                }
                continue;
            }
            int64_t nw = norm(w);
            if (nw > checked_mul(t - 1, t - 1)) continue;
            for (const GaussInt& c : by_norm) {
                int64_t nc = norm(c);
                if (nc >= t) break;
                if (nc == 0 || nw % nc != 0 || nw / nc >= t) continue;
                GaussInt num = w * conj(c);
                if (num.re % nc || num.im % nc) continue;
                GaussInt d{num.re / nc, num.im / nc};
                if (!in_box(d, bound)) continue;
                out.push_back({a, b, c, d, z});
            }
        }
    }

    std::sort(out.begin(), out.end(),
              [](const GaussSolution& x, const GaussSolution& y) { return key(x) < key(y); });
    out.erase(std::unique(out.begin(), out.end()), out.end());

    if (canonical) {
        std::vector<GaussSolution> kept;
        for (const GaussSolution& s : out) {
            GaussSolution variants[4] = {
                {s.a, s.b, s.c, s.d, s.z},
                {s.b, s.a, s.c, s.d, s.z},
                {s.a, s.b, s.d, s.c, s.z},
                {s.b, s.a, s.d, s.c, s.z},
            };
            bool minimal = true;
            for (const GaussSolution& v : variants)
                if (key(v) < key(s)) minimal = false;
            if (minimal) kept.push_back(s);
        }
        out = std::move(kept);
    }
    return out;
}

GaussSolution odd_identity_solution(int64_t m, int64_t n) {
    if (m < 0 || n < 1)
        throw std::invalid_argument("odd_identity_solution requires m >= 0, n >= 1");
    int64_t k = checked_sub(checked_mul(2, checked_mul(n, n)), checked_add(m, 1));
    GaussInt a{checked_mul(2, n), k};
    GaussInt c{0, checked_add(k, 1)};
    GaussInt z{checked_add(checked_mul(2, m), 1), 0};
    return checked_solution(a, conj(a), c, c, z, "odd identity family violated");
}

GaussSolution even_identity_solution(int64_t m, int64_t n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("even_identity_solution requires m >= 1, n >= 1");
    int64_t k = checked_sub(checked_add(checked_mul(2, checked_mul(n, n)), checked_mul(2, n)), m);
    GaussInt a{checked_add(checked_mul(2, n), 1), k};
    GaussInt c{0, checked_add(k, 1)};
    GaussInt z{checked_mul(2, m), 0};
    return checked_solution(a, conj(a), c, c, z, "even identity family violated");
}

GaussSolution symmetry_map(const GaussSolution& s, SymmetryKind which) {
    const GaussInt i{0, 1};
    const GaussInt minus_i{0, -1};
    switch (which) {
        case SymmetryKind::Conj:
            return checked_solution(conj(s.a), conj(s.b), conj(s.c), conj(s.d), conj(s.z),
                                    "conj symmetry violated");
        case SymmetryKind::Negate:
            return checked_solution(-s.a, s.b, -s.c, s.d, -s.z, "negate symmetry violated");
        case SymmetryKind::TimesI:
            return checked_solution(i * s.a, s.b, i * s.c, s.d, i * s.z,
                                    "times_i symmetry violated");
        case SymmetryKind::TimesMinusI:
            return checked_solution(minus_i * s.a, s.b, minus_i * s.c, s.d, minus_i * s.z,
                                    "times_minus_i symmetry violated");
    }
    throw std::invalid_argument("unknown symmetry");
}

GaussSolution scaling_map(const GaussSolution& sol, const GaussInt& s, const GaussInt& t) {
    if (s == GaussInt{0, 0} || t == GaussInt{0, 0})
        throw std::invalid_argument("scaling_map requires non-zero s and t");
    GaussInt st = s * t;
    GaussInt sbar_t = conj(s) * t;
    GaussInt zz = s * conj(s) * t * t * sol.z;
    return checked_solution(st * sol.a, sbar_t * sol.b, st * sol.c, sbar_t * sol.d, zz,
                            "scaling map violated");
}

}  // namespace euclidsail
