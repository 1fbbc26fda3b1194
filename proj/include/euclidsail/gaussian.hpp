#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace euclidsail {

struct GaussInt {
    int64_t re = 0, im = 0;

    friend auto operator<=>(const GaussInt&, const GaussInt&) = default;

    GaussInt operator+(const GaussInt& o) const;
    GaussInt operator-(const GaussInt& o) const;
    GaussInt operator-() const;
    GaussInt operator*(const GaussInt& o) const;
};

GaussInt conj(const GaussInt& x);

// re^2 + im^2, exact.
int64_t norm(const GaussInt& x);

// Solution of a*b + c*d == z over Z[i] with
// min(|a|, |b|) > max(|c|, |d|), compared on squared moduli.
struct GaussSolution {
    GaussInt a, b, c, d;
    GaussInt z;

    friend auto operator<=>(const GaussSolution&, const GaussSolution&) = default;
};

// Both the ring identity and the strict squared-modulus inequality.
bool solution_holds(const GaussSolution& s);

// All solutions for z with every component of a,b,c,d in [-bound, bound],
// in deterministic ascending order. With canonical == true only the
// lexicographically smallest member of each {a<->b, c<->d} swap class is
// kept.
std::vector<GaussSolution> search_solutions(const GaussInt& z, int64_t bound,
                                            bool canonical = false);

// Witness family for odd integers: z = 2m+1 with
//   a = 2n + (2n^2 - m - 1)i, b = conj(a), c = d = (2n^2 - m)i.
// Valid for every m >= 0, n >= 1; distinct n give distinct solutions.
GaussSolution odd_identity_solution(int64_t m, int64_t n);

// Witness family for even integers: z = 2m with
//   a = 2n+1 + (2n^2 + 2n - m)i, b = conj(a), c = d = (2n^2 + 2n - m + 1)i.
// Valid for every m >= 1, n >= 1.
GaussSolution even_identity_solution(int64_t m, int64_t n);

enum class SymmetryKind { Conj, Negate, TimesI, TimesMinusI };

// The bijections S(z) -> S(conj z), S(-z), S(iz), S(-iz). Moduli are
// unchanged, so the defining inequality is preserved.
GaussSolution symmetry_map(const GaussSolution& s, SymmetryKind which);

// (a,b,c,d) -> (s*t*a, conj(s)*t*b, s*t*c, conj(s)*t*d), a solution for
// s*conj(s)*t^2*z. All moduli scale by |s||t|.
GaussSolution scaling_map(const GaussSolution& sol, const GaussInt& s, const GaussInt& t);

}  // namespace euclidsail
