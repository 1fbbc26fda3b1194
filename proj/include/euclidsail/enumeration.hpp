#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "euclidsail/mat2.hpp"

namespace euclidsail {

// Quadruple (a,b,c,d) with a*b - c*d == n and min(a,b) > max(c,d).
// Corresponds to the Euclid-reduced matrix with rows (a,c) and (d,b).
struct Solution {
    int64_t a, b, c, d;
    int64_t n;

    friend auto operator<=>(const Solution&, const Solution&) = default;
};

// All solutions for determinant n, sorted lexicographically descending
// on (a,b,c,d). Entries never exceed n.
std::vector<Solution> enumerate_solutions(int64_t n);

// The subset with gcd(a,b,c,d) == 1, in the same order.
std::vector<Solution> enumerate_coprime(int64_t n);

// (a,b,c,d) -> matrix with rows (a,c) and (d,b); always Euclid-reduced of
// determinant n.
Mat2 solution_to_matrix(const Solution& s);

// Inverse of solution_to_matrix; requires is_euclid_reduced(m).
Solution matrix_to_solution(const Mat2& m);

// Orbit of a solution under the Klein four-group swapping (a,b) and/or (c,d).
struct Orbit {
    Solution representative;        // lexicographically largest member
    int size;                       // 1, 2 or 4
    std::vector<Solution> members;  // distinct, descending
};

// Orbits of enumerate_solutions(n), ordered by representative descending.
std::vector<Orbit> orbit_decomposition(int64_t n);

}  // namespace euclidsail
