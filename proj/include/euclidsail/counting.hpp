#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace euclidsail {

struct PrimePower {
    int64_t p;
    int e;
};

struct DivisorProfile {
    int64_t n;
    std::vector<int64_t> divisors;             // ascending
    std::vector<PrimePower> prime_factorization;  // ascending primes
};

// All divisors of n, ascending. Trial division; adequate for desk-scale n.
std::vector<int64_t> divisors(int64_t n);

std::vector<PrimePower> factorize(int64_t n);

DivisorProfile divisor_profile(int64_t n);

// (-1)^e for a product of e distinct primes, 0 when n has a square divisor > 1.
int moebius(int64_t n);

// Number of Euclid-reduced 2x2 matrices of determinant n:
//   sum over divisors d of n with d^2 >= n of (d + 1 - n/d).
// Equals n exactly when n > 1 is prime.
int64_t count_reduced_formula(int64_t n);

// Oracle for count_reduced_formula: exhaustive count of quadruples
// (a,b,c,d) with a*b - c*d == n and min(a,b) > max(c,d).  Entries are
// bounded by n, and c,d by min(a,b)-1, which caps the search box.
// Roughly cubic in n; intended for n up to a few thousand.
int64_t count_reduced_bruteforce(int64_t n);

// Moebius-inverted count of Euclid-reduced matrices with coprime entries:
//   sum over d with d^2 | n of mu(d) * count_reduced_formula(n / d^2).
int64_t count_coprime_formula(int64_t n);

// Oracle for count_coprime_formula: brute force restricted to
// gcd(a,b,c,d) == 1.
int64_t count_coprime_bruteforce(int64_t n);

// Number of sublattices of index n in Z^2: sigma(n), the divisor sum.
int64_t sublattice_count(int64_t n);

// Number of bad sublattices of index n:
//   sum_{d | n, d^2 < n} d  +  sum_{d | n, d^2 >= n} (n/d - 1).
int64_t bad_count_formula(int64_t n);

// Gaussian binomial coefficient (m choose k)_q evaluated at an integer
// q >= 2, exact.
int64_t q_binomial(int m, int k, int64_t q);

// Number of sublattices of index n in Z^dim: the product over prime
// divisors p of n of the q-binomial (e_p + dim - 1 choose dim - 1)
// evaluated at p. For dim == 2 this collapses to sigma(n).
int64_t sublattice_count_general(int dim, int64_t n);

enum class SequenceKind { Reduced, Coprime };

// Terms count(1) .. count(n_max) along the closed-form path.
std::vector<int64_t> sequence(SequenceKind kind, int64_t n_max);

// OEIS b-file exchange format: one line per term, "n a(n)" separated by a
// single space, newline-terminated, first line n = 1.
std::string to_bfile(const std::vector<int64_t>& terms);

}  // namespace euclidsail
