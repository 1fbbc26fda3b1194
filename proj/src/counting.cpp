#include "euclidsail/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "euclidsail/ints.hpp"

namespace euclidsail {

static void require_positive(int64_t n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + " requires n >= 1");
}

std::vector<int64_t> divisors(int64_t n) {
    require_positive(n, "divisors");
    std::vector<int64_t> out;
    for (int64_t i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        out.push_back(i);
        if (i != n / i) out.push_back(n / i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PrimePower> factorize(int64_t n) {
    require_positive(n, "factorize");
    std::vector<PrimePower> out;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

DivisorProfile divisor_profile(int64_t n) {
    return DivisorProfile{n, divisors(n), factorize(n)};
}

int moebius(int64_t n) {
    require_positive(n, "moebius");
    int sign = 1;
    for (const PrimePower& pp : factorize(n)) {
        if (pp.e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

int64_t count_reduced_formula(int64_t n) {
    require_positive(n, "count_reduced_formula");
    int64_t total = 0;
    for (int64_t d : divisors(n)) {
        if (static_cast<__int128>(d) * d < n) continue;
        total = checked_add(total, checked_sub(checked_add(d, 1), n / d));
    }
    return total;
}

// Ordered pairs (c, d) in [0, limit)^2 with c*d == k.
static int64_t count_products_below(int64_t k, int64_t limit) {
    if (k == 0) return 2 * limit - 1;
    int64_t cnt = 0;
    for (int64_t e = 1; e * e <= k; ++e) {
        if (k % e) continue;
        int64_t f = k / e;
        if (f < limit) cnt += (e == f) ? 1 : 2;  // e <= f, so e < limit too
    }
    return cnt;
}

// Shared loop shape of the brute-force oracles: for b = min(a,b), a runs
// over the window where 0 <= a*b - n <= (b-1)^2; the (a,b)-symmetric half
// is counted twice.
int64_t count_reduced_bruteforce(int64_t n) {
    require_positive(n, "count_reduced_bruteforce");
    int64_t total = 0;
    for (int64_t b = 1; b <= n; ++b) {
        int64_t amin = std::max(b, (n + b - 1) / b);
        int64_t amax = (n + checked_mul(b - 1, b - 1)) / b;
        for (int64_t a = amin; a <= amax; ++a) {
            int64_t pairs = count_products_below(checked_mul(a, b) - n, b);
            total = checked_add(total, (a == b) ? pairs : 2 * pairs);
        }
    }
    return total;
}

int64_t count_coprime_formula(int64_t n) {
    require_positive(n, "count_coprime_formula");
    int64_t total = 0;
    for (int64_t d = 1; static_cast<__int128>(d) * d <= n; ++d) {
        int64_t dd = d * d;
        if (n % dd) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        int64_t term = count_reduced_formula(n / dd);
        total = checked_add(total, mu > 0 ? term : -term);
    }
    return total;
}

int64_t count_coprime_bruteforce(int64_t n) {
    require_positive(n, "count_coprime_bruteforce");
    int64_t total = 0;
    for (int64_t b = 1; b <= n; ++b) {
        int64_t amin = std::max(b, (n + b - 1) / b);
        int64_t amax = (n + checked_mul(b - 1, b - 1)) / b;
        for (int64_t a = amin; a <= amax; ++a) {
            int64_t g = std::gcd(a, b);
            int64_t k = checked_mul(a, b) - n;
            int64_t cnt = 0;
            if (k == 0) {
                // c*d == 0: one of them is 0, gcd(a,b,c,d) = gcd(g, other).
                for (int64_t t = 0; t < b; ++t)
                    if (std::gcd(g, t) == 1) cnt += (t == 0) ? 1 : 2;
            } else {
                for (int64_t e = 1; e * e <= k; ++e) {
                    if (k % e) continue;
                    int64_t f = k / e;
                    if (f >= b) continue;
                    if (std::gcd(g, std::gcd(e, f)) == 1) cnt += (e == f) ? 1 : 2;
                }
            }
            total = checked_add(total, (a == b) ? cnt : 2 * cnt);
        }
    }
    return total;
}

int64_t sublattice_count(int64_t n) {
    require_positive(n, "sublattice_count");
    int64_t total = 0;
    for (int64_t d : divisors(n)) total = checked_add(total, d);
    return total;
}

int64_t bad_count_formula(int64_t n) {
    require_positive(n, "bad_count_formula");
    int64_t total = 0;
    for (int64_t d : divisors(n)) {
        if (static_cast<__int128>(d) * d < n)
            total = checked_add(total, d);
        else
            total = checked_add(total, n / d - 1);
    }
    return total;
}

int64_t q_binomial(int m, int k, int64_t q) {
    if (k < 0 || m < 0 || k > m)
        throw std::invalid_argument("q_binomial requires 0 <= k <= m");
    if (q < 2) throw std::invalid_argument("q_binomial requires q >= 2");
    // Product of (q^(m-k+j) - 1) / (q^j - 1); every partial product is the
    // q-binomial (m-k+j choose j)_q, hence an integer.
    __int128 result = 1;
    const __int128 lim = std::numeric_limits<int64_t>::max();
    for (int j = 1; j <= k; ++j) {
        __int128 num = 1;
        for (int i = 0; i < m - k + j; ++i) {
            num *= q;
            if (num > lim + 1) throw std::overflow_error("q_binomial overflows int64");
        }
        __int128 den = 1;
        for (int i = 0; i < j; ++i) den *= q;
        result = result * (num - 1) / (den - 1);
        if (result > lim) throw std::overflow_error("q_binomial overflows int64");
    }
    return static_cast<int64_t>(result);
}

int64_t sublattice_count_general(int dim, int64_t n) {
    if (dim < 1) throw std::invalid_argument("sublattice_count_general requires dim >= 1");
    require_positive(n, "sublattice_count_general");
    int64_t total = 1;
    for (const PrimePower& pp : factorize(n))
        total = checked_mul(total, q_binomial(pp.e + dim - 1, dim - 1, pp.p));
    return total;
}

std::vector<int64_t> sequence(SequenceKind kind, int64_t n_max) {
    require_positive(n_max, "sequence");
    std::vector<int64_t> terms;
    terms.reserve(static_cast<size_t>(n_max));
    for (int64_t n = 1; n <= n_max; ++n)
        terms.push_back(kind == SequenceKind::Reduced ? count_reduced_formula(n)
                                                      : count_coprime_formula(n));
    return terms;
}

std::string to_bfile(const std::vector<int64_t>& terms) {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        out += std::to_string(i + 1);
        out += ' ';
        out += std::to_string(terms[i]);
        out += '\n';
    }
    return out;
}

}  // namespace euclidsail
