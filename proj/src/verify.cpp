#include "euclidsail/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "euclidsail/counting.hpp"
#include "euclidsail/enumeration.hpp"
#include "euclidsail/gaussian.hpp"
#include "euclidsail/ints.hpp"
#include "euclidsail/lattice.hpp"
#include "euclidsail/mat2.hpp"
#include "euclidsail/sail.hpp"

namespace euclidsail {

namespace {

std::string scope_upto(int64_t n) { return "n <= " + std::to_string(n); }

CheckResult check_reduced_counts(int64_t n_max, bool inject_fault) {
    CheckResult r{"reduced count: formula vs brute force", scope_upto(n_max), true, ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t formula = count_reduced_formula(n);
        if (inject_fault && n == n_max) formula += 1;
        int64_t oracle = count_reduced_bruteforce(n);
        if (formula != oracle) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": formula " + std::to_string(formula) +
                       " != brute force " + std::to_string(oracle);
            return r;
        }
    }
    return r;
}

CheckResult check_coprime_counts(int64_t n_max) {
    CheckResult r{"coprime count: formula vs brute force", scope_upto(n_max), true, ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t formula = count_coprime_formula(n);
        int64_t oracle = count_coprime_bruteforce(n);
        if (formula != oracle) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": formula " + std::to_string(formula) +
                       " != brute force " + std::to_string(oracle);
            return r;
        }
    }
    return r;
}

CheckResult check_gcd_partition(int64_t n_max) {
    CheckResult r{"gcd partition: R(n) = sum of R'(n/d^2) over d^2 | n", scope_upto(n_max), true,
                  ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t sum = 0;
        for (int64_t d = 1; d * d <= n; ++d)
            if (n % (d * d) == 0) sum += count_coprime_formula(n / (d * d));
        if (sum != count_reduced_formula(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult check_lattice_partition(int64_t n_max) {
    CheckResult r{"lattice partition: sigma(n) = bad(n) + R(n)", scope_upto(n_max), true, ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        if (sublattice_count(n) != bad_count_formula(n) + count_reduced_formula(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult check_sublattice_enumeration(int64_t n_max) {
    CheckResult r{"sublattice enumeration: sigma(n) distinct HNF triples", scope_upto(n_max), true,
                  ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        std::vector<Sublattice2> all = enumerate_sublattices(n);
        std::set<Sublattice2> distinct(all.begin(), all.end());
        if (static_cast<int64_t>(all.size()) != sublattice_count(n) ||
            distinct.size() != all.size()) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult check_bad_lattices(int64_t n_max) {
    CheckResult r{"bad lattices: parametrization vs formula vs sail classification",
                  scope_upto(n_max), true, ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        std::vector<Sublattice2> param = enumerate_bad(n);
        std::set<Sublattice2> param_set(param.begin(), param.end());
        if (param_set.size() != param.size() ||
            static_cast<int64_t>(param.size()) != bad_count_formula(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": parametrized count off";
            return r;
        }
        std::set<Sublattice2> by_sail;
        for (const Sublattice2& L : enumerate_sublattices(n))
            if (is_bad(L)) by_sail.insert(L);
        if (by_sail != param_set) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": sail classification disagrees";
            return r;
        }
    }
    return r;
}

CheckResult check_sailbasis_criterion(int64_t n_max) {
    CheckResult r{"sailbasis criterion: adjacent sail points generate, others do not",
                  scope_upto(n_max), true, ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        for (const Sublattice2& L : enumerate_sublattices(n)) {
            Sail s = compute_sail(L);
            size_t len = s.points.size();
            for (size_t i = 0; i < len; ++i) {
                for (size_t j = i + 1; j < len; ++j) {
                    int64_t det = cross(s.points[i], s.points[j]);
                    int64_t idx = std::abs(det);
                    bool adjacent = (j == i + 1);
                    bool generates = idx == n && from_basis(s.points[i], s.points[j]) == L;
                    if (generates != adjacent) {
                        r.pass = false;
                        r.detail = "n=" + std::to_string(n);
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

CheckResult check_bijection(int64_t n_max) {
    CheckResult r{"solution <-> central sailbasis round-trip", scope_upto(n_max), true, ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        std::vector<Solution> sols = enumerate_solutions(n);
        std::set<Sublattice2> lattices;
        for (const Solution& s : sols) {
            SailBasis sb = solution_to_sailbasis(s);
            if (!(sailbasis_to_solution(sb) == s)) {
                r.pass = false;
                r.detail = "n=" + std::to_string(n) + ": round trip broke";
                return r;
            }
            lattices.insert(sb.lattice);
        }
        if (lattices.size() != sols.size()) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": solutions share a lattice";
            return r;
        }
    }
    return r;
}

CheckResult check_reduction(int64_t cap) {
    CheckResult r{"reduction: termination, determinant, blocked-move predicate",
                  "entries <= " + std::to_string(cap), true, ""};
    for (int64_t a = 0; a <= cap && r.pass; ++a)
        for (int64_t b = 0; b <= cap && r.pass; ++b)
            for (int64_t c = 0; c <= cap && r.pass; ++c)
                for (int64_t d = 0; d <= cap; ++d) {
                    Mat2 m(a, b, c, d);
                    if (det(m) <= 0) continue;
                    bool blocked = true;
                    for (const MoveImage& img : elementary_reductions(m))
                        if (img.in_p) blocked = false;
                    if (is_euclid_reduced(m) != blocked) {
                        r.pass = false;
                        r.detail = "predicate mismatch";
                        break;
                    }
                    ReductionTrace t = reduce(m);
                    if (det(t.result) != det(m) || !is_euclid_reduced(t.result) ||
                        static_cast<int64_t>(t.steps.size()) > a + b + c + d) {
                        r.pass = false;
                        r.detail = "trace invariant broke";
                        break;
                    }
                }
    return r;
}

CheckResult check_gauss_identities(int64_t range) {
    CheckResult r{"Gaussian identity families", "m, n <= " + std::to_string(range), true, ""};
    for (int64_t m = 0; m <= range && r.pass; ++m) {
        for (int64_t n = 1; n <= range; ++n) {
            // Construction validates both the ring identity and the strict
            // modulus inequality; a throw means the family is broken.
            try {
                odd_identity_solution(m, n);
                if (m >= 1) even_identity_solution(m, n);
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + e.what();
                break;
            }
        }
    }
    return r;
}

CheckResult check_entry_bound(int64_t n_max) {
    CheckResult r{"entry bound: no reduced solution in the box {0..2n}^4 exceeds n",
                  scope_upto(n_max), true, ""};
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t found = 0;
        for (int64_t a = 1; a <= 2 * n; ++a) {
            for (int64_t b = 1; b <= 2 * n; ++b) {
                int64_t k = a * b - n;
                if (k < 0) continue;
                int64_t lim = std::min(a, b);
                if (k == 0) {
                    // (c,d) with c*d == 0 below the strict bound.
                    found += 2 * lim - 1;
                    if (a > n || b > n) {
                        r.pass = false;
                        r.detail = "n=" + std::to_string(n);
                        return r;
                    }
                    continue;
                }
                for (int64_t e = 1; e * e <= k; ++e) {
                    if (k % e) continue;
                    int64_t f = k / e;
                    if (f >= lim) continue;
                    found += (e == f) ? 1 : 2;
                    if (a > n || b > n) {
                        r.pass = false;
                        r.detail = "n=" + std::to_string(n);
                        return r;
                    }
                }
            }
        }
        if (found != count_reduced_formula(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": box census disagrees with the formula";
            return r;
        }
    }
    return r;
}

}  // namespace

std::vector<CheckResult> run_verification(int64_t n_max, const VerifyOptions& opts) {
    if (n_max < 1) throw std::invalid_argument("run_verification requires n_max >= 1");
    std::vector<CheckResult> out;
    out.push_back(check_reduced_counts(n_max, opts.inject_fault));
    out.push_back(check_coprime_counts(n_max));
    out.push_back(check_gcd_partition(n_max));
    out.push_back(check_lattice_partition(n_max));
    out.push_back(check_sublattice_enumeration(n_max));
    out.push_back(check_bad_lattices(n_max));
    out.push_back(check_sailbasis_criterion(std::min<int64_t>(n_max, 60)));
    out.push_back(check_bijection(n_max));
    out.push_back(check_reduction(std::min<int64_t>(n_max, 25)));
    out.push_back(check_gauss_identities(std::min<int64_t>(n_max, 200)));
    out.push_back(check_entry_bound(std::min<int64_t>(n_max, 50)));
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace euclidsail
