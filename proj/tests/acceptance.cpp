// Acceptance suite: every release criterion, each printing one PASS/FAIL
// line. Exit code is the number of failed criteria. An optional argument
// selects a single criterion by number.
//
// The sequence criterion drives the real CLI binary; its path comes from
// the EUCLIDSAIL_CLI environment variable.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "euclidsail/counting.hpp"
#include "euclidsail/enumeration.hpp"
#include "euclidsail/gaussian.hpp"
#include "euclidsail/ints.hpp"
#include "euclidsail/lattice.hpp"
#include "euclidsail/mat2.hpp"
#include "euclidsail/sail.hpp"

using namespace euclidsail;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string cli_path() {
    if (const char* p = std::getenv("EUCLIDSAIL_CLI")) return p;
    // fall back to the build layout: tests/acceptance next to ../euclidsail
    char buf[4096];
    ssize_t n = readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (n <= 0) return "";
    buf[n] = '\0';
    std::string self(buf);
    return self.substr(0, self.find_last_of('/')) + "/../euclidsail";
}

std::string run_cli(const std::string& args, int* exit_code) {
    std::string cli = cli_path();
    if (cli.empty()) {
        *exit_code = -1;
        return "";
    }
    std::string cmd = cli + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return "";
    }
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    *exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

// Second column of b-file output, comma-joined.
std::string bfile_terms(const std::string& bfile) {
    std::istringstream in(bfile);
    std::string line, joined;
    while (std::getline(in, line)) {
        size_t sp = line.find(' ');
        if (sp == std::string::npos) return "malformed: " + line;
        if (!joined.empty()) joined += ",";
        joined += line.substr(sp + 1);
    }
    return joined;
}

// 1. Sequence fidelity through the CLI, exact and under a second.
Outcome criterion_sequences() {
    const std::string reduced =
        "1,2,3,5,5,8,7,11,10,14,11,19,13,20,18,24,17,30,19,31";
    const std::string coprime =
        "1,2,3,4,5,8,7,9,9,14,11,16,13,20,18,19,17,28,19,26";
    auto t0 = Clock::now();
    int code1 = 0, code2 = 0;
    std::string out1 = run_cli("seq 20", &code1);
    std::string out2 = run_cli("seq 20 --coprime", &code2);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (code1 != 0 || code2 != 0) return {false, "CLI unavailable or failed"};
    if (bfile_terms(out1) != reduced) return {false, "reduced sequence mismatch: " + bfile_terms(out1)};
    if (bfile_terms(out2) != coprime) return {false, "coprime sequence mismatch: " + bfile_terms(out2)};
    if (secs >= 1.0) return {false, "took " + std::to_string(secs) + " s (limit 1 s)"};
    std::ostringstream d;
    d << "both 20-term sequences exact via the CLI, " << std::fixed << secs << " s";
    return {true, d.str()};
}

// 2. Formula equals brute force for every n <= 500.
Outcome criterion_formula_vs_bruteforce() {
    for (int64_t n = 1; n <= 500; ++n)
        if (count_reduced_formula(n) != count_reduced_bruteforce(n))
            return {false, "mismatch at n=" + std::to_string(n)};
    return {true, "exact agreement for n <= 500"};
}

// 3. Published spot values.
Outcome criterion_spot_values() {
    if (count_reduced_formula(12) != 19) return {false, "R(12) != 19"};
    if (count_reduced_formula(14) != 20) return {false, "R(14) != 20"};
    if (count_reduced_formula(15) != 18) return {false, "R(15) != 18"};
    return {true, "R(12)=19, R(14)=20, R(15)=18"};
}

// 4. The six golden orbit tables as multisets of (representative, size).
Outcome criterion_golden_tables() {
    using Row = std::tuple<int64_t, int64_t, int64_t, int64_t, int>;
    const std::vector<std::pair<int64_t, std::vector<Row>>> tables = {
        {11, {{11, 1, 0, 0, 2}, {6, 2, 1, 1, 2}, {4, 3, 1, 1, 2}, {5, 3, 2, 2, 2},
              {5, 4, 3, 3, 2}, {6, 6, 5, 5, 1}}},
        {13, {{13, 1, 0, 0, 2}, {7, 2, 1, 1, 2}, {5, 3, 2, 1, 4}, {4, 4, 3, 1, 2},
              {5, 5, 4, 3, 2}, {7, 7, 6, 6, 1}}},
        {17, {{17, 1, 0, 0, 2}, {9, 2, 1, 1, 2}, {6, 3, 1, 1, 2}, {5, 4, 3, 1, 4},
              {7, 3, 2, 2, 2}, {5, 5, 4, 2, 2}, {7, 6, 5, 5, 2}, {9, 9, 8, 8, 1}}},
        {12, {{12, 1, 0, 0, 2}, {6, 2, 0, 0, 2}, {6, 2, 1, 0, 4}, {4, 3, 0, 0, 2},
              {4, 3, 1, 0, 4}, {4, 3, 2, 0, 4}, {4, 4, 2, 2, 1}}},
        {14, {{14, 1, 0, 0, 2}, {7, 2, 0, 0, 2}, {7, 2, 1, 0, 4}, {5, 3, 1, 1, 2},
              {4, 4, 2, 1, 2}, {6, 3, 2, 2, 2}, {5, 4, 3, 2, 4}, {6, 5, 4, 4, 2}}},
        {15, {{15, 1, 0, 0, 2}, {5, 3, 0, 0, 2}, {5, 3, 1, 0, 4}, {5, 3, 2, 0, 4},
              {8, 2, 1, 1, 2}, {4, 4, 1, 1, 1}, {6, 4, 3, 3, 2}, {8, 8, 7, 7, 1}}},
    };
    for (const auto& [n, rows] : tables) {
        std::multiset<Row> expected(rows.begin(), rows.end());
        std::multiset<Row> got;
        int64_t total = 0;
        for (const Orbit& o : orbit_decomposition(n)) {
            got.insert({o.representative.a, o.representative.b, o.representative.c,
                        o.representative.d, o.size});
            total += o.size;
        }
        if (got != expected) return {false, "orbit table mismatch at n=" + std::to_string(n)};
        int64_t want_total = 0;
        for (const Row& r : rows) want_total += std::get<4>(r);
        if (total != want_total || total != count_reduced_formula(n))
            return {false, "orbit total mismatch at n=" + std::to_string(n)};
    }
    return {true, "tables for n in {11,13,17,12,14,15} match with totals"};
}

// 5. sigma(n) distinct sublattices for n <= 500.
Outcome criterion_sublattice_census() {
    for (int64_t n = 1; n <= 500; ++n) {
        auto all = enumerate_sublattices(n);
        std::set<Sublattice2> distinct(all.begin(), all.end());
        if (static_cast<int64_t>(all.size()) != sublattice_count(n) ||
            distinct.size() != all.size())
            return {false, "census failed at n=" + std::to_string(n)};
    }
    return {true, "sigma(n) distinct HNF triples for n <= 500"};
}

// 6. Bad lattices: parametrized enumeration vs formula vs sail classification.
Outcome criterion_bad_lattices() {
    for (int64_t n = 1; n <= 200; ++n) {
        auto param = enumerate_bad(n);
        std::set<Sublattice2> param_set(param.begin(), param.end());
        if (param_set.size() != param.size() ||
            static_cast<int64_t>(param.size()) != bad_count_formula(n))
            return {false, "count mismatch at n=" + std::to_string(n)};
        std::set<Sublattice2> by_sail;
        for (const Sublattice2& L : enumerate_sublattices(n))
            if (is_bad(L)) by_sail.insert(L);
        if (by_sail != param_set)
            return {false, "sail classification disagrees at n=" + std::to_string(n)};
    }
    return {true, "three routes agree for n <= 200"};
}

// 7. sigma(n) = bad(n) + R(n) for n <= 10^6 via the closed forms.
Outcome criterion_partition_formula() {
    auto t0 = Clock::now();
    for (int64_t n = 1; n <= 1000000; ++n)
        if (sublattice_count(n) != bad_count_formula(n) + count_reduced_formula(n))
            return {false, "partition failed at n=" + std::to_string(n)};
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= 60.0) return {false, "took " + std::to_string(secs) + " s (limit 60 s)"};
    std::ostringstream d;
    d << "n <= 10^6, " << std::fixed << secs << " s";
    return {true, d.str()};
}

// 8. Consecutive sail points generate the lattice; no other pair does.
Outcome criterion_sailbasis() {
    for (int64_t n = 1; n <= 60; ++n) {
        for (const Sublattice2& L : enumerate_sublattices(n)) {
            Sail s = compute_sail(L);
            for (size_t i = 0; i < s.points.size(); ++i)
                for (size_t j = i + 1; j < s.points.size(); ++j) {
                    int64_t idx = std::abs(cross(s.points[i], s.points[j]));
                    bool adjacent = j == i + 1;
                    if (adjacent) {
                        if (idx != n || !(from_basis(s.points[i], s.points[j]) == L))
                            return {false, "adjacent pair fails at n=" + std::to_string(n)};
                    } else {
                        if (idx == n && from_basis(s.points[i], s.points[j]) == L)
                            return {false, "non-adjacent pair generates at n=" + std::to_string(n)};
                    }
                }
        }
    }
    return {true, "adjacent pairs generate, non-adjacent never, n <= 60"};
}

// 9. Solution <-> central sailbasis round-trip, n <= 200.
Outcome criterion_bijection() {
    for (int64_t n = 1; n <= 200; ++n) {
        std::set<Sublattice2> lattices;
        auto sols = enumerate_solutions(n);
        for (const Solution& s : sols) {
            SailBasis sb = solution_to_sailbasis(s);
            if (!(sailbasis_to_solution(sb) == s))
                return {false, "round-trip failed at n=" + std::to_string(n)};
            lattices.insert(sb.lattice);
        }
        if (lattices.size() != sols.size())
            return {false, "solutions share a lattice at n=" + std::to_string(n)};
    }
    return {true, "identity round-trip and distinct lattices, n <= 200"};
}

// 10. Entry bound: the census over {0..2n}^4 finds nothing above n.
Outcome criterion_entry_bound() {
    for (int64_t n = 1; n <= 50; ++n) {
        int64_t found = 0;
        for (int64_t a = 1; a <= 2 * n; ++a)
            for (int64_t b = 1; b <= 2 * n; ++b) {
                int64_t k = a * b - n;
                if (k < 0) continue;
                int64_t lim = std::min(a, b);
                int64_t here = 0;
                if (k == 0) {
                    here = 2 * lim - 1;
                } else {
                    for (int64_t e = 1; e * e <= k; ++e) {
                        if (k % e) continue;
                        int64_t f = k / e;
                        if (f < lim) here += (e == f) ? 1 : 2;
                    }
                }
                if (here > 0 && (a > n || b > n))
                    return {false, "entry above n at n=" + std::to_string(n)};
                found += here;
            }
        if (found != count_reduced_formula(n))
            return {false, "box census disagrees at n=" + std::to_string(n)};
    }
    return {true, "no entry exceeds n in the {0..2n}^4 box, n <= 50"};
}

// 11. Reduction behaviour, exhaustively over entries <= 25.
Outcome criterion_reduction() {
    for (int64_t a = 0; a <= 25; ++a)
        for (int64_t b = 0; b <= 25; ++b)
            for (int64_t c = 0; c <= 25; ++c)
                for (int64_t d = 0; d <= 25; ++d) {
                    Mat2 m(a, b, c, d);
                    if (det(m) <= 0) continue;
                    bool blocked = true;
                    for (const MoveImage& img : elementary_reductions(m))
                        if (img.in_p) blocked = false;
                    if (is_euclid_reduced(m) != blocked)
                        return {false, "predicate mismatch"};
                    ReductionTrace t = reduce(m);
                    if (det(t.result) != det(m)) return {false, "determinant changed"};
                    if (!is_euclid_reduced(t.result)) return {false, "result not reduced"};
                    if (static_cast<int64_t>(t.steps.size()) > a + b + c + d)
                        return {false, "trace too long"};
                }
    return {true, "terminates, preserves det, predicate = blocked moves, entries <= 25"};
}

// 12. Larger-size families and the determinant-zero classification.
Outcome criterion_complements() {
    for (int64_t x = 0; x <= 1000; ++x) {
        MatGeneral m(3, 3, {4 + x, 2 + x, 1 + x, x, 1 + x, 3 + x, 1 + x, 1 + x, 2 + x});
        int64_t det3 = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                       m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                       m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        if (det3 != 1) return {false, "3x3 determinant != 1 at x=" + std::to_string(x)};
        if (!is_general_reduced(m)) return {false, "3x3 not reduced at x=" + std::to_string(x)};
    }
    for (int64_t n = 5; n <= 100; ++n) {
        if (n % 5 == 4) continue;
        if (!is_general_reduced(MatGeneral(2, 3, {n, 3, 2, 1, 2, 3})))
            return {false, "2x3 not reduced at n=" + std::to_string(n)};
    }
    for (int64_t a = 0; a <= 20; ++a)
        for (int64_t b = 0; b <= 20; ++b)
            for (int64_t c = 0; c <= 20; ++c)
                for (int64_t d = 0; d <= 20; ++d) {
                    Mat2 m(a, b, c, d);
                    if (det(m) != 0) continue;
                    Det0Class cls = classify_det0(m);
                    int zeros = (a == 0) + (b == 0) + (c == 0) + (d == 0);
                    bool zero_matrix = zeros == 4;
                    if (zero_matrix != cls.degenerate) return {false, "degenerate flag wrong"};
                    int64_t g = std::gcd(std::gcd(a, b), std::gcd(c, d));
                    if (!zero_matrix && cls.value != g) return {false, "terminal value is not the gcd"};
                    // reduced det-0 matrices are exactly those with three zeros
                    if (!zero_matrix && is_general_reduced(m) != (zeros == 3))
                        return {false, "det-0 classification mismatch"};
                    // terminal matrices are fixed points of the procedure
                    if (!(classify_det0(cls.terminal).terminal == cls.terminal))
                        return {false, "terminal not a fixed point"};
                }
    return {true, "3x3 family x <= 1000, 2x3 family, det-0 classification entries <= 20"};
}

// 13. Gaussian identity families and the corrected large example.
Outcome criterion_gaussian() {
    for (int64_t m = 0; m <= 200; ++m)
        for (int64_t n = 1; n <= 200; ++n) {
            try {
                GaussSolution odd = odd_identity_solution(m, n);
                if (!solution_holds(odd) || !(odd.z == GaussInt{2 * m + 1, 0}))
                    return {false, "odd family fails"};
                if (m >= 1) {
                    GaussSolution even = even_identity_solution(m, n);
                    if (!solution_holds(even) || !(even.z == GaussInt{2 * m, 0}))
                        return {false, "even family fails"};
                }
            } catch (const std::exception& e) {
                return {false, std::string("family threw: ") + e.what()};
            }
        }
    GaussInt s{18, 7};
    if (!(GaussInt{3, 19} * GaussInt{-15, 12} + s * s == GaussInt{2, 3}))
        return {false, "(3+19i)(-15+12i) + (18+7i)^2 != 2+3i"};
    return {true, "families exact for m,n <= 200; (3+19i)(-15+12i)+(18+7i)^2 = 2+3i"};
}

// 14. Higher-rank sublattice counts against the Z^3 HNF census.
Outcome criterion_higher_rank() {
    for (int64_t n = 1; n <= 30; ++n) {
        int64_t census = 0;
        for (int64_t d1 : divisors(n))
            for (int64_t d2 : divisors(n / d1)) {
                int64_t d3 = n / d1 / d2;
                for (int64_t a12 = 0; a12 < d2; ++a12)
                    for (int64_t a13 = 0; a13 < d3; ++a13)
                        for (int64_t a23 = 0; a23 < d3; ++a23) ++census;
            }
        if (sublattice_count_general(3, n) != census)
            return {false, "Z^3 census mismatch at n=" + std::to_string(n)};
    }
    for (int64_t n = 1; n <= 500; ++n)
        if (sublattice_count_general(2, n) != sublattice_count(n))
            return {false, "dim 2 does not collapse to sigma at n=" + std::to_string(n)};
    return {true, "Z^3 census n <= 30; dim 2 equals sigma(n) for n <= 500"};
}

struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> fn;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "sequence fidelity via the CLI", criterion_sequences},
        {2, "reduced count formula vs brute force, n <= 500", criterion_formula_vs_bruteforce},
        {3, "spot values R(12), R(14), R(15)", criterion_spot_values},
        {4, "golden orbit tables", criterion_golden_tables},
        {5, "sublattice census = sigma(n), n <= 500", criterion_sublattice_census},
        {6, "bad-lattice enumeration vs formula vs sails, n <= 200", criterion_bad_lattices},
        {7, "partition sigma = bad + reduced, n <= 10^6", criterion_partition_formula},
        {8, "sailbasis criterion (adjacent generate), n <= 60", criterion_sailbasis},
        {9, "solution <-> sailbasis bijection, n <= 200", criterion_bijection},
        {10, "entry bound over the {0..2n}^4 box, n <= 50", criterion_entry_bound},
        {11, "reduction exhaustive, entries <= 25", criterion_reduction},
        {12, "larger sizes and determinant zero", criterion_complements},
        {13, "Gaussian identities, m,n <= 200", criterion_gaussian},
        {14, "higher-rank sublattice counts", criterion_higher_rank},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only && c.number != only) continue;
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] criterion %2d: %s — %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.number,
                    c.title, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    if (!only)
        std::printf("%d/14 criteria passed\n", 14 - failures);
    return failures;
}
