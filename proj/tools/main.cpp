// Command-line front end: counting, enumeration, lattice/sail queries,
// Gaussian search and the one-shot verification suite. All arithmetic
// lives in the library; this file only parses, dispatches and prints.
//
// Exit codes: 0 success, 1 verification/oracle mismatch, 2 usage error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "euclidsail/counting.hpp"
#include "euclidsail/enumeration.hpp"
#include "euclidsail/gaussian.hpp"
#include "euclidsail/lattice.hpp"
#include "euclidsail/mat2.hpp"
#include "euclidsail/sail.hpp"
#include "euclidsail/verify.hpp"

using json = nlohmann::json;
using namespace euclidsail;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

json mat_to_json(const Mat2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

json solution_to_json(const Solution& s) { return json::array({s.a, s.b, s.c, s.d}); }

json sublattice_to_json(const Sublattice2& L) {
    return json{{"d", L.d}, {"a", L.a}, {"m", L.m}};
}

std::string sail_points_tsv(const Sail& s) {
    std::string out;
    for (const Vec2& p : s.points)
        out += std::to_string(p.x) + "\t" + std::to_string(p.y) + "\n";
    return out;
}

// SVG 1.1 rendering of a sail: lattice points of the bounding box, the
// sail polyline, and the diagonal x == y.
std::string sail_to_svg(const Sublattice2& L, const Sail& s) {
    const int64_t unit = 40, margin = 30, radius = 4;
    int64_t w = s.alpha_x * unit + 2 * margin;
    int64_t h = s.omega_y * unit + 2 * margin;
    auto px = [&](int64_t x) { return margin + x * unit; };
    auto py = [&](int64_t y) { return margin + (s.omega_y - y) * unit; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(w) + "\" height=\"" + std::to_string(h) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg += "  <line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) +
           "\" x2=\"" + std::to_string(px(s.alpha_x)) + "\" y2=\"" + std::to_string(py(0)) +
           "\" stroke=\"#999\"/>\n";
    svg += "  <line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) +
           "\" x2=\"" + std::to_string(px(0)) + "\" y2=\"" + std::to_string(py(s.omega_y)) +
           "\" stroke=\"#999\"/>\n";
    // diagonal x == y up to the box corner
    int64_t diag = std::min(s.alpha_x, s.omega_y);
    svg += "  <line x1=\"" + std::to_string(px(0)) + "\" y1=\"" + std::to_string(py(0)) +
           "\" x2=\"" + std::to_string(px(diag)) + "\" y2=\"" + std::to_string(py(diag)) +
           "\" stroke=\"#c33\" stroke-dasharray=\"6 4\"/>\n";
    // lattice points of the box
    for (const Vec2& p : lattice_points_in_box(L, s.alpha_x, s.omega_y))
        svg += "  <circle cx=\"" + std::to_string(px(p.x)) + "\" cy=\"" + std::to_string(py(p.y)) +
               "\" r=\"" + std::to_string(radius) + "\" fill=\"#bbb\"/>\n";
    // sail polyline and its lattice points
    svg += "  <polyline fill=\"none\" stroke=\"#226\" stroke-width=\"3\" points=\"";
    for (size_t i = 0; i < s.points.size(); ++i) {
        if (i) svg += " ";
        svg += std::to_string(px(s.points[i].x)) + "," + std::to_string(py(s.points[i].y));
    }
    svg += "\"/>\n";
    for (const Vec2& p : s.points)
        svg += "  <circle cx=\"" + std::to_string(px(p.x)) + "\" cy=\"" + std::to_string(py(p.y)) +
               "\" r=\"" + std::to_string(radius + 1) + "\" fill=\"#226\"/>\n";
    svg += "</svg>\n";
    return svg;
}

struct Args {
    int64_t n = 0;
    int64_t n_max = 0;
    bool brute = false;
    bool coprime = false;
    bool orbits = false;
    bool bad_only = false;
    bool sails = false;
    bool trace = false;
    bool normal_forms = false;
    bool canonical = false;
    bool self_test_fault = false;
    std::string format;
    std::vector<int64_t> triple;
    std::vector<int64_t> quad;
    int64_t re = 0, im = 0;
    int64_t bound = 10;
    int64_t m_max = 20, gauss_n_max = 20;
};

int cmd_count(const Args& a) {
    int64_t formula = a.coprime ? count_coprime_formula(a.n) : count_reduced_formula(a.n);
    if (!a.brute) {
        std::cout << formula << "\n";
        return kExitOk;
    }
    int64_t oracle = a.coprime ? count_coprime_bruteforce(a.n) : count_reduced_bruteforce(a.n);
    std::cout << formula << " " << oracle << "\n";
    return formula == oracle ? kExitOk : kExitMismatch;
}

int cmd_seq(const Args& a) {
    std::vector<int64_t> terms =
        sequence(a.coprime ? SequenceKind::Coprime : SequenceKind::Reduced, a.n_max);
    if (a.format == "tsv") {
        for (size_t i = 0; i < terms.size(); ++i)
            std::cout << (i + 1) << "\t" << terms[i] << "\n";
    } else {
        std::cout << to_bfile(terms);
    }
    return kExitOk;
}

int cmd_enumerate(const Args& a) {
    if (a.format == "json") {
        json out{{"schema", 1}, {"n", a.n}};
        if (a.orbits) {
            json arr = json::array();
            int64_t total = 0;
            for (const Orbit& o : orbit_decomposition(a.n)) {
                json members = json::array();
                for (const Solution& s : o.members) members.push_back(solution_to_json(s));
                arr.push_back({{"representative", solution_to_json(o.representative)},
                               {"size", o.size},
                               {"members", members}});
                total += o.size;
            }
            out["orbits"] = arr;
            out["total"] = total;
        } else {
            json arr = json::array();
            for (const Solution& s : enumerate_solutions(a.n)) arr.push_back(solution_to_json(s));
            out["solutions"] = arr;
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (a.orbits) {
        int64_t total = 0;
        for (const Orbit& o : orbit_decomposition(a.n)) {
            const Solution& r = o.representative;
            std::cout << r.a << "\t" << r.b << "\t" << r.c << "\t" << r.d << "\t" << o.size
                      << "\n";
            total += o.size;
        }
        std::cout << "total\t" << total << "\n";
    } else {
        for (const Solution& s : enumerate_solutions(a.n))
            std::cout << s.a << "\t" << s.b << "\t" << s.c << "\t" << s.d << "\n";
    }
    return kExitOk;
}

int cmd_sublattices(const Args& a) {
    std::vector<Sublattice2> all = enumerate_sublattices(a.n);
    if (a.format == "json") {
        json arr = json::array();
        for (const Sublattice2& L : all) {
            bool bad = is_bad(L);
            if (a.bad_only && !bad) continue;
            json obj = sublattice_to_json(L);
            obj["bad"] = bad;
            if (a.sails) {
                json pts = json::array();
                for (const Vec2& p : compute_sail(L).points)
                    pts.push_back(json::array({p.x, p.y}));
                obj["sail"] = pts;
            }
            arr.push_back(obj);
        }
        std::cout << json{{"schema", 1}, {"n", a.n}, {"sublattices", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    for (const Sublattice2& L : all) {
        if (a.bad_only && !is_bad(L)) continue;
        std::cout << L.d << "\t" << L.a << "\t" << L.m;
        if (a.sails) {
            std::cout << "\t";
            Sail s = compute_sail(L);
            for (size_t i = 0; i < s.points.size(); ++i) {
                if (i) std::cout << ";";
                std::cout << s.points[i].x << "," << s.points[i].y;
            }
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_sail(const Args& a) {
    Sublattice2 L(a.triple[0], a.triple[1], a.triple[2]);
    Sail s = compute_sail(L);
    if (a.format == "svg") {
        std::cout << sail_to_svg(L, s);
    } else if (a.format == "json") {
        json pts = json::array();
        for (const Vec2& p : s.points) pts.push_back(json::array({p.x, p.y}));
        std::cout << json{{"schema", 1},
                          {"lattice", sublattice_to_json(L)},
                          {"alpha_x", s.alpha_x},
                          {"omega_y", s.omega_y},
                          {"points", pts}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << sail_points_tsv(s);
    }
    return kExitOk;
}

int cmd_reduce(const Args& a) {
    Mat2 m(a.quad[0], a.quad[1], a.quad[2], a.quad[3]);
    if (!in_P(m)) throw CLI::ValidationError("reduce", "matrix must have positive determinant");
    ReductionTrace t = reduce(m);
    if (a.format == "json") {
        json steps = json::array();
        for (const ReductionStep& st : t.steps)
            steps.push_back({{"kind", reduction_kind_name(st.kind)}, {"matrix", mat_to_json(st.after)}});
        json out{{"schema", 1}, {"start", mat_to_json(t.start)}, {"result", mat_to_json(t.result)}};
        if (a.trace) out["steps"] = steps;
        if (a.normal_forms) {
            json nf = json::array();
            for (const Mat2& x : all_normal_forms(m)) nf.push_back(mat_to_json(x));
            out["normal_forms"] = nf;
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (a.trace)
        for (const ReductionStep& st : t.steps)
            std::cout << reduction_kind_name(st.kind) << "\t" << st.after.a << "\t" << st.after.b
                      << "\t" << st.after.c << "\t" << st.after.d << "\n";
    std::cout << "result\t" << t.result.a << "\t" << t.result.b << "\t" << t.result.c << "\t"
              << t.result.d << "\n";
    if (a.normal_forms)
        for (const Mat2& x : all_normal_forms(m))
            std::cout << "normal\t" << x.a << "\t" << x.b << "\t" << x.c << "\t" << x.d << "\n";
    return kExitOk;
}

int cmd_gauss_search(const Args& a) {
    std::vector<GaussSolution> sols = search_solutions({a.re, a.im}, a.bound, a.canonical);
    for (const GaussSolution& s : sols)
        std::cout << s.a.re << "\t" << s.a.im << "\t" << s.b.re << "\t" << s.b.im << "\t" << s.c.re
                  << "\t" << s.c.im << "\t" << s.d.re << "\t" << s.d.im << "\n";
    return kExitOk;
}

int cmd_gauss_identities(const Args& a) {
    int64_t checked = 0;
    for (int64_t m = 0; m <= a.m_max; ++m) {
        for (int64_t n = 1; n <= a.gauss_n_max; ++n) {
            // Construction throws if either the ring identity or the strict
            // modulus inequality fails.
            odd_identity_solution(m, n);
            if (m >= 1) even_identity_solution(m, n);
            ++checked;
        }
    }
    std::cout << "odd family\tPASS\tm <= " << a.m_max << ", n <= " << a.gauss_n_max << "\n";
    std::cout << "even family\tPASS\tm <= " << a.m_max << ", n <= " << a.gauss_n_max << "\n";
    std::cout << "instances\t" << checked << "\n";
    return kExitOk;
}

int cmd_verify(const Args& a) {
    VerifyOptions opts;
    opts.inject_fault = a.self_test_fault;
    std::vector<CheckResult> results = run_verification(a.n_max, opts);
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "\t" << r.name << "\t" << r.scope;
        if (!r.detail.empty()) std::cout << "\t" << r.detail;
        std::cout << "\n";
    }
    bool ok = all_passed(results);
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euclid-reduced 2x2 matrices, sublattice sails and their counting theory"};
    app.require_subcommand(1);
    Args a;

    CLI::App* count = app.add_subcommand("count", "count Euclid-reduced matrices of determinant n");
    count->add_option("n", a.n, "determinant")->required()->check(CLI::PositiveNumber);
    count->add_flag("--brute", a.brute, "also run the brute-force oracle and compare");
    count->add_flag("--coprime", a.coprime, "count only matrices with coprime entries");

    CLI::App* seq = app.add_subcommand("seq", "print the counting sequence for n = 1..n_max");
    seq->add_option("n_max", a.n_max, "last index")->required()->check(CLI::PositiveNumber);
    seq->add_flag("--coprime", a.coprime, "coprime variant");
    seq->add_option("--format", a.format, "bfile (default) or tsv")
        ->check(CLI::IsMember({"bfile", "tsv"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "list solutions of a*b - c*d = n");
    enumerate->add_option("n", a.n, "determinant")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--orbits", a.orbits, "group into Klein four-group orbits");
    enumerate->add_option("--format", a.format, "tsv (default) or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    CLI::App* sublattices = app.add_subcommand("sublattices", "list sublattices of index n");
    sublattices->add_option("n", a.n, "index")->required()->check(CLI::PositiveNumber);
    sublattices->add_flag("--bad", a.bad_only, "only bad lattices");
    sublattices->add_flag("--sails", a.sails, "include sail point lists");
    sublattices->add_option("--format", a.format, "tsv (default) or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    CLI::App* sail = app.add_subcommand("sail", "print the sail of the lattice Z(d,0) + Z(a,m)");
    sail->add_option("triple", a.triple, "d a m")->required()->expected(3);
    sail->add_option("--format", a.format, "tsv (default), svg or json")
        ->check(CLI::IsMember({"tsv", "svg", "json"}));

    CLI::App* red = app.add_subcommand("reduce", "Euclid-reduce the matrix [[a,b],[c,d]]");
    red->add_option("matrix", a.quad, "a b c d (row-major)")->required()->expected(4);
    red->add_flag("--trace", a.trace, "print each reduction step");
    red->add_flag("--all-normal-forms", a.normal_forms,
                  "print every reachable Euclid-reduced matrix");
    red->add_option("--format", a.format, "tsv (default) or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    CLI::App* gauss = app.add_subcommand("gauss", "Gaussian-integer variant of the equation");
    gauss->require_subcommand(1);
    CLI::App* gsearch = gauss->add_subcommand("search", "bounded search for solutions of ab+cd=z");
    gsearch->add_option("re", a.re, "real part of z")->required();
    gsearch->add_option("im", a.im, "imaginary part of z")->required();
    gsearch->add_option("--bound", a.bound, "box bound on each component")
        ->check(CLI::PositiveNumber);
    gsearch->add_flag("--canonical", a.canonical, "merge a<->b, c<->d swaps");
    CLI::App* gident = gauss->add_subcommand("identities", "verify the two witness families");
    gident->add_option("--m-max", a.m_max, "largest m")->check(CLI::NonNegativeNumber);
    gident->add_option("--n-max", a.gauss_n_max, "largest n")->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite up to n_max");
    verify->add_option("n_max", a.n_max, "sweep bound")->required()->check(CLI::PositiveNumber);
    verify->add_flag("--self-test-fault", a.self_test_fault,
                     "inject an off-by-one fault (negative control; must fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(a);
        if (seq->parsed()) return cmd_seq(a);
        if (enumerate->parsed()) return cmd_enumerate(a);
        if (sublattices->parsed()) return cmd_sublattices(a);
        if (sail->parsed()) return cmd_sail(a);
        if (red->parsed()) return cmd_reduce(a);
        if (gauss->parsed()) {
            if (gauss->get_subcommands().front()->get_name() == "search")
                return cmd_gauss_search(a);
            return cmd_gauss_identities(a);
        }
        if (verify->parsed()) return cmd_verify(a);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
