#include "permclass/avoiders.hpp"
#include "permclass/bound.hpp"
#include "permclass/grid.hpp"
#include "permclass/gridded_gf.hpp"
#include "permclass/hasse.hpp"
#include "permclass/intervals.hpp"
#include "permclass/skinny.hpp"
#include "permclass/spectral.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace permclass;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format;  // empty: the subcommand's default
    int threads = 0;
};

std::string big(const BigInt& x) { return x.get_str(); }

std::string rat(const Rational& q) { return q.get_str(); }

Rational precision_for(int digits) {
    if (digits < 1 || digits > 60) throw UsageError("--digits must be between 1 and 60");
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits + 3);
    return Rational(BigInt(1), p);
}

// Midpoint rounded to `digits` places; the interval is a thousand times narrower than the last place.
std::string certified(const RootInterval& r, int digits) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    Rational half(BigInt(1), BigInt(2) * p);
    Rational m = r.mid();
    return m >= 0 ? to_decimal(m + half, digits) : "-" + to_decimal(-m + half, digits);
}

Json interval_json(const RootInterval& r, int digits) {
    Json j;
    j["value"] = certified(r, digits);
    j["lo"] = rat(r.lo);
    j["hi"] = rat(r.hi);
    return j;
}

std::string format_of(const Common& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
    std::string f = c.format.empty() ? fallback : c.format;
    for (auto a : allowed)
        if (f == a) return f;
    throw UsageError("format '" + f + "' is not available for this subcommand");
}

void emit_bfile(const std::vector<BigInt>& seq, int first, std::ostream& os) {
    for (size_t i = 0; i < seq.size(); ++i) os << first + static_cast<int>(i) << ' ' << seq[i] << '\n';
}

Json big_array(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (auto& x : v) a.push_back(big(x));
    return a;
}

void emit_json(const Json& j, std::ostream& os) { os << j.dump(2) << '\n'; }

void emit_sequence(const std::string& fmt, const std::string& what, const std::vector<BigInt>& seq, Json meta) {
    if (fmt == "bfile") {
        emit_bfile(seq, 1, std::cout);
    } else if (fmt == "json") {
        meta[what] = big_array(seq);
        emit_json(meta, std::cout);
    } else if (!seq.empty()) {
        for (size_t i = 0; i < seq.size(); ++i) std::cout << (i ? " " : "") << seq[i];
        std::cout << '\n';
    }
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::string s = text;
    for (auto& ch : s)
        if (ch == ',' || ch == ';') ch = ' ';
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw DomainError("bad integer '" + tok + "'");
        }
        if (used != tok.size()) throw DomainError("bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

// "0 1, 1 2": one edge per comma or semicolon.
Graph parse_graph(const std::string& text) {
    Graph g;
    std::string s = text;
    for (auto& ch : s)
        if (ch == ';') ch = ',';
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) {
        auto v = parse_ints(part);
        if (v.empty()) continue;
        if (v.size() != 2 || v[0] < 0 || v[1] < 0 || v[0] == v[1]) throw DomainError("bad edge '" + part + "'");
        g.edges.push_back({v[0], v[1]});
        g.n = std::max({g.n, v[0] + 1, v[1] + 1});
    }
    if (g.edges.empty()) throw DomainError("graph has no edges");
    return g;
}

std::vector<BigInt> series_terms(const TruncatedSeries& s, int n) {
    auto all = s.integer_coeffs(1);
    all.resize(n);
    return all;
}

// ---------- subcommands ----------

void avoid_count(const Common& c, const std::string& basis_text, int n) {
    auto fmt = format_of(c, "text", {"text", "bfile", "json"});
    auto basis = Basis::parse(basis_text);
    auto counts = count_avoiders_upto(basis, n);
    std::vector<BigInt> terms(counts.begin() + 1, counts.end());
    if (fmt == "text") {
        std::cout << counts[n] << '\n';
        return;
    }
    emit_sequence(fmt, "terms", terms, Json{{"basis", basis_text}, {"n", n}});
}

void gf(const Common& c, const std::string& matrix, const std::string& merge, int n) {
    auto fmt = format_of(c, "text", {"text", "bfile", "json"});
    auto M = GridMatrix::parse(matrix);
    std::string form;
    TruncatedSeries s;
    if (merge.empty()) {
        auto a = acyclic_gridded_gf(plan_build(M));
        form = a.gf().to_string();
        s = a.series(n);
    } else {
        auto cells = parse_ints(merge);
        if (cells.size() != 4) throw UsageError("--merge takes two cells, \"column row, column row\"");
        auto u = unicyclic_gridded_gf(M, {cells[0] - 1, cells[1] - 1}, {cells[2] - 1, cells[3] - 1});
        form = u.to_string();
        s = u.series(n);
    }
    if (fmt == "text") {
        std::cout << form << '\n';
        return;
    }
    emit_sequence(fmt, "terms", series_terms(s, n), Json{{"matrix", M.to_string()}, {"gf", form}});
}

void gridded_count(const Common& c, const std::string& matrix, int n) {
    auto fmt = format_of(c, "text", {"text", "bfile", "json"});
    auto M = GridMatrix::parse(matrix);
    if (fmt == "text") {
        std::cout << count_gridded_perms(M, n) << '\n';
        return;
    }
    std::vector<BigInt> terms;
    for (int i = 1; i <= n; ++i) terms.push_back(count_gridded_perms(M, i));
    emit_sequence(fmt, "terms", terms, Json{{"matrix", M.to_string()}});
}

void skinny(const Common& c, const std::string& vector, int n) {
    auto fmt = format_of(c, "text", {"text", "bfile", "json"});
    auto V = parse_ints(vector);
    auto f = skinny_gf(V);
    if (fmt == "text") {
        std::cout << f.to_string() << '\n';
        return;
    }
    emit_sequence(fmt, "terms", series_terms(ratfun_series(f, n), n), Json{{"vector", V}, {"gf", f.to_string()}});
}

void growth(const Common& c, const std::string& matrix, int digits, bool geometric) {
    auto fmt = format_of(c, "text", {"text", "json"});
    auto M = GridMatrix::parse(matrix);
    auto prec = precision_for(digits);
    auto r = geometric ? geom_growth_rate(M, prec) : grid_growth_rate(M, prec);
    if (fmt == "text") {
        std::cout << certified(r, digits) << '\n';
        return;
    }
    Json j{{"matrix", M.to_string()}, {geometric ? "geom_growth" : "grid_growth", interval_json(r, digits)}};
    emit_json(j, std::cout);
}

void limit_shape_cmd(const Common& c, const std::string& matrix, bool svg) {
    auto M = GridMatrix::parse(matrix);
    auto shape = limit_shape(M);
    if (svg) {
        format_of(c, "text", {"text"});
        std::cout << limit_shape_svg(shape) << '\n';
        return;
    }
    auto fmt = format_of(c, "text", {"text", "json"});
    char buf[64];
    if (fmt == "text") {
        // columns and rows numbered from 1, rows bottom-up
        for (auto [col, row] : M.nonzero_cells()) {
            std::snprintf(buf, sizeof buf, "%.12f", shape.alpha[col][row]);
            std::cout << "c" << col + 1 << " r" << row + 1 << ' ' << buf << '\n';
        }
        std::snprintf(buf, sizeof buf, "%.12f", shape.growth);
        std::cout << "growth " << buf << '\n';
        return;
    }
    Json cells = Json::array();
    for (auto [col, row] : M.nonzero_cells()) {
        std::snprintf(buf, sizeof buf, "%.12f", shape.alpha[col][row]);
        cells.push_back(Json{{"column", col + 1}, {"row", row + 1}, {"alpha", buf}});
    }
    std::snprintf(buf, sizeof buf, "%.12f", shape.growth);
    emit_json(Json{{"matrix", M.to_string()}, {"cells", cells}, {"growth", buf}, {"iterations", shape.iterations}},
              std::cout);
}

void tours(const Common& c, const std::string& edges, int length, int u, const std::string& k) {
    auto fmt = format_of(c, "text", {"text", "json"});
    auto G = parse_graph(edges);
    BigInt r;
    Json j{{"graph", G.to_edge_list()}};
    if (length >= 0) {
        if (!k.empty()) throw UsageError("--length and --k are exclusive");
        r = count_tours(G, length);
        j["length"] = length;
    } else {
        if (k.empty()) throw UsageError("give --length for closed walks or --k and --u for balanced tree tours");
        auto kv = parse_ints(k);
        r = tree_balanced_tours(G, u, kv);
        j["u"] = u;
        j["k"] = kv;
    }
    if (fmt == "text") {
        std::cout << r << '\n';
        return;
    }
    j["tours"] = big(r);
    emit_json(j, std::cout);
}

void sum_closed(const Common& c, const std::string& seq, int digits) {
    auto fmt = format_of(c, "text", {"text", "json"});
    auto s = TailSequence::parse(seq);
    auto r = sum_closed_growth(s, precision_for(digits));
    if (fmt == "text") {
        std::cout << certified(r, digits) << '\n';
        return;
    }
    emit_json(Json{{"sequence", s.to_string()}, {"growth", interval_json(r, digits)}}, std::cout);
}

// "1 4; 1 3 5 7 9" with an optional "head | period" split; all period without the bar.
DigitSystem parse_system(const std::string& text) {
    auto sets = [](const std::string& part) {
        std::vector<std::vector<GeneralisedDigit>> out;
        std::istringstream is(part);
        std::string s;
        while (std::getline(is, s, ';')) {
            for (auto& ch : s)
                if (ch == ',') ch = ' ';
            std::istringstream ds(s);
            std::string tok;
            std::vector<GeneralisedDigit> a;
            while (ds >> tok) a.push_back(GeneralisedDigit::parse(tok));
            if (a.empty()) throw DomainError("empty digit set");
            std::sort(a.begin(), a.end());
            out.push_back(a);
        }
        return out;
    };
    DigitSystem d;
    auto bar = text.find('|');
    if (bar == std::string::npos) {
        d.period = sets(text);
    } else {
        d.head = sets(text.substr(0, bar));
        d.period = sets(text.substr(bar + 1));
    }
    if (d.period.empty()) throw DomainError("the periodic part needs at least one digit set");
    return d;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) {
            q = Rational(s);
        } else {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
            q = Rational(BigInt(digits), den);
        }
    } catch (const std::exception&) {
        throw DomainError("bad number '" + s + "'");
    }
    q.canonicalize();
    return q;
}

void digit_interval(const Common& c, const std::string& system, const std::string& lo, const std::string& hi,
                    int digits) {
    auto fmt = format_of(c, "text", {"text", "json"});
    auto d = parse_system(system);
    auto a = parse_rational(lo), b = parse_rational(hi);
    auto r = gap_threshold(d, a, b, precision_for(digits));
    if (fmt == "text") {
        std::cout << certified(r, digits) << '\n';
        return;
    }
    emit_json(Json{{"lo", rat(a)}, {"hi", rat(b)}, {"threshold", interval_json(r, digits)}}, std::cout);
}

void family(const Common& c, const std::string& name, const std::string& spec_file, int digits) {
    format_of(c, "json", {"json"});
    if (name.empty() == spec_file.empty()) throw UsageError("give exactly one of --name and --spec");
    FamilySpec spec;
    if (!name.empty()) {
        spec = FamilySpec::named(name);
    } else {
        std::ifstream in(spec_file);
        if (!in) throw DomainError("cannot read " + spec_file);
        std::stringstream ss;
        ss << in.rdbuf();
        spec = FamilySpec::parse(ss.str());
        spec.name = spec_file;
    }
    auto f = family_interval(spec, precision_for(digits));
    Json j{{"family", spec.name}, {"r", spec.r}, {"s", spec.s}, {"k", spec.k}};
    j["q_sequence"] = f.q.to_string();
    j["lower_sequence"] = f.lower_seq.to_string();
    j["upper_sequence"] = f.upper_seq.to_string();
    j["lower"] = certified(f.lower, digits);
    j["upper"] = certified(f.upper, digits);
    j["gamma_max"] = certified(f.gamma_max, digits);
    j["gamma_min"] = f.gamma_min ? Json(certified(*f.gamma_min, digits)) : Json(nullptr);
    j["extra_digits"] = f.extras.digits.size();
    j["covered"] = f.covered;
    emit_json(j, std::cout);
}

void hasse_series(const Common& c, const std::string& cls, int n) {
    auto fmt = format_of(c, "bfile", {"bfile", "json", "text"});
    std::vector<BigInt> terms;
    if (cls == "av_1324_1432") {
        if (n > 0) terms = series_terms(series_1324_1432(n), n);
    } else {
        auto c = parse_hasse_class(cls);
        if (n > 0) terms = series_terms(closed_gf(c, n), n);
    }
    emit_sequence(fmt, "terms", terms, Json{{"class", cls}, {"n", n}});
}

void plane_series(const Common& c, const std::string& method, int n) {
    auto fmt = format_of(c, "bfile", {"bfile", "json", "text"});
    if (method != "catalytic" && method != "recurrence" && method != "formula")
        throw UsageError("--method is catalytic, recurrence or formula");
    std::vector<BigInt> terms;
    if (n > 0 && method == "catalytic") {
        terms = series_terms(series_plane(n), n);
    } else if (n > 0 && method == "recurrence") {
        terms = plane_recurrence(n);
        terms.erase(terms.begin());
    } else if (method == "formula") {
        for (int i = 1; i <= n; ++i) terms.push_back(i == 1 ? BigInt(1) : van_hoeij(i));
    }
    emit_sequence(fmt, "terms", terms, Json{{"method", method}, {"n", n}});
}

void bound1324(const Common& c, int N, double lambda, double delta, bool maximize, bool heavy) {
    auto fmt = format_of(c, "json", {"json", "text"});
    if (N < 2) throw UsageError("--N must be at least 2");
    if (N >= 12 && !heavy) throw UsageError("N >= 12 needs --heavy");
    if (!maximize && (lambda <= 0 || delta <= 0)) throw UsageError("give --lambda and --delta, or --maximize");
    auto t0 = std::chrono::steady_clock::now();
    auto table = build_pair_table(N);
    double g = 0, l = lambda, d = delta;
    bool converged = true;
    if (maximize) {
        auto r = maximize_bound(table);
        g = r.g;
        l = r.lambda;
        d = r.delta;
        converged = r.converged;
    } else {
        g = g_N(table, lambda, delta);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char gs[32], ls[32], ds[32], ts[32];
    std::snprintf(gs, sizeof gs, "%.9f", g);
    std::snprintf(ls, sizeof ls, "%.9f", l);
    std::snprintf(ds, sizeof ds, "%.9f", d);
    std::snprintf(ts, sizeof ts, "%.3f", secs);
    if (!converged) std::cerr << "warning: simplex stopped before reaching the tolerance\n";
    if (fmt == "text") {
        std::cout << "N " << N << "\nlambda " << ls << "\ndelta " << ds << "\ng " << gs << "\npairs " << table.pair_count
                  << '\n';
        return;
    }
    Json j{{"N", N}, {"lambda", ls}, {"delta", ds}, {"g", gs}, {"pair_count", table.pair_count},
           {"runtime_seconds", ts}};
    emit_json(j, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation class enumeration and growth rates"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"bfile", "json", "text"}));
    app.add_option("--threads", common.threads, "Worker threads (default PERMCLASS_THREADS, else all)")
        ->check(CLI::PositiveNumber);

    std::string basis, matrix, merge, vector, edges, k, sequence, system, lo, hi, name, spec, cls, method = "catalytic";
    int n = 20, digits = 9, length = -1, u = 0, N = 2;
    double lambda = 0, delta = 0;
    bool svg = false, maximize = false, heavy = false;
    std::function<void()> action;

    auto* ac = app.add_subcommand("avoid-count", "Count permutations avoiding a basis");
    ac->add_option("--basis", basis, "Patterns such as \"1 3 2 4,2 3 4 1\"; a trailing ' bars an entry")->required();
    ac->add_option("--n", n, "Length")->required()->check(CLI::Range(0, 20));
    ac->callback([&] { action = [&] { avoid_count(common, basis, n); }; });

    auto* g = app.add_subcommand("gf", "Gridded generating function of an acyclic or unicyclic matrix");
    g->add_option("--matrix", matrix, "Rows top to bottom, e.g. \"1 -1 0; 0 -1 1\"")->required();
    g->add_option("--merge", merge, "Two pendant cells \"column row, column row\" to identify (unicyclic)");
    g->add_option("--n", n, "Series order")->check(CLI::Range(0, 200));
    g->callback([&] { action = [&] { gf(common, matrix, merge, n); }; });

    auto* gc = app.add_subcommand("gridded-count", "Number of gridded permutations");
    gc->add_option("--matrix", matrix, "Rows top to bottom")->required();
    gc->add_option("--n", n, "Length")->required()->check(CLI::Range(0, 60));
    gc->callback([&] { action = [&] { gridded_count(common, matrix, n); }; });

    auto* sk = app.add_subcommand("skinny-gf", "Generating function of a skinny grid class");
    sk->add_option("--vector", vector, "Entries of V, e.g. \"1 -1 1\"")->required();
    sk->add_option("--n", n, "Series order")->check(CLI::Range(1, 200));
    sk->callback([&] { action = [&] { skinny(common, vector, n); }; });

    for (bool geo : {false, true}) {
        auto* gg = app.add_subcommand(geo ? "geom-growth" : "grid-growth",
                                      geo ? "Growth rate of the geometric grid class" : "Growth rate of the grid class");
        gg->add_option("--matrix", matrix, "Rows top to bottom")->required();
        gg->add_option("--digits", digits, "Decimal places")->check(CLI::Range(1, 60));
        gg->callback([&, geo] { action = [&, geo] { growth(common, matrix, digits, geo); }; });
    }

    auto* ls = app.add_subcommand("limit-shape", "Cell proportions of a typical large gridded permutation");
    ls->add_option("--matrix", matrix, "Rows top to bottom")->required();
    ls->add_flag("--svg", svg, "Draw the shape as SVG");
    ls->callback([&] { action = [&] { limit_shape_cmd(common, matrix, svg); }; });

    auto* tr = app.add_subcommand("tours", "Closed walks, or balanced tours of a tree");
    tr->add_option("--edges", edges, "Edges \"0 1, 1 2\"")->required();
    tr->add_option("--length", length, "Closed walks of this length")->check(CLI::NonNegativeNumber);
    tr->add_option("--u", u, "Start vertex for tree tours")->check(CLI::NonNegativeNumber);
    tr->add_option("--k", k, "Traversals of each edge in each direction, in edge order");
    tr->callback([&] { action = [&] { tours(common, edges, length, u, k); }; });

    auto* sc = app.add_subcommand("sum-closed-gr", "Growth rate of a sum-closed class from its indecomposables");
    sc->add_option("--sequence", sequence, "Counts by length, the repeated last term barred: \"1,1,2,3,5,7,8'\"")
        ->required();
    sc->add_option("--digits", digits, "Decimal places")->check(CLI::Range(1, 60));
    sc->callback([&] { action = [&] { sum_closed(common, sequence, digits); }; });

    auto* di = app.add_subcommand("digit-interval", "Where the gap inequalities of a digit system stop holding");
    di->add_option("--system", system, "Digit sets \"head ; ... | period ; ...\", e.g. \"1 4; 1 3 5 7 9\"")
        ->required();
    di->add_option("--lo", lo, "Lower end, where the inequalities hold")->required();
    di->add_option("--hi", hi, "Upper end, where they fail")->required();
    di->add_option("--digits", digits, "Decimal places")->check(CLI::Range(1, 60));
    di->callback([&] { action = [&] { digit_interval(common, system, lo, hi, digits); }; });

    auto* fa = app.add_subcommand("family", "Interval of growth rates covered by a family of classes");
    fa->add_option("--name", name, "A, B, C, D or E");
    fa->add_option("--spec", spec, "Family spec file (key=value lines)");
    fa->add_option("--digits", digits, "Decimal places")->check(CLI::Range(1, 60));
    fa->callback([&] { action = [&] { family(common, name, spec, digits); }; });

    auto* hs = app.add_subcommand("hasse-series", "Counting sequence of a class with a known generating function");
    hs->add_option("--class", cls, "schroeder_1324_2314, forestlike, f_1234_2341, e_1243_2314 or av_1324_1432")
        ->required();
    hs->add_option("--n", n, "Number of terms")->check(CLI::Range(0, 400));
    hs->callback([&] { action = [&] { hasse_series(common, cls, n); }; });

    auto* ps = app.add_subcommand("plane-series", "Number of plane permutations");
    ps->add_option("--n", n, "Number of terms")->check(CLI::Range(0, 400));
    ps->add_option("--method", method, "catalytic, recurrence or formula");
    ps->callback([&] { action = [&] { plane_series(common, method, n); }; });

    auto* bd = app.add_subcommand("bound1324", "Lower bound on the growth rate of Av(1324)");
    bd->add_option("--N", N, "Largest |T| + |F| in the product")->check(CLI::Range(2, 16));
    bd->add_option("--lambda", lambda, "Fixed lambda");
    bd->add_option("--delta", delta, "Fixed delta");
    bd->add_flag("--maximize", maximize, "Maximise over lambda and delta");
    bd->add_flag("--heavy", heavy, "Allow N >= 12");
    bd->callback([&] { action = [&] { bound1324(common, N, lambda, delta, maximize, heavy); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n";
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        std::cerr << sub->help();
        return 2;
    }

    int threads = common.threads;
    if (threads == 0)
        if (const char* env = std::getenv("PERMCLASS_THREADS")) threads = std::atoi(env);
    if (threads > 0) omp_set_num_threads(threads);

    try {
        action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cout.flush();
    return 0;
}
