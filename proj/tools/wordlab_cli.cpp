// wordlab: complexity profiles, de Bruijn words, Sturmian generators and
// the complexity-sequence census, behind one command-line entry point.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordlab/complexity.hpp"
#include "wordlab/debruijn.hpp"
#include "wordlab/enumeration.hpp"
#include "wordlab/sturmian.hpp"

using json = nlohmann::json;
using namespace wordlab;

namespace {

json envelope(const std::string& command, json params, json result) {
    return json{{"command", command},
                {"params", std::move(params)},
                {"result", std::move(result)},
                {"schema_version", 1}};
}

json word_json(const Word& w) {
    return json{{"k", w.alphabet_size()}, {"letters", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

json profile_json(const Word& w, const ComplexityProfile& prof) {
    json special = json::object();
    for (int n = 1; n <= prof.word_length; ++n) {
        std::vector<std::string> row;
        for (const auto& u : special_subwords(w, n)) row.push_back(u.to_string());
        if (!row.empty()) special[std::to_string(n)] = row;
    }
    return json{{"sequence", prof.sequence},
                {"R", prof.r_param},
                {"K", prof.k_param},
                {"peak", prof.peak_value},
                {"special_subwords_by_length", special}};
}

int default_jobs() {
    if (const char* env = std::getenv("WORDLAB_JOBS")) return std::atoi(env);
    return 0;
}

QuadIrrational parse_exact(const std::string& text) {
    if (text.rfind("surd:", 0) == 0) {
        long long a, b, c, d;
        char comma;
        std::istringstream in(text.substr(5));
        if (!(in >> a >> comma >> b >> comma >> c >> comma >> d))
            throw std::domain_error("expected surd:a,b,c,d");
        return QuadIrrational::surd(a, b, c, d);
    }
    auto slash = text.find('/');
    if (slash == std::string::npos) throw std::domain_error("expected P/Q or surd:a,b,c,d");
    return QuadIrrational::rational(std::stoll(text.substr(0, slash)),
                                    std::stoll(text.substr(slash + 1)));
}

void emit_plot_csv(const std::string& path, const ComplexityProfile& prof) {
    std::ofstream out(path);
    out << "n,p\n";
    for (int n = 1; n <= prof.word_length; ++n) out << n << "," << prof.p(n) << "\n";
}

struct Options {
    bool json_out = false;
    bool csv_out = false;
};

// --- subcommand runners -------------------------------------------------

int run_complexity(const std::string& text, int k, const Options& opt,
                   const std::string& plot_csv) {
    Word w = Word::parse(text, k);
    auto prof = complexity_sequence(w);
    if (!plot_csv.empty()) emit_plot_csv(plot_csv, prof);
    if (opt.json_out) {
        std::cout << envelope("complexity", {{"word", text}}, profile_json(w, prof)).dump()
                  << "\n";
    } else if (opt.csv_out) {
        auto vt = valence_table(w);
        std::cout << "n,p";
        for (int i = 0; i <= w.alphabet_size(); ++i) std::cout << ",s" << i;
        std::cout << "\n";
        for (int n = 1; n <= prof.word_length; ++n) {
            std::cout << n << "," << prof.p(n);
            for (int i = 0; i <= w.alphabet_size(); ++i) std::cout << "," << vt.s[n][i];
            std::cout << "\n";
        }
    } else {
        std::cout << "p = (";
        for (int n = 1; n <= prof.word_length; ++n)
            std::cout << prof.p(n) << (n < prof.word_length ? ", " : "");
        std::cout << ")\nR = " << prof.r_param << ", K = " << prof.k_param
                  << ", peak p(" << prof.peak_index << ") = " << prof.peak_value << "\n";
    }
    return 0;
}

int run_debruijn(int k, int N, const std::string& emit, const Options& opt) {
    Word w = de_bruijn_word(k, N);
    if (emit == "profile") {
        auto prof = complexity_sequence(w);
        for (int n = 1; n <= prof.word_length; ++n)
            std::cout << n << "," << prof.p(n) << "\n";
    } else if (emit == "json" || opt.json_out) {
        auto prof = complexity_sequence(w);
        std::cout << envelope("debruijn", {{"k", k}, {"len", N}},
                              {{"word", w.to_string()},
                               {"sequence", prof.sequence},
                               {"is_de_bruijn", is_de_bruijn(w)}})
                         .dump()
                  << "\n";
    } else {
        std::cout << w.to_string() << "\n";
    }
    return 0;
}

int run_debruijn_graph(int k, int order, bool dot) {
    DeBruijnGraph g = build_graph(k, order);
    if (dot) {
        std::cout << "digraph debruijn {\n";
        for (std::uint64_t e = 0; e < g.num_edges(); ++e)
            std::cout << "  \"" << g.vertex_word(g.edge_source(e)).to_string() << "\" -> \""
                      << g.vertex_word(g.edge_target(e)).to_string() << "\" [label=\""
                      << g.edge_word(e).to_string() << "\"];\n";
        std::cout << "}\n";
    } else {
        std::cout << "B_" << k << "(" << order << "): " << g.num_vertices() << " vertices, "
                  << g.num_edges() << " edges\n";
    }
    return 0;
}

int run_census(int k, int n, bool list, int jobs, std::uint64_t budget, const Options& opt,
               const std::string& out_path) {
    auto census = count_sequences(k, n, list, jobs, budget);
    json result{{"k", k}, {"n", n}, {"count", census.count}};
    if (census.sequences) result["sequences"] = *census.sequences;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << result.dump(2) << "\n";
    }
    if (opt.json_out) {
        std::cout << envelope("census", {{"k", k}, {"n", n}}, result).dump() << "\n";
    } else {
        std::cout << "a_" << k << "(" << n << ") = " << census.count << "\n";
        if (census.sequences)
            for (const auto& s : *census.sequences) {
                std::cout << "(";
                for (std::size_t i = 0; i < s.size(); ++i)
                    std::cout << s[i] << (i + 1 < s.size() ? "," : "");
                std::cout << ")\n";
            }
    }
    return 0;
}

int run_census_table(int kmax, int nmax, int jobs, std::uint64_t budget) {
    std::cout << "n";
    for (int k = 2; k <= kmax; ++k) std::cout << ",a_" << k;
    std::cout << "\n";
    for (int n = 1; n <= nmax; ++n) {
        std::cout << n;
        for (int k = 2; k <= kmax; ++k)
            std::cout << "," << count_sequences(k, n, false, jobs, budget).count;
        std::cout << "\n";
    }
    return 0;
}

int run_census_diff(int kmax, int nmax, int jobs, std::uint64_t budget) {
    auto table = difference_table(2, kmax, nmax, jobs, budget);
    std::cout << "n";
    for (int k = 2; k < kmax; ++k) std::cout << ",a_" << k + 1 << "-a_" << k;
    std::cout << "\n";
    for (int n = 1; n <= nmax; ++n) {
        std::cout << n;
        for (const auto& v : table[n - 1]) std::cout << "," << v;
        std::cout << "\n";
    }
    return 0;
}

int run_census_conjectures(int kmax, int nmax, int jobs, std::uint64_t budget) {
    auto rep = conjecture_report(nmax, kmax, jobs, budget);
    std::cout << "ratio a_k(n)/2^(n/2)\nn";
    for (int k = 2; k <= kmax; ++k) std::cout << ",k=" << k;
    std::cout << "\n";
    for (int n = 1; n <= nmax; ++n) {
        std::cout << n;
        for (const auto& row : rep.ratios) std::cout << "," << row[n - 1];
        std::cout << "\n";
    }
    std::cout << "difference-shift check a_{k+2}(n)-a_{k+1}(n) = a_{k+1}(n-1)-a_k(n-1)\n";
    for (std::size_t i = 0; i < rep.first_difference_failure.size(); ++i) {
        int f = rep.first_difference_failure[i];
        std::cout << "k=" << i + 2 << ": "
                  << (f == 0 ? "holds through n=" + std::to_string(nmax)
                             : "first failure at n=" + std::to_string(f))
                  << "\n";
    }
    return 0;
}

int run_sturmian_check(const std::string& text, const Options& opt) {
    Word w = Word::parse(text, 2);
    auto prof = complexity_sequence(w);
    bool balanced = is_balanced(w);
    bool sturmian = is_finite_sturmian(w);
    bool rk = prof.r_param + prof.k_param == prof.word_length;
    if (opt.json_out) {
        std::cout << envelope("sturmian check", {{"word", text}},
                              {{"balanced", balanced},
                               {"finite_sturmian", sturmian},
                               {"R", prof.r_param},
                               {"K", prof.k_param},
                               {"N_equals_R_plus_K", rk}})
                         .dump()
                  << "\n";
    } else {
        std::cout << "balanced: " << (balanced ? "yes" : "no")
                  << "\nfinite Sturmian: " << (sturmian ? "yes" : "no") << "\nR = "
                  << prof.r_param << ", K = " << prof.k_param << ", N = " << prof.word_length
                  << (rk ? " (N = R + K)" : "") << "\n";
        if (!balanced) {
            auto wit = unbalanced_witness(w);
            std::cout << "unbalanced witness: \"" << wit->to_string() << "\"\n";
        }
    }
    return 0;
}

int emit_word(const Word& w, const std::string& command, json params, const Options& opt) {
    if (opt.json_out) {
        auto prof = complexity_sequence(w);
        std::cout << envelope(command, std::move(params),
                              {{"word", w.to_string()}, {"sequence", prof.sequence}})
                         .dump()
                  << "\n";
    } else {
        std::cout << w.to_string() << "\n";
    }
    return 0;
}

int run_verify(const std::vector<std::string>& words, const std::string& file,
               int exhaustive_binary) {
    std::vector<Word> targets;
    for (const auto& t : words) targets.push_back(Word::parse(t));
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::domain_error("cannot open " + file);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) targets.push_back(Word::parse(line));
    }
    long long failures = 0, checked = 0;
    auto run_one = [&](const Word& w) {
        auto rep = check_profile_theorems(w);
        ++checked;
        for (const auto& c : rep.checks)
            if (!c.pass) {
                ++failures;
                std::cout << "FAIL " << w.to_string() << ": " << c.name << " at n=" << c.witness
                          << "\n";
            }
    };
    for (const auto& w : targets) run_one(w);
    if (exhaustive_binary > 0) {
        std::vector<Letter> ls(exhaustive_binary, 0);
        for (std::uint64_t code = 0; code < (1ull << exhaustive_binary); ++code) {
            for (int i = 0; i < exhaustive_binary; ++i)
                ls[i] = static_cast<Letter>((code >> i) & 1);
            run_one(Word(std::vector<Letter>(ls), 2));
        }
    }
    std::cout << checked << " words checked, " << failures << " theorem violations\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics-on-words toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_out, "emit a JSON envelope")->configurable(false);
    app.add_flag("--csv", opt.csv_out, "emit CSV rows");

    // complexity
    std::string cx_word, cx_plot;
    int cx_k = 0;
    auto* cx = app.add_subcommand("complexity", "complexity profile of a word");
    cx->add_option("word", cx_word, "the word, letters as characters")->required();
    cx->add_option("--k", cx_k, "alphabet size (default: inferred)");
    cx->add_option("--plot-csv", cx_plot, "write (n, p(n)) pairs to a CSV file");

    // debruijn
    int db_k = 2, db_len = 0, dbg_k = 2, dbg_order = 1;
    std::string db_emit = "word";
    bool dbg_dot = false;
    auto* db = app.add_subcommand("debruijn", "construct a de Bruijn word");
    db->add_option("--k", db_k, "alphabet size")->check(CLI::Range(2, 36));
    db->add_option("--len", db_len, "target length N");
    db->add_option("--emit", db_emit)->check(CLI::IsMember({"word", "profile", "json"}));
    auto* dbg = db->add_subcommand("graph", "emit the graph B_k(n)");
    dbg->add_option("--k", dbg_k)->check(CLI::Range(2, 36));
    dbg->add_option("--order", dbg_order)->required();
    dbg->add_flag("--dot", dbg_dot, "DOT format");

    // sturmian
    auto* st = app.add_subcommand("sturmian", "Sturmian generators and tests");
    st->require_subcommand(1);
    int fib_len = 0;
    auto* st_fib = st->add_subcommand("fib", "Fibonacci word prefix");
    st_fib->add_option("--len", fib_len)->required();
    std::string mech_alpha, mech_rho = "0/1", mech_variant = "lower";
    int mech_len = 0;
    auto* st_mech = st->add_subcommand("mech", "mechanical word");
    st_mech->add_option("--alpha", mech_alpha, "P/Q or surd:a,b,c,d")->required();
    st_mech->add_option("--rho", mech_rho, "P/Q or surd:a,b,c,d");
    st_mech->add_option("--variant", mech_variant)->check(CLI::IsMember({"lower", "upper"}));
    st_mech->add_option("--len", mech_len)->required();
    std::string check_word;
    auto* st_check = st->add_subcommand("check", "balance / finite-Sturmian verdict");
    st_check->add_option("word", check_word)->required();
    int peak_len = 0;
    auto* st_peak = st->add_subcommand("peak", "peak word of length N");
    st_peak->add_option("--len", peak_len)->required();

    // census
    int cs_k = 2, cs_n = 1, cs_jobs = default_jobs(), cs_kmax = 4, cs_nmax = 10;
    std::uint64_t cs_budget = kDefaultCensusBudget;
    bool cs_list = false;
    std::string cs_out;
    auto* cs = app.add_subcommand("census", "count distinct complexity sequences");
    cs->add_option("--k", cs_k);
    cs->add_option("--n", cs_n);
    cs->add_flag("--list", cs_list, "retain and print the sequences");
    cs->add_option("--jobs", cs_jobs);
    cs->add_option("--budget", cs_budget, "max estimated window operations");
    cs->add_option("--out", cs_out, "cache the census to a JSON file");
    auto* cst = cs->add_subcommand("table", "reproduce the census table as CSV");
    cst->add_option("--kmax", cs_kmax);
    cst->add_option("--nmax", cs_nmax);
    auto* csd = cs->add_subcommand("diff", "consecutive-alphabet differences as CSV");
    csd->add_option("--kmax", cs_kmax);
    csd->add_option("--nmax", cs_nmax);
    auto* csc = cs->add_subcommand("conjectures", "ratio and difference-shift diagnostics");
    csc->add_option("--kmax", cs_kmax);
    csc->add_option("--nmax", cs_nmax);

    // verify
    std::vector<std::string> vf_words;
    std::string vf_file;
    int vf_exhaustive = 0;
    auto* vf = app.add_subcommand("verify", "run the theorem suite over words");
    vf->add_option("words", vf_words, "words to check");
    vf->add_option("--file", vf_file, "file with one word per line");
    vf->add_option("--exhaustive-binary", vf_exhaustive,
                   "sweep all binary words of this length")->check(CLI::Range(1, 24));

    // let the global --json/--csv flags be given after a subcommand name
    for (auto* sub : {cx, db, dbg, st, st_fib, st_mech, st_check, st_peak, cs, cst, csd, csc, vf})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cx->parsed()) return run_complexity(cx_word, cx_k, opt, cx_plot);
        if (dbg->parsed()) return run_debruijn_graph(dbg_k, dbg_order, dbg_dot);
        if (db->parsed()) {
            if (db_len < 1) throw std::domain_error("--len is required");
            return run_debruijn(db_k, db_len, db_emit, opt);
        }
        if (st_fib->parsed())
            return emit_word(fixed_point_prefix(fibonacci_morphism(), 0, fib_len), "sturmian fib",
                             {{"len", fib_len}}, opt);
        if (st_mech->parsed()) {
            SlopeIntercept s(parse_exact(mech_alpha), parse_exact(mech_rho));
            auto variant = mech_variant == "lower" ? MechanicalVariant::lower
                                                   : MechanicalVariant::upper;
            return emit_word(mechanical_word(s, variant, mech_len), "sturmian mech",
                             {{"alpha", mech_alpha}, {"rho", mech_rho}, {"variant", mech_variant}},
                             opt);
        }
        if (st_check->parsed()) return run_sturmian_check(check_word, opt);
        if (st_peak->parsed())
            return emit_word(peak_word(peak_len), "sturmian peak", {{"len", peak_len}}, opt);
        if (cst->parsed()) return run_census_table(cs_kmax, cs_nmax, cs_jobs, cs_budget);
        if (csd->parsed()) return run_census_diff(cs_kmax, cs_nmax, cs_jobs, cs_budget);
        if (csc->parsed()) return run_census_conjectures(cs_kmax, cs_nmax, cs_jobs, cs_budget);
        if (cs->parsed()) return run_census(cs_k, cs_n, cs_list, cs_jobs, cs_budget, opt, cs_out);
        if (vf->parsed()) return run_verify(vf_words, vf_file, vf_exhaustive);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
