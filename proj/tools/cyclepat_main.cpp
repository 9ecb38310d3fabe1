// cyclepat: counts, generating functions, tables and lemma sweeps for
// pattern-avoiding permutations with cycle lengths in {1,2,3}.

#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cyclepat/checkers.hpp"
#include "cyclepat/enumerate.hpp"
#include "cyclepat/gf_catalog.hpp"
#include "cyclepat/lattice.hpp"
#include "cyclepat/render.hpp"
#include "cyclepat/verify.hpp"

using namespace cyclepat;

namespace {

std::set<int> parse_cycles(const std::string& text) {
    std::set<int> S;
    size_t i = 0;
    while (i < text.size()) {
        size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        S.insert(std::stoi(text.substr(i, j - i)));
        i = j + 1;
    }
    return S;
}

std::string bivariate_json(const BivariateSeries& b) {
    std::string out = "[";
    for (int k = 0; k <= b.x_order(); ++k) {
        if (k) out += ",";
        out += "[";
        for (int j = 0; j <= b.t_order(); ++j) {
            if (j) out += ",";
            const Rational& c = b.coeff(k, j);
            if (denominator(c) == 1) out += numerator(c).str();
            else out += "\"" + coeff_string(c) + "\"";
        }
        out += "]";
    }
    return out + "]";
}

int run_gf(const std::string& name, int order, int bound, int t_order,
           const std::string& cycles, const std::string& format) {
    auto univariate = [&](const TruncatedSeries& s) {
        if (format == "csv") {
            for (int i = 0; i <= s.order(); ++i)
                std::cout << (i ? "," : "") << coeff_string(s[i]);
            std::cout << "\n";
        } else {
            std::cout << s.to_json() << "\n";
        }
    };
    auto trivariate = [&](const WeightedSeries3& w) { std::cout << w.to_json() << "\n"; };
    if (name == "catalan") univariate(catalan_series(order));
    else if (name == "motzkin") univariate(motzkin_series(order));
    else if (name == "motzkin_flats")
        std::cout << bivariate_json(motzkin_flats(order, t_order >= 0 ? t_order : order)) << "\n";
    else if (name == "I231") trivariate(components_231(bound).i);
    else if (name == "S231") trivariate(components_231(bound).s);
    else if (name == "Q231") trivariate(components_231(bound).q);
    else if (name == "R231") trivariate(components_231(bound).r);
    else if (name == "B231") trivariate(b231(bound));
    else if (name == "A231") {
        if (cycles.empty()) throw CLI::ValidationError("gf", "A231 needs --cycles");
        univariate(a231_subset(parse_cycles(cycles), order));
    } else if (name == "A3_132") univariate(a3_132(order));
    else if (name == "A13_132") univariate(a13_132(order));
    else if (name == "A13_132_closed") univariate(a13_132_closed(order));
    else if (name == "A13_132_structural") univariate(a13_132_structural(order));
    else throw CLI::ValidationError("gf", "unknown name: " + name);
    return 0;
}

TruncatedSeries named_series(const std::string& name, int order, const std::string& cycles) {
    if (name == "catalan") return catalan_series(order);
    if (name == "motzkin") return motzkin_series(order);
    if (name == "A231") {
        if (cycles.empty()) throw CLI::ValidationError("growth", "A231 needs --cycles");
        return a231_subset(parse_cycles(cycles), order);
    }
    if (name == "A3_132") return a3_132(order);
    if (name == "A13_132") return a13_132_closed(order);
    throw CLI::ValidationError("growth", "unknown name: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumeration toolkit for pattern avoidance under cycle-type constraints"};
    app.require_subcommand(1);

    int n = 0, order = 60, bound = 14, t_order = -1, threads = default_thread_count();
    int m_max = 8, n_max = 10, formula_n_max = 12, growth_n = 300, digits = 6;
    std::string cycles = "1,2,3", pattern = "231", name, format, suite = "all";
    std::string data_dir, word, path, composition, perm_text;
    bool deep = false;

    auto* cmd_count = app.add_subcommand("count", "count avoiders of a pattern in S_n^S");
    cmd_count->add_option("--n", n, "size")->required();
    cmd_count->add_option("--cycles", cycles, "allowed cycle lengths, e.g. 1,2,3");
    cmd_count->add_option("--pattern", pattern, "pattern to avoid");
    cmd_count->add_option("--threads", threads, "worker threads");

    auto* cmd_census = app.add_subcommand("census", "avoider counts refined by cycle type");
    cmd_census->add_option("--n", n, "size")->required();
    cmd_census->add_option("--cycles", cycles, "allowed cycle lengths");
    cmd_census->add_option("--pattern", pattern, "pattern to avoid");
    cmd_census->add_option("--threads", threads, "worker threads");
    cmd_census->add_option("--format", format, "json|csv|markdown");

    auto* cmd_gf = app.add_subcommand("gf", "expand a named generating function");
    cmd_gf->add_option("--name", name, "catalan|motzkin|motzkin_flats|I231|S231|Q231|R231|B231|"
                                       "A231|A3_132|A13_132|A13_132_closed|A13_132_structural")
        ->required();
    cmd_gf->add_option("--order", order, "univariate truncation order");
    cmd_gf->add_option("--bound", bound, "weighted-degree bound for trivariate names");
    cmd_gf->add_option("--t-order", t_order, "t-order for motzkin_flats");
    cmd_gf->add_option("--cycles", cycles, "subset S for A231");
    cmd_gf->add_option("--format", format, "json|csv");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite, "tables|lemmas|bijections|formula|conjecture|all");
    cmd_verify->add_option("--n-max", n_max, "oracle depth for table rows");
    cmd_verify->add_option("--m-max", m_max, "Dyck half-length bound for bijection audits");
    cmd_verify->add_option("--formula-n-max", formula_n_max, "3m+r bound for the formula check");
    cmd_verify->add_flag("--deep", deep, "extend table oracles to n = 12");
    cmd_verify->add_option("--threads", threads, "worker threads");
    cmd_verify->add_option("--data-dir", data_dir, "directory with the bundled table CSVs");
    cmd_verify->add_option("--format", format, "text|json|csv");

    auto* cmd_bijection = app.add_subcommand("bijection", "trace a Dyck word through the bijection");
    cmd_bijection->add_option("--word", word, "Dyck word over {0,1}");
    cmd_bijection->add_option("--path", path, "Motzkin path over {u,d,f}");
    cmd_bijection->add_option("--composition", composition, "free composition, comma list");

    auto* cmd_render = app.add_subcommand("render", "arc diagram of a permutation");
    cmd_render->add_option("permutation", perm_text, "one-line or cycle notation")->required();
    cmd_render->add_option("--format", format, "svg|ascii");

    auto* cmd_growth = app.add_subcommand("growth", "period-3 growth estimate of a series");
    cmd_growth->add_option("--name", name, "series name (default A13_132)");
    cmd_growth->add_option("--cycles", cycles, "subset S for A231");
    cmd_growth->add_option("--n", growth_n, "index n for (a_{n+3}/a_n)^{1/3}");
    cmd_growth->add_option("--order", order, "series order (default n + 13)");
    cmd_growth->add_option("--digits", digits, "decimal digits to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_count->parsed()) {
            std::cout << count_avoiders(n, parse_cycles(cycles), Permutation::parse(pattern), threads)
                      << "\n";
        } else if (cmd_census->parsed()) {
            Census c = refined_census(n, parse_cycles(cycles), Permutation::parse(pattern), threads);
            if (format == "csv") {
                std::cout << "c1,c2,c3,count\n";
                for (const auto& [k, v] : c.table)
                    std::cout << k.c1 << "," << k.c2 << "," << k.c3 << "," << v << "\n";
            } else if (format == "markdown") {
                std::cout << "| c1 | c2 | c3 | count |\n|---|---|---|---|\n";
                for (const auto& [k, v] : c.table)
                    std::cout << "| " << k.c1 << " | " << k.c2 << " | " << k.c3 << " | " << v
                              << " |\n";
            } else {
                std::cout << c.to_json() << "\n";
            }
        } else if (cmd_gf->parsed()) {
            return run_gf(name, order, bound, t_order, cmd_gf->count("--cycles") ? cycles : "",
                          format);
        } else if (cmd_verify->parsed()) {
            verify::Options opt;
            opt.oracle_n_max = n_max;
            opt.bijection_m_max = m_max;
            opt.formula_n_max = formula_n_max;
            opt.deep = deep;
            opt.threads = threads;
            opt.data_dir = data_dir;
            if (format == "csv") {
                int depth = deep ? 12 : n_max;
                for (int t = 1; t <= 3; ++t)
                    std::cout << "# table " << t << "\n"
                              << verify::computed_table_csv(t, t == 1 ? depth : (t == 2 ? 12 : depth),
                                                            threads);
                return 0;
            }
            auto results = verify::run_suite(suite, opt);
            bool all_pass = true;
            if (format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : results) {
                    j.push_back({{"criterion", r.criterion},
                                 {"name", r.name},
                                 {"pass", r.pass},
                                 {"detail", r.detail}});
                    all_pass = all_pass && r.pass;
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : results) {
                    std::cout << (r.pass ? "PASS" : "FAIL");
                    if (r.criterion) std::cout << " [criterion " << r.criterion << "]";
                    std::cout << " " << r.name;
                    if (!r.detail.empty()) std::cout << " -- " << r.detail;
                    std::cout << "\n";
                    all_pass = all_pass && r.pass;
                }
                std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
            }
            return all_pass ? 0 : 1;
        } else if (cmd_bijection->parsed()) {
            DyckWord d = [&] {
                if (!word.empty()) return DyckWord(word);
                if (path.empty() || composition.empty())
                    throw std::invalid_argument("need --word, or --path with --composition");
                return motzkin_to_dyck(MotzkinPath(path), Composition::parse(composition));
            }();
            auto fd = free_decomposition(d);
            auto mz = dyck_to_motzkin(d);
            auto back = motzkin_to_dyck(mz, fd.composition());
            nlohmann::json j;
            j["word"] = d.word();
            j["hits"] = hits(d);
            j["free_composition"] = fd.composition().to_string();
            j["reduced"] = reduce(d).word();
            j["motzkin"] = mz.steps();
            j["reconstructed"] = back.word();
            j["round_trip"] = back == d;
            j["avoider_count"] = first_catalan_count(d).str();
            std::cout << j.dump() << "\n";
            return back == d ? 0 : 1;
        } else if (cmd_render->parsed()) {
            Permutation p = Permutation::parse(perm_text);
            std::cout << (format == "ascii" ? render_ascii(p) : render_svg(p));
        } else if (cmd_growth->parsed()) {
            if (name.empty()) name = "A13_132";
            if (!cmd_growth->count("--order")) order = growth_n + 13;
            TruncatedSeries s = named_series(name, order,
                                             cmd_growth->count("--cycles") ? cycles : "");
            Rational g = growth_estimate(s, growth_n);
            std::cout << to_decimal(g, digits) << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
