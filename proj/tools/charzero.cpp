// charzero: generate, ingest and analyse character tables and their zeros.
//
// Exit codes: 0 clean, 1 flags or counterexamples found, 2 input or usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charzero/charzero.hpp"

namespace fs = std::filesystem;
using namespace charzero;

namespace {

constexpr int kClean = 0;
constexpr int kFlags = 1;
constexpr int kInputError = 2;

int to_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty()) throw std::invalid_argument(std::string(what) + " must be an integer, got '" + s + "'");
    return v;
}

std::string names(const CharacterTable& t, const std::vector<std::size_t>& idx, bool characters) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? ", " : "") + (characters ? t.characters[idx[i]].name : t.classes[idx[i]].name);
    return s.empty() ? "-" : s;
}

nlohmann::json name_list(const CharacterTable& t, const std::vector<std::size_t>& idx, bool characters) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i : idx) a.push_back(characters ? t.characters[i].name : t.classes[i].name);
    return a;
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& out,
            const std::string& fixtures) {
    if (family == "corpus") {
        write_corpus(standard_corpus(fixtures.empty() ? fs::path{} : fs::path(fixtures)), out);
        return kClean;
    }
    CharacterTable t;
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("gen " + family + " takes " + std::to_string(n) + " parameter(s)");
    };
    if (family == "sym") {
        need(1);
        t = build_symmetric(to_int(params[0], "n"));
    } else if (family == "dihedral") {
        need(1);
        t = build_dihedral(to_int(params[0], "m"));
    } else if (family == "cyclic") {
        need(1);
        t = build_cyclic(to_int(params[0], "n"));
    } else if (family == "abelian") {
        if (params.empty()) throw std::invalid_argument("gen abelian needs at least one invariant factor");
        std::vector<int> factors;
        for (const auto& p : params) factors.push_back(to_int(p, "invariant factor"));
        t = build_abelian(factors);
    } else if (family == "product") {
        need(2);
        t = direct_product(load_table(params[0], true), load_table(params[1], true));
    } else {
        throw std::invalid_argument("unknown family '" + family + "' (sym, dihedral, cyclic, abelian, product, corpus)");
    }
    save_table(t, out);
    return kClean;
}

int cmd_analyze(const std::string& path, const std::string& format, bool approx) {
    const CharacterTable t = load_table(path, true);
    const ZeroPattern p = zero_pattern(t);
    const auto vanishing = vanishing_classes(p);
    const auto nonvanishing = nonvanishing_classes(t, p);
    const auto camina = camina_classes(t, p);
    const auto central_type = central_type_characters(t, p);
    const CoverResult cover = min_cover(p);
    const SimpleGraph gam = gamma_v(t, p);
    const SimpleGraph del = delta_v(t, p);
    const BoundReport bounds = bound_checks(t, p);

    if (format == "json") {
        nlohmann::json j = {{"group", t.group_name},
                            {"order", detail::bigint_json(t.order)},
                            {"classes", t.num_classes()},
                            {"characters", t.num_characters()},
                            {"nonlinear", p.rows()},
                            {"vanishing_classes", name_list(t, vanishing, false)},
                            {"nonvanishing_classes", name_list(t, nonvanishing, false)},
                            {"camina_classes", name_list(t, camina, false)},
                            {"central_type_characters", name_list(t, central_type, true)},
                            {"k_min", cover.k_min},
                            {"witness", name_list(t, cover.witness, false)},
                            {"gamma_v_components", bounds.components_gamma},
                            {"delta_v_components", bounds.components_delta},
                            {"gamma_v_independence", bounds.alpha_gamma ? nlohmann::json(*bounds.alpha_gamma) : nlohmann::json()},
                            {"delta_v_independence", bounds.alpha_delta ? nlohmann::json(*bounds.alpha_delta) : nlohmann::json()},
                            {"flags", bounds.flags}};
        if (approx) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& chi : t.characters) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto& v : chi.values) {
                    const auto z = v.approx();
                    r.push_back({z.real(), z.imag()});
                }
                rows.push_back(std::move(r));
            }
            j["approx_values"] = std::move(rows);
        }
        std::cout << j.dump(2) << "\n";
        return kClean;
    }

    std::cout << "group: " << t.group_name << "\n"
              << "order: " << t.order << "\n"
              << "classes: " << t.num_classes() << "\n"
              << "characters: " << t.num_characters() << " (" << p.rows() << " nonlinear)\n";
    if (p.rows() == 0) {
        std::cout << "no nonlinear characters; H₀\n";
        return kClean;
    }
    std::cout << "vanishing classes: " << names(t, vanishing, false) << "\n"
              << "non-vanishing classes: " << names(t, nonvanishing, false) << "\n"
              << "camina classes: " << names(t, camina, false) << "\n"
              << "central-type characters: " << names(t, central_type, true) << "\n"
              << "k_min: " << cover.k_min << " (witness: " << names(t, cover.witness, false) << ")\n"
              << "gamma_v: " << gam.size() << " vertices, " << bounds.components_gamma << " components, independence number "
              << (bounds.alpha_gamma ? std::to_string(*bounds.alpha_gamma) : std::string("n/a")) << "\n"
              << "delta_v: " << del.size() << " vertices, " << bounds.components_delta << " components, independence number "
              << (bounds.alpha_delta ? std::to_string(*bounds.alpha_delta) : std::string("n/a")) << "\n";
    if (approx) {
        std::cout << "values (approximate):\n";
        for (const auto& chi : t.characters) {
            std::cout << "  " << chi.name << ":";
            for (const auto& v : chi.values) {
                const auto z = v.approx();
                std::cout << " " << std::fixed << std::setprecision(4) << z.real() << (z.imag() < 0 ? "-" : "+")
                          << std::abs(z.imag()) << "i";
            }
            std::cout << "\n";
        }
    }
    return kClean;
}

int cmd_cover(const std::string& path, int max_k) {
    const CharacterTable t = load_table(path, true);
    const ZeroPattern p = zero_pattern(t);
    const CoverResult r = min_cover(p);
    std::cout << "group: " << t.group_name << "\n"
              << "nonlinear characters: " << p.rows() << "\n"
              << "k_min: " << r.k_min << "\n"
              << "witness: " << names(t, r.witness, false) << "\n"
              << "lower bound at root: " << r.proof_lb << "\n"
              << "explored nodes: " << r.explored_nodes << "\n";
    if (max_k >= 0) {
        const bool holds = static_cast<int>(r.k_min) <= max_k;
        std::cout << "H_" << max_k << ": " << (holds ? "yes" : "no") << "\n";
        return holds ? kClean : kFlags;
    }
    return kClean;
}

int cmd_graphs(const std::string& path, const std::string& out_dir, bool dot) {
    const CharacterTable t = load_table(path, true);
    const ZeroPattern p = zero_pattern(t);
    fs::create_directories(out_dir);
    const SimpleGraph gam = gamma_v(t, p);
    const SimpleGraph del = delta_v(t, p);
    const BipartiteGraph th = theta(t, p);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream f(fs::path(out_dir) / name);
        if (!f) throw std::runtime_error("cannot write " + (fs::path(out_dir) / name).string());
        f << text;
    };
    write("gamma_v.json", graph_to_json(gam).dump(1) + "\n");
    write("delta_v.json", graph_to_json(del).dump(1) + "\n");
    write("theta.json", graph_to_json(th).dump(1) + "\n");
    write("pattern.json", pattern_to_json(t, p).dump(1) + "\n");
    if (dot) {
        write("gamma_v.dot", to_dot(gam));
        write("delta_v.dot", to_dot(del));
        write("theta.dot", to_dot(th));
    }
    return kClean;
}

std::vector<fs::path> expand_paths(const std::vector<std::string>& inputs) {
    std::vector<fs::path> files;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            for (auto& f : json_files(in)) files.push_back(std::move(f));
        } else {
            files.emplace_back(in);
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<std::string> parse_checks(const std::string& list) {
    std::vector<std::string> checks;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        if (item == "all") return all_checks();
        if (std::find(all_checks().begin(), all_checks().end(), item) == all_checks().end())
            throw std::invalid_argument("unknown check '" + item + "'");
        checks.push_back(item);
    }
    if (checks.empty()) throw std::invalid_argument("--checks must name at least one check");
    return checks;
}

int cmd_verify(const std::vector<std::string>& inputs, const std::string& checks_arg, const std::string& format) {
    const auto checks = parse_checks(checks_arg);
    const auto files = expand_paths(inputs);
    bool flagged = false, input_error = false;
    nlohmann::json records = nlohmann::json::array();
    std::ostringstream csv;
    csv << "file,group,check,status,flags,detail\n";
    auto emit = [&](const std::string& file, const std::string& group, const std::string& check, const std::string& status,
                    const std::vector<std::string>& flags, const std::string& det) {
        records.push_back({{"file", file}, {"group", group}, {"check", check}, {"status", status}, {"flags", flags}, {"detail", det}});
        csv << detail::csv_field(file) << ',' << detail::csv_field(group) << ',' << check << ',' << status << ','
            << detail::csv_field(detail::join(flags, ";")) << ',' << detail::csv_field(det) << '\n';
    };

    for (const auto& f : files) {
        const std::string file = f.filename().string();
        CharacterTable t;
        try {
            t = load_table(f, false);
        } catch (const std::exception& e) {
            input_error = true;
            emit(file, "", "load", "error", {}, e.what());
            std::cerr << f.string() << ": " << e.what() << "\n";
            continue;
        }
        if (const auto rep = validate(t); !rep.ok()) {
            input_error = true;
            std::string joined;
            for (const auto& s : rep.failures) joined += (joined.empty() ? "" : "; ") + s;
            emit(file, t.group_name, "validate", "error", {"validation_failed"}, joined);
            std::cerr << f.string() << ": validation failed: " << joined << "\n";
            continue;
        }
        for (const auto& o : verify_table(t, checks)) {
            if (!o.clean()) {
                flagged = true;
                std::cerr << f.string() << " [" << t.group_name << "] " << o.check << ": " << detail::join(o.flags, ";") << " -- "
                          << o.detail << "\n";
            }
            emit(file, t.group_name, o.check, o.clean() ? "ok" : "flag", o.flags, o.detail);
        }
    }
    if (format == "json") std::cout << records.dump(1) << "\n";
    else std::cout << csv.str();
    if (input_error) return kInputError;
    return flagged ? kFlags : kClean;
}

int cmd_report(const std::string& dir, const std::string& out) {
    std::vector<CharacterTable> corpus;
    for (const auto& f : expand_paths({dir})) corpus.push_back(load_table(f, true));
    const auto rows = conjecture_report(corpus);
    std::ofstream o(out);
    if (!o) throw std::runtime_error("cannot write " + out);
    if (fs::path(out).extension() == ".json") o << report_json(rows).dump(1) << "\n";
    else o << report_csv(rows);
    bool flagged = false;
    for (const auto& r : rows) {
        if (r.flags.empty()) continue;
        flagged = true;
        std::cerr << r.group << ": " << detail::join(r.flags, ";") << " (witness " << detail::join(r.witness_names, ";") << ")\n";
    }
    std::cout << rows.size() << " tables, " << (flagged ? "flags raised" : "no counterexamples found") << "\n";
    return flagged ? kFlags : kClean;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"charzero: zeros of finite-group characters"};
    app.require_subcommand(1);

    std::string family, out, fixtures;
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("gen", "Generate a character table (sym n | dihedral m | cyclic n | abelian f.. | product A B | corpus)");
    gen->add_option("family", family, "Table family")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("-o,--output", out, "Output file (directory for corpus)")->required();
    gen->add_option("--fixtures", fixtures, "Fixture directory to include in the corpus");

    std::string file, format = "text";
    bool approx = false;
    auto* analyze = app.add_subcommand("analyze", "Summarise the zeros of a table");
    analyze->add_option("file", file)->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    analyze->add_flag("--approx", approx, "Also print floating-point approximations of the values");

    int max_k = -1;
    auto* cover = app.add_subcommand("cover", "Minimum class cover of the nonlinear characters");
    cover->add_option("file", file)->required();
    cover->add_option("--max-k", max_k, "Exit 1 unless k_min <= K");

    std::string out_dir;
    bool dot = false;
    auto* graphs = app.add_subcommand("graphs", "Write the zero graphs");
    graphs->add_option("file", file)->required();
    graphs->add_option("--out", out_dir)->required();
    graphs->add_flag("--dot", dot, "Also write Graphviz DOT files");

    std::vector<std::string> inputs;
    std::string checks, vformat = "csv";
    auto* verify = app.add_subcommand("verify", "Run claim checks over tables or corpus directories");
    verify->add_option("paths", inputs)->required();
    verify->add_option("--checks", checks, "Comma-separated: burnside,mno,camina,hmm-components,covers,bounds,witnesses|all")->required();
    verify->add_option("--format", vformat)->check(CLI::IsMember({"csv", "json"}));

    std::string report_dir;
    auto* report = app.add_subcommand("report", "Conjecture report over a corpus directory");
    report->add_option("dir", report_dir)->required();
    report->add_option("-o,--output", out, "CSV, or JSON when the name ends in .json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kClean : kInputError;
    }

    try {
        if (*gen) return cmd_gen(family, params, out, fixtures);
        if (*analyze) return cmd_analyze(file, format, approx);
        if (*cover) return cmd_cover(file, max_k);
        if (*graphs) return cmd_graphs(file, out_dir, dot);
        if (*verify) return cmd_verify(inputs, checks, vformat);
        if (*report) return cmd_report(report_dir, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
