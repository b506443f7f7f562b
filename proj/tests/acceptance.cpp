// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"

using namespace charzero;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kSymmetricTablesSeconds = 30.0;
constexpr double kDihedralSeconds = 10.0;
constexpr std::size_t kSimpleGroupCoverBound = 3;
constexpr std::size_t kBruteForceMaxColumns = 14;
constexpr std::size_t kBruteForceMaxVertices = 20;
constexpr int kRandomMatrices = 100;
constexpr int kRandomProducts = 20;
constexpr std::uint32_t kRandomSeed = 20240417;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(2);
    o << s << "s";
    return o.str();
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = oracle::corpus();
    return c;
}

std::vector<std::size_t> classes_of(const CharacterTable& t, const std::vector<Partition>& labels) {
    std::vector<std::size_t> out;
    for (const auto& mu : labels) out.push_back(*class_with_label(t, mu));
    return out;
}

bool any_subset_covers(const ZeroPattern& p, std::size_t k) {
    std::vector<bool> choose(p.cols(), false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(std::min(k, p.cols())), true);
    do {
        std::vector<std::size_t> cls;
        for (std::size_t c = 0; c < p.cols(); ++c)
            if (choose[c]) cls.push_back(p.class_idx[c]);
        if (check_cover(p, cls).ok) return true;
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return false;
}

Outcome symmetric_tables() {
    const auto start = Clock::now();
    Outcome o;
    for (int n = 1; n <= 10; ++n) {
        const auto t = build_symmetric(n);
        const auto r = validate(t);
        BigInt squares = 0;
        for (const auto& chi : t.characters) squares += chi.degree * chi.degree;
        if (!r.ok() || squares != factorial(n)) {
            o.pass = false;
            o.detail += "S" + std::to_string(n) + " failed: " + r.summary() + "; ";
        }
    }
    const double s = seconds_since(start);
    if (s >= kSymmetricTablesSeconds) o.pass = false;
    o.detail += "S1..S10 validated in " + fmt_seconds(s) + " (limit " + fmt_seconds(kSymmetricTablesSeconds) + ")";
    return o;
}

Outcome murnaghan_nakayama_oracles() {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        MurnaghanNakayama identity(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        for (const auto& lambda : ps)
            if (identity(lambda) != degree(lambda)) {
                o.pass = false;
                o.detail += "degree mismatch " + lambda.to_string() + "; ";
            }
        for (const auto& mu : ps) {
            MurnaghanNakayama chi(mu);
            for (const auto& lambda : ps) {
                ++checked;
                if (chi(conjugate(lambda)) != sign(mu) * chi(lambda)) {
                    o.pass = false;
                    o.detail += "sign twist " + lambda.to_string() + " at " + mu.to_string() + "; ";
                }
            }
        }
    }
    o.detail += std::to_string(checked) + " (lambda, mu) pairs for n <= 8";
    return o;
}

Outcome witness_triples(const std::vector<int>& ns, bool even) {
    Outcome o;
    for (int n : ns) {
        const auto t = build_symmetric(n);
        const std::vector<Partition> labels = even ? std::vector<Partition>{Partition{n - 1, 1}, Partition{n - 3, 3}, Partition{n - 4, 2, 1, 1}}
                                                   : std::vector<Partition>{Partition{n}, Partition{n - 4, 2, 2}, Partition{n - 5, 4, 1}};
        const auto r = check_cover(zero_pattern(t), classes_of(t, labels));
        o.detail += "S" + std::to_string(n) + ": " + std::to_string(r.violations.size()) + " violations; ";
        if (!r.ok) {
            o.pass = false;
            for (std::size_t v : r.violations) o.detail += t.characters[v].name + " ";
        }
    }
    return o;
}

Outcome symmetric_pairs() {
    Outcome o;
    for (int n = 2; n <= 12; ++n) {
        const auto t = build_symmetric(n);
        const Partition second = n == 2 ? Partition{1, 1} : Partition{n - 1, 1};
        if (!check_cover(zero_pattern(t), classes_of(t, {Partition{n}, second})).ok) {
            o.pass = false;
            o.detail += "pair fails for S" + std::to_string(n) + "; ";
        }
        for (const auto& lambda : partitions_of(n)) {
            const bool both = has_hook(lambda, n) && has_hook(lambda, n - 1);
            const bool extreme = lambda == Partition{n} || lambda == Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
            if (both != extreme) {
                o.pass = false;
                o.detail += "hook lemma fails at " + lambda.to_string() + "; ";
            }
        }
    }
    o.detail += "pairs and hook lemma checked for 2 <= n <= 12";
    return o;
}

Outcome dihedral_exactness() {
    const auto start = Clock::now();
    Outcome o;
    for (int n = 2; n <= 7; ++n) {
        const int m = 1 << n;
        const auto t = build_dihedral(m);
        for (const auto& chi : t.characters) {
            if (chi.is_linear()) continue;
            const int i = std::stoi(chi.name.substr(4));
            for (std::size_t c = 0; c < t.num_classes(); ++c) {
                const auto& name = t.classes[c].name;
                if (name == "y" || name == "xy") continue;
                const int j = name == "1" ? 0 : std::stoi(name.substr(2));
                if (chi.values[c].is_zero() != ((i * j) % (m / 2) == m / 4)) {
                    o.pass = false;
                    o.detail += "congruence fails for " + chi.name + " at " + name + " in " + t.group_name + "; ";
                }
            }
        }
        const auto alpha = independence_number(delta_v(t, zero_pattern(t))).size;
        o.detail += t.group_name + ":" + std::to_string(alpha) + " ";
        if (alpha != static_cast<std::size_t>(n - 1)) o.pass = false;
    }
    const double s = seconds_since(start);
    if (s >= kDihedralSeconds) o.pass = false;
    o.detail += "in " + fmt_seconds(s) + " (limit " + fmt_seconds(kDihedralSeconds) + ")";
    return o;
}

Outcome component_equality() {
    Outcome o;
    for (const auto& e : corpus()) {
        const auto p = zero_pattern(e.table);
        const auto g = components(gamma_v(e.table, p)).size(), d = components(delta_v(e.table, p)).size();
        if (g != d) {
            o.pass = false;
            o.detail += e.stem + " (" + std::to_string(g) + " vs " + std::to_string(d) + "); ";
        }
    }
    o.detail += std::to_string(corpus().size()) + " corpus tables";
    return o;
}

Outcome simple_group_covers() {
    Outcome o;
    std::size_t simple = 0;
    for (const auto& f : json_files(CHARZERO_FIXTURE_DIR)) {
        CharacterTable t;
        try {
            t = load_table(f, true);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail += f.filename().string() + ": " + e.what() + "; ";
            continue;
        }
        if (t.metadata.simple != true) continue;
        ++simple;
        const auto p = zero_pattern(t);
        const auto r = min_cover(p);
        const bool optimal = check_cover(p, r.witness).ok && (r.k_min == 0 || !any_subset_covers(p, r.k_min - 1));
        o.detail += t.group_name + ":" + std::to_string(r.k_min) + " ";
        if (r.k_min > kSimpleGroupCoverBound || !optimal) o.pass = false;
    }
    if (simple != 5) o.pass = false;
    o.detail += "(" + std::to_string(simple) + " simple fixtures, bound " + std::to_string(kSimpleGroupCoverBound) + ")";
    return o;
}

Outcome solver_oracles() {
    Outcome o;
    std::size_t patterns = 0, graphs = 0;
    auto check_pattern = [&](const std::vector<std::vector<bool>>& rows, const std::string& what) {
        ++patterns;
        const auto r = min_hitting_set(rows);
        if (r.k_min != oracle::brute_min_hitting_set(rows)) {
            o.pass = false;
            o.detail += "cover mismatch on " + what + "; ";
        }
    };
    auto check_graph = [&](const SimpleGraph& g, const std::string& what) {
        ++graphs;
        if (independence_number(g).size != oracle::brute_independence(g.adjacency)) {
            o.pass = false;
            o.detail += "independence mismatch on " + what + "; ";
        }
    };
    for (const auto& e : corpus()) {
        const auto p = zero_pattern(e.table);
        if (p.cols() <= kBruteForceMaxColumns) check_pattern(p.zeros, e.stem);
        const auto gam = gamma_v(e.table, p), del = delta_v(e.table, p);
        if (gam.size() <= kBruteForceMaxVertices) check_graph(gam, e.stem + " gamma_v");
        if (del.size() <= kBruteForceMaxVertices) check_graph(del, e.stem + " delta_v");
    }
    std::mt19937 rng(kRandomSeed);
    std::uniform_int_distribution<std::size_t> rows(1, 12), cols(1, kBruteForceMaxColumns), verts(1, kBruteForceMaxVertices);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int i = 0; i < kRandomMatrices; ++i) {
        check_pattern(oracle::random_matrix(rng, rows(rng), cols(rng), density(rng)), "random matrix " + std::to_string(i));
        check_graph(oracle::random_graph(rng, verts(rng), density(rng)), "random graph " + std::to_string(i));
    }
    o.detail += std::to_string(patterns) + " patterns, " + std::to_string(graphs) + " graphs";
    return o;
}

Outcome camina_equivalence() {
    Outcome o;
    for (const auto& e : corpus()) {
        try {
            if (camina_classes(e.table, zero_pattern(e.table)) != camina_classes_by_size(e.table)) throw DataIntegrityError(e.stem);
        } catch (const DataIntegrityError& err) {
            o.pass = false;
            o.detail += std::string(err.what()) + "; ";
        }
    }
    o.detail += std::to_string(corpus().size()) + " corpus tables";
    return o;
}

Outcome product_closure() {
    Outcome o;
    std::vector<CorpusEntry> fixtures;
    for (const auto& e : corpus())
        if (e.stem.rfind("fixture_", 0) == 0) fixtures.push_back(e);
    const auto pool = product_pool(fixtures);
    std::mt19937 rng(kRandomSeed);
    std::size_t total = 0;
    for (int i = 0; i < kRandomProducts; ++i) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        const auto ca = min_cover(zero_pattern(a)).witness, cb = min_cover(zero_pattern(b)).witness;
        const auto prod = direct_product(a, b);
        const auto paired = pair_cover_product(ca, cb, a, b);
        total += paired.size();
        if (!check_cover(zero_pattern(prod), paired).ok || paired.size() > std::max(ca.size(), cb.size())) {
            o.pass = false;
            o.detail += prod.group_name + "; ";
        }
    }
    o.detail += std::to_string(kRandomProducts) + " products, " + std::to_string(total) + " paired classes";
    return o;
}

Outcome conjecture_harness() {
    const fs::path dir = fs::temp_directory_path() / "charzero_acceptance_corpus";
    fs::remove_all(dir);
    write_corpus(corpus(), dir);
    const std::string cmd = std::string("\"") + CHARZERO_CLI + "\" verify \"" + dir.string() +
                            "\" --checks burnside,mno,camina,hmm-components,covers,bounds,witnesses > \"" +
                            (dir / "verify.csv").string() + "\"";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    Outcome o;
    o.pass = code == 0;
    o.detail = "verify over " + std::to_string(corpus().size()) + " tables exited " + std::to_string(code);
    if (o.pass) fs::remove_all(dir);
    else o.detail += " (report kept in " + dir.string() + ")";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"symmetric tables n<=10 orthogonal, degree squares sum to n!, within time", symmetric_tables},
        {"MN degree matches hook formula and sign twist holds, n<=8", murnaghan_nakayama_oracles},
        {"even triple (n-1,1),(n-3,3),(n-4,2,1,1) covers S8, S10, S12", [] { return witness_triples({8, 10, 12}, true); }},
        {"odd triple (n),(n-4,2,2),(n-5,4,1) covers S9, S11, S13", [] { return witness_triples({9, 11, 13}, false); }},
        {"n- and (n-1)-cycle pair covers S_n for 2<=n<=12; long-hook lemma", symmetric_pairs},
        {"dihedral 2-group zero congruence and Delta_v independence n-1, within time", dihedral_exactness},
        {"Gamma_v and Delta_v component counts agree on the corpus", component_equality},
        {"simple fixtures validate and have certified k_min <= 3", simple_group_covers},
        {"cover and independence solvers match brute force", solver_oracles},
        {"Camina column test agrees with class-size test on the corpus", camina_equivalence},
        {"paired covers verify on random direct products", product_closure},
        {"verify over the full corpus exits 0", conjecture_harness},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
