#pragma once

// Per-table claim checks aggregated by the `verify` command. Each check yields
// an outcome that is either clean or carries flags and a human-readable detail
// naming the offending characters, classes or witnesses.

#include <string_view>
#include <sstream>
#include <string>
#include <vector>

#include "chartable.hpp"
#include "errors.hpp"
#include "hcover.hpp"
#include "vanishing.hpp"
#include "zerographs.hpp"

namespace charzero {

inline const std::vector<std::string>& all_checks() {
    static const std::vector<std::string> names{"burnside", "mno", "camina", "hmm-components", "covers", "bounds", "witnesses"};
    return names;
}

struct CheckOutcome {
    std::string check;
    std::vector<std::string> flags;
    std::string detail;
    bool clean() const noexcept { return flags.empty(); }
};

namespace detail {

inline std::string names_of(const CharacterTable& t, const std::vector<std::size_t>& idx, bool characters) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? ";" : "") + (characters ? t.characters[idx[i]].name : t.classes[idx[i]].name);
    return s;
}

inline std::string vertex_names(const SimpleGraph& g, const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ";" : "") + g.labels[idx[i]];
    return s;
}

} // namespace detail

/// Runs the named checks on one (already validated) table.
inline std::vector<CheckOutcome> verify_table(const CharacterTable& t, const std::vector<std::string>& checks) {
    const ZeroPattern p = zero_pattern(t);
    std::vector<CheckOutcome> out;
    for (const auto& check : checks) {
        CheckOutcome o{check, {}, {}};
        if (check == "burnside") {
            const auto r = burnside_check(p);
            if (!r.ok) o.flags.emplace_back("no_zero");
            o.detail = r.ok ? "all nonlinear characters vanish somewhere" : "zero-free: " + detail::names_of(t, r.violations, true);
        } else if (check == "mno") {
            const auto r = prime_power_check(t, p);
            if (!r.ok) o.flags.emplace_back("no_prime_power_zero");
            o.detail = r.ok ? "every nonlinear character vanishes on a prime-power-order class"
                            : "violations: " + detail::names_of(t, r.violations, true);
        } else if (check == "camina") {
            try {
                const auto cam = camina_classes(t, p);
                if (cam != camina_classes_by_size(t)) o.flags.emplace_back("camina_mismatch");
                o.detail = "camina classes: " + (cam.empty() ? std::string("none") : detail::names_of(t, cam, false));
            } catch (const DataIntegrityError& e) {
                o.flags.emplace_back("camina_mismatch");
                o.detail = e.what();
            }
        } else if (check == "hmm-components") {
            const auto gam = gamma_v(t, p);
            const auto del = delta_v(t, p);
            const std::size_t cg = components(gam).size(), cd = components(del).size();
            if (cg != cd) o.flags.emplace_back(flag::kComponentMismatch);
            if (cg > 3) o.flags.emplace_back(flag::kTooManyComponents);
            if (t.metadata.solvable == true && cg > 2) o.flags.emplace_back(flag::kSolvableTooManyComponents);
            o.detail = "components gamma_v=" + std::to_string(cg) + " delta_v=" + std::to_string(cd);
        } else if (check == "covers") {
            const ReportRow row = conjecture_row(t);
            o.flags = row.flags;
            o.detail = "k_min=" + std::to_string(row.k_min) + " witness=" + detail::join(row.witness_names, ";");
        } else if (check == "bounds") {
            const BoundReport b = bound_checks(t, p);
            for (const auto& f : b.flags) {
                const std::string_view sv = f;
                if (sv != flag::kComponentMismatch && sv != flag::kTooManyComponents && sv != flag::kSolvableTooManyComponents)
                    o.flags.push_back(f);
            }
            std::ostringstream d;
            d << "alpha_gamma=" << (b.alpha_gamma ? std::to_string(*b.alpha_gamma) : std::string("n/a"))
              << " alpha_delta=" << (b.alpha_delta ? std::to_string(*b.alpha_delta) : std::string("n/a"));
            if (b.alpha_gamma && !o.flags.empty()) {
                const auto gam = gamma_v(t, p);
                d << " independent=" << detail::vertex_names(gam, independence_number(gam).witness);
            }
            for (const auto& n : b.notes) d << " (" << n << ")";
            o.detail = d.str();
        } else if (check == "witnesses") {
            const auto n = symmetric_degree(t);
            if (!n) {
                o.detail = "not a symmetric-group table; skipped";
            } else {
                std::ostringstream d;
                for (const auto& set : symmetric_witness_sets(*n)) {
                    std::vector<std::size_t> cls;
                    for (const auto& mu : set) cls.push_back(*class_with_label(t, mu));
                    const auto r = check_cover(p, cls);
                    d << detail::names_of(t, cls, false) << (r.ok ? " covers; " : " misses " + detail::names_of(t, r.violations, true) + "; ");
                    if (!r.ok) o.flags.emplace_back("witness_set_fails");
                }
                o.detail = d.str().empty() ? "no witness sets for n=" + std::to_string(*n) : d.str();
            }
        } else {
            throw std::invalid_argument("unknown check '" + check + "'");
        }
        out.push_back(std::move(o));
    }
    return out;
}

} // namespace charzero
