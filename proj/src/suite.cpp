#include "fintop/suite.hpp"

#include <nlohmann/json.hpp>

#include "fintop/enumerate.hpp"
#include "fintop/epi.hpp"
#include "fintop/errors.hpp"
#include "fintop/generators.hpp"
#include "fintop/quotient.hpp"

namespace fintop {

namespace {

constexpr int map_level_cap = 3;  // map-quantified checks stay at 3 points

const int expected_labeled[] = {1, 1, 4, 29, 355};
const int expected_classes[] = {1, 1, 3, 9, 33};

std::vector<FiniteSpace> spaces_up_to(int max_n) {
    std::vector<FiniteSpace> out;
    for (int n = 0; n <= max_n; ++n)
        for (FiniteSpace& s : enumerate_topologies(n)) out.push_back(std::move(s));
    return out;
}

std::string count_detail(long long checks) { return "checks=" + std::to_string(checks); }

PropertyResult kuratowski_laws(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"kuratowski_laws", true, ""};
    long long checks = 0;
    for (const FiniteSpace& space : spaces) {
        const Mask full = space.full();
        if (closure(space, 0) != 0) {
            r.pass = false;
            r.detail = "closure of the empty set is nonempty on " + std::to_string(space.n) +
                       " points";
            return r;
        }
        for (Mask s = 0; s <= full; ++s) {
            const Mask cl = closure(space, s);
            if (!subset_of(s, cl) || closure(space, cl) != cl ||
                interior(space, s) != (full & ~closure(space, full & ~s))) {
                r.pass = false;
                r.detail = "unary law fails at " + set_to_string(s);
                return r;
            }
            for (Mask t = 0; t <= full; ++t) {
                ++checks;
                if (closure(space, s | t) != (cl | closure(space, t))) {
                    r.pass = false;
                    r.detail = "closure is not additive at " + set_to_string(s) + ", " +
                               set_to_string(t);
                    return r;
                }
            }
        }
    }
    r.detail = "spaces=" + std::to_string(spaces.size()) + " " + count_detail(checks);
    return r;
}

PropertyResult strategy_agreement(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"strategy_agreement", true, ""};
    for (const FiniteSpace& space : spaces) {
        const Partition a = hausdorff_partition(space, PartitionStrategy::components);
        const Partition b = hausdorff_partition(space, PartitionStrategy::clopen);
        const Partition c = hausdorff_partition(space, PartitionStrategy::maps_oracle);
        if (!(a == b && b == c)) {
            r.pass = false;
            r.detail = "strategies disagree on a space with " + std::to_string(space.n) + " points";
            return r;
        }
    }
    r.detail = "spaces=" + std::to_string(spaces.size());
    return r;
}

PropertyResult reflection_hausdorff(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"reflection_hausdorff", true, ""};
    for (const FiniteSpace& space : spaces) {
        const Reflection refl = hausdorff_reflection(space);
        const bool discrete = refl.space().opens.size() == (size_t{1} << refl.space().n);
        if (!is_hausdorff(refl.space()) || !discrete ||
            static_cast<int>(refl.hausdorff_certificate.size()) != refl.space().n) {
            r.pass = false;
            r.detail = "reflection is not discrete Hausdorff on " + std::to_string(space.n) +
                       " points";
            return r;
        }
    }
    r.detail = "spaces=" + std::to_string(spaces.size());
    return r;
}

Reflection reflection_for_check(const FiniteSpace& space, SuiteFault fault) {
    if (fault == SuiteFault::bad_reflection && space.n > 1)
        return Reflection{quotient_by(space, Partition::single_block(space.n)), {}};
    return hausdorff_reflection(space);
}

PropertyResult universal_property(const std::vector<FiniteSpace>& spaces, SuiteFault fault) {
    PropertyResult r{"universal_property", true, ""};
    long long factored = 0;
    for (const FiniteSpace& space : spaces) {
        const Reflection refl = reflection_for_check(space, fault);
        for (int k = 0; k <= map_level_cap; ++k) {
            const FiniteSpace target = discrete_space(k);
            for (const ContinuousMap& f : enumerate_continuous_maps(space, target)) {
                ContinuousMap factored_map{{}, {}, {}};
                try {
                    factored_map = factor_through_reflection(refl, f);
                } catch (const Error& e) {
                    r.pass = false;
                    r.detail = std::string("factoring failed: ") + errc_name(e.code);
                    return r;
                }
                if (compose(factored_map, refl.projection()) != f) {
                    r.pass = false;
                    r.detail = "factored map does not reproduce the original";
                    return r;
                }
                int matching = 0;
                for (const ContinuousMap& m : enumerate_continuous_maps(refl.space(), target))
                    if (compose(m, refl.projection()) == f) ++matching;
                if (matching != 1) {
                    r.pass = false;
                    r.detail = "expected exactly one factorization, found " +
                               std::to_string(matching);
                    return r;
                }
                ++factored;
            }
        }
    }
    r.detail = "spaces=" + std::to_string(spaces.size()) + " maps=" + std::to_string(factored);
    return r;
}

PropertyResult corollary_hausdorff_iff_reflected(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"corollary_hausdorff_iff_reflected", true, ""};
    for (const FiniteSpace& space : spaces) {
        const Reflection refl = hausdorff_reflection(space);
        const bool hausdorff = is_hausdorff(space);
        if (hausdorff != are_homeomorphic(space, refl.space())) {
            r.pass = false;
            r.detail = "reflection equivalence fails on " + std::to_string(space.n) + " points";
            return r;
        }
        if (hausdorff && !is_homeomorphism(refl.projection())) {
            r.pass = false;
            r.detail = "projection of a Hausdorff space is not a homeomorphism";
            return r;
        }
    }
    r.detail = "spaces=" + std::to_string(spaces.size());
    return r;
}

PropertyResult reflection_idempotent(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"reflection_idempotent", true, ""};
    for (const FiniteSpace& space : spaces) {
        const FiniteSpace once = hausdorff_reflection(space).space();
        const FiniteSpace twice = hausdorff_reflection(once).space();
        if (!are_homeomorphic(once, twice)) {
            r.pass = false;
            r.detail = "double reflection changes the space";
            return r;
        }
    }
    r.detail = "spaces=" + std::to_string(spaces.size());
    return r;
}

PropertyResult reflection_functorial(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"reflection_functorial", true, ""};
    const size_t count = spaces.size();
    std::vector<Reflection> refls;
    refls.reserve(count);
    for (const FiniteSpace& space : spaces) refls.push_back(hausdorff_reflection(space));

    std::vector<std::vector<std::vector<ContinuousMap>>> maps(count);
    std::vector<std::vector<std::vector<ContinuousMap>>> lifted(count);
    long long lifted_count = 0;
    for (size_t i = 0; i < count; ++i) {
        maps[i].resize(count);
        lifted[i].resize(count);
        for (size_t j = 0; j < count; ++j) {
            maps[i][j] = enumerate_continuous_maps(spaces[i], spaces[j]);
            lifted[i][j].reserve(maps[i][j].size());
            for (const ContinuousMap& f : maps[i][j]) {
                lifted[i][j].push_back(
                    factor_through_reflection(refls[i], compose(refls[j].projection(), f)));
                ++lifted_count;
            }
        }
    }
    for (size_t i = 0; i < count; ++i) {
        const ContinuousMap id = identity_map(spaces[i]);
        const ContinuousMap hid =
            factor_through_reflection(refls[i], compose(refls[i].projection(), id));
        if (hid != identity_map(refls[i].space())) {
            r.pass = false;
            r.detail = "identity does not lift to the identity";
            return r;
        }
    }
    long long composites = 0;
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) {
            if (maps[i][j].empty()) continue;
            for (size_t k = 0; k < count; ++k) {
                if (maps[j][k].empty()) continue;
                for (size_t fi = 0; fi < maps[i][j].size(); ++fi)
                    for (size_t gi = 0; gi < maps[j][k].size(); ++gi) {
                        const ContinuousMap composite = compose(maps[j][k][gi], maps[i][j][fi]);
                        const ContinuousMap direct = factor_through_reflection(
                            refls[i], compose(refls[k].projection(), composite));
                        const ContinuousMap stepwise =
                            compose(lifted[j][k][gi], lifted[i][j][fi]);
                        ++composites;
                        if (direct.assignment != stepwise.assignment) {
                            r.pass = false;
                            r.detail = "lift of a composite differs from the composite of lifts";
                            return r;
                        }
                    }
            }
        }
    r.detail = "maps=" + std::to_string(lifted_count) +
               " composites=" + std::to_string(composites);
    return r;
}

PropertyResult epi_dense_equivalence(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"epi_dense_equivalence", true, ""};
    std::vector<FiniteSpace> hausdorff;
    for (const FiniteSpace& space : spaces)
        if (is_hausdorff(space)) hausdorff.push_back(space);
    long long checked = 0;
    for (const FiniteSpace& a : hausdorff)
        for (const FiniteSpace& b : hausdorff)
            for (const ContinuousMap& f : enumerate_continuous_maps(a, b)) {
                const int bound = std::max(1, 2 * b.n);
                const EpiVerdict dense = is_epi_dense(f);
                const EpiVerdict brute = is_epi_bruteforce(f, Category::haus, bound);
                ++checked;
                if (dense.is_epi != brute.is_epi || !check_prop1_forward(f, bound)) {
                    r.pass = false;
                    r.detail = "dense and brute-force verdicts disagree";
                    return r;
                }
                if (!brute.is_epi) {
                    const Cospan& w = *brute.counterexample;
                    bool sound = w.g.assignment != w.h.assignment && is_hausdorff(w.g.cod);
                    for (int v : f.assignment)
                        sound = sound && w.g.assignment[v] == w.h.assignment[v];
                    if (!sound) {
                        r.pass = false;
                        r.detail = "brute-force counterexample does not validate";
                        return r;
                    }
                }
            }
    r.detail = "hausdorff_spaces=" + std::to_string(hausdorff.size()) + " maps=" +
               std::to_string(checked);
    return r;
}

PropertyResult witness_sound_complete(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"witness_sound_complete", true, ""};
    std::vector<FiniteSpace> hausdorff;
    for (const FiniteSpace& space : spaces)
        if (is_hausdorff(space)) hausdorff.push_back(space);
    long long witnesses = 0;
    long long maps = 0;
    for (const FiniteSpace& a : hausdorff)
        for (const FiniteSpace& b : hausdorff)
            for (const ContinuousMap& f : enumerate_continuous_maps(a, b)) {
                const auto witness = non_epi_witness(f);
                ++maps;
                if (witness.has_value() == is_epi_dense(f).is_epi) {
                    r.pass = false;
                    r.detail = "witness presence disagrees with the dense test";
                    return r;
                }
                if (!witness) continue;
                ++witnesses;
                const Cospan& w = *witness;
                bool sound = w.g.dom == f.cod && w.h.dom == f.cod && w.g.cod == w.h.cod &&
                             is_hausdorff(w.g.cod) && w.g.assignment != w.h.assignment &&
                             !continuity_violation(w.g.dom, w.g.cod, w.g.assignment) &&
                             !continuity_violation(w.h.dom, w.h.cod, w.h.assignment);
                for (int v : f.assignment) sound = sound && w.g.assignment[v] == w.h.assignment[v];
                if (!sound) {
                    r.pass = false;
                    r.detail = "witness cospan does not validate";
                    return r;
                }
            }
    r.detail = "maps=" + std::to_string(maps) + " witnesses=" + std::to_string(witnesses);
    return r;
}

PropertyResult top_epi_surjective(const std::vector<FiniteSpace>& spaces) {
    PropertyResult r{"top_epi_surjective", true, ""};
    long long checked = 0;
    for (const FiniteSpace& a : spaces)
        for (const FiniteSpace& b : spaces)
            for (const ContinuousMap& f : enumerate_continuous_maps(a, b)) {
                ++checked;
                const bool surjective = image(f) == b.full();
                if (is_epi_bruteforce(f, Category::top, 3).is_epi != surjective) {
                    r.pass = false;
                    r.detail = "epi in Top disagrees with surjectivity";
                    return r;
                }
            }
    r.detail = "maps=" + std::to_string(checked);
    return r;
}

PropertyResult enumeration_counts(int max_n) {
    PropertyResult r{"enumeration_counts", true, ""};
    std::string labeled = "labeled=[";
    std::string classes = "classes=[";
    for (int n = 0; n <= max_n; ++n) {
        const auto all = enumerate_topologies(n);
        const auto reps = enumerate_topologies(n, true);
        for (const FiniteSpace& space : all)
            if (validate_topology(space.n, space.opens) != space) {
                r.pass = false;
                r.detail = "an enumerated space fails re-validation";
                return r;
            }
        if (enumerate_topologies_by_preorders(n).size() != all.size() ||
            static_cast<int>(all.size()) != expected_labeled[n] ||
            static_cast<int>(reps.size()) != expected_classes[n]) {
            r.pass = false;
            r.detail = "counts at n=" + std::to_string(n) + " are " +
                       std::to_string(all.size()) + "/" + std::to_string(reps.size());
            return r;
        }
        labeled += (n ? ", " : "") + std::to_string(all.size());
        classes += (n ? ", " : "") + std::to_string(reps.size());
    }
    r.detail = labeled + "] " + classes + "]";
    return r;
}

}  // namespace

bool SuiteReport::all_pass() const {
    for (const PropertyResult& r : results)
        if (!r.pass) return false;
    return true;
}

std::string SuiteReport::to_text() const {
    std::string out = "suite max_n=" + std::to_string(max_n) + "\n";
    int passed = 0;
    for (const PropertyResult& r : results) {
        out += (r.pass ? "PASS " : "FAIL ") + r.name;
        if (!r.detail.empty()) out += "  " + r.detail;
        out += "\n";
        if (r.pass) ++passed;
    }
    out += "RESULT " + std::string(all_pass() ? "pass" : "fail") + " (" + std::to_string(passed) +
           "/" + std::to_string(results.size()) + " properties)\n";
    return out;
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["max_n"] = max_n;
    j["pass"] = all_pass();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const PropertyResult& r : results) {
        nlohmann::ordered_json entry;
        entry["name"] = r.name;
        entry["pass"] = r.pass;
        entry["detail"] = r.detail;
        list.push_back(std::move(entry));
    }
    j["results"] = std::move(list);
    return j.dump();
}

SuiteReport run_suite(int max_n, SuiteFault fault) {
    if (max_n < 0) throw Error(Errc::invalid_parameter, "max_n must be nonnegative");
    if (max_n > enumerate_default_limit)
        throw Error(Errc::limit_exceeded, "suite supports at most " +
                                              std::to_string(enumerate_default_limit) + " points");
    const std::vector<FiniteSpace> spaces = spaces_up_to(max_n);
    const std::vector<FiniteSpace> small = spaces_up_to(std::min(max_n, map_level_cap));

    SuiteReport report{max_n, {}};
    report.results.push_back(kuratowski_laws(spaces));
    report.results.push_back(strategy_agreement(spaces));
    report.results.push_back(reflection_hausdorff(spaces));
    report.results.push_back(universal_property(small, fault));
    report.results.push_back(corollary_hausdorff_iff_reflected(spaces));
    report.results.push_back(reflection_idempotent(spaces));
    report.results.push_back(reflection_functorial(small));
    report.results.push_back(epi_dense_equivalence(small));
    report.results.push_back(witness_sound_complete(small));
    report.results.push_back(top_epi_surjective(small));
    report.results.push_back(enumeration_counts(max_n));
    return report;
}

}  // namespace fintop
