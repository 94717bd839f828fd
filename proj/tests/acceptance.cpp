// Acceptance gate: each numbered check prints one PASS/FAIL line and the
// process exits nonzero if any fail. Checks 1-3 carry wall-clock budgets that
// count as part of the pass condition.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fintop/enumerate.hpp"
#include "fintop/epi.hpp"
#include "fintop/errors.hpp"
#include "fintop/generators.hpp"
#include "fintop/maps.hpp"
#include "fintop/quotient.hpp"
#include "fintop/serialize.hpp"
#include "fintop/space.hpp"

using namespace fintop;

namespace {

int g_failures = 0;

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void report(int number, bool ok, const std::string& what, double secs = -1.0,
            double budget = -1.0) {
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " " << number << ": " << what;
    if (secs >= 0.0) {
        line << " [" << secs << "s";
        if (budget >= 0.0) line << " of " << budget << "s allowed";
        line << "]";
    }
    std::cout << line.str() << "\n";
    if (!ok) ++g_failures;
}

std::vector<FiniteSpace> spaces_up_to(int max_n) {
    std::vector<FiniteSpace> all;
    for (int n = 0; n <= max_n; ++n)
        for (const FiniteSpace& s : enumerate_topologies(n)) all.push_back(s);
    return all;
}

std::vector<FiniteSpace> discrete_up_to(int max_n) {
    std::vector<FiniteSpace> all;
    for (int n = 0; n <= max_n; ++n) all.push_back(discrete_space(n));
    return all;
}

bool cospan_separates(const Cospan& c, const ContinuousMap& f) {
    if (c.g.dom != f.cod || c.h.dom != f.cod || c.g.cod != c.h.cod) return false;
    if (c.g.assignment == c.h.assignment) return false;
    if (continuity_violation(c.g.dom, c.g.cod, c.g.assignment)) return false;
    if (continuity_violation(c.h.dom, c.h.cod, c.h.assignment)) return false;
    for (int p = 0; p < f.dom.n; ++p)
        if (c.g.assignment[f.assignment[p]] != c.h.assignment[f.assignment[p]]) return false;
    return true;
}

// 1. Dense-image test vs exhaustive cospan search over every continuous map
// between Hausdorff spaces with at most 3 points, bound twice the codomain.
void check_equivalence() {
    constexpr double budget = 60.0;
    Timer timer;
    bool ok = true;
    long checked = 0;
    for (const FiniteSpace& a : discrete_up_to(3))
        for (const FiniteSpace& b : discrete_up_to(3))
            for (const ContinuousMap& f : enumerate_continuous_maps(a, b)) {
                const bool dense_verdict = is_epi_dense(f).is_epi;
                const EpiVerdict brute =
                    is_epi_bruteforce(f, Category::haus, std::max(1, 2 * b.n));
                ok = ok && dense_verdict == brute.is_epi && !brute.bound_warning;
                if (brute.counterexample)
                    ok = ok && cospan_separates(*brute.counterexample, f);
                ++checked;
            }
    const double secs = timer.seconds();
    report(1, ok && secs < budget,
           "dense-image and brute-force epi verdicts agree on all " + std::to_string(checked) +
               " Hausdorff maps up to 3 points",
           secs, budget);
}

// 2. Factoring through the reflection: existence, identity of composites, and
// uniqueness against every continuous candidate, for every space with at most
// 3 points and every map into discrete targets of size at most 3.
void check_universal_property() {
    constexpr double budget = 60.0;
    Timer timer;
    bool ok = true;
    long factored = 0;
    for (const FiniteSpace& space : spaces_up_to(3)) {
        const Reflection refl = hausdorff_reflection(space);
        for (int k = 0; k <= 3 && ok; ++k) {
            const FiniteSpace target = discrete_space(k);
            for (const ContinuousMap& f : enumerate_continuous_maps(space, target)) {
                ContinuousMap through{{}, {}, {}};
                try {
                    through = factor_through_reflection(refl, f);
                } catch (const Error&) {
                    ok = false;
                    break;
                }
                ok = ok && compose(through, refl.projection()) == f;
                int matching = 0;
                for (const ContinuousMap& g : enumerate_continuous_maps(refl.space(), target))
                    if (compose(g, refl.projection()) == f) {
                        ++matching;
                        ok = ok && g == through;
                    }
                ok = ok && matching == 1;
                ++factored;
                if (!ok) break;
            }
        }
        if (!ok) break;
    }
    const double secs = timer.seconds();
    report(2, ok && secs < budget,
           "every map into a discrete target factors uniquely through the reflection (" +
               std::to_string(factored) + " maps)",
           secs, budget);
}

// 3. On all 355 labeled topologies with 4 points the reflection is discrete
// (hence Hausdorff) and all three partition strategies agree.
void check_reflection_on_four_points() {
    constexpr double budget = 120.0;
    Timer timer;
    bool ok = true;
    const auto all = enumerate_topologies(4);
    ok = ok && all.size() == 355;
    for (const FiniteSpace& space : all) {
        const Reflection refl = hausdorff_reflection(space);
        ok = ok && is_hausdorff(refl.space());
        ok = ok && refl.space().opens.size() == (size_t{1} << refl.space().n);
        const Partition by_components = hausdorff_partition(space);
        ok = ok && by_components == hausdorff_partition(space, PartitionStrategy::clopen);
        ok = ok && by_components == hausdorff_partition(space, PartitionStrategy::maps_oracle);
        if (!ok) break;
    }
    const double secs = timer.seconds();
    report(3, ok && secs < budget,
           "reflections of all 355 four-point topologies are discrete and strategy-independent",
           secs, budget);
}

// 4. A space is Hausdorff exactly when it is homeomorphic to its reflection,
// and then the projection itself is a homeomorphism; all spaces up to 4 points.
void check_corollary() {
    bool ok = true;
    for (const FiniteSpace& space : spaces_up_to(4)) {
        const Reflection refl = hausdorff_reflection(space);
        const bool hausdorff = is_hausdorff(space);
        ok = ok && hausdorff == are_homeomorphic(space, refl.space());
        if (hausdorff) ok = ok && is_homeomorphism(refl.projection());
        if (!ok) break;
    }
    report(4, ok, "Hausdorff coincides with being homeomorphic to the reflection up to 4 points");
}

// 5. The constructive witness: a validating cospan for every non-dense map
// between Hausdorff spaces with at most 3 points, none for the dense ones.
void check_witness_construction() {
    bool ok = true;
    long witnesses = 0;
    for (const FiniteSpace& a : discrete_up_to(3))
        for (const FiniteSpace& b : discrete_up_to(3))
            for (const ContinuousMap& f : enumerate_continuous_maps(a, b)) {
                const bool dense_verdict = is_epi_dense(f).is_epi;
                const auto witness = non_epi_witness(f);
                ok = ok && witness.has_value() != dense_verdict;
                if (witness) {
                    ok = ok && cospan_separates(*witness, f);
                    ok = ok && is_hausdorff(witness->g.cod);
                    ++witnesses;
                }
            }
    report(5, ok,
           "non-dense Hausdorff maps yield validating cospans (" + std::to_string(witnesses) +
               " built), dense ones yield none");
}

// 6. Baseline: with arbitrary topologies allowed as codomains, epi up to
// 3-point targets is exactly surjectivity for every map up to 3 points.
void check_top_baseline() {
    bool ok = true;
    long checked = 0;
    for (const FiniteSpace& a : spaces_up_to(3))
        for (const FiniteSpace& b : spaces_up_to(3))
            for (const ContinuousMap& f : enumerate_continuous_maps(a, b)) {
                const EpiVerdict verdict = is_epi_bruteforce(f, Category::top, 3);
                ok = ok && verdict.is_epi == (image(f) == b.full());
                if (verdict.counterexample)
                    ok = ok && cospan_separates(*verdict.counterexample, f);
                ++checked;
            }
    report(6, ok,
           "general-topology epi equals surjectivity on all " + std::to_string(checked) +
               " maps up to 3 points");
}

// 7. Enumeration counts against the published sequences, and the two
// independent enumeration routes against each other.
void check_enumeration() {
    bool ok = true;
    const long labeled[] = {1, 1, 4, 29, 355};
    const long classes[] = {1, 1, 3, 9, 33};
    for (int n = 0; n <= 4; ++n) {
        ok = ok && enumerate_topologies(n).size() == size_t(labeled[n]);
        ok = ok && enumerate_topologies(n, true).size() == size_t(classes[n]);
        ok = ok && enumerate_topologies_by_scan(n) == enumerate_topologies_by_preorders(n);
    }
    report(7, ok, "labeled counts 1,1,4,29,355 and class counts 1,1,3,9,33, both routes agreeing");
}

// 8. Kuratowski closure laws on every subset pair, and idempotence of the
// reflection, across the full enumeration up to 4 points.
void check_kuratowski_and_idempotence() {
    bool ok = true;
    for (const FiniteSpace& space : spaces_up_to(4)) {
        ok = ok && closure(space, 0) == 0;
        const Mask full = space.full();
        for (Mask a = 0; a <= full && ok; ++a) {
            const Mask ca = closure(space, a);
            ok = ok && subset_of(a, ca) && closure(space, ca) == ca;
            for (Mask b = 0; b <= full; ++b) {
                ok = ok && closure(space, a | b) == (ca | closure(space, b));
                if (space.n == 0) break;
            }
            if (space.n == 0) break;
        }
        const Reflection once = hausdorff_reflection(space);
        const Reflection twice = hausdorff_reflection(once.space());
        ok = ok && twice.space() == once.space();
        ok = ok && are_homeomorphic(twice.space(), once.space());
        if (!ok) break;
    }
    report(8, ok, "Kuratowski laws and reflection idempotence across the full 4-point enumeration");
}

int run_cli(const std::string& args, const std::string& stdin_file, std::string* stdout_text) {
    const std::filesystem::path out = std::filesystem::temp_directory_path() / "fintop_cli_out";
    std::string cmd = std::string("'") + FINTOP_CLI_PATH + "' " + args;
    if (!stdin_file.empty()) cmd += " < '" + stdin_file + "'";
    cmd += " > '" + out.string() + "' 2> /dev/null";
    const int status = std::system(cmd.c_str());
    if (stdout_text) {
        std::ifstream in(out);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        *stdout_text = buffer.str();
    }
    if (!WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

// 9. The installed command line: canonical documents survive a round trip
// through `validate` for the full enumeration up to 4 points, the self-check
// suite exits 0, and the fault-injected suite exits 1.
void check_cli_contract() {
    bool ok = true;
    const std::filesystem::path in = std::filesystem::temp_directory_path() / "fintop_cli_in";
    long round_tripped = 0;
    for (const FiniteSpace& space : spaces_up_to(4)) {
        const std::string doc = serialize_space(space);
        ok = ok && parse_space(doc) == space;
        {
            std::ofstream file(in);
            file << doc << "\n";
        }
        std::string out;
        const int rc = run_cli("validate -", in.string(), &out);
        ok = ok && rc == 0 && out == "valid\n" + doc + "\n";
        ++round_tripped;
        if (!ok) break;
    }

    ok = ok && run_cli("suite --max-n 3", "", nullptr) == 0;
    ok = ok && run_cli("suite --max-n 2 --inject-fault bad-reflection", "", nullptr) == 1;
    ok = ok && run_cli("validate /nonexistent.json", "", nullptr) == 2;

    report(9, ok,
           "command line round-trips all " + std::to_string(round_tripped) +
               " canonical documents and the suite exit codes hold");
}

}  // namespace

int main() {
    check_equivalence();
    check_universal_property();
    check_reflection_on_four_points();
    check_corollary();
    check_witness_construction();
    check_top_baseline();
    check_enumeration();
    check_kuratowski_and_idempotence();
    check_cli_contract();

    if (g_failures > 0) {
        std::cout << "RESULT fail (" << g_failures << " of 9 checks failed)\n";
        return 1;
    }
    std::cout << "RESULT pass (9/9 checks)\n";
    return 0;
}
