#include "fintop.h"

#include <cstring>
#include <new>
#include <string>

#include "fintop/enumerate.hpp"
#include "fintop/epi.hpp"
#include "fintop/errors.hpp"
#include "fintop/generators.hpp"
#include "fintop/quotient.hpp"
#include "fintop/serialize.hpp"
#include "fintop/suite.hpp"

struct fintop_space {
    fintop::FiniteSpace v;
};

struct fintop_map {
    fintop::ContinuousMap v;
};

namespace {

thread_local std::string g_last_error;

fintop_status map_code(fintop::Errc code) {
    using fintop::Errc;
    switch (code) {
        case Errc::missing_empty:
        case Errc::missing_full:
        case Errc::not_closed_under_union:
        case Errc::not_closed_under_intersection: return FINTOP_ERR_TOPOLOGY;
        case Errc::index_out_of_range:
        case Errc::same_point: return FINTOP_ERR_RANGE;
        case Errc::not_continuous: return FINTOP_ERR_NOT_CONTINUOUS;
        case Errc::codomain_mismatch:
        case Errc::domain_mismatch:
        case Errc::partition_mismatch: return FINTOP_ERR_MISMATCH;
        case Errc::not_closed:
        case Errc::empty_collapse_set: return FINTOP_ERR_COLLAPSE;
        case Errc::codomain_not_hausdorff:
        case Errc::not_hausdorff_domain:
        case Errc::not_hausdorff_codomain: return FINTOP_ERR_NOT_HAUSDORFF;
        case Errc::too_many_points:
        case Errc::limit_exceeded: return FINTOP_ERR_LIMIT;
        case Errc::invalid_bound:
        case Errc::invalid_parameter: return FINTOP_ERR_INVALID_ARGUMENT;
        case Errc::parse_error: return FINTOP_ERR_PARSE;
        case Errc::not_constant_on_block: return FINTOP_ERR_INTERNAL;
    }
    return FINTOP_ERR_INTERNAL;
}

template <class Fn>
fintop_status guarded(Fn&& fn) {
    try {
        fn();
        return FINTOP_OK;
    } catch (const fintop::Error& e) {
        g_last_error = std::string(fintop::errc_name(e.code)) + ": " + e.what();
        return map_code(e.code);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FINTOP_ERR_INTERNAL;
    }
}

fintop_status invalid_argument(const char* message) {
    g_last_error = message;
    return FINTOP_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fintop_map* wrap(fintop::ContinuousMap m) { return new fintop_map{std::move(m)}; }
fintop_space* wrap(fintop::FiniteSpace s) { return new fintop_space{std::move(s)}; }

}  // namespace

extern "C" {

const char* fintop_last_error(void) { return g_last_error.c_str(); }

const char* fintop_status_name(fintop_status status) {
    switch (status) {
        case FINTOP_OK: return "ok";
        case FINTOP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FINTOP_ERR_PARSE: return "parse error";
        case FINTOP_ERR_TOPOLOGY: return "topology axiom violation";
        case FINTOP_ERR_RANGE: return "index out of range";
        case FINTOP_ERR_NOT_CONTINUOUS: return "not continuous";
        case FINTOP_ERR_MISMATCH: return "domain mismatch";
        case FINTOP_ERR_NOT_HAUSDORFF: return "not Hausdorff";
        case FINTOP_ERR_COLLAPSE: return "invalid collapse set";
        case FINTOP_ERR_LIMIT: return "limit exceeded";
        case FINTOP_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

void fintop_string_free(char* s) { delete[] s; }
void fintop_space_free(fintop_space* s) { delete s; }
void fintop_map_free(fintop_map* m) { delete m; }

fintop_status fintop_space_make(int points, const uint32_t* opens, size_t count,
                                fintop_space** out) {
    if (!out || (count > 0 && !opens)) return invalid_argument("null argument");
    return guarded([&] {
        *out = wrap(fintop::validate_topology(points, std::vector<fintop::Mask>(opens, opens + count)));
    });
}

fintop_status fintop_space_from_json(const char* text, fintop_space** out) {
    if (!text || !out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(fintop::parse_space(text)); });
}

fintop_status fintop_space_to_json(const fintop_space* s, char** out) {
    if (!s || !out) return invalid_argument("null argument");
    return guarded([&] { *out = copy_string(fintop::serialize_space(s->v)); });
}

int fintop_space_points(const fintop_space* s) { return s ? s->v.n : -1; }

size_t fintop_space_open_count(const fintop_space* s) { return s ? s->v.opens.size() : 0; }

fintop_status fintop_space_open_at(const fintop_space* s, size_t index, uint32_t* out) {
    if (!s || !out) return invalid_argument("null argument");
    if (index >= s->v.opens.size()) return invalid_argument("open index out of range");
    *out = s->v.opens[index];
    return FINTOP_OK;
}

int fintop_space_equal(const fintop_space* a, const fintop_space* b) {
    if (!a || !b) return 0;
    return a->v == b->v ? 1 : 0;
}

fintop_status fintop_space_discrete(int points, fintop_space** out) {
    if (!out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(fintop::discrete_space(points)); });
}

fintop_status fintop_space_indiscrete(int points, fintop_space** out) {
    if (!out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(fintop::indiscrete_space(points)); });
}

fintop_status fintop_space_sierpinski(fintop_space** out) {
    if (!out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(fintop::sierpinski_space()); });
}

fintop_status fintop_space_pseudo_circle(fintop_space** out) {
    if (!out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(fintop::pseudo_circle_space()); });
}

fintop_status fintop_space_disjoint_union(const fintop_space* a, const fintop_space* b,
                                          fintop_space** out) {
    if (!a || !b || !out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(fintop::disjoint_union(a->v, b->v)); });
}

fintop_status fintop_closure(const fintop_space* s, uint32_t set, uint32_t* out) {
    if (!s || !out) return invalid_argument("null argument");
    return guarded([&] { *out = fintop::closure(s->v, set); });
}

fintop_status fintop_interior(const fintop_space* s, uint32_t set, uint32_t* out) {
    if (!s || !out) return invalid_argument("null argument");
    return guarded([&] { *out = fintop::interior(s->v, set); });
}

fintop_status fintop_is_dense(const fintop_space* s, uint32_t set, int* out) {
    if (!s || !out) return invalid_argument("null argument");
    return guarded([&] { *out = fintop::is_dense(s->v, set) ? 1 : 0; });
}

fintop_status fintop_is_hausdorff(const fintop_space* s, int* out) {
    if (!s || !out) return invalid_argument("null argument");
    return guarded([&] { *out = fintop::is_hausdorff(s->v) ? 1 : 0; });
}

fintop_status fintop_separation_axioms(const fintop_space* s, int* t0, int* t1, int* t2) {
    if (!s || !t0 || !t1 || !t2) return invalid_argument("null argument");
    return guarded([&] {
        const fintop::SeparationAxioms axioms = fintop::separation_axioms(s->v);
        *t0 = axioms.t0 ? 1 : 0;
        *t1 = axioms.t1 ? 1 : 0;
        *t2 = axioms.t2 ? 1 : 0;
    });
}

fintop_status fintop_separation_witness(const fintop_space* s, int x, int y, int* found,
                                        uint32_t* o1, uint32_t* o2) {
    if (!s || !found || !o1 || !o2) return invalid_argument("null argument");
    return guarded([&] {
        const auto witness = fintop::separation_witness(s->v, x, y);
        *found = witness ? 1 : 0;
        *o1 = witness ? witness->o1 : 0;
        *o2 = witness ? witness->o2 : 0;
    });
}

fintop_status fintop_map_make(const fintop_space* dom, const fintop_space* cod,
                              const int* assignment, size_t count, fintop_map** out) {
    if (!dom || !cod || !out || (count > 0 && !assignment))
        return invalid_argument("null argument");
    return guarded([&] {
        *out = wrap(fintop::make_map(dom->v, cod->v,
                                     std::vector<int>(assignment, assignment + count)));
    });
}

fintop_status fintop_map_from_json(const char* text, fintop_map** out) {
    if (!text || !out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(fintop::parse_map(text)); });
}

fintop_status fintop_map_to_json(const fintop_map* m, char** out) {
    if (!m || !out) return invalid_argument("null argument");
    return guarded([&] { *out = copy_string(fintop::serialize_map(m->v)); });
}

int fintop_map_dom_points(const fintop_map* m) { return m ? m->v.dom.n : -1; }
int fintop_map_cod_points(const fintop_map* m) { return m ? m->v.cod.n : -1; }

fintop_status fintop_map_value(const fintop_map* m, int point, int* out) {
    if (!m || !out) return invalid_argument("null argument");
    if (point < 0 || point >= m->v.dom.n) {
        g_last_error = "point out of range";
        return FINTOP_ERR_RANGE;
    }
    *out = m->v.assignment[point];
    return FINTOP_OK;
}

fintop_status fintop_map_dom(const fintop_map* m, fintop_space** out) {
    if (!m || !out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(m->v.dom); });
}

fintop_status fintop_map_cod(const fintop_map* m, fintop_space** out) {
    if (!m || !out) return invalid_argument("null argument");
    return guarded([&] { *out = wrap(m->v.cod); });
}

int fintop_map_equal(const fintop_map* a, const fintop_map* b) {
    if (!a || !b) return 0;
    return a->v == b->v ? 1 : 0;
}

fintop_status fintop_reflect(const fintop_space* s, fintop_strategy strategy,
                             fintop_space** out_space, fintop_map** out_projection) {
    if (!s) return invalid_argument("null argument");
    fintop::PartitionStrategy chosen;
    switch (strategy) {
        case FINTOP_STRATEGY_COMPONENTS: chosen = fintop::PartitionStrategy::components; break;
        case FINTOP_STRATEGY_CLOPEN: chosen = fintop::PartitionStrategy::clopen; break;
        case FINTOP_STRATEGY_MAPS_ORACLE: chosen = fintop::PartitionStrategy::maps_oracle; break;
        default: return invalid_argument("unknown strategy");
    }
    return guarded([&] {
        fintop::Reflection r = fintop::hausdorff_reflection(s->v, chosen);
        if (out_space) *out_space = wrap(r.space());
        if (out_projection) *out_projection = wrap(r.projection());
    });
}

fintop_status fintop_factor(const fintop_map* f, fintop_map** out_factored,
                            fintop_map** out_projection) {
    if (!f || !out_factored) return invalid_argument("null argument");
    return guarded([&] {
        const fintop::Reflection r = fintop::hausdorff_reflection(f->v.dom);
        *out_factored = wrap(fintop::factor_through_reflection(r, f->v));
        if (out_projection) *out_projection = wrap(r.projection());
    });
}

fintop_status fintop_epi_dense(const fintop_map* f, int* is_epi) {
    if (!f || !is_epi) return invalid_argument("null argument");
    return guarded([&] { *is_epi = fintop::is_epi_dense(f->v).is_epi ? 1 : 0; });
}

fintop_status fintop_epi_bruteforce(const fintop_map* f, fintop_category category, int bound,
                                    int* is_epi, int* bound_warning, fintop_map** out_g,
                                    fintop_map** out_h) {
    if (!f || !is_epi) return invalid_argument("null argument");
    if (category != FINTOP_CATEGORY_HAUS && category != FINTOP_CATEGORY_TOP)
        return invalid_argument("unknown category");
    return guarded([&] {
        const fintop::Category cat = category == FINTOP_CATEGORY_HAUS ? fintop::Category::haus
                                                                      : fintop::Category::top;
        fintop::EpiVerdict verdict = fintop::is_epi_bruteforce(f->v, cat, bound);
        *is_epi = verdict.is_epi ? 1 : 0;
        if (bound_warning) *bound_warning = verdict.bound_warning ? 1 : 0;
        if (verdict.counterexample) {
            if (out_g) *out_g = wrap(std::move(verdict.counterexample->g));
            if (out_h) *out_h = wrap(std::move(verdict.counterexample->h));
        }
    });
}

fintop_status fintop_non_epi_witness(const fintop_map* f, int* found, fintop_map** out_g,
                                     fintop_map** out_h) {
    if (!f || !found) return invalid_argument("null argument");
    return guarded([&] {
        auto witness = fintop::non_epi_witness(f->v);
        *found = witness ? 1 : 0;
        if (witness) {
            if (out_g) *out_g = wrap(std::move(witness->g));
            if (out_h) *out_h = wrap(std::move(witness->h));
        }
    });
}

fintop_status fintop_enumerate_topologies(int points, int up_to_homeo, fintop_space*** out,
                                          size_t* count) {
    if (!out || !count) return invalid_argument("null argument");
    return guarded([&] {
        std::vector<fintop::FiniteSpace> spaces =
            fintop::enumerate_topologies(points, up_to_homeo != 0);
        fintop_space** array = new fintop_space*[spaces.size()];
        for (size_t i = 0; i < spaces.size(); ++i) array[i] = wrap(std::move(spaces[i]));
        *out = array;
        *count = spaces.size();
    });
}

void fintop_space_array_free(fintop_space** spaces, size_t count) {
    if (!spaces) return;
    for (size_t i = 0; i < count; ++i) delete spaces[i];
    delete[] spaces;
}

fintop_status fintop_run_suite(int max_n, fintop_fault fault, int as_json, char** out_report,
                               int* passed) {
    if (!out_report || !passed) return invalid_argument("null argument");
    if (fault != FINTOP_FAULT_NONE && fault != FINTOP_FAULT_BAD_REFLECTION)
        return invalid_argument("unknown fault");
    return guarded([&] {
        const fintop::SuiteFault chosen = fault == FINTOP_FAULT_BAD_REFLECTION
                                              ? fintop::SuiteFault::bad_reflection
                                              : fintop::SuiteFault::none;
        const fintop::SuiteReport report = fintop::run_suite(max_n, chosen);
        *out_report = copy_string(as_json ? report.to_json() : report.to_text());
        *passed = report.all_pass() ? 1 : 0;
    });
}

}  // extern "C"
