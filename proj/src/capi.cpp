#include "homalg/homalg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "homalg/counterexample.hpp"
#include "homalg/hom.hpp"
#include "homalg/io.hpp"
#include "homalg/isomorphism.hpp"
#include "homalg/selftest.hpp"
#include "homalg/tensor.hpp"
#include "homalg/twin.hpp"

struct homalg_context {
    homalg::Limits limits;
    std::string error;
};

struct homalg_weighted_graph {
    homalg::WeightedGraph graph;
};

struct homalg_labeled_graph {
    homalg::LabeledGraph graph;
};

namespace {

using homalg::ErrorCode;

homalg_status status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Malformed:
        case ErrorCode::InvalidSpec:
        case ErrorCode::DivisionByZero:
            return HOMALG_ERR_MALFORMED;
        case ErrorCode::Budget:
            return HOMALG_ERR_BUDGET;
        case ErrorCode::SpecMismatch:
        case ErrorCode::LabelCountMismatch:
        case ErrorCode::DirectednessMismatch:
        case ErrorCode::ArityMismatch:
            return HOMALG_ERR_MISMATCH;
        case ErrorCode::PreconditionViolated:
        case ErrorCode::BlockTooSmall:
            return HOMALG_ERR_PRECONDITION;
        case ErrorCode::WitnessNotFound:
            return HOMALG_ERR_NOT_FOUND;
        case ErrorCode::SeparationFailure:
            return HOMALG_ERR_INTERNAL;
    }
    return HOMALG_ERR_INTERNAL;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
homalg_status guarded(homalg_context* ctx, Fn&& fn) {
    if (ctx == nullptr) return HOMALG_ERR_MALFORMED;
    ctx->error.clear();
    try {
        return fn();
    } catch (const homalg::Error& e) {
        ctx->error = std::string(homalg::to_string(e.code())) + ": " + e.what();
        return status_for(e.code());
    } catch (const std::bad_alloc&) {
        ctx->error = "out of memory";
        return HOMALG_ERR_BUDGET;
    } catch (const std::exception& e) {
        ctx->error = e.what();
        return HOMALG_ERR_INTERNAL;
    }
}

homalg::LabelMap pin_of(const size_t* pin, size_t k) {
    homalg::LabelMap out;
    if (k > 0 && pin == nullptr) throw homalg::Error(ErrorCode::Malformed, "missing pinning array");
    for (size_t i = 0; i < k; ++i) out.targets.push_back(pin[i]);
    return out;
}

homalg_status emit(const homalg::Json& j, char** out) {
    if (out == nullptr) throw homalg::Error(ErrorCode::Malformed, "null output pointer");
    *out = dup(j.dump());
    return HOMALG_OK;
}

void need(const void* p, const char* what) {
    if (p == nullptr) throw homalg::Error(ErrorCode::Malformed, std::string("null ") + what);
}

}  // namespace

extern "C" {

homalg_context* homalg_context_new(void) { return new (std::nothrow) homalg_context(); }

void homalg_context_free(homalg_context* ctx) { delete ctx; }

void homalg_context_set_budget(homalg_context* ctx, uint64_t ops) {
    if (ctx != nullptr) ctx->limits.ops = ops;
}

uint64_t homalg_context_budget(const homalg_context* ctx) { return ctx == nullptr ? 0 : ctx->limits.ops; }

const char* homalg_last_error(const homalg_context* ctx) { return ctx == nullptr ? "" : ctx->error.c_str(); }

void homalg_string_free(char* s) { std::free(s); }

homalg_status homalg_weighted_graph_from_json(homalg_context* ctx, const char* json, homalg_weighted_graph** out) {
    return guarded(ctx, [&] {
        need(json, "json");
        need(out, "output");
        auto g = homalg::weighted_graph_from_json(homalg::parse_json(json));
        *out = new homalg_weighted_graph{std::move(g)};
        return HOMALG_OK;
    });
}

homalg_status homalg_weighted_graph_to_json(homalg_context* ctx, const homalg_weighted_graph* h, char** out) {
    return guarded(ctx, [&] {
        need(h, "graph");
        return emit(homalg::to_json(h->graph), out);
    });
}

size_t homalg_weighted_graph_size(const homalg_weighted_graph* h) { return h == nullptr ? 0 : h->graph.size(); }

void homalg_weighted_graph_free(homalg_weighted_graph* h) { delete h; }

homalg_status homalg_labeled_graph_from_json(homalg_context* ctx, const char* json, homalg_labeled_graph** out) {
    return guarded(ctx, [&] {
        need(json, "json");
        need(out, "output");
        auto g = homalg::labeled_graph_from_json(homalg::parse_json(json));
        *out = new homalg_labeled_graph{std::move(g)};
        return HOMALG_OK;
    });
}

homalg_status homalg_labeled_graph_to_json(homalg_context* ctx, const homalg_labeled_graph* g, char** out) {
    return guarded(ctx, [&] {
        need(g, "graph");
        return emit(homalg::to_json(g->graph), out);
    });
}

size_t homalg_labeled_graph_label_count(const homalg_labeled_graph* g) { return g == nullptr ? 0 : g->graph.k(); }

void homalg_labeled_graph_free(homalg_labeled_graph* g) { delete g; }

homalg_status homalg_hom(homalg_context* ctx, const homalg_labeled_graph* g, const homalg_weighted_graph* h,
                         const size_t* pin, size_t pin_len, char** out_json) {
    return guarded(ctx, [&] {
        need(g, "graph");
        need(h, "target");
        homalg::FieldValue v = pin == nullptr
                                   ? homalg::hom(g->graph, h->graph, ctx->limits)
                                   : homalg::hom_partial(g->graph, h->graph, pin_of(pin, pin_len), ctx->limits);
        homalg::Json j;
        j["value"] = v.to_string();
        return emit(j, out_json);
    });
}

homalg_status homalg_contract(homalg_context* ctx, const homalg_weighted_graph* h, homalg_weighted_graph** out) {
    return guarded(ctx, [&] {
        need(h, "target");
        need(out, "output");
        *out = new homalg_weighted_graph{homalg::contract(h->graph)};
        return HOMALG_OK;
    });
}

homalg_status homalg_iso(homalg_context* ctx, const homalg_weighted_graph* a, const homalg_weighted_graph* b,
                         const size_t* pin_a, const size_t* pin_b, size_t k, homalg_iso_mode mode, char** out_json) {
    return guarded(ctx, [&] {
        need(a, "first graph");
        need(b, "second graph");
        homalg::DecideOptions opt;
        opt.limits = ctx->limits;
        opt.witness.limits = ctx->limits;
        switch (mode) {
            case HOMALG_MODE_ORACLE: opt.mode = homalg::DecideMode::Oracle; break;
            case HOMALG_MODE_CONSTRUCTIVE: opt.mode = homalg::DecideMode::Constructive; break;
            case HOMALG_MODE_BOTH: opt.mode = homalg::DecideMode::Both; break;
            default: throw homalg::Error(ErrorCode::Malformed, "unknown mode");
        }
        const auto cert = homalg::decide_pinned_iso(a->graph, b->graph, pin_of(pin_a, k), pin_of(pin_b, k), opt);
        emit(homalg::to_json(cert), out_json);
        return cert.iso() ? HOMALG_OK : HOMALG_NONISO;
    });
}

homalg_status homalg_witness(homalg_context* ctx, const homalg_weighted_graph* a, const homalg_weighted_graph* b,
                             const size_t* pin_a, const size_t* pin_b, size_t k, size_t max_free, char** out_json) {
    return guarded(ctx, [&] {
        need(a, "first graph");
        need(b, "second graph");
        homalg::WitnessOptions opt;
        opt.max_free = max_free;
        opt.limits = ctx->limits;
        const auto w = homalg::find_witness(a->graph, b->graph, pin_of(pin_a, k), pin_of(pin_b, k), opt);
        if (w) return emit(homalg::to_json(*w), out_json);
        homalg::Json j;
        j["witness"] = nullptr;
        j["note"] = "none found within bound";
        j["max_unlabeled_vertices"] = max_free;
        emit(j, out_json);
        return HOMALG_ERR_NOT_FOUND;
    });
}

homalg_status homalg_rank_report(homalg_context* ctx, const homalg_weighted_graph* h, size_t k, char** out_json) {
    return guarded(ctx, [&] {
        need(h, "target");
        homalg::RankOptions opt;
        opt.limits = ctx->limits;
        homalg::Json j;
        j["rank"] = homalg::to_json(homalg::verify_rank_theorem(h->graph, k, opt));
        j["column_space"] = homalg::to_json(homalg::verify_column_space(h->graph, k, opt));
        return emit(j, out_json);
    });
}

homalg_status homalg_orbits(homalg_context* ctx, const homalg_weighted_graph* h, size_t k, char** out_json) {
    return guarded(ctx, [&] {
        need(h, "target");
        homalg::Json j;
        j["k"] = k;
        j["orbits"] = homalg::orbit_count(h->graph, k, ctx->limits);
        return emit(j, out_json);
    });
}

homalg_status homalg_counterexample(homalg_context* ctx, uint64_t p, size_t n, const size_t* ells, size_t ells_len,
                                    size_t k, char** out_json) {
    return guarded(ctx, [&] {
        if (ells_len > 0) need(ells, "ells");
        homalg::CounterexampleSpec spec{p, n, std::vector<std::size_t>(ells, ells + ells_len)};
        homalg::ViolationOptions opt;
        opt.limits = ctx->limits;
        return emit(homalg::to_json(homalg::demonstrate_violation(spec, k, opt)), out_json);
    });
}

homalg_status homalg_selftest(homalg_context* ctx, uint64_t seed, int* passed, char** out_json) {
    return guarded(ctx, [&] {
        const auto rep = homalg::run_selftest(seed);
        homalg::Json j;
        j["seed"] = rep.seed;
        homalg::Json checks = homalg::Json::array();
        for (const auto& c : rep.checks) {
            homalg::Json e;
            e["name"] = c.name;
            e["cases"] = c.cases;
            e["failures"] = c.failures;
            e["passed"] = c.passed();
            if (!c.passed()) e["detail"] = c.detail;
            checks.push_back(e);
        }
        j["checks"] = checks;
        j["passed"] = rep.passed();
        if (passed != nullptr) *passed = rep.passed() ? 1 : 0;
        return emit(j, out_json);
    });
}

}  // extern "C"
