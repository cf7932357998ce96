// SPDX-License-Identifier: Apache-2.0
#include "zhukit/zhukit.h"

#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"
#include "enveloping.hpp"
#include "modules.hpp"

struct zk_algebra {
    std::shared_ptr<const zhukit::ModeAlgebra> alg;
};

struct zk_module {
    std::shared_ptr<const zhukit::ModeAlgebra> alg;
    zhukit::ZhuModuleInput input;
};

struct zk_report {
    zhukit::Report report;
};

namespace {

thread_local std::string g_error;
thread_local long g_position = -1;

zk_status fail(zk_status s, const std::string& msg, long pos = -1) {
    g_error = msg;
    g_position = pos;
    return s;
}

template <class F>
zk_status guarded(F&& f) {
    g_error.clear();
    g_position = -1;
    try {
        f();
        return ZK_OK;
    } catch (const zhukit::ParseError& e) {
        return fail(ZK_E_PARSE, e.what(), static_cast<long>(e.position));
    } catch (const zhukit::SchemaError& e) {
        return fail(ZK_E_SCHEMA, e.what());
    } catch (const zhukit::TruncationError& e) {
        return fail(ZK_E_TRUNCATION, e.what());
    } catch (const zhukit::PoleError& e) {
        return fail(ZK_E_POLE, e.what());
    } catch (const zhukit::PreconditionError& e) {
        return fail(ZK_E_PRECONDITION, e.what());
    } catch (const zhukit::ZhukitError& e) {
        return fail(ZK_E_INTERNAL, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(ZK_E_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ZK_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ZK_E_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

#define ZK_REQUIRE(cond) \
    if (!(cond)) return fail(ZK_E_ARGUMENT, "invalid argument: " #cond)

}  // namespace

extern "C" {

const char* zk_version(void) { return zhukit::tool_version(); }

const char* zk_status_name(zk_status s) {
    switch (s) {
        case ZK_OK: return "ok";
        case ZK_E_ARGUMENT: return "argument";
        case ZK_E_PRECONDITION: return "precondition";
        case ZK_E_PARSE: return "parse";
        case ZK_E_SCHEMA: return "schema";
        case ZK_E_TRUNCATION: return "truncation";
        case ZK_E_POLE: return "pole";
        case ZK_E_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* zk_last_error(void) { return g_error.c_str(); }
long zk_last_error_position(void) { return g_position; }
void zk_string_free(char* s) { std::free(s); }

zk_status zk_algebra_preset(const char* name, zk_algebra** out) {
    ZK_REQUIRE(name && out);
    return guarded([&] { *out = new zk_algebra{std::make_shared<zhukit::ModeAlgebra>(zhukit::preset(name))}; });
}

zk_status zk_algebra_from_json(const char* text, zk_algebra** out) {
    ZK_REQUIRE(text && out);
    return guarded([&] { *out = new zk_algebra{std::make_shared<zhukit::ModeAlgebra>(zhukit::load_lca_json(text))}; });
}

void zk_algebra_free(zk_algebra* a) { delete a; }

zk_status zk_algebra_name(const zk_algebra* a, char** out) {
    ZK_REQUIRE(a && out);
    return guarded([&] { *out = dup(a->alg->spec().name); });
}

zk_status zk_algebra_generator_count(const zk_algebra* a, int* out) {
    ZK_REQUIRE(a && out);
    *out = a->alg->num_generators();
    return ZK_OK;
}

zk_status zk_algebra_check_axioms(const zk_algebra* a, int* ok) {
    ZK_REQUIRE(a && ok);
    return guarded([&] { *ok = zhukit::check_axioms(a->alg->spec()).ok() ? 1 : 0; });
}

zk_status zk_reduce(const zk_algebra* a, long p, const char* expression, char** out) {
    ZK_REQUIRE(a && expression && out);
    return guarded([&] {
        if (p < 0) throw zhukit::PreconditionError("p must be >= 0");
        zhukit::Enveloping U(a->alg);
        const auto x = zhukit::evaluate(U, zhukit::parse_expression(*a->alg, expression));
        if (!x.is_zero() && zhukit::element_degree(x) != 0) throw zhukit::PreconditionError("expression must have degree 0");
        const auto nf = zhukit::zp_reduce(U, x, p);
        *out = dup(nf.is_zero() ? "0" : U.render(nf));
    });
}

zk_status zk_module_from_json(const zk_algebra* a, const char* text, zk_module** out) {
    ZK_REQUIRE(a && text && out);
    return guarded([&] { *out = new zk_module{a->alg, zhukit::load_zhu_module(text, a->alg)}; });
}

zk_status zk_module_default(const zk_algebra* a, zk_module** out) {
    ZK_REQUIRE(a && out);
    return guarded([&] { *out = new zk_module{a->alg, zhukit::default_module(a->alg)}; });
}

void zk_module_free(zk_module* m) { delete m; }

zk_status zk_module_dimension(const zk_module* m, int* out) {
    ZK_REQUIRE(m && out);
    *out = m->input.dimension;
    return ZK_OK;
}

zk_status zk_module_weight_dims(const zk_module* m, long depth, long* dims) {
    ZK_REQUIRE(m && dims && depth >= 0);
    return guarded([&] {
        zhukit::InducedModule M(m->alg, m->input, depth);
        const auto d = M.dims();
        for (std::size_t i = 0; i < d.size(); ++i) dims[i] = d[i];
    });
}

zk_status zk_run(const char* command, const char* config_json, zk_report** out) {
    ZK_REQUIRE(command && config_json && out);
    return guarded([&] {
        const auto cfg = nlohmann::ordered_json::parse(config_json);
        *out = new zk_report{zhukit::run_command(command, cfg)};
    });
}

void zk_report_free(zk_report* r) { delete r; }

int zk_report_exit_code(const zk_report* r) { return r ? zhukit::exit_code(r->report) : 2; }

zk_status zk_report_json(const zk_report* r, int include_timing, char** out) {
    ZK_REQUIRE(r && out);
    return guarded([&] {
        zhukit::Report copy = r->report;
        if (!include_timing) copy.wall_seconds.reset();
        *out = dup(zhukit::render_json(copy));
    });
}

zk_status zk_report_text(const zk_report* r, int include_timing, char** out) {
    ZK_REQUIRE(r && out);
    return guarded([&] {
        zhukit::Report copy = r->report;
        if (!include_timing) copy.wall_seconds.reset();
        *out = dup(zhukit::render_text(zhukit::report_json(copy)));
    });
}

}  // extern "C"
