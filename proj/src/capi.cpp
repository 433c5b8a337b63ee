#include "edgecone/edgecone.h"

#include "edgecone/error.hpp"
#include "edgecone/report.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>

using namespace edgecone;

struct ec_graph {
    EdgeConePair cone;
    std::optional<Skeleton> skeleton;

    const Skeleton& skel()
    {
        if (!skeleton)
            skeleton = make_skeleton(cone);
        return *skeleton;
    }
};

struct ec_cone {
    Cone cone;
    std::optional<Skeleton> skeleton;

    const Skeleton& skel()
    {
        if (!skeleton)
            skeleton = make_skeleton(cone, QuotientContext::plain(cone.ambient_dim()));
        return *skeleton;
    }
};

namespace {

thread_local std::string last_error;

char* copy(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const std::string& s)
{
    if (out)
        *out = copy(s);
}

std::string render(const Json& j, ec_format format)
{
    return format == EC_TABLE ? render_table(j) : j.dump(2) + "\n";
}

template <class F>
ec_status guarded(F&& body)
{
    try {
        body();
        last_error.clear();
        return EC_OK;
    } catch (const ParseError& e) {
        last_error = e.what();
        return EC_PARSE_ERROR;
    } catch (const LimitError& e) {
        last_error = e.what();
        return EC_LIMIT;
    } catch (const PreconditionError& e) {
        last_error = e.what();
        return EC_PRECONDITION;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return EC_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return EC_INTERNAL;
    }
}

ec_status invalid(const char* what)
{
    last_error = what;
    return EC_INVALID_ARGUMENT;
}

IntVector degree_of(const long long* degree, size_t len)
{
    IntVector out;
    for (size_t i = 0; i < len; ++i)
        out.emplace_back(static_cast<long>(degree[i]));
    return out;
}

void crosscut_outputs(const Skeleton& s, const IntVector& degree, ec_format format, char** json, char** dot,
                      char** svg)
{
    Crosscut q = crosscut(s, degree);
    std::string j = json ? render(crosscut_report(q), format) : "";
    std::string d = dot ? crosscut_dot(q) : "";
    std::string v = svg ? crosscut_svg(q) : "";
    emit(json, j);
    emit(dot, d);
    emit(svg, v);
}

} // namespace

extern "C" {

EC_API const char* ec_last_error(void)
{
    return last_error.c_str();
}

EC_API void ec_string_free(char* s)
{
    std::free(s);
}

EC_API int ec_input_is_cone(const char* text)
{
    if (!text)
        return 0;
    try {
        Json j = Json::parse(text);
        return j.is_object() && j.contains("ambient_dim") ? 1 : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

EC_API ec_status ec_graph_parse(const char* text, ec_graph** out)
{
    if (!text || !out)
        return invalid("null argument");
    return guarded([&] { *out = new ec_graph{build_edge_cone(parse_graph(text)), std::nullopt}; });
}

EC_API void ec_graph_free(ec_graph* g)
{
    delete g;
}

EC_API ec_status ec_graph_info(ec_graph* g, ec_format format, char** out)
{
    if (!g || !out)
        return invalid("null argument");
    return guarded([&] { emit(out, render(info_report(g->cone), format)); });
}

EC_API ec_status ec_graph_faces(ec_graph* g, int dim, ec_format format, char** out)
{
    if (!g || !out)
        return invalid("null argument");
    return guarded([&] { emit(out, render(faces_report(g->cone, dim), format)); });
}

EC_API ec_status ec_graph_pairs(ec_graph* g, ec_format format, char** out)
{
    if (!g || !out)
        return invalid("null argument");
    return guarded([&] { emit(out, render(pairs_report(g->cone), format)); });
}

EC_API ec_status ec_graph_t1(ec_graph* g, const long long* degree, size_t len, ec_format format, char** out)
{
    if (!g || !out || (!degree && len))
        return invalid("null argument");
    return guarded([&] { emit(out, render(t1_report(g->skel(), degree_of(degree, len)), format)); });
}

EC_API ec_status ec_graph_crosscut(ec_graph* g, const long long* degree, size_t len, ec_format format, char** json,
                                   char** dot, char** svg)
{
    if (!g || (!degree && len))
        return invalid("null argument");
    return guarded([&] { crosscut_outputs(g->skel(), degree_of(degree, len), format, json, dot, svg); });
}

EC_API ec_status ec_graph_rigidity(ec_graph* g, int search_bound, ec_format format, char** out)
{
    if (!g || !out)
        return invalid("null argument");
    return guarded([&] {
        RigidityVerdict v = rigidity_verdict(g->cone, search_bound);
        emit(out, render(rigidity_report(g->cone, v), format));
    });
}

EC_API ec_status ec_graph_oracle_check(ec_graph* g, int vertex_limit, ec_format format, char** out)
{
    if (!g || !out)
        return invalid("null argument");
    return guarded([&] { emit(out, render(oracle_check_report(g->cone, vertex_limit), format)); });
}

EC_API ec_status ec_graph_export_cone(ec_graph* g, char** out)
{
    if (!g || !out)
        return invalid("null argument");
    return guarded([&] { emit(out, export_cone(g->cone) + "\n"); });
}

EC_API ec_status ec_cone_parse(const char* text, ec_cone** out)
{
    if (!text || !out)
        return invalid("null argument");
    return guarded([&] {
        ConeInput in = parse_cone_json(text);
        *out = new ec_cone{Cone::from_generators(in.rays), std::nullopt};
    });
}

EC_API void ec_cone_free(ec_cone* c)
{
    delete c;
}

EC_API ec_status ec_cone_t1(ec_cone* c, const long long* degree, size_t len, ec_format format, char** out)
{
    if (!c || !out || (!degree && len))
        return invalid("null argument");
    return guarded([&] { emit(out, render(t1_report(c->skel(), degree_of(degree, len)), format)); });
}

EC_API ec_status ec_cone_crosscut(ec_cone* c, const long long* degree, size_t len, ec_format format, char** json,
                                  char** dot, char** svg)
{
    if (!c || (!degree && len))
        return invalid("null argument");
    return guarded([&] { crosscut_outputs(c->skel(), degree_of(degree, len), format, json, dot, svg); });
}

} // extern "C"
