#ifndef EDGECONE_H
#define EDGECONE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(EDGECONE_BUILDING)
#define EC_API __attribute__((visibility("default")))
#else
#define EC_API
#endif

typedef enum ec_status {
    EC_OK = 0,
    EC_PARSE_ERROR = 1,
    EC_PRECONDITION = 2,
    EC_INTERNAL = 3,
    EC_LIMIT = 4,
    EC_INVALID_ARGUMENT = 5
} ec_status;

typedef enum ec_format { EC_JSON = 0, EC_TABLE = 1 } ec_format;

typedef struct ec_graph ec_graph;
typedef struct ec_cone ec_cone;

/* message of the last failed call on this thread, never NULL */
EC_API const char* ec_last_error(void);
/* strings returned through char** must be released here */
EC_API void ec_string_free(char* s);

/* 1 for cone JSON ({"ambient_dim", "rays"}), 0 otherwise */
EC_API int ec_input_is_cone(const char* text);

EC_API ec_status ec_graph_parse(const char* text, ec_graph** out);
EC_API void ec_graph_free(ec_graph* g);
EC_API ec_status ec_graph_info(ec_graph* g, ec_format format, char** out);
EC_API ec_status ec_graph_faces(ec_graph* g, int dim, ec_format format, char** out);
EC_API ec_status ec_graph_pairs(ec_graph* g, ec_format format, char** out);
EC_API ec_status ec_graph_t1(ec_graph* g, const long long* degree, size_t len, ec_format format, char** out);
/* json, dot and svg may each be NULL */
EC_API ec_status ec_graph_crosscut(ec_graph* g, const long long* degree, size_t len, ec_format format, char** json,
                                   char** dot, char** svg);
EC_API ec_status ec_graph_rigidity(ec_graph* g, int search_bound, ec_format format, char** out);
EC_API ec_status ec_graph_oracle_check(ec_graph* g, int vertex_limit, ec_format format, char** out);
EC_API ec_status ec_graph_export_cone(ec_graph* g, char** out);

EC_API ec_status ec_cone_parse(const char* text, ec_cone** out);
EC_API void ec_cone_free(ec_cone* c);
EC_API ec_status ec_cone_t1(ec_cone* c, const long long* degree, size_t len, ec_format format, char** out);
EC_API ec_status ec_cone_crosscut(ec_cone* c, const long long* degree, size_t len, ec_format format, char** json,
                                  char** dot, char** svg);

#ifdef __cplusplus
}
#endif

#endif
