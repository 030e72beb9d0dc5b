#ifndef SUSPGRAPH_H
#define SUSPGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum SgStatus {
  /**
   * The call succeeded.
   */
  SgOk = 0,
  /**
   * A pointer argument was null.
   */
  SgNullPointer = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  SgInvalidUtf8 = 2,
  /**
   * The input could not be parsed or violates a precondition.
   */
  SgInvalidInput = 3,
  /**
   * The graph is not the resolution graph of any suspension singularity.
   */
  SgNotRealizable = 4,
} SgStatus;

/**
 * Opaque decorated plumbing graph.
 */
typedef struct SgGraph SgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph from the `version 1` text format.
 */
enum SgStatus sg_graph_parse(const char *text, struct SgGraph **out);

/**
 * Serializes a graph into the `version 1` text format.
 */
enum SgStatus sg_graph_serialize(const struct SgGraph *g, char **out);

/**
 * Releases a graph handle. Null is ignored.
 */
void sg_graph_free(struct SgGraph *g);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void sg_string_free(char *s);

/**
 * Number of vertices in the graph.
 */
enum SgStatus sg_graph_vertex_count(const struct SgGraph *g, uintptr_t *out);

/**
 * Determinant det(-I) of the graph, as a decimal string.
 */
enum SgStatus sg_graph_determinant(const struct SgGraph *g, char **out);

/**
 * Blows down all contractible (-1)-vertices.
 */
enum SgStatus sg_graph_minimalize(const struct SgGraph *g, struct SgGraph **out);

/**
 * Minimal embedded resolution graph of the plane curve with the given
 * Newton pairs (`"p:q,p:q,..."`).
 */
enum SgStatus sg_plane_curve(const char *pairs, struct SgGraph **out);

/**
 * Resolution graph of the suspension `{f + z^n = 0}`. `minimal` selects the
 * blown-down graph (otherwise the canonical covering graph is returned) and
 * `with_arrow` keeps the arrowhead and multiplicities of `z`.
 */
enum SgStatus sg_suspend(const char *pairs,
                         uint64_t n,
                         int minimal,
                         int with_arrow,
                         struct SgGraph **out);

/**
 * Recovers the Newton pairs and `n` from a minimal resolution graph. The
 * optional decimal `milnor` number (null to skip) resolves ambiguous
 * families. The result is written as text, one `candidate ...` line per
 * solution after an `outcome ...` line.
 */
enum SgStatus sg_recover(const struct SgGraph *g, const char *milnor, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SUSPGRAPH_H */
