#ifndef VLSIKIT_H
#define VLSIKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define VK_API __declspec(dllexport)
#else
#  define VK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vk_status {
  VK_OK = 0,
  VK_ERR_INPUT = 1,     /* malformed case or argument */
  VK_ERR_ANALYSIS = 2,  /* infeasible, out of domain, solver failure */
  VK_ERR_INTERNAL = 3,
  VK_ERR_NULL = 4       /* a required pointer argument was NULL */
} vk_status;

typedef enum vk_format { VK_FORMAT_JSON = 0, VK_FORMAT_TABLE = 1 } vk_format;

typedef struct vk_report vk_report;
typedef struct vk_rctree vk_rctree;
typedef struct vk_lfsr vk_lfsr;
typedef struct vk_netlist vk_netlist;

VK_API const char* vk_version(void);

/* Message of the last failed call on this thread, or "" */
VK_API const char* vk_last_error(void);

/* Case files. On return *out holds either the report text or, when the
   status is not VK_OK, a JSON error object; free it with vk_report_free. */
VK_API vk_status vk_run_case(const char* case_json, vk_format format, vk_report** out);
VK_API vk_status vk_validate_case(const char* case_json, vk_report** out);
VK_API vk_status vk_list(vk_format format, vk_report** out);
VK_API const char* vk_report_text(const vk_report* r);
VK_API const char* vk_report_error(const vk_report* r);
VK_API void vk_report_free(vk_report* r);

/* RC trees; node 0 is the root. */
VK_API vk_status vk_rctree_create(double root_c, vk_rctree** out);
VK_API vk_status vk_rctree_add(vk_rctree* t, int parent, double r, double c, int* node);
VK_API vk_status vk_rctree_elmore(const vk_rctree* t, int sink, double scale, double* delay);
VK_API void vk_rctree_free(vk_rctree* t);

/* Galois LFSR from a polynomial such as "1 + x^2 + x^7 + x^8". */
VK_API vk_status vk_lfsr_create(const char* polynomial, vk_lfsr** out);
VK_API int vk_lfsr_degree(const vk_lfsr* l);
VK_API uint64_t vk_lfsr_step(const vk_lfsr* l, uint64_t state);
VK_API vk_status vk_lfsr_period(const vk_lfsr* l, uint64_t seed, uint64_t* period);
VK_API void vk_lfsr_free(vk_lfsr* l);

/* Gate netlists in the case-file JSON shape. Vectors hold one byte per
   input (0 or 1) in declaration order. */
VK_API vk_status vk_netlist_parse(const char* netlist_json, vk_netlist** out);
VK_API size_t vk_netlist_inputs(const vk_netlist* n);
VK_API size_t vk_netlist_outputs(const vk_netlist* n);
VK_API vk_status vk_netlist_simulate(const vk_netlist* n, const unsigned char* in, unsigned char* out);
/* *found is 0 for an untestable fault; otherwise vector holds the test. */
VK_API vk_status vk_netlist_atpg(const vk_netlist* n, const char* net, int stuck_value,
                                 unsigned char* vector, int* found);
VK_API void vk_netlist_free(vk_netlist* n);

#ifdef __cplusplus
}
#endif

#endif
