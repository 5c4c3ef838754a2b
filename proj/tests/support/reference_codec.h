#pragma once

/* graph6 through nauty's own gtools routines. Rows are bitsets with vertex v
   at bit v (the nauty bit order is converted inside). */

#ifdef __cplusplus
extern "C" {
#endif

/* Order of the record, or -1 when nauty rejects it. */
int ref_graph6_order(const char* record);

/* Decodes into rows[0..n). Returns n, or -1 for orders above 64. */
int ref_graph6_decode(const char* record, unsigned long long* rows);

/* Writes the record, without newline, into out (at least 720 bytes). */
void ref_graph6_encode(int n, const unsigned long long* rows, char* out);

#ifdef __cplusplus
}
#endif
