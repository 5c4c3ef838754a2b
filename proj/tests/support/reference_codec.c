#include "reference_codec.h"

#include <string.h>

#include "gtools.h"

int ref_graph6_order(const char* record) {
    char buf[1024];
    strncpy(buf, record, sizeof buf - 1);
    buf[sizeof buf - 1] = '\0';
    return graphsize(buf);
}

int ref_graph6_decode(const char* record, unsigned long long* rows) {
    char buf[1024];
    graph g[64];
    int n, v, w;

    strncpy(buf, record, sizeof buf - 2);
    buf[sizeof buf - 2] = '\0';
    n = graphsize(buf);
    if (n < 0 || n > 64) return -1;
    stringtograph(buf, g, 1);
    for (v = 0; v < n; ++v) {
        rows[v] = 0;
        for (w = 0; w < n; ++w)
            if (ISELEMENT(GRAPHROW(g, v, 1), w)) rows[v] |= 1ULL << w;
    }
    return n;
}

void ref_graph6_encode(int n, const unsigned long long* rows, char* out) {
    graph g[64];
    int v, w;
    char* s;
    size_t len;

    EMPTYGRAPH(g, 1, n);
    for (v = 0; v < n; ++v)
        for (w = 0; w < n; ++w)
            if ((rows[v] >> w) & 1ULL) ADDELEMENT(GRAPHROW(g, v, 1), w);
    s = ntog6(g, 1, n);
    len = strlen(s);
    if (len > 0 && s[len - 1] == '\n') --len;
    memcpy(out, s, len);
    out[len] = '\0';
}
