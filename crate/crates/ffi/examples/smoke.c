#include <stdio.h>
#include "quandle.h"

int main(void) {
    QdlQuandle *q = NULL;
    if (qdl_quandle_from_json("{\"type\":\"sphere\",\"dim\":4}", &q) != QDL_STATUS_OK) {
        fprintf(stderr, "%s\n", qdl_last_error_message());
        return 1;
    }
    QdlReport *r = NULL;
    if (qdl_euler(q, 100000, &r) != QDL_STATUS_OK) {
        fprintf(stderr, "%s\n", qdl_last_error_message());
        qdl_quandle_free(q);
        return 1;
    }
    QdlEulerSummary s;
    qdl_report_summary(r, &s);
    char *json = NULL;
    qdl_report_to_json(r, &json);
    printf("quandle %s: size %zu, chi %zu\n%s\n", qdl_version(), qdl_quandle_size(q), s.chi, json);
    qdl_string_free(json);
    qdl_report_free(r);
    qdl_quandle_free(q);
    return s.exact && s.chi == 2 ? 0 : 1;
}
