/* Build (after `cargo build -p riaut-ffi --release`):
 *   cc -I crates/ffi/include examples/smoke.c -L target/release -lriaut_ffi -lpthread -ldl -lm -o smoke
 */
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "riaut.h"

int main(void) {
    RiautTable *sigma = NULL, *sq = NULL, *max = NULL;
    assert(riaut_table_parse(2, "[a->b,b->a]", &sigma) == RIAUT_STATUS_OK);
    assert(riaut_compose(sigma, sigma, &sq) == RIAUT_STATUS_OK);
    char *text = riaut_table_to_text(sq);
    assert(strcmp(text, "[a->a,b->b]") == 0);
    riaut_string_free(text);
    assert(riaut_max_extend(sq, &max) == RIAUT_STATUS_OK);
    text = riaut_table_to_text(max);
    assert(strcmp(text, "[^->^]") == 0);
    riaut_string_free(text);
    char *img = NULL;
    assert(riaut_apply(sigma, "abb", &img) == RIAUT_STATUS_OK);
    assert(strcmp(img, "bbb") == 0);
    riaut_string_free(img);
    assert(riaut_apply(sigma, "^", &img) == RIAUT_STATUS_UNDEFINED);
    RiautTable *bad = NULL;
    assert(riaut_table_parse(2, "[a->b]", &bad) == RIAUT_STATUS_INVALID_ELEMENT);
    printf("last error: %s\n", riaut_last_error());
    riaut_table_free(sigma); riaut_table_free(sq); riaut_table_free(max);
    puts("c smoke ok");
    return 0;
}
