#ifndef PQCLEAN_MCELIECE348864_AVX_INT32_SORT_H
#define PQCLEAN_MCELIECE348864_AVX_INT32_SORT_H

#include <stddef.h>
#include <stdint.h>

void PQCLEAN_MCELIECE348864_AVX_int32_sort(int32_t *x, size_t n);

#endif
