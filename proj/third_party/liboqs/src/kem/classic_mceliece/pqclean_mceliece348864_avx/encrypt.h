#ifndef PQCLEAN_MCELIECE348864_AVX_ENCRYPT_H
#define PQCLEAN_MCELIECE348864_AVX_ENCRYPT_H
/*
  This file is for Niederreiter encryption
*/


void PQCLEAN_MCELIECE348864_AVX_encrypt(unsigned char * /*s*/, unsigned char * /*e*/, const unsigned char * /*pk*/);

#endif

