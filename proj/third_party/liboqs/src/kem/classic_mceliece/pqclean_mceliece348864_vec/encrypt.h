#ifndef PQCLEAN_MCELIECE348864_VEC_ENCRYPT_H
#define PQCLEAN_MCELIECE348864_VEC_ENCRYPT_H
/*
  This file is for Niederreiter encryption
*/


void PQCLEAN_MCELIECE348864_VEC_encrypt(unsigned char * /*s*/, unsigned char * /*e*/, const unsigned char * /*pk*/);

#endif

