/**
 * \file oqs.h
 * \brief Overall header file for liboqs.
 *
 * C programs using liboqs can include just this one file, and it will include all
 * other necessary headers from liboqs.
 *
 * SPDX-License-Identifier: MIT
 */

#ifndef OQS_H
#define OQS_H

#include <oqs/oqsconfig.h>

#include <oqs/common.h>
#include <oqs/aes.h>
#include <oqs/sha2.h>
#include <oqs/sha3.h>
#include <oqs/sha3x4.h>
#include <oqs/rand.h>
#include <oqs/kem.h>
#include <oqs/sig.h>

#endif // OQS_H
