#!/usr/bin/env python3
"""Golden wire vectors for an honest SUPI session followed by one GUTI
session, test KEM, session seed 0 (provisioning seed 1000), K = 0^32.

Written from the protocol description alone: hashlib/hmac for SHA-256,
the cryptography package for AES-256-GCM, and a hand-rolled MT19937-64.
"""
import hashlib
import hmac
import json
import struct
import sys

from cryptography.hazmat.primitives.ciphers.aead import AESGCM

MASK = (1 << 64) - 1


class MT19937_64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & MASK
        for i in range(1, 312):
            self.mt[i] = (6364136223846793005 * (self.mt[i - 1] ^ (self.mt[i - 1] >> 62)) + i) & MASK
        self.idx = 312

    def _twist(self):
        for i in range(312):
            x = (self.mt[i] & 0xFFFFFFFF80000000) | (self.mt[(i + 1) % 312] & 0x7FFFFFFF)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + 156) % 312] ^ xa
        self.idx = 0

    def next(self):
        if self.idx >= 312:
            self._twist()
        y = self.mt[self.idx]
        self.idx += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK


class ByteStream:
    def __init__(self, seed):
        self.gen = MT19937_64(seed)
        self.buf = b""

    def draw(self, n):
        while len(self.buf) < n:
            self.buf += struct.pack("<Q", self.gen.next())
        out, self.buf = self.buf[:n], self.buf[n:]
        return out


def lp(*fields):
    return b"".join(struct.pack(">I", len(f)) + f for f in fields)


def H(*fields):
    return hashlib.sha256(lp(*fields)).digest()


def f(i, k, *fields):
    return hmac.new(k, bytes([i]) + lp(*fields), hashlib.sha256).digest()


def xor(a, b):
    return bytes(x ^ y for x, y in zip(a, b))


def seal(key, pt):
    return AESGCM(key).encrypt(b"\0" * 12, pt, None)


def test_pk(sk):
    return hmac.new(sk, b"pk", hashlib.sha256).digest()


def msg(tag, *fields):
    return bytes([tag]) + lp(*fields)


def opt(value):
    return b"\x01" + lp(value) if value is not None else b"\x00"


ID_HN = b"hn.mnc001.mcc001"
ID_SN = b"5G:mnc001.mcc001.3gppnetwork.org"
SUPI = b"imsi-001010000000001"
K = bytes(32)
ASSIGN_LABEL = b"pqaka guti assignment"


def vector(k_star, r_sn):
    mac = f(1, K, k_star, r_sn)
    xres = f(2, K, k_star)
    ck = f(3, K, k_star)
    ik = f(4, K, k_star)
    ak = f(5, K, k_star)
    conc = xor(ak, r_sn)
    xres_star = H(ck, ik, k_star, xres, ID_SN)
    k_ausf = H(ck, ik, k_star, conc, ID_SN)
    k_seaf = H(k_ausf, ID_SN)
    return dict(autn=conc + mac, hxres=H(r_sn, xres_star), xres_star=xres_star,
                k_seaf=k_seaf, m=seal(xor(xres_star, ak), k_seaf + SUPI))


def main():
    prov = ByteStream(1000)
    sess = ByteStream(0)
    sk_h = prov.draw(32)
    pk_h = test_pk(sk_h)
    out = []

    def emit(name, b):
        out.append({"name": name, "type": b[0], "hex": b.hex()})

    # SUPI session
    emit("supi.IdRequest", bytes([0x01]))
    sk_u = sess.draw(32)
    pk_u = test_pk(sk_u)
    c1 = sess.draw(32)
    k_s1 = H(pk_h, c1)
    suci_conc = seal(k_s1, lp(SUPI, pk_u, ID_SN))
    mac_u = hmac.new(k_s1, suci_conc, hashlib.sha256).digest()
    emit("supi.IdResponse", msg(0x02, c1, suci_conc, mac_u, ID_HN))
    r_sn = sess.draw(32)
    emit("supi.SnToHnIdent", msg(0x03, c1, suci_conc, mac_u, r_sn))
    c2 = sess.draw(32)
    k_s2 = H(pk_u, c2)
    v = vector(k_s2, r_sn)
    emit("supi.HnToSnAuth", msg(0x04, v["autn"], v["hxres"], v["m"]) + opt(c2))
    emit("supi.Challenge", msg(0x05, v["autn"]) + opt(c2))
    emit("supi.Response", msg(0x06, v["xres_star"]))
    emit("supi.Confirm", msg(0x07, b"\x01"))
    guti = sess.draw(16)
    r_sn_prime = sess.draw(32)
    assign = msg(0x0A, guti, r_sn_prime)
    emit("supi.GutiAssign", assign)
    emit("supi.Secured", msg(0x0B, seal(H(v["k_seaf"], ASSIGN_LABEL), assign)))
    k_s = H(k_s2, r_sn)

    # GUTI session
    emit("guti.GutiId", msg(0x08, guti))
    r_sn2 = sess.draw(32)
    emit("guti.GutiSnToHn", msg(0x09, SUPI, r_sn_prime, r_sn2))
    v2 = vector(xor(k_s, r_sn_prime), r_sn2)
    emit("guti.HnToSnAuth", msg(0x04, v2["autn"], v2["hxres"], v2["m"]) + opt(None))
    emit("guti.Challenge", msg(0x05, v2["autn"]) + opt(None))
    emit("guti.Response", msg(0x06, v2["xres_star"]))
    emit("guti.Confirm", msg(0x07, b"\x01"))
    guti2 = sess.draw(16)
    r_sn_prime2 = sess.draw(32)
    assign2 = msg(0x0A, guti2, r_sn_prime2)
    emit("guti.GutiAssign", assign2)
    emit("guti.Secured", msg(0x0B, seal(H(v2["k_seaf"], ASSIGN_LABEL), assign2)))

    emit("HnAbort", bytes([0x0C]))
    keys = {"name": "keys", "supi_k_seaf": v["k_seaf"].hex(), "guti_k_seaf": v2["k_seaf"].hex(),
            "k_s_after_supi": k_s.hex(), "k_s_after_guti": H(xor(k_s, r_sn_prime), r_sn2).hex()}

    dest = sys.argv[1] if len(sys.argv) > 1 else "golden_test_seed0.jsonl"
    with open(dest, "w") as fh:
        for row in out:
            fh.write(json.dumps(row) + "\n")
        fh.write(json.dumps(keys) + "\n")


if __name__ == "__main__":
    assert MT19937_64(5489).next() == 14514284786278117030
    main()
