"""
A degree-zero certificate for the star
======================================

The star K_{1,n} needs n colors to be rainbow connected: every leaf pair
is joined only through the center. Over GF(2) the 2-rainbow system for
the star is linear, and three of its equations already add up to 1.
"""

from rainbowalg import encode_rc2, generate, search_certificate, verify_certificate
from rainbowalg.oracle import rc_exact

###############################################################################
# Encode K_{1,3}. Edge e_i joins the center to leaf i, so x_i is its color.

star = generate("star", 3)
system = encode_rc2(star)
for f in system:
    print(f, "= 0")

###############################################################################
# Search for a certificate. Degree 0 means every cofactor is a constant.

outcome = search_certificate(system)
cert = outcome.certificate
print("outcome:", outcome.kind, "at degree", cert.degree)
print("cofactors:", [str(h) for h in cert.cofactors])
print("verified:", verify_certificate(system, cert))

###############################################################################
# Larger stars reuse the same triangle of leaf pairs.

for n in (4, 5, 6):
    s = encode_rc2(generate("star", n))
    c = search_certificate(s).certificate
    used = [i for i, h in enumerate(c.cofactors) if h == 1]
    print(f"K1,{n}: {len(s)} equations, certificate uses equations {used}, rc = {rc_exact(generate('star', n))}")
