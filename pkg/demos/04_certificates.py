"""
Certificates
============

Produce and re-verify the JSON certificates the ``tdp`` command emits. The
same functions back ``tdp color``, ``tdp exact`` and ``tdp verify``.
"""

import json

from tdp import certificate, gen_named

g = gen_named("moebius_ladder", 5)
out = certificate.color(g)
cert = out.certificate
print(json.dumps({k: cert[k] for k in ("format", "mode", "derivation", "checks")}, indent=2))
print("exit code:", out.exit_code)

# Re-verify from scratch, then paint every vertex black. (Flipping a single
# vertex is not always enough: the result can still be a valid colouring.)
print("verify:", certificate.verify_certificate(g, cert))
cert["coloring"] = ["B"] * g.n
print("tampered:", certificate.verify_certificate(g, cert))

# A negative certificate from the oracle.
h = gen_named("heawood")
out = certificate.color(h)
print("Heawood:", out.exit_code, out.message, out.certificate["oracle"]["d_t"])

# Shell equivalents:
#   tdp gen prism 3 | tdp color > prism3.json
#   tdp gen prism 3 > prism3.g6 && tdp verify --input prism3.g6 --certificate prism3.json
#   tdp gen heawood | tdp exact --output text
#   tdp bench --random 100 --n-base 16 --truncate --seed 0 --csv rows.csv
