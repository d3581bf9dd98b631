"""
From Hilbert proofs to natural deduction
========================================

"""

import random

from cmproof import check_hilbert, check_nd, format_proof, translate_hilbert_to_nd
from cmproof.corpus import build_entry
from cmproof.generate import random_hilbert_proof

# the identity law from schemes 1 and 2
proof = build_entry("hilbert_identity")
print(format_proof(proof))
print(check_hilbert(proof, "minimal").verdict)

# each axiom line becomes a small ND derivation, each mp an imp_e
nd = translate_hilbert_to_nd(proof, "minimal")
print(len(nd.steps), "ND steps", check_nd(nd, "minimal").verdict)
print(format_proof(nd))

# random proofs survive the translation too
rng = random.Random(0)
sizes = []
for _ in range(20):
    p = random_hilbert_proof(rng, max_lines=30, mode="int")
    t = translate_hilbert_to_nd(p, "int")
    assert check_nd(t, "int").accepted
    sizes.append((len(p.steps), len(t.steps)))
print(sizes)
