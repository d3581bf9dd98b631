"""
Checking a natural-deduction proof
==================================

"""

# parse a Fitch-style script; bars mark the open assumption blocks
from cmproof import check_nd, parse_proof

text = """
name: contraposition
kernel: nd
mode: minimal

1. | 0 in A -> 0 in B                            by assume
2. | | ~(0 in B)                                 by assume
3. | | | 0 in A                                  by assume
4. | | | 0 in B                                  by imp_e 1, 3
5. | | | bot                                     by imp_e 2, 4
6. | | ~(0 in A)                                 by imp_i 3-5
7. | ~(0 in B) -> ~(0 in A)                      by imp_i 2-6
8. (0 in A -> 0 in B) -> ~(0 in B) -> ~(0 in A)  by imp_i 1-7
"""
script = parse_proof(text)
print(check_nd(script, "minimal"))

# the same rules in a weaker or stronger mode
for mode in ["minimal", "int", "cm"]:
    print(mode, check_nd(script, mode).verdict)

# ex falso is what separates intuitionistic from minimal logic
ds = parse_proof("""
1. | (0 in A \\/ 0 in B) /\\ ~(0 in A)          by assume
2. | 0 in A \\/ 0 in B                         by and_e1 1
3. | ~(0 in A)                                by and_e2 1
4. | | 0 in A                                 by assume
5. | | bot                                    by imp_e 3, 4
6. | | 0 in B                                 by ex_falso 5
7. | | 0 in B                                 by assume
8. | 0 in B                                   by or_e 2, 4-6, 7-7
9. (0 in A \\/ 0 in B) /\\ ~(0 in A) -> 0 in B  by imp_i 1-8
""")
for d in check_nd(ds, "minimal").diagnostics:
    print(d.index, d.code, d.message)
print(check_nd(ds, "int").verdict)

# excluded middle is only for formulas without set or class quantifiers
em_sets = parse_proof("1. (exists X. 0 in X) \\/ ~(exists X. 0 in X)  by em")
em_numbers = parse_proof("1. (forall n. n = n) \\/ ~(forall n. n = n)  by em")
print(check_nd(em_sets, "cm").codes, check_nd(em_numbers, "cm").verdict)
