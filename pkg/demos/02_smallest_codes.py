"""The smallest distance-3 parafermion codes: [[8,1,3]]_3 and [[6,1,3]]_7.

Validates each code, reports |S|, |C_S|, k, d and l_con, and walks through
a round of error detection via syndromes.
"""

from pfstab import PfOperator, analyze, code_6_1_3_d7, code_8_1_3_d3, syndrome

for code in (code_8_1_3_d3(), code_6_1_3_d7()):
    report = analyze(code)
    print(f"=== D={code.modulus}, modes={code.num_modes} ===")
    print(report.render_table())
    print()

# Syndromes: a weight-1 error anticommutes with at least one generator of a
# distance-3 code, so its syndrome is nonzero and the error is detected.
code = code_8_1_3_d3()
print("syndromes of single-mode errors against the 8-mode code:")
for mode in range(1, 9):
    err = PfOperator.gamma(3, 8, mode)
    print(f"  g{mode}: {syndrome(code, err)}")

# Stabilizer elements are invisible by construction.
g1 = code.generators[0]
print("\nsyndrome of a stabilizer generator:", syndrome(code, g1))
