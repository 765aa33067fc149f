"""Round trips between qudit stabilizer codes and parafermion codes.

Three conversions:
  * qudit -> parafermion: four modes per qudit, distance doubles;
  * parafermion -> qudit CSS: the block matrix (S L | 0 ; 0 | S) on 2n qudits;
  * D=3 -> D=6 doubling: cube pairs plus squared generators keep a qutrit.
"""

from pfstab import (
    analyze,
    code_8_1_3_d3,
    codespace_dim,
    distance,
    double_code_d6,
    double_to_css,
    embed_qudit_code,
    five_qutrit_code,
)
from pfstab.algebra import PfOperator

qudit = five_qutrit_code()
print("five-qutrit code: distance", qudit.distance(), "codespace", qudit.codespace_dim())

embedded = embed_qudit_code(qudit)
print(f"embedded: {embedded.num_modes} modes, {len(embedded.generators)} generators")
print("embedded distance:", distance(embedded).value, "(doubled, as promised)")

css = double_to_css(code_8_1_3_d3())
print(f"\nCSS double of the 8-mode code: {css.num_qudits} qutrits, k' = 2"
      f" (codespace {css.codespace_dim()}), rows commute: {css.commutes()}")
print("qudit-side distance of the double:", css.distance(max_weight=4))

code6 = double_code_d6(code_8_1_3_d3())
print(f"\nD=6 double: {len(code6.generators)} generators, codespace {codespace_dim(code6)}")
print("generator phases:", [g.mu for g in code6.generators], "(cube pairs carry the i factor)")
lx = PfOperator(6, 8, 0, tuple((2 * a) % 6 for a in (2, 1, 1, 0, 0, 0, 1, 0)))
lz = PfOperator(6, 8, 0, tuple((2 * a) % 6 for a in (0, 2, 2, 0, 0, 1, 0, 0)))
print("squared logical pair pairing exponent:", lx.commutation_exponent(lz), "(order 3 in Z_6: a qutrit)")
