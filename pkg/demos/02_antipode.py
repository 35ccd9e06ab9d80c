"""The antipode of P^r, in the Milnor basis and in admissible words."""

from steenrod_bounds import milnor, seqcomb
from steenrod_bounds.milnor import MilnorElement, format_milnor

for p, r in ((2, 4), (3, 4), (5, 6)):
    chi = milnor.chi_pr(p, r)
    print(f"p={p} r={r}  degree {chi.degree}")
    print("  milnor:", " + ".join(f"{c}*{format_milnor(j)}" for j, c in chi.sorted_terms()))
    combo = milnor.milnor_to_admissible(chi)
    print("  admissible:", {w: c for w, c in sorted(combo.items(), key=lambda kv: seqcomb.right_lex_key(kv[0]), reverse=True)})
    top = seqcomb.gamma_inv(seqcomb.greatest_in_upsilon_r(p, r), p)
    print("  top word", top, "coefficient", combo[top])

    # chi is the convolution inverse of the total power
    total = MilnorElement.zero(p)
    for i in range(r + 1):
        total = total + MilnorElement.power(i, p) * milnor.chi_pr(p, r - i)
    print("  sum P^i chi(P^(r-i)) is zero:", not total)

# the change of basis is unitriangular in every degree we tried
tm = milnor.transition_matrix(3, 40)
print("degree 40, p=3:", len(tm.basis), "admissible words, diagonal", set(tm.diagonal()))
for word, row in zip(tm.basis, tm.rows):
    print(f"  {str(word):12s}", row)
