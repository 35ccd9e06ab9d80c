"""Exponent sequences: Upsilon_r, the gamma bijection, and the excess function."""

from steenrod_bounds import seqcomb

p = 3

# Upsilon_r lists every sequence of weight r, largest first in right-lex order
for r in range(1, 9):
    ups = seqcomb.enumerate_upsilon_r(p, r)
    top = seqcomb.greatest_in_upsilon_r(p, r)
    print(f"r={r:2d}  |Upsilon_r|={len(ups):2d}  greatest={top}  admissible={seqcomb.gamma_inv(top, p)}")

# gamma sends admissible words to arbitrary sequences and back
word = (13, 4, 1)
print(word, "->", seqcomb.gamma(word, p), "->", seqcomb.gamma_inv(seqcomb.gamma(word, p), p))

# ex(r) moves up by 2 or drops by 2(p-1) at each step
row = [seqcomb.ex(p, r) for r in range(0, 25)]
print("ex:", row)
print("steps:", sorted({b - a for a, b in zip(row, row[1:])}))

# the closed-form count against a direct scan over k
for n in (10, 50, 200):
    print(n, seqcomb.count_k(p, n), seqcomb.count_k_brute(p, n))
