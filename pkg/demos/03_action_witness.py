"""chi(P^r) acting on products of degree-2 classes."""

from steenrod_bounds import polyaction
from steenrod_bounds.polyaction import PolyClass, apply_pk, format_monomial

# P^k on a single generator power is a binomial coefficient
f = PolyClass.monomial(3, (4,))
for k in range(5):
    print(f"P^{k}(i1^4) =", apply_pk(3, k, f))

# chi(P^r) on i1*...*i_m where m is the minimal excess over 2
for p, rmax in ((2, 8), (3, 6)):
    for r in range(1, rmax + 1):
        rep = polyaction.chi_nontriviality_witness(p, r)
        lead = format_monomial(rep.witness_monomial)
        print(f"p={p} r={r}  m={rep.nvars}  terms={len(rep.result.terms):3d}  leading {lead}  coeff {rep.witness_coefficient}  ok={rep.ok}")
