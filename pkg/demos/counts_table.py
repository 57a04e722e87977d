# Counting decomposition factors over a small grid of exponents.
# Every row is compared with the closed formulas: 2m when all exponents are
# integers, otherwise m+k-1 or k+1 depending on whether the sum is an integer.
import itertools
from fractions import Fraction

from dmod import count_factors
from dmod.sampling import generic_arrangement
from dmod.scalar import Scalar

grid = [Scalar(v) for v in (0, Fraction(1, 2), Fraction(1, 3))]

print(" m  k  sum      count  case")
for m in range(1, 5):
    seen = set()
    for beta in itertools.combinations_with_replacement(grid, m):
        rep = count_factors(generic_arrangement(beta))
        key = (rep.k, rep.case_tag)
        if key in seen:
            continue
        seen.add(key)
        total = sum(beta, Scalar(0))
        print(f"{m:>2} {rep.k:>2}  {str(total):<8} {rep.count:>5}  {rep.case_tag.value}")

# the simple cases: no integer exponent, and either m <= 2 or a non-integer sum
half = Scalar(Fraction(1, 2))
print()
print(count_factors(generic_arrangement([half] * 3)).render())

# integer sum with one integer line; the origin tally follows the m-2 accounting
print()
print(count_factors(generic_arrangement([half, half, Scalar(1)])).render())
