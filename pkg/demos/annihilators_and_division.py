# The two operators P, Q killing alpha^beta, and division by them.
from fractions import Fraction

from dmod.action import apply_op, generator, verify_annihilators
from dmod.arrangement import Arrangement, normalize_coordinates
from dmod.weyl import build_annihilators, in_N0_span, normal_form, parse_op, weight_component

# three lines y, x, x+2y; normalization swaps the first two and rescales
arr = Arrangement(((0, 1), (1, 0), (1, 2)), (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)))
na = normalize_coordinates(arr)
print("normalized forms:", ", ".join(map(str, na.forms())), " c =", list(map(str, na.c)))

ann = build_annihilators(na)
print("P =", ann.P)
print("Q =", ann.Q)
print("both vanish on alpha^beta:", verify_annihilators(ann, na).ok)

# Dy alone does not kill the generator
g = generator(na.as_arrangement())
print("Dy alpha^beta =", apply_op(parse_op("Dy"), g).render())

# divide a weight-zero operator; the remainder lands in the small span
F = parse_op("x^2*Dx^2 + y^3*Dy^3 - 2*x*y*Dx*Dy + 5")
S1, S2, R = normal_form(F, ann)
print()
print("F  =", F)
print("S1 =", S1)
print("S2 =", S2)
print("R  =", R)
print("reconstructs:", S1 * ann.P + S2 * ann.Q + R == F)
print("R in span:", in_N0_span(weight_component(R, 0), ann.m))
