# Reduction certificates: each printed line is an operator identity that was
# re-multiplied out when the object was built.
from fractions import Fraction

from dmod.certs import lemma44_reduce, lemma45_quotient_class, quotient_class_from_chain
from dmod.weyl import build_annihilators

for gamma, k in [(Fraction(1, 2), 3), (-2, 3), (-4, 3)]:
    chain = lemma44_reduce(gamma, k)
    print(f"gamma={gamma}, k={k}: {chain.conclusion.value}")
    for line in chain.render():
        print("   ", line)

# quotient by x, P, Q with shifted exponents summing to -3, m = 4
bt = [Fraction(1, 3), Fraction(-10, 3), 0, 0]
ann = build_annihilators([1, 2], bt)
cls, simp, chain = quotient_class_from_chain(ann, bt)
print()
for line in simp.render():
    print(line)
print("class via chain:", cls.value, "  via range test:", lemma45_quotient_class(sum(bt), 4).value)
