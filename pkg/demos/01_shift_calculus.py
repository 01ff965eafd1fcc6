"""A tour of the shift calculus.

The generators S_k acquire shifted companions S_k^[s] by re-expanding the
generating series over a tau-shifted denominator basis.  This demo prints a
few of them, checks the automorphism property, and shows the bracket
coefficients that control everything.
"""

from ncshift import NCElement, ParamPoly, a_binomial, phi_shift, shift_S
from ncshift.params import ParamSubstitution

S = NCElement.gen

print("Shifted generators in the S-basis")
for k in (1, 2, 3):
    for s in (1, -1):
        print(f"  S_{k}^[{s:+d}] = {shift_S(k, s)}")

print()
print("phi^[s] is an automorphism composing additively:")
x = S(2) * S(1) + S(3).scale(ParamPoly.gen(0))
lhs = phi_shift(phi_shift(x, 2), -2)
print(f"  phi^[-2] phi^[2] (x) == x : {lhs == x}")

print()
print("Bracket coefficients {l nu}_k (first values):")
for l in range(4):
    row = [str(a_binomial(l, nu, 1)) for nu in range(3)]
    print(f"  l={l}: " + " | ".join(row))

print()
print("Under a_i = i-1 the brackets collapse to binomial * falling power:")
sub = ParamSubstitution.equidistant(1, -1)
for (l, nu, k) in ((3, 2, 1), (4, 2, 2), (5, 3, 1)):
    print(f"  {{{l} {nu}}}_{k} -> {a_binomial(l, nu, k).substitute(sub)}")
