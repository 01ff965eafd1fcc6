"""Evaluating the shifted functions on noncommuting matrix variables.

With an equidistant parameter sequence the specialized functions are
quotients of quasideterminants of shifted powers.  They are invariant under
the shifted exchange of adjacent variables, stable under appending a_1 as an
extra variable, and collapse to classical shifted symmetric functions when
the variables commute.
"""

import random
from fractions import Fraction

from ncshift import MatValue, VariableAssignment, lambda_spec, s_spec
from ncshift.params import ParamSubstitution
from ncshift.quasidet import random_mat
from ncshift.special import (
    check_extension,
    check_shifted_symmetry,
    commutative_oracle,
    giambelli_check,
    quasi_schur_spec,
)

rng = random.Random(2024)
star = ParamSubstitution.equidistant(1, -1)  # the falling-power sequence

x1, x2 = random_mat(rng, 2), random_mat(rng, 2)
A = VariableAssignment((x1, x2), star)
print("Two 2x2 variables, a_i = i - 1:")
print(f"  S_1  = {s_spec(1, A)}")
print(f"  L_2  = {lambda_spec(2, A)}")
print(f"  L_3  = {lambda_spec(3, A)}   (vanishes beyond the variable count)")
print()

print(f"Shifted swap invariance of S_2: {check_shifted_symmetry(2, A, 1)}")
print(f"Extension stability of S_2:    {check_extension(2, A)}")
print()

scalars = (Fraction(7, 2), Fraction(-1))
A1 = VariableAssignment(tuple(MatValue([[x]]) for x in scalars), star)
print("Commuting (1x1) variables recover the classical determinant ratio:")
print(f"  S_2({', '.join(str(x) for x in scalars)}) = {s_spec(2, A1)}")
print(f"  oracle value"
      f"         = {commutative_oracle('S', 2, list(scalars))}")
print()

A4 = VariableAssignment(tuple(random_mat(rng, 2) for _ in range(4)), star)
print("Quasi-Schur values at 4 matrix variables:")
print(f"  rectangle (2,2): Giambelli identity holds: {giambelli_check((2, 2), A4)}")
print(f"  hook (1,1,2) equals its row value check:  "
      f"{quasi_schur_spec((1,), A4) == s_spec(1, A4)}")
