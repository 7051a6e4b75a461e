# Exact multivector arithmetic: sums of blades with rational weights.
#
# An Algebra fixes the square of the generators once; everything built
# from it stays exact (Fractions all the way down), so algebraic
# identities can be checked with == instead of "close enough".

from fractions import Fraction

from cltwist import Algebra

alg = Algebra(mu=-1)

# Expressions use e-form blades, rationals, + - and *.
u = alg.parse("1/2 + 1/2 e_1 + 1/2 e_2 + 1/2 e_12")
v = alg.parse("3 e_1 - 2/3 e_23")

print("u =", u)
print("v =", v)
print("u * v =", u * v)
print("v * u =", v * u)
print()

# With two generators squaring to -1 this algebra is the quaternions:
# e_1, e_2, e_12 multiply exactly like i, j, k.
i, j, k = alg.blade(0b01), alg.blade(0b10), alg.blade(0b11)
print("i*j =", i * j, "   j*i =", j * i, "   i*j*k =", i * j * k)

# u above is a unit quaternion: its conjugate is its inverse.
u_conj = alg.parse("1/2 - 1/2 e_1 - 1/2 e_2 - 1/2 e_12")
print("u * conj(u) =", u * u_conj)
print()

# Grade structure: a product mixes grades, and grade_part slices them.
w = u * v
for g in w.grades():
    print(f"grade {g} part:", w.grade_part(g))
print()

# Coefficients stay rational no matter how the terms interact.  Note
# the grade-3 blade squares to +1 here even though every generator
# squares to -1: three swaps and three mu factors cancel.
a = alg.parse("1/3 e_123 + 1/7 e_45")
print("a squared =", a * a)
assert (a * a).coefficient(0) == Fraction(1, 9) - Fraction(1, 49)

# Mixing conventions is an error, not a silent wrong answer; a value
# carries its algebra with it.
try:
    Algebra(mu=1).blade(1) * alg.blade(1)
except ValueError as exc:
    print("mixing algebras:", exc)
