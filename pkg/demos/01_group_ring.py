"""The group ring F_p[Z/p] and its indecomposable modules.

Every finitely generated module over R = F_p[Z/p] is a sum of the cyclic
modules tau^i R, where tau = 1 - g. The tensor product with the diagonal
action splits again into such pieces; its Jordan type is read off from
the ranks of powers of tau.
"""
from zpjoin import GroupRingElem, PrimeField, indecomposable, jordan_type, tensor_diagonal
from zpjoin.rmod import describe

p = 5
f = PrimeField(p)

tau = GroupRingElem.tau(f)
print("tau         =", tau.array())
print("tau^(p-1)   =", (tau ** (p - 1)).array(), "(the norm)")
print("tau^p is zero:", (tau ** p).is_zero())
print("augmentation of tau:", tau.augmentation())

print("\ntensor products with tauR")
tau_r = indecomposable(f, 1)
for i in range(p):
    m = tensor_diagonal(indecomposable(f, i), tau_r)
    print(f"  tau^{i}R x tauR = {describe(jordan_type(m), p)}")
