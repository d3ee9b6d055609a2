"""The Galois-conjugation nonarithmeticity test over Z[sqrt(3)].

A group preserving an integral form over Z[sqrt(3)] whose two real
embeddings have signatures of hyperbolic type {1,4} and of mixed type {2,3}
cannot be arithmetic.  The witness predicate checks exactly this signature
pattern, deciding every sign exactly (sign of a + b sqrt(3) by comparing
a^2 with 3 b^2).
"""

from coxvol.quadring import (
    QuadRingElement,
    QuadRingForm,
    conjugate_signature_pair,
    nonarithmeticity_witness,
)

r3 = QuadRingElement(0, 1)

candidates = [
    ("diag(-1, r3, 1, 1, 1)", QuadRingForm.diagonal([-1, r3, 1, 1, 1])),
    ("diag(-1, 1, 1, 1, 1)", QuadRingForm.diagonal([-1, 1, 1, 1, 1])),
    ("diag(r3, r3, r3, r3, r3)", QuadRingForm.diagonal([r3] * 5)),
    (
        "diag(-1, 1+1*r3, 1, 1, 2)",
        QuadRingForm.diagonal([-1, QuadRingElement(1, 1), 1, 1, 2]),
    ),
]

for name, form in candidates:
    first, second = conjugate_signature_pair(form)
    witness = nonarithmeticity_witness(form)
    print(f"{name:<28} {str(first):>7} -> {str(second):>7}   witness: {witness}")

print()
print("only a form mixing a hyperbolic embedding with a (2,3)/(3,2) conjugate")
print("witnesses nonarithmeticity; Galois-fixed forms never do")
