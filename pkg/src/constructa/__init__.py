"""Executable algebra from the successor function up to GF(p^n).

The modules build on each other:

* :mod:`constructa.peano` naturals, recursion, iterate-defined arithmetic;
* :mod:`constructa.monoid` monoids, iterates, Grothendieck groups;
* :mod:`constructa.integers` ``Z`` and two constructions of ``Q``;
* :mod:`constructa.divisibility` gcd, lcm, primes, factorization;
* :mod:`constructa.modular` the rings ``Z_n`` and the CRT;
* :mod:`constructa.poly` polynomials over a field;
* :mod:`constructa.fields` prime fields, quotient fields, ``GF(p^n)``.
"""

from .divisibility import (Factorization, divides, divisors, factorize, gcd_euclid, goldbach_pair,
                           is_prime, lattice_fold, lcm, nth_prime, primes, primes_up_to)
from .errors import ConstructaError
from .fields import (characteristic_and_prime_subfield, find_isomorphism, frobenius_fixed, linear_solve,
                     make_gf, make_prime_field, make_quotient_field, mult_generator, verify_splitting)
from .integers import IntZ, RatQ, archimedean_witness, build_integers, build_rationals, verify_cross_route
from .modular import (additive_generators, crt_solve, decompose, digit_rule, totient, units_cyclic,
                      units_group, zn_make)
from .monoid import (FiniteMonoid, check_homomorphism, grothendieck, mon_iterate, monoid_classify,
                     signed_iterate)
from .peano import FinSet, Interval, div_algorithm, finset_ops, nat_arith, nat_le, recurse
from .poly import (Poly, derivative, evaluate, factor_split, find_irreducible, is_irreducible, poly_arith,
                   poly_divmod, roots)

__version__ = "0.1.0"
