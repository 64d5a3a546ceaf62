# modulilab - exact computations on the moduli of (1,1,1,1) divisors in (P^1)^4
__version__ = "0.1.0"
