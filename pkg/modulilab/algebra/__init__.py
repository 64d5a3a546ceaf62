# Exact algebra - rationals, F_p, sparse polynomials, determinants, truncated series
