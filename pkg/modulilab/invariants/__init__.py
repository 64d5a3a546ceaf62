# Invariants - (1,1,1,1)-forms, their invariants and the GIT quotient P(1,3,4,6)
