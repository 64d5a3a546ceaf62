# Weyl group - W(F4) acting on the normal-form parameters
