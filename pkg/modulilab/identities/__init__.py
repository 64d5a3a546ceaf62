# Identities - line configurations, the complete-intersection model and verification suites
