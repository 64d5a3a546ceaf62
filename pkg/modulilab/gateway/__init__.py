# Gateway - command-line entry point
