#!/usr/bin/env python3
"""
modulilab - command-line entry point
Run with: python run.py <command> [options], e.g. python run.py classify --gcoeffs 0,0,1,1
"""
import sys

from modulilab.gateway.cli import parse_and_dispatch

if __name__ == '__main__':
    sys.exit(parse_and_dispatch(sys.argv[1:]))
