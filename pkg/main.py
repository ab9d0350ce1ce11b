#!/usr/bin/python3

__author__ = "Christian O'Reilly"


import sys
from nutcirc.cli import run

if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
