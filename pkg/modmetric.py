#!/usr/bin/env python3
"""
modmetric.py

Command line launcher for ModMetric: evaluate the modulus metric mu_D and
the Ferrand metric lambda_D, reproduce their bound tables and scans, and
run the property suites.
"""

import sys

from src.main import main

if __name__ == "__main__":
    sys.exit(main())
