#!/usr/bin/env python3
"""
Demo walkthrough for the Cauchy Engine.

Prints a Gamma table, the period of a Cauchy pair and the verdict of a
grid verification for the parameters given on the command line.
"""

import argparse
import math
import sys
import time
from pathlib import Path

# Add the parent directory to sys.path so we can import cauchy_engine
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from cauchy_engine.api import errata_rows, gamma_table, frange, table_summary, verification_summary
from cauchy_engine.errors import CauchyEngineError
from cauchy_engine.families import CauchyFamily, EquationKind
from cauchy_engine.gamma import Generator
from cauchy_engine.pairing import additive_S_period_function, period_additive_S, period_exponential_S
from cauchy_engine.verify import classify_pair, verify_pair


def main():
    parser = argparse.ArgumentParser(
        description="Walk through Gamma functions and Cauchy pairs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m cauchy_engine.examples.demo
  python -m cauchy_engine.examples.demo --base 3 --slope 0.5
  python -m cauchy_engine.examples.demo --generator-slope 4 --errata
        """
    )

    parser.add_argument('--base', type=float, default=2.0,
                        help='Base a of the exponential pair (default: 2)')

    parser.add_argument('--slope', type=float, default=1.0,
                        help='Slope c of the additive pair (default: 1)')

    parser.add_argument('--generator-slope', type=float, default=2.0,
                        help='Slope c of the generator phi(t) = ct (default: 2)')

    parser.add_argument('--errata', action='store_true',
                        help='Also print the errata table')

    args = parser.parse_args()

    if not args.base > 0 or args.base == 1:
        parser.error("Base must be positive and different from 1")

    if args.slope == 0:
        parser.error("Slope must be non-zero")

    if not args.generator_slope > 0:
        parser.error("Generator slope must be positive")

    start_time = time.time()

    try:
        print("Gamma functions")
        rows = gamma_table(Generator.neg_log(), frange(1.0, 3.0, 0.5))
        worst = table_summary(rows, 'abs_diff')
        for row in rows:
            print(f"   Gamma({row['x']:.1f}) = {row['quadrature']:.12f}")
        print(f"   max |quadrature - closed form| = {worst['max']:.2e}")

        rows = gamma_table(Generator.additive(args.generator_slope), [0.5, 1.0, 2.0])
        print(f"   phi(t) = {args.generator_slope:g}t: "
              f"max |diff| = {table_summary(rows, 'abs_diff')['max']:.2e}")

        print("\nExponential (S)-pair")
        T = period_exponential_S(args.base).value
        print(f"   f(x) = {args.base:g}^x, g(x) = f(x + T), T = {T:.12f}")
        f = CauchyFamily.exponential(args.base)
        report = verify_pair(f, T, EquationKind.SINE_ADDITION)
        report = report.with_classification(classify_pair(f, lambda x: f(x + T), report))
        _print_report(verification_summary(report))

        print("\nAdditive (S)-pair")
        T = period_additive_S(args.slope, 1.0, 2.0).value
        print(f"   f(x) = {args.slope:g}x, T(1, 2) = {T:.12f}")
        report = verify_pair(CauchyFamily.additive(args.slope), additive_S_period_function(args.slope))
        _print_report(verification_summary(report))

        if args.errata:
            print("\nErrata")
            for row in errata_rows():
                flag = "confirmed" if row['confirmed'] else "not confirmed"
                print(f"   {row['key']}: printed {row['printed']} vs derived {row['derived']} ({flag})")

        print(f"\nDone in {time.time() - start_time:.2f}s")

    except CauchyEngineError as e:
        print(f"Demo failed: {str(e)}")
        sys.exit(1)


def _print_report(summary: dict) -> None:
    """Print the interesting fields of a verification summary."""
    verdict = "pass" if summary['pass'] else "FAIL"
    print(f"   grid {summary['grid']}: {summary['points']} points, "
          f"max residual {summary['max_residual']:.2e} -> {verdict}")
    if summary['classification'] != 'Unclassified':
        print(f"   classification: {summary['classification']}")
    if not math.isfinite(summary['max_residual']):
        print("   (non-finite residual encountered)")


if __name__ == "__main__":
    main()
