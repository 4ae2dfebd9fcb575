#!/usr/bin/env python3
"""
Tests for the expression parser and evaluator.
"""

import math
import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add parent directories to path for importing
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from cauchy_engine.errors import EvalError, ExprSyntaxError
from cauchy_engine.expr import (
    BinOp, Call, Name, Neg, Num, eval_expr, free_names, parse, parse_param,
    to_function, to_function2, to_source,
)


class TestParser(unittest.TestCase):
    """Test precedence, associativity and error offsets."""

    def test_precedence(self):
        self.assertEqual(parse("2*x + 1"), BinOp('+', BinOp('*', Num(2.0), Name('x')), Num(1.0)))

    def test_power_right_associative(self):
        self.assertEqual(parse("x^2^3"), BinOp('^', Name('x'), BinOp('^', Num(2.0), Num(3.0))))

    def test_unary_minus_below_power(self):
        self.assertEqual(parse("-x^2"), Neg(BinOp('^', Name('x'), Num(2.0))))
        self.assertEqual(parse("2^-x"), BinOp('^', Num(2.0), Neg(Name('x'))))

    def test_calls_and_constants(self):
        self.assertEqual(parse("c*log(x)"), BinOp('*', Name('c'), Call('log', Name('x'))))
        self.assertEqual(parse("1.5e-3"), Num(1.5e-3))

    def test_unterminated_call(self):
        with self.assertRaises(ExprSyntaxError) as ctx:
            parse("log(")
        self.assertEqual(ctx.exception.offset, 4)
        self.assertIn("number", ctx.exception.expected)

    def test_trailing_tokens(self):
        with self.assertRaises(ExprSyntaxError) as ctx:
            parse("x y")
        self.assertEqual(ctx.exception.offset, 2)
        self.assertIn("end of input", ctx.exception.expected)

    def test_bad_character(self):
        with self.assertRaises(ExprSyntaxError) as ctx:
            parse("x + $")
        self.assertEqual(ctx.exception.offset, 4)

    def test_offset_counts_bytes(self):
        """Offsets are UTF-8 byte offsets; a no-break space takes two bytes."""
        with self.assertRaises(ExprSyntaxError) as ctx:
            parse("\u00a0x y")
        self.assertEqual(ctx.exception.offset, 4)

    def test_empty(self):
        with self.assertRaises(ExprSyntaxError):
            parse("   ")

    def test_free_names(self):
        self.assertEqual(free_names(parse("c*x + pi - exp(y)")), frozenset({'c', 'x', 'y'}))

    def test_to_source(self):
        self.assertEqual(to_source(parse("-x^2 + 1")), "((-(x ^ 2.0)) + 1.0)")


_names = st.sampled_from(['x', 'y', 't', 'k'])
_leaves = st.one_of(
    st.floats(0.0, 1e6, allow_nan=False, allow_infinity=False).map(lambda v: Num(abs(v))),
    _names.map(Name),
)
_exprs = st.recursive(
    _leaves,
    lambda inner: st.one_of(
        inner.map(Neg),
        st.tuples(st.sampled_from('+-*/^'), inner, inner).map(lambda p: BinOp(*p)),
        st.tuples(st.sampled_from(['log', 'exp', 'sqrt', 'abs']), inner).map(lambda p: Call(*p)),
    ),
    max_leaves=12,
)


class TestCanonicalSource(unittest.TestCase):
    """Test that the canonical text parses back to the same tree."""

    @settings(max_examples=200, deadline=None)
    @given(_exprs)
    def test_parse_of_source(self, e):
        self.assertEqual(parse(to_source(e)), e)


class TestEvaluator(unittest.TestCase):
    """Test evaluation and domain errors."""

    def test_bound_parameter(self):
        self.assertAlmostEqual(eval_expr(parse("c*log(x)"), math.e, bindings={'c': 2.0}), 2.0, delta=1e-15)

    def test_exp(self):
        self.assertAlmostEqual(eval_expr(parse("exp(x)"), 1.0), math.e, delta=1e-15)

    def test_generator_variable(self):
        self.assertEqual(eval_expr(parse("t^2"), 0.5, variable='t'), 0.25)

    def test_domain_errors(self):
        cases = {
            "x^0.5": ("NegativeBaseFractionalPower", -1.0),
            "1/(x-1)": ("DivisionByZero", 1.0),
            "log(x)": ("LogOfNonPositive", 0.0),
            "sqrt(x)": ("SqrtOfNegative", -4.0),
            "k*x": ("UnboundName", 1.0),
            "exp(x)": ("Overflow", 1000.0),
            "x^-1": ("DivisionByZero", 0.0),
        }
        for source, (kind, value) in cases.items():
            with self.subTest(source=source):
                with self.assertRaises(EvalError) as ctx:
                    eval_expr(parse(source), value)
                self.assertEqual(ctx.exception.kind, kind)

    def test_integer_power_of_negative_base(self):
        self.assertEqual(eval_expr(parse("x^3"), -2.0), -8.0)

    def test_function_views(self):
        f = to_function(parse("2^x"))
        self.assertEqual(f(3.0), 8.0)
        T = to_function2(parse("x*y + c"), {'c': 1.0})
        self.assertEqual(T(2.0, 3.0), 7.0)

    def test_parse_param(self):
        self.assertEqual(parse_param("c=2.5"), ('c', 2.5))
        self.assertEqual(parse_param(" a = -1 "), ('a', -1.0))
        for text in ("c", "x=1", "pi=3", "log=2", "c=abc", "1c=2"):
            with self.subTest(text=text), self.assertRaises(ExprSyntaxError):
                parse_param(text)


def run_tests():
    """Run all tests and return results."""
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()

    test_classes = [
        TestParser,
        TestCanonicalSource,
        TestEvaluator,
    ]

    for test_class in test_classes:
        suite.addTests(loader.loadTestsFromTestCase(test_class))

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    return result.wasSuccessful()


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
