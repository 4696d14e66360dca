from .. import exprparse
from .. import freering
from ..exprparse import ExprSyntaxError, parse, parse_poly, format_poly
from ..freering import var, monomial, commutator
import os
import random
import tempfile
import unittest


class TestParse(unittest.TestCase):

    def test_trees(self):
        self.assertEqual(parse('x3'), exprparse.Var(3))
        self.assertEqual(parse('[x1,x2]'),
                         exprparse.Bracket((exprparse.Var(1), exprparse.Var(2))))
        self.assertEqual(parse('-3 * x1'),
                         exprparse.Product((exprparse.Int(-3), exprparse.Var(1))))
        self.assertEqual(parse('x1 + x2'),
                         exprparse.Sum(exprparse.Var(1), exprparse.Var(2)))
        self.assertEqual(parse('[x1,x2]^2'),
                         exprparse.Power(parse('[x1,x2]'), 2))

    def test_whitespace(self):
        self.assertEqual(parse(' [ x1 , x2 ] '), parse('[x1,x2]'))

    def test_bytes_input(self):
        self.assertEqual(parse(b'x1*x2'), parse('x1*x2'))

    def test_node_types(self):
        self.assertIsInstance(parse('[x1,x2]*x3 - 2'), exprparse.Expr)
        self.assertRaises(TypeError, exprparse.evaluate, 'x1')


class TestEvaluate(unittest.TestCase):

    def test_commutators(self):
        x1, x2, x3, x4, x5 = [var(i) for i in range(1, 6)]
        self.assertEqual(parse_poly('[x1,x2]'), x1 * x2 - x2 * x1)
        self.assertEqual(parse_poly('[x1,x2,x3]'), commutator([x1, x2, x3]))
        self.assertEqual(parse_poly('[x1,x2,x3]*[x4,x5]'),
                         commutator([x1, x2, x3]) * commutator([x4, x5]))
        self.assertEqual(parse_poly('[x1*[x2,x3,x4],x5]'),
                         commutator([x1 * commutator([x2, x3, x4]), x5]))

    def test_nested_bracket_is_not_flattened(self):
        self.assertEqual(parse_poly('[[x1,x2],x3]'), parse_poly('[x1,x2,x3]'))
        self.assertNotEqual(parse_poly('[x1,[x2,x3]]'), parse_poly('[x1,x2,x3]'))

    def test_arithmetic(self):
        self.assertEqual(parse_poly('0'), freering.zero())
        self.assertEqual(parse_poly('2*x1 - x1 - x1'), freering.zero())
        self.assertEqual(parse_poly('(x1 + 1)^2'), monomial((1, 1)) + 2 * var(1) + 1)
        self.assertEqual(parse_poly('-x1*x2'), -monomial((1, 2)))
        self.assertEqual(parse_poly('3*[x1,x2,x3]*[x4,x5]'),
                         3 * parse_poly('[x1,x2,x3]*[x4,x5]'))

    def test_format(self):
        self.assertEqual(format_poly(parse_poly('[x1,x2]')), 'x1*x2 - x2*x1')
        self.assertEqual(format_poly(parse_poly('x2*x1 + 1 - 1')), 'x2*x1')
        self.assertEqual(format_poly(parse_poly('0')), '0')

    def test_format_parses_back(self):
        for text in ['[x1,x2,x3]*[x4,x5]', '(x1 - 2*x2)^3', '[x1,x2]^2 + 7']:
            p = parse_poly(text)
            self.assertEqual(parse_poly(format_poly(p)), p)


class TestErrors(unittest.TestCase):

    def test_unclosed(self):
        self.assertRaises(ExprSyntaxError, parse, '[x1,x2')

    def test_short_bracket(self):
        self.assertRaises(ExprSyntaxError, parse, '[]')
        self.assertRaises(ExprSyntaxError, parse, '[x1]')

    def test_x0(self):
        with self.assertRaises(ExprSyntaxError) as cm:
            parse('x1 + x0')
        self.assertEqual(cm.exception.offset, 5)

    def test_trailing_garbage(self):
        with self.assertRaises(ExprSyntaxError) as cm:
            parse('x1 x2')
        self.assertEqual(cm.exception.offset, 3)
        self.assertIn('end of input', cm.exception.expected)

    def test_is_value_error(self):
        self.assertRaises(ValueError, parse, '+')
        self.assertRaises(ValueError, parse, '')

    def test_zero_exponent(self):
        self.assertRaises(ExprSyntaxError, parse, 'x1^0')

    def test_bad_utf8(self):
        self.assertRaises(ExprSyntaxError, parse, b'x1 + \xff')

    def test_context_uses_character_position(self):
        with self.assertRaises(ExprSyntaxError) as cm:
            parse(u'x1\u00a0\u00a0x2')
        self.assertEqual(cm.exception.offset, 6)
        self.assertEqual(cm.exception.position, 4)
        self.assertIn("at 'x2'", str(cm.exception))

    def test_power_limits(self):
        self.assertRaises(exprparse.ExprTooLarge, parse_poly, 'x1^65')
        self.assertRaises(exprparse.ExprTooLarge, parse_poly, '(x1*x2)^33')
        self.assertRaises(exprparse.ExprTooLarge, parse_poly, '(x1 + x2)^40')
        self.assertRaises(exprparse.ExprTooLarge, parse_poly, '2^100000')
        self.assertEqual(parse_poly('x1^64').degree, 64)
        self.assertEqual(len(parse_poly('(x1 + x2)^12')), 2 ** 12)


class TestRandomInput(unittest.TestCase):

    ALPHABET = ['x', '1', '2', '0', '9', '[', ']', ',', '+', '-', '*', '^', '(', ')',
                ' ', 'x1', 'x2', 'x3', '\u00e9', '\t']

    def setUp(self):
        self.rng = random.Random(7)

    def test_only_syntax_errors_escape(self):
        parsed = 0
        for _ in range(2000):
            text = ''.join(self.rng.choice(self.ALPHABET)
                           for _ in range(self.rng.randint(0, 24)))
            try:
                e = parse(text)
            except ExprSyntaxError as err:
                self.assertTrue(0 <= err.offset <= len(text.encode('utf-8')), text)
                continue
            parsed += 1
            try:
                exprparse.evaluate(e)
            except exprparse.ExprTooLarge:
                pass
        self.assertGreater(parsed, 0)

    def test_format_round_trip(self):
        for _ in range(300):
            p = freering.zero()
            for _ in range(self.rng.randint(0, 4)):
                word = tuple(self.rng.randint(1, 4) for _ in range(self.rng.randint(0, 4)))
                p = p + freering.monomial(word, self.rng.randint(-9, 9))
            self.assertEqual(parse_poly(format_poly(p)), p, format_poly(p))


class TestParseFile(unittest.TestCase):

    def setUp(self):
        fd, self.path = tempfile.mkstemp(suffix='.lcs')
        os.close(fd)

    def tearDown(self):
        os.remove(self.path)

    def write(self, text):
        with open(self.path, 'w') as fd:
            fd.write(text)

    def test_comments_and_blanks(self):
        self.write('# generators\n[x1,x2,x3,x4]\n\n[x1,x2]*[x3,x4]  # product\n')
        exprs = exprparse.parse_file(self.path)
        self.assertEqual(len(exprs), 2)
        self.assertEqual(exprparse.evaluate(exprs[0]), parse_poly('[x1,x2,x3,x4]'))

    def test_error_names_line(self):
        self.write('[x1,x2]\n[x1,\n')
        with self.assertRaises(ExprSyntaxError) as cm:
            exprparse.parse_file(self.path)
        self.assertIn(':2:', str(cm.exception))


if __name__ == '__main__':
    unittest.main()
