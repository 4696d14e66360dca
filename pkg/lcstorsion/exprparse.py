"""
Expression parser based on parsimonious.

The grammar is defined below, essentially EBNF, but
uses ``/`` (first match) instead of ``|``.  ``+``, ``*``, ``?`` have usual meaning
regex's start with ``~``.

The grammar.parse function generates parsimonious Nodes, which are
then translated to expression trees using the visit method of ExprParser.
:func:`evaluate` turns an expression tree into a :class:`freering.Poly`,
expanding brackets as left-normed commutators, and :func:`format_poly`
renders a polynomial back to the canonical text that :func:`parse` accepts.

Products need an explicit ``*``; ``^`` binds tighter than ``*``, which
binds tighter than ``+`` and ``-``.

..
   This program is free software: you can redistribute it
   and/or modify it under the terms of the GNU General Public License as
   published by the Free Software Foundation, either version 3 of the
   License, or (at your option) any later version. This program is
   distributed in the hope that it will be useful, but WITHOUT ANY
   WARRANTY; without even the implied warranty of MERCHANTABILITY or
   FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public License
   for more details.  You should have received a copy of the GNU General
   Public License along with this program.  If not, see
   <http://www.gnu.org/licenses/>.
"""

import collections
import logging

from parsimonious.grammar import Grammar, NodeVisitor
from parsimonious.exceptions import ParseError, IncompleteParseError

from . import freering

log = logging.getLogger('lcstorsion.exprparse')

grammar = Grammar(
  r"""
  expr = _ term rest_terms*
  rest_terms = addop term
  addop = plus / minus
  term = neg? factor rest_factors*
  neg = minus
  rest_factors = star factor
  factor = atom exponent?
  exponent = caret int
  atom = int / var / paren / bracket
  paren = lp expr rp
  bracket = lk expr rest_args+ rk
  rest_args = co expr

  var = ~"x([0-9]+)" _
  int = ~"[0-9]+" _

  _ = ~"\s*"
  plus = "+" _
  minus = "-" _
  star = "*" _
  caret = "^" _
  lp = "(" _
  rp = ")" _
  lk = "[" _
  rk = "]" _
  co = "," _
  """)

# Expression trees
Int = collections.namedtuple('Int', 'value')
Var = collections.namedtuple('Var', 'index')
Sum = collections.namedtuple('Sum', 'left right')
Difference = collections.namedtuple('Difference', 'left right')
Product = collections.namedtuple('Product', 'factors')
Power = collections.namedtuple('Power', 'base exponent')
Bracket = collections.namedtuple('Bracket', 'args')
Expr = (Int, Var, Sum, Difference, Product, Power, Bracket)

# What each grammar rule would have accepted, for error messages
_EXPECTED = {
  'expr': ('INT', 'VAR', "'('", "'['", "'-'"),
  'term': ('INT', 'VAR', "'('", "'['", "'-'"),
  'factor': ('INT', 'VAR', "'('", "'['"),
  'atom': ('INT', 'VAR', "'('", "'['"),
  'int': ('INT',),
  'var': ('VAR',),
  'rest_args': ("','",),
  'co': ("','",),
  'rk': ("']'",),
  'rp': ("')'",),
  'lp': ("'('",),
  'lk': ("'['",),
  'exponent': ("'^'",),
  'caret': ("'^'",),
  'plus': ("'+'",),
  'minus': ("'-'",),
  'star': ("'*'",),
}

_AFTER_TERM = ("'+'", "'-'", "'*'", "'^'", 'end of input')

# Limits on the expansion of powers
MAX_DEGREE = 64
MAX_TERMS = 10 ** 6


class ExprSyntaxError(ValueError):
  """
  Raised for malformed expressions.

  :members:
    - `text`: the input (decoded when possible)
    - `offset`: byte offset of the error in the UTF-8 input
    - `position`: character index of the error in `text`, None for
      undecodable input
    - `expected`: sorted tuple of token descriptions
  """

  def __init__(self, text, offset, expected, message=None):
    self.text = text
    self.offset = offset
    self.expected = tuple(sorted(set(expected)))
    if isinstance(text, str):
      self.position = len(text.encode('utf-8')[:offset].decode('utf-8', 'ignore'))
      context = text[self.position:self.position + 20]
    else:
      self.position = None
      context = ''
    if message is None:
      message = u"{0} expected at '{1}' (offset {2}).".format(
        ' or '.join(self.expected), context, offset)
    ValueError.__init__(self, message)


class ExprTooLarge(ValueError):
  """A power whose expansion would exceed MAX_DEGREE or MAX_TERMS."""
  pass


class ExprParser(NodeVisitor):
  """Visitor that turns a parse tree into expression trees
     See parsimonious.NodeVisitor docstring for more info
  """

  def __init__(self, text):
    self.text = text

  def visit(self, node):
    """Same as NodeVisitor.visit, but without the try...except that wraps
    every error in a VisitationError."""
    method = getattr(self, 'visit_' + node.expr_name, self.generic_visit)
    return method(node, [self.visit(n) for n in node])

  def _error(self, node, expected, message):
    offset = len(self.text[:node.start].encode('utf-8'))
    return ExprSyntaxError(self.text, offset, expected, message)

  def visit_expr(self, node, children):
    _, first, rest = children
    result = first
    if isinstance(rest, list):
      for op, t in rest:
        result = Sum(result, t) if op == '+' else Difference(result, t)
    return result

  def visit_rest_terms(self, node, children):
    op, t = children
    return (op, t)

  def visit_addop(self, node, children):
    return children[0]

  def visit_plus(self, node, children):
    return '+'

  def visit_minus(self, node, children):
    return '-'

  def visit_neg(self, node, children):
    return '-'

  def visit_term(self, node, children):
    neg, first, rest = children
    factors = [first]
    if isinstance(rest, list):
      factors.extend(rest)
    if isinstance(neg, list):
      if isinstance(factors[0], Int):
        factors[0] = Int(-factors[0].value)
      else:
        factors.insert(0, Int(-1))
    if len(factors) == 1:
      return factors[0]
    return Product(tuple(factors))

  def visit_rest_factors(self, node, children):
    return children[1]

  def visit_factor(self, node, children):
    atom, exponent = children
    if isinstance(exponent, list):
      return Power(atom, exponent[0])
    return atom

  def visit_exponent(self, node, children):
    e = children[1].value
    if e < 1:
      raise self._error(node.children[1], ('positive INT',),
                        'Exponent must be at least 1')
    return e

  def visit_atom(self, node, children):
    return children[0]

  def visit_paren(self, node, children):
    return children[1]

  def visit_bracket(self, node, children):
    _, first, rest, _ = children
    return Bracket(tuple([first] + list(rest)))

  def visit_rest_args(self, node, children):
    return children[1]

  def visit_var(self, node, children):
    index = int(node.children[0].match.group(1))
    if index < 1:
      raise self._error(node, ('VAR',),
                        'Variable indices start at 1, got x{0}'.format(index))
    return Var(index)

  def visit_int(self, node, children):
    return Int(int(node.children[0].text))


def _decode(text):
  if isinstance(text, (bytes, bytearray)):
    try:
      return bytes(text).decode('utf-8')
    except UnicodeDecodeError as err:
      raise ExprSyntaxError(text, err.start, ('UTF-8 text',),
                            'Invalid UTF-8 at offset {0}'.format(err.start))
  return text


def parse(text):
  """
  Parse an expression in the bracket language.

  >>> parse('[x1,x2]^2')
  Power(base=Bracket(args=(Var(index=1), Var(index=2))), exponent=2)
  >>> parse('-3 * x1')
  Product(factors=(Int(value=-3), Var(index=1)))
  """
  text = _decode(text)
  try:
    node = grammar['expr'].parse(text)
    return ExprParser(text).visit(node)
  except IncompleteParseError as iperr:
    offset = len(text[:iperr.pos].encode('utf-8'))
    raise ExprSyntaxError(text, offset, _AFTER_TERM)
  except ParseError as perr:
    offset = len(text[:perr.pos].encode('utf-8'))
    name = perr.expr.name
    expected = _EXPECTED.get(name, (name or str(perr.expr),))
    raise ExprSyntaxError(text, offset, expected)
  except RecursionError:
    raise ExprSyntaxError(text, 0, ('shallower nesting',),
                          'Expression is nested too deeply')


def evaluate(e):
  """
  Structural evaluation of an expression tree; a bracket with n children
  is the left-normed commutator of the evaluated children.  A power
  whose expansion would pass MAX_DEGREE or MAX_TERMS raises ExprTooLarge.

  >>> evaluate(parse('[x1,x2]'))
  x1*x2 - x2*x1
  """
  if isinstance(e, Int):
    return freering.const(e.value)
  if isinstance(e, Var):
    return freering.var(e.index)
  if isinstance(e, Sum):
    return freering.add(evaluate(e.left), evaluate(e.right))
  if isinstance(e, Difference):
    return freering.sub(evaluate(e.left), evaluate(e.right))
  if isinstance(e, Product):
    result = evaluate(e.factors[0])
    for f in e.factors[1:]:
      result = freering.mul(result, evaluate(f))
    return result
  if isinstance(e, Power):
    base = evaluate(e.base)
    if (e.exponent > MAX_DEGREE or max(base.degree, 1) * e.exponent > MAX_DEGREE
        or max(len(base), 1) ** e.exponent > MAX_TERMS):
      raise ExprTooLarge('Power of degree {0} with {1} terms to the {2} is too large'
                         .format(base.degree, len(base), e.exponent))
    return freering.power(base, e.exponent)
  if isinstance(e, Bracket):
    return freering.commutator([evaluate(a) for a in e.args])
  raise TypeError('Not an expression: {0!r}'.format(e))


def format_poly(p):
  """
  Canonical text of a polynomial.

  >>> format_poly(evaluate(parse('x1*x2 - x2*x1')))
  'x1*x2 - x2*x1'
  """
  return freering.render(p)


def parse_poly(text):
  return evaluate(parse(text))


def parse_file(path):
  """
  One expression per nonblank line; ``#`` starts a comment.
  Errors carry the line number in their message.
  """
  with open(path, 'rb') as fd:
    data = fd.read()
  text = _decode(data)
  exprs = []
  for lineno, line in enumerate(text.splitlines(), 1):
    line = line.split('#', 1)[0]
    if not line.strip():
      continue
    try:
      exprs.append(parse(line))
    except ExprSyntaxError as err:
      raise ExprSyntaxError(err.text, err.offset, err.expected,
                            '{0}:{1}: {2}'.format(path, lineno, err))
  log.debug('read %d expressions from %s', len(exprs), path)
  return exprs
