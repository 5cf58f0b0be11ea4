"""
Recursive-descent parser for knot expressions:

    expr  := term ('#' term)*
    term  := 'cable' '(' INT ',' INT ',' expr ')'
           | 'sat' '(' NAME ',' INT ',' expr ')'
           | '(' expr ')'
           | NAME

`cable` and `sat` are keywords only when followed by '('.
Parentheses, cables and satellites nest at most ExprFormat.MAX_DEPTH deep.
"""
import enum
import re
from typing import List, NamedTuple

from pydantic import ValidationError

from constants.formats import ExprFormat
from dtos.knots import Atom, Cable, KnotExpr, Satellite, Sum
from errors.knots import ExprSyntaxError, ExprValidationError
from services.evaluator.abstraction import IEvaluatorService

from start_utils import logger


class TokenKind(enum.Enum):
    NAME = "name"
    INT = "integer"
    PUNCT = "punctuation"
    END = "end of input"


class Token(NamedTuple):
    kind: TokenKind
    text: str
    position: int


TOKEN_PATTERN = re.compile(
    r"(?P<space>\s+)|(?P<int>-\d+)|(?P<name>[A-Za-z0-9_]+)|(?P<punct>[(),#])"
)
INTEGER = re.compile(r"-?\d+")


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExprSyntaxError(
                f"unexpected character '{text[position]}'", text, position
            )
        group = match.lastgroup
        if group == "int":
            tokens.append(Token(TokenKind.INT, match.group(), position))
        elif group == "name":
            tokens.append(Token(TokenKind.NAME, match.group(), position))
        elif group == "punct":
            tokens.append(Token(TokenKind.PUNCT, match.group(), position))
        position = match.end()
    tokens.append(Token(TokenKind.END, "", len(text)))
    return tokens


def summands(expr: KnotExpr) -> List[KnotExpr]:
    """
    Operands of the left-nested chain of sums rooted at `expr`, in order.
    A single term is a chain of length one.
    """
    terms: List[KnotExpr] = []
    while isinstance(expr, Sum):
        terms.append(expr.right)
        expr = expr.left
    terms.append(expr)
    terms.reverse()
    return terms


def render(expr: KnotExpr) -> str:
    """
    Canonical text of an expression; parses back to the same tree.
    """
    if isinstance(expr, Atom):
        return expr.name
    if isinstance(expr, Sum):
        parts = []
        for term in summands(expr):
            text = render(term)
            parts.append(f"({text})" if isinstance(term, Sum) else text)
        return f" {ExprFormat.SUM} ".join(parts)
    if isinstance(expr, Cable):
        return f"cable({expr.p},{expr.q},{render(expr.inner)})"
    return f"sat({expr.pattern},{expr.winding},{render(expr.inner)})"


class ExprCursor:
    """
    Position of one parse in a token list.
    """

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.depth = 0

    def parse(self) -> KnotExpr:
        expr = self._expr()
        if self._peek().kind != TokenKind.END:
            self._unexpected(f"'{ExprFormat.SUM}' or end of input")
        return expr

    def _peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self._peek()
        self.index += 1
        return token

    def _unexpected(self, expected: str):
        token = self._peek()
        found = token.text or token.kind.value
        raise ExprSyntaxError(
            f"expected {expected}, found '{found}'", self.text, token.position
        )

    def _punct(self, symbol: str) -> None:
        token = self._peek()
        if token.kind != TokenKind.PUNCT or token.text != symbol:
            self._unexpected(f"'{symbol}'")
        self._advance()

    def _integer(self) -> int:
        token = self._peek()
        if token.kind == TokenKind.INT or (
            token.kind == TokenKind.NAME and INTEGER.fullmatch(token.text)
        ):
            self._advance()
            return int(token.text)
        self._unexpected("an integer")

    def _name(self) -> str:
        token = self._peek()
        if token.kind != TokenKind.NAME:
            self._unexpected("a name")
        self._advance()
        return token.text

    def _nested(self) -> KnotExpr:
        if self.depth == ExprFormat.MAX_DEPTH:
            raise ExprSyntaxError(
                f"expression nested deeper than {ExprFormat.MAX_DEPTH} levels",
                self.text,
                self._peek().position,
            )
        self.depth += 1
        expr = self._expr()
        self.depth -= 1
        return expr

    def _expr(self) -> KnotExpr:
        expr = self._term()
        while (
            self._peek().kind == TokenKind.PUNCT
            and self._peek().text == ExprFormat.SUM
        ):
            self._advance()
            expr = Sum(left=expr, right=self._term())
        return expr

    def _term(self) -> KnotExpr:
        token = self._peek()
        if token.kind == TokenKind.PUNCT and token.text == "(":
            self._advance()
            expr = self._nested()
            self._punct(")")
            return expr
        if token.kind != TokenKind.NAME:
            self._unexpected("a knot")

        follows_paren = self._peek(1).text == "("
        if token.text == "cable" and follows_paren:
            self._advance()
            self._punct("(")
            p = self._integer()
            self._punct(",")
            q = self._integer()
            self._punct(",")
            inner = self._nested()
            self._punct(")")
            return self._build(
                Cable, token.position, p=p, q=q, inner=inner
            )
        if token.text == "sat" and follows_paren:
            self._advance()
            self._punct("(")
            pattern = self._name()
            self._punct(",")
            winding = self._integer()
            self._punct(",")
            inner = self._nested()
            self._punct(")")
            return self._build(
                Satellite,
                token.position,
                pattern=pattern,
                winding=winding,
                inner=inner,
            )
        self._advance()
        return Atom(name=token.text)

    def _build(self, model, position: int, **fields) -> KnotExpr:
        try:
            return model(**fields)
        except ValidationError as error:
            message = error.errors()[0]["msg"].removeprefix("Value error, ")
            raise ExprValidationError(
                f"{message} (at position {position})",
                details={"position": position},
            ) from None


class ParseExprService(IEvaluatorService):
    """
    Parse expression text into a KnotExpr tree. Syntax errors carry the
    offending position; parameter errors (non-coprime cables, winding
    below 1) are reported separately as validation errors.
    """

    def __init__(self) -> None:
        super().__init__()
        self.logger = logger

    def run(self, text: str) -> KnotExpr:
        expr = ExprCursor(text).parse()
        self.logger.debug(f"parsed {len(summands(expr))}-term expression")
        return expr
