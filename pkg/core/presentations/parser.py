"""
Presentation DSL Parser

.opd 텍스트 DSL을 Presentation으로 변환합니다.

문법::

    operad NAME {
        colors a, b;                          # 선택
        gen m:2;                              # 정칙 쌍 m, m' (m·(12) = m')
        gen b:2 antisymmetric;                # 또는 symmetric / twisted / swap [-][q*]y
        rel r1: m(m(1,2),3) - m(1,m(2,3));    # 이름은 선택, 기본값 r1..rk
    }

항은 ``기호[@색](자식, ...)`` 이고 자식은 잎 정수 또는 중첩 항입니다.
계수는 정수 또는 p/q이며 뒤에 ``*``를 붙일 수 있습니다. ``#`` 이후는 주석입니다.
"""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

import pyparsing as pp

from core.exceptions import ArityError, ParseError, UnknownSymbolError, WeightError
from core.presentations.model import Presentation
from core.trees.monomial import Node, Tree
from core.trees.operations import canonicalize
from core.trees.poly import TreePoly
from core.trees.symbols import (
    ANTISYMMETRIC,
    PAIR,
    SYMMETRIC,
    UNARY,
    GeneratorSymbol,
    Signature,
    Symbol,
)
from utils.logging import get_logger

logger = get_logger(__name__)

IDENT_PATTERN = r"[A-Za-z_][A-Za-z0-9_.']*"
COLOR_PATTERN = r"[A-Za-z0-9_.]+"
SYMBOL_PATTERN = rf"{IDENT_PATTERN}(?:@{COLOR_PATTERN})?"


@dataclass(frozen=True)
class _RawTerm:
    symbol: str
    children: Tuple[Union[int, "_RawTerm"], ...]
    loc: int


@dataclass(frozen=True)
class _SignedTerm:
    coefficient: Fraction
    term: _RawTerm


@dataclass(frozen=True)
class _GenDecl:
    symbol: str
    arity: int
    kind: Optional[str]
    swap_coefficient: Fraction
    swap_target: Optional[str]
    loc: int


@dataclass(frozen=True)
class _RelDecl:
    name: Optional[str]
    terms: Tuple[_SignedTerm, ...]
    loc: int


@dataclass(frozen=True)
class _ColorsDecl:
    colors: Tuple[str, ...]
    loc: int


@dataclass(frozen=True)
class _RelName:
    name: str


def split_symbol(text: str) -> Symbol:
    """'m@c0' → Symbol('m', 'c0')"""
    name, _, color = text.partition("@")
    return Symbol(name, color)


def _signed(sign: str, coefficient: Fraction) -> Fraction:
    return -coefficient if sign == "-" else coefficient


def _build_grammar() -> Tuple[pp.ParserElement, pp.ParserElement]:
    LPAR, RPAR, LBRACE, RBRACE, SEMI, COLON, COMMA, STAR = map(pp.Suppress, "(){};:,*")
    ident = pp.Regex(IDENT_PATTERN)
    symbol = pp.Regex(SYMBOL_PATTERN)
    color = pp.Regex(COLOR_PATTERN)
    integer = pp.Regex(r"\d+").set_parse_action(lambda t: int(t[0]))
    rational = pp.Regex(r"\d+(?:/\d+)?").set_parse_action(lambda t: Fraction(t[0]))
    sign = pp.one_of("+ -")
    coefficient = rational + pp.Optional(STAR)

    term = pp.Forward()
    child = integer | term
    term <<= (symbol + LPAR + pp.Group(child + pp.ZeroOrMore(COMMA + child)) + RPAR)
    term.set_parse_action(lambda s, loc, t: _RawTerm(t[0], tuple(t[1]), loc))

    def make_signed(t):
        return _SignedTerm(_signed(t[0], t[1]), t[2])

    first = (
        pp.Optional(sign, default="+") + pp.Optional(coefficient, default=Fraction(1)) + term
    ).set_parse_action(make_signed)
    other = (sign + pp.Optional(coefficient, default=Fraction(1)) + term).set_parse_action(
        make_signed
    )
    expression = first + pp.ZeroOrMore(other)

    swap = (
        pp.Keyword("swap")
        + pp.Optional(sign, default="+")
        + pp.Optional(coefficient, default=Fraction(1))
        + symbol
    )
    kind = pp.Group(
        pp.Optional(
            pp.Keyword("symmetric")
            | pp.Keyword("antisymmetric")
            | pp.Keyword("twisted")
            | swap
        )
    )

    def make_gen(s, loc, t):
        action = list(t[2])
        if not action:
            return _GenDecl(t[0], t[1], None, Fraction(1), None, loc)
        if action[0] == "swap":
            return _GenDecl(t[0], t[1], "swap", _signed(action[1], action[2]), action[3], loc)
        return _GenDecl(t[0], t[1], action[0], Fraction(1), None, loc)

    gen = (pp.Suppress(pp.Keyword("gen")) + symbol + COLON + integer + kind + SEMI)
    gen.set_parse_action(make_gen)

    rel_name = (ident + COLON).set_parse_action(lambda t: _RelName(t[0]))

    def make_rel(s, loc, t):
        items = list(t)
        name = None
        if items and isinstance(items[0], _RelName):
            name = items.pop(0).name
        return _RelDecl(name, tuple(items), loc)

    rel = (pp.Suppress(pp.Keyword("rel")) + pp.Optional(rel_name) + expression + SEMI)
    rel.set_parse_action(make_rel)

    colors = (
        pp.Suppress(pp.Keyword("colors")) + color + pp.ZeroOrMore(COMMA + color) + SEMI
    ).set_parse_action(lambda s, loc, t: _ColorsDecl(tuple(t), loc))

    operad = (
        pp.Suppress(pp.Keyword("operad"))
        + ident
        + LBRACE
        + pp.Optional(colors)
        + pp.Group(pp.ZeroOrMore(gen | rel))
        + RBRACE
    )
    operad.ignore(pp.python_style_comment)
    return operad, term


_GRAMMAR, _TREE = _build_grammar()


class _Builder:
    """구문 트리를 Presentation으로 바꾸는 의미 검사기"""

    def __init__(self, text: str):
        self.text = text

    def error(self, loc: int, reason: str) -> ParseError:
        return ParseError(pp.lineno(loc, self.text), pp.col(loc, self.text), reason)

    def build(self, tokens: pp.ParseResults) -> Presentation:
        items = list(tokens)
        name = items.pop(0)
        colors: Tuple[str, ...] = ()
        if items and isinstance(items[0], _ColorsDecl):
            decl = items.pop(0)
            colors = decl.colors
            if len(set(colors)) != len(colors):
                raise self.error(decl.loc, f"색 이름이 중복되었습니다: {', '.join(colors)}")
        statements = list(items[0]) if items else []
        gens = [s for s in statements if isinstance(s, _GenDecl)]
        rels = [s for s in statements if isinstance(s, _RelDecl)]

        generators = self.build_generators(gens, colors)
        try:
            signature = Signature(generators)
        except (ArityError, UnknownSymbolError) as e:
            raise self.error(gens[0].loc if gens else 0, str(e)) from e

        relations: List[TreePoly] = []
        names: List[str] = []
        for index, decl in enumerate(rels, start=1):
            label = decl.name or f"r{index}"
            if label in names:
                raise self.error(decl.loc, f"관계 이름이 중복되었습니다: {label}")
            relations.append(self.build_relation(decl, signature))
            names.append(label)

        presentation = Presentation(
            name=name,
            generators=tuple(generators),
            relations=tuple(relations),
            relation_names=tuple(names),
            colors=colors,
        )
        logger.debug(f"표현 파싱 완료: {presentation}")
        return presentation

    def build_generators(
        self, decls: List[_GenDecl], colors: Tuple[str, ...]
    ) -> List[GeneratorSymbol]:
        out: List[GeneratorSymbol] = []
        seen = set()

        def push(g: GeneratorSymbol, loc: int):
            if g.symbol in seen:
                raise self.error(loc, f"생성원이 중복 선언되었습니다: {g.symbol}")
            if colors and g.symbol.color and g.symbol.color not in colors:
                raise self.error(loc, f"선언되지 않은 색입니다: {g.symbol.color}")
            seen.add(g.symbol)
            out.append(g)

        for d in decls:
            symbol = split_symbol(d.symbol)
            if d.arity < 1:
                raise self.error(d.loc, f"항수는 1 이상이어야 합니다: {d.symbol}")
            if d.arity == 1:
                if d.kind not in (None, SYMMETRIC):
                    raise self.error(d.loc, f"1항 생성원에는 {d.kind}를 쓸 수 없습니다: {d.symbol}")
                push(GeneratorSymbol(symbol, 1, UNARY), d.loc)
            elif d.arity >= 3:
                if d.kind not in (SYMMETRIC, ANTISYMMETRIC):
                    raise self.error(
                        d.loc,
                        f"3항 이상 생성원은 symmetric 또는 antisymmetric이어야 합니다: {d.symbol}",
                    )
                push(GeneratorSymbol(symbol, d.arity, d.kind), d.loc)
            elif d.kind in (SYMMETRIC, ANTISYMMETRIC):
                a = Fraction(1 if d.kind == SYMMETRIC else -1)
                push(GeneratorSymbol(symbol, 2, d.kind, ((symbol, a),)), d.loc)
            else:
                a = Fraction(-1) if d.kind == "twisted" else d.swap_coefficient
                partner = (
                    split_symbol(d.swap_target)
                    if d.swap_target
                    else Symbol(symbol.name + "'", symbol.color)
                )
                if a == 0:
                    raise self.error(d.loc, f"전치 계수는 0일 수 없습니다: {d.symbol}")
                if partner == symbol:
                    if a not in (1, -1):
                        raise self.error(d.loc, f"자기 자신으로의 전치 계수는 ±1이어야 합니다: {d.symbol}")
                    kind = SYMMETRIC if a == 1 else ANTISYMMETRIC
                    push(GeneratorSymbol(symbol, 2, kind, ((symbol, a),)), d.loc)
                    continue
                push(GeneratorSymbol(symbol, 2, PAIR, ((partner, a),)), d.loc)
                push(GeneratorSymbol(partner, 2, PAIR, ((symbol, 1 / a),)), d.loc)
        return out

    def to_tree(self, term: _RawTerm, signature: Signature) -> Tree:
        symbol = split_symbol(term.symbol)
        if symbol not in signature:
            raise self.error(term.loc, f"알 수 없는 생성원입니다: {term.symbol}")
        arity = signature[symbol].arity
        if len(term.children) != arity:
            raise self.error(
                term.loc,
                f"{term.symbol}의 항수는 {arity}인데 자식이 {len(term.children)}개입니다",
            )
        children = tuple(
            c if isinstance(c, int) else self.to_tree(c, signature) for c in term.children
        )
        return Node(symbol, children)

    def build_relation(self, decl: _RelDecl, signature: Signature) -> TreePoly:
        total = TreePoly()
        for signed in decl.terms:
            raw = self.to_tree(signed.term, signature)
            try:
                poly = canonicalize(raw, signature)
                total = total + signed.coefficient * poly
            except (ArityError, WeightError) as e:
                raise self.error(signed.term.loc, f"비동차 관계입니다: {e}") from e
            except ValueError as e:
                raise self.error(signed.term.loc, str(e)) from e
        if total.is_zero():
            raise self.error(decl.loc, "관계가 0입니다")
        return total


def parse(text: str) -> Presentation:
    """
    DSL 텍스트를 파싱합니다.

    Args:
        text: .opd 소스

    Returns:
        Presentation: 검증된 표현

    Raises:
        ParseError: 구문 오류 또는 의미 오류 (줄/열 포함)
    """
    try:
        tokens = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ParseError(e.lineno, e.col, f"구문 오류: {e.msg}") from e
    return _Builder(text).build(tokens)


def parse_file(path: Union[str, Path]) -> Presentation:
    """UTF-8 .opd 파일을 파싱합니다."""
    text = Path(path).read_text(encoding="utf-8")
    logger.info(f"표현 파일 읽기: {path}")
    return parse(text)


def parse_tree(text: str) -> Tree:
    """
    단항식 렌더링 텍스트를 (정규화 전) 트리로 읽습니다.

    Raises:
        ParseError: 구문 오류
    """
    try:
        term = _TREE.parse_string(text.strip(), parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ParseError(e.lineno, e.col, f"구문 오류: {e.msg}") from e

    def convert(t: _RawTerm) -> Tree:
        return Node(
            split_symbol(t.symbol),
            tuple(c if isinstance(c, int) else convert(c) for c in t.children),
        )

    return convert(term)


__all__ = ["parse", "parse_file", "parse_tree", "split_symbol"]
