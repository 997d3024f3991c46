"""
场景解析技能

Skill: 把场景文件解析并展开（elaborate）为 ScenarioDoc
输入: UTF-8 场景文本
输出: ScenarioDoc（声明的空间 + 指令），或带行列号的 ScenarioError

语法:
    doc       := (decl | directive)*
    decl      := "space" NAME "=" spaceExpr ("cap" CAPNAME)*
    spaceExpr := "stringer(" mfd ")" | "ladder(" mfd "," mfd ")"
               | "csi(" spaceRef "," spaceRef ")" | "stringer_sum(" spaceRef "," mfd ")"
               | "M(" primeList ")" | "cross(" spaceExpr "," INT ")" | NAME
    spaceRef  := NAME "@" (mfd | "*" | "#" INT)
    mfd       := prod ("#" prod)*          // x 比 # 结合得更紧
    prod      := atom ("x" atom)*
    atom      := KEYWORD "(" INT ")" | "(" mfd ")"
    directive := "invariants" NAME "primes" primeList
               | "distinguish" NAME NAME "primes" primeList
               | "census" NAME "primes" primeList
               | "oracle-check" spaceExpr "prime" INT ("depth" INT)?

`//` 到行尾是注释。
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from sympy import isprime

from catalog import Manifold, connected_sum, get_all_manifolds, get_manifold, product
from errors import ScenarioError
from ladder import (
    Space,
    cross_with_torus,
    csi,
    generalized_capped_ladder,
    make_ladder,
    make_stringer,
    stringer_sum,
)

SPACE_KEYWORDS = ("stringer", "ladder", "csi", "stringer_sum", "M", "cross")
DIRECTIVES = ("invariants", "distinguish", "census", "oracle-check")
RESERVED = DIRECTIVES + ("space", "cap", "primes", "prime", "depth", "x")

_TOKEN_RE = re.compile(
    r"""
    (?P<comment>//[^\n]*)
  | (?P<newline>\n)
  | (?P<space>[ \t\r]+)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z0-9_]+)*)
  | (?P<symbol>[()=,@*\#])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "ident" | "symbol" | "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    """
    词法分析

    Raises:
        ScenarioError: 非法字符
    """
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if not match:
            raise ScenarioError(f"unexpected character {text[pos]!r}", line, column)
        kind = match.lastgroup
        if kind == "newline":
            line += 1
            line_start = match.end()
        elif kind in ("int", "ident", "symbol"):
            tokens.append(Token(kind, match.group(), line, column))
        pos = match.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# ========== 语法树 ==========

@dataclass(frozen=True)
class SpaceRef:
    """NAME @ 模式 / NAME @ * / NAME @ #i"""
    name: str
    pattern: Optional[Manifold] = None
    index: Optional[int] = None

    def render(self) -> str:
        if self.index is not None:
            return f"{self.name} @ #{self.index}"
        if self.pattern is None:
            return f"{self.name} @ *"
        return f"{self.name} @ {self.pattern}"


@dataclass(frozen=True)
class StringerExpr:
    mfd: Manifold

    def render(self) -> str:
        return f"stringer({self.mfd})"


@dataclass(frozen=True)
class LadderExpr:
    left: Manifold
    right: Manifold

    def render(self) -> str:
        return f"ladder({self.left}, {self.right})"


@dataclass(frozen=True)
class CsiExpr:
    left: SpaceRef
    right: SpaceRef

    def render(self) -> str:
        return f"csi({self.left.render()}, {self.right.render()})"


@dataclass(frozen=True)
class StringerSumExpr:
    ref: SpaceRef
    mfd: Manifold

    def render(self) -> str:
        return f"stringer_sum({self.ref.render()}, {self.mfd})"


@dataclass(frozen=True)
class CappedLadderExpr:
    primes: Tuple[int, ...]

    def render(self) -> str:
        return f"M({', '.join(map(str, self.primes))})"


@dataclass(frozen=True)
class CrossExpr:
    inner: "SpaceExpr"
    k: int

    def render(self) -> str:
        return f"cross({self.inner.render()}, {self.k})"


@dataclass(frozen=True)
class NameExpr:
    name: str

    def render(self) -> str:
        return self.name


SpaceExpr = Union[StringerExpr, LadderExpr, CsiExpr, StringerSumExpr, CappedLadderExpr, CrossExpr, NameExpr]


@dataclass(frozen=True)
class Declaration:
    """space NAME = expr cap ..."""
    name: str
    expr: SpaceExpr
    caps: Tuple[str, ...] = ()
    space: Optional[Space] = field(default=None, compare=False)
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def render(self) -> str:
        text = f"space {self.name} = {self.expr.render()}"
        return text + "".join(f" cap {c}" for c in self.caps)


@dataclass(frozen=True)
class Directive:
    """
    指令

    Attributes:
        kind: invariants | distinguish | census | oracle-check
        names: 引用的空间名（oracle-check 为空）
        primes: 素数列表
        expr: oracle-check 的空间表达式
        depth: oracle-check 的截断深度（省略时取配置默认值）
    """
    kind: str
    names: Tuple[str, ...] = ()
    primes: Tuple[int, ...] = ()
    expr: Optional[SpaceExpr] = None
    depth: Optional[int] = None
    spaces: Tuple[Space, ...] = field(default=(), compare=False)
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def render(self) -> str:
        primes = ",".join(map(str, self.primes))
        if self.kind == "oracle-check":
            text = f"oracle-check {self.expr.render()} prime {self.primes[0]}"
            return text + (f" depth {self.depth}" if self.depth is not None else "")
        return f"{self.kind} {' '.join(self.names)} primes {primes}"


@dataclass(frozen=True)
class ScenarioDoc:
    """展开后的场景文档：声明与指令按原顺序交错"""
    items: Tuple[Union[Declaration, Directive], ...]

    @property
    def declarations(self) -> Tuple[Declaration, ...]:
        return tuple(i for i in self.items if isinstance(i, Declaration))

    @property
    def directives(self) -> Tuple[Directive, ...]:
        return tuple(i for i in self.items if isinstance(i, Directive))

    @property
    def spaces(self) -> Dict[str, Space]:
        return {d.name: d.space for d in self.declarations}


# ========== 解析 + 展开 ==========

class ScenarioParser:
    """
    递归下降解析器，边解析边展开

    Example:
        doc = ScenarioParser(text).parse()
        for directive in doc.directives:
            print(directive.render())
    """

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.env: Dict[str, Space] = {}

    # ---------- 记号工具 ----------

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "eof":
            self.pos += 1
        return token

    def _error(self, message: str, token: Optional[Token] = None, expected=None) -> ScenarioError:
        token = token or self.current
        return ScenarioError(message, token.line, token.column, expected)

    def _describe(self, token: Token) -> str:
        return "end of input" if token.kind == "eof" else repr(token.text)

    def _expect(self, text: str) -> Token:
        if self.current.text != text or self.current.kind == "eof":
            raise self._error(f"unexpected {self._describe(self.current)}", expected=[text])
        return self._advance()

    def _expect_ident(self, what: str = "NAME") -> Token:
        if self.current.kind != "ident":
            raise self._error(f"unexpected {self._describe(self.current)}", expected=[what])
        return self._advance()

    def _expect_int(self, what: str = "INT") -> Tuple[int, Token]:
        if self.current.kind != "int":
            raise self._error(f"unexpected {self._describe(self.current)}", expected=[what])
        token = self._advance()
        return int(token.text), token

    def _check(self, token: Token, build):
        """在 token 的位置报告核心模块抛出的错误"""
        try:
            return build()
        except ScenarioError:
            raise
        except ValueError as e:
            raise ScenarioError(str(e), token.line, token.column) from e

    # ---------- 文档 ----------

    def parse(self) -> ScenarioDoc:
        items: List[Union[Declaration, Directive]] = []
        while self.current.kind != "eof":
            token = self.current
            if token.text == "space":
                items.append(self._declaration())
            elif token.text in DIRECTIVES:
                items.append(self._directive())
            else:
                raise self._error(f"unexpected {self._describe(token)}", expected=("space",) + DIRECTIVES)
        return ScenarioDoc(tuple(items))

    def _declaration(self) -> Declaration:
        start = self._expect("space")
        name_token = self._expect_ident()
        name = name_token.text
        if name in self.env:
            raise self._error(f"space {name!r} is already declared", name_token)
        if name in RESERVED:
            raise self._error(f"{name!r} is a reserved word", name_token)
        self._expect("=")
        expr_token = self.current
        expr, space = self._space_expr()
        caps: List[str] = []
        while self.current.text == "cap":
            self._advance()
            caps.append(self._cap_name())
        if caps:
            space = self._check(expr_token, lambda: space.with_caps(caps))
        self.env[name] = space
        return Declaration(name, expr, tuple(caps), space, start.line, start.column)

    def _cap_name(self) -> str:
        name = self._expect_ident("CAPNAME").text
        if self.current.text == "(":
            self._advance()
            value, _ = self._expect_int()
            self._expect(")")
            return f"{name}({value})"
        return name

    def _directive(self) -> Directive:
        start = self._advance()
        kind = start.text
        if kind == "oracle-check":
            expr_token = self.current
            expr, space = self._space_expr()
            self._expect("prime")
            p, p_token = self._expect_int("PRIME")
            self._require_prime(p, p_token)
            depth = None
            if self.current.text == "depth":
                self._advance()
                depth, depth_token = self._expect_int("DEPTH")
                if depth < 1:
                    raise self._error("truncation depth must be >= 1", depth_token)
            return Directive(kind, (), (p,), expr, depth, (space,), start.line, start.column)

        count = 2 if kind == "distinguish" else 1
        names = [self._space_name() for _ in range(count)]
        self._expect("primes")
        primes = self._prime_list()
        spaces = tuple(self.env[n.text] for n in names)
        if kind == "distinguish" and spaces[0].dimension != spaces[1].dimension:
            raise self._error(
                f"cannot compare spaces of dimension {spaces[0].dimension} and {spaces[1].dimension}",
                names[1],
            )
        return Directive(
            kind, tuple(n.text for n in names), primes, None, None, spaces, start.line, start.column
        )

    def _space_name(self) -> Token:
        token = self._expect_ident()
        if token.text not in self.env:
            raise self._error(f"unknown space {token.text!r}", token)
        return token

    def _prime_list(self) -> Tuple[int, ...]:
        primes = []
        while True:
            p, token = self._expect_int("PRIME")
            self._require_prime(p, token)
            primes.append(p)
            if self.current.text != ",":
                return tuple(primes)
            self._advance()

    def _require_prime(self, p: int, token: Token) -> None:
        if not isprime(p):
            raise self._error(f"{p} is not prime", token)

    # ---------- 空间表达式 ----------

    def _space_expr(self) -> Tuple[SpaceExpr, Space]:
        token = self._expect_ident("space expression")
        word = token.text
        if self.current.text != "(":
            if word not in self.env:
                raise self._error(f"unknown space {word!r}", token)
            return NameExpr(word), self.env[word]
        if word not in SPACE_KEYWORDS:
            raise self._error(f"unknown space constructor {word!r}", token, SPACE_KEYWORDS)
        self._expect("(")

        if word == "stringer":
            mfd = self._mfd()
            expr = StringerExpr(mfd)
            space = self._check(token, lambda: make_stringer(mfd))
        elif word == "ladder":
            left = self._mfd()
            self._expect(",")
            right = self._mfd()
            expr = LadderExpr(left, right)
            space = self._check(token, lambda: make_ladder(left, right))
        elif word == "csi":
            left, a, u = self._space_ref()
            self._expect(",")
            right, b, v = self._space_ref()
            expr = CsiExpr(left, right)
            space = self._check(token, lambda: csi(a, u, b, v))
        elif word == "stringer_sum":
            ref, a, u = self._space_ref()
            self._expect(",")
            mfd = self._mfd()
            expr = StringerSumExpr(ref, mfd)
            space = self._check(token, lambda: stringer_sum(a, u, mfd))
        elif word == "M":
            primes = self._prime_list()
            expr = CappedLadderExpr(primes)
            space = self._check(token, lambda: generalized_capped_ladder(primes))
        else:
            inner, inner_space = self._space_expr()
            self._expect(",")
            k, _ = self._expect_int()
            expr = CrossExpr(inner, k)
            space = self._check(token, lambda: cross_with_torus(inner_space, k))
        self._expect(")")
        return expr, space

    def _space_ref(self) -> Tuple[SpaceRef, Space, int]:
        name = self._space_name()
        space = self.env[name.text]
        self._expect("@")
        at = self.current
        if at.text == "*":
            self._advance()
            ref = SpaceRef(name.text)
        elif at.text == "#":
            self._advance()
            index, _ = self._expect_int("NODE")
            ref = SpaceRef(name.text, index=index)
        else:
            ref = SpaceRef(name.text, pattern=self._mfd())
        node = self._check(at, lambda: space.select_node(ref.pattern, ref.index))
        return ref, space, node

    # ---------- 流形表达式 ----------

    def _mfd(self) -> Manifold:
        start = self.current
        summands = [self._prod()]
        while self.current.text == "#":
            self._advance()
            summands.append(self._prod())
        if len(summands) == 1:
            return summands[0]
        return self._check(start, lambda: connected_sum(*summands))

    def _prod(self) -> Manifold:
        result = self._atom()
        while self.current.kind == "ident" and self.current.text == "x":
            self._advance()
            right = self._atom()
            result = product(result, right)
        return result

    def _atom(self) -> Manifold:
        token = self.current
        if token.text == "(":
            self._advance()
            inner = self._mfd()
            self._expect(")")
            return inner
        keywords = sorted(get_all_manifolds())
        if token.kind != "ident":
            raise self._error(f"unexpected {self._describe(token)}", expected=keywords + ["("])
        family = get_manifold(token.text)
        if family is None:
            raise self._error(f"unknown manifold {token.text!r}", token, keywords)
        self._advance()
        self._expect("(")
        value, value_token = self._expect_int()
        self._expect(")")
        return self._check(value_token, lambda: family.from_argument(value))


# ========== 打印 ==========

def format_scenario(doc: ScenarioDoc) -> str:
    """把文档打印回场景文本；重新解析得到相同的文档"""
    return "".join(item.render() + "\n" for item in doc.items)


# 便捷函数
def parse_scenario(text: str) -> ScenarioDoc:
    """
    便捷函数：解析并展开场景文本

    Args:
        text: 场景文本

    Returns:
        ScenarioDoc

    Raises:
        ScenarioError: 语法错误、未知标识符、维数不匹配、非素数等
    """
    return ScenarioParser(text).parse()


def decode_scenario(data: bytes) -> str:
    """
    把场景文件的字节解码为文本

    Raises:
        ScenarioError: 不是合法的 UTF-8，位置指向第一个非法字节
    """
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        prefix = data[: e.start].decode("utf-8")
        line = prefix.count("\n") + 1
        column = len(prefix) - (prefix.rfind("\n") + 1) + 1
        raise ScenarioError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line, column) from e
