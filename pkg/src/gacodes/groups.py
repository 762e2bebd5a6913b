"""Finite groups as multiplication tables with a controllable element order.

The element ordering defines the coordinate basis of every group-algebra
vector, so constructors accept an explicit ordering override (a list of
generator words) to match published listings. The default ordering is
breadth-first over generator words from the identity; direct products order
pairs lexicographically with the left factor slow.
"""

from __future__ import annotations

import math
from typing import Callable, Hashable, Optional, Sequence

from .errors import BadOverride, ClosureCapExceeded, ParseError, UnknownGenerator
from .parsing import tokenize

CLOSURE_CAP = 10_000
_ASSOC_CHECK_LIMIT = 64
_DEFAULT_GEN_NAMES = ("u", "v", "w", "r", "s", "t")


class Group:
    """Order-n multiplication table plus labeled, ordered elements.

    ``table[i][j]`` is the index of the product of elements i and j; ``words``
    holds, per element, a product of generator indices that evaluates to it
    (used for labels and for serialization).
    """

    __slots__ = (
        "order",
        "table",
        "identity",
        "words",
        "gen_names",
        "gen_indices",
        "name",
        "_orders",
        "_abelian",
    )

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        words: Sequence[Sequence[int]],
        gen_names: Sequence[str],
        gen_indices: Sequence[int],
        name: str = "group",
    ):
        self.order = len(table)
        self.table = tuple(tuple(row) for row in table)
        self.words = tuple(tuple(w) for w in words)
        self.gen_names = tuple(gen_names)
        self.gen_indices = tuple(gen_indices)
        self.name = name
        self.identity = self._validate()
        self._orders: Optional[tuple[int, ...]] = None
        self._abelian: Optional[bool] = None

    # -- validation --

    def _validate(self) -> int:
        n = self.order
        if len(self.words) != n:
            raise ValueError("words/table size mismatch")
        full = set(range(n))
        for i, row in enumerate(self.table):
            if set(row) != full:
                raise ValueError(f"row {i} is not a permutation (not a Latin square)")
        for j in range(n):
            if {self.table[i][j] for i in range(n)} != full:
                raise ValueError(f"column {j} is not a permutation (not a Latin square)")
        identity = None
        for e in range(n):
            if all(self.table[e][j] == j for j in range(n)) and all(
                self.table[i][e] == i for i in range(n)
            ):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        if n <= _ASSOC_CHECK_LIMIT:
            t = self.table
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab = t[ta[b]]
                    tb = t[b]
                    for c in range(n):
                        if tab[c] != ta[tb[c]]:
                            raise ValueError("multiplication table is not associative")
        for a in range(n):
            if identity not in self.table[a]:
                raise ValueError(f"element {a} has no inverse")
        return identity

    # -- core queries --

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity)

    def power(self, i: int, e: int) -> int:
        if e < 0:
            return self.power(self.inverse(i), -e)
        acc = self.identity
        base = i
        while e:
            if e & 1:
                acc = self.table[acc][base]
            base = self.table[base][base]
            e >>= 1
        return acc

    def element_order(self, i: int) -> int:
        if self._orders is None:
            orders = []
            for g in range(self.order):
                acc = g
                k = 1
                while acc != self.identity:
                    acc = self.table[acc][g]
                    k += 1
                orders.append(k)
            self._orders = tuple(orders)
        return self._orders[i]

    def exponent(self) -> int:
        out = 1
        for i in range(self.order):
            out = math.lcm(out, self.element_order(i))
        return out

    def p_part(self, p: int) -> int:
        out = 1
        n = self.order
        while n % p == 0:
            out *= p
            n //= p
        return out

    def is_abelian(self) -> bool:
        if self._abelian is None:
            t = self.table
            n = self.order
            self._abelian = all(
                t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n)
            )
        return self._abelian

    def power_map(self, q: int) -> tuple[int, ...]:
        """The index map g -> g^q (a bijection when gcd(q, |G|) = 1)."""
        return tuple(self.power(i, q) for i in range(self.order))

    # -- labels --

    def label(self, i: int) -> str:
        return render_word(self.words[i], self.gen_names)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.label(i) for i in range(self.order))

    def generator_index(self, name: str) -> int:
        try:
            return self.gen_indices[self.gen_names.index(name)]
        except ValueError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    def __repr__(self) -> str:
        return f"{self.name} (order {self.order})"

    # -- reordering --

    def with_order(self, override: Sequence[str]) -> "Group":
        """Reorder elements to match a listing of generator words."""
        if len(override) != self.order:
            raise BadOverride(
                f"override lists {len(override)} elements, group has {self.order}"
            )
        parsed = [parse_word(text, self.gen_names) for text in override]
        new_to_old = [self.evaluate_word(w) for w in parsed]
        if sorted(new_to_old) != list(range(self.order)):
            raise BadOverride("override words do not enumerate each element exactly once")
        old_to_new = [0] * self.order
        for new, old in enumerate(new_to_old):
            old_to_new[old] = new
        table = [
            [old_to_new[self.table[new_to_old[i]][new_to_old[j]]] for j in range(self.order)]
            for i in range(self.order)
        ]
        gen_indices = [old_to_new[g] for g in self.gen_indices]
        return Group(table, parsed, self.gen_names, gen_indices, name=self.name)

    def with_names(self, names: Sequence[str]) -> "Group":
        if len(names) != len(self.gen_names):
            raise BadOverride(
                f"{len(names)} names supplied for {len(self.gen_names)} generators"
            )
        return Group(self.table, self.words, names, self.gen_indices, name=self.name)

    def evaluate_word(self, word: Sequence[int]) -> int:
        acc = self.identity
        for g in word:
            acc = self.table[acc][self.gen_indices[g]]
        return acc


# --- word rendering / parsing -------------------------------------------------


def render_word(word: Sequence[int], gen_names: Sequence[str]) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        name = gen_names[word[i]]
        parts.append(name if run == 1 else f"{name}^{run}")
        i = j
    return "*".join(parts)


def parse_word(text: str, gen_names: Sequence[str]) -> tuple[int, ...]:
    """Parse ``u^2*v*u`` (or ``1``) into a flat generator-index sequence."""
    tokens = tokenize(text)
    out: list[int] = []
    i = 0

    def expect_factor(i: int) -> int:
        tok = tokens[i]
        if tok.kind == "int" and tok.text == "1":
            return i + 1
        if tok.kind != "name":
            raise ParseError("expected a generator name or 1", tok.pos)
        if tok.text not in gen_names:
            raise UnknownGenerator(f"unknown generator {tok.text!r}", tok.pos)
        gen = gen_names.index(tok.text)
        i += 1
        exponent = 1
        if tokens[i].kind == "op" and tokens[i].text == "^":
            i += 1
            if tokens[i].kind == "op" and tokens[i].text == "-":
                raise ParseError("negative exponents are not allowed in group words", tokens[i].pos)
            if tokens[i].kind != "int":
                raise ParseError("expected integer exponent", tokens[i].pos)
            exponent = int(tokens[i].text)
            i += 1
        out.extend([gen] * exponent)
        return i

    i = expect_factor(i)
    while tokens[i].kind == "op" and tokens[i].text == "*":
        i = expect_factor(i + 1)
    if tokens[i].kind != "end":
        raise ParseError(f"unexpected {tokens[i].text!r}", tokens[i].pos)
    return tuple(out)


# --- constructors ---------------------------------------------------------------


def _bfs_build(
    identity: Hashable,
    generators: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    gen_names: Sequence[str],
    name: str,
    cap: int = CLOSURE_CAP,
) -> Group:
    """Close the generators under multiplication, ordering elements
    breadth-first over generator words from the identity."""
    elems: list[Hashable] = [identity]
    index: dict[Hashable, int] = {identity: 0}
    words: list[tuple[int, ...]] = [()]
    head = 0
    while head < len(elems):
        base = elems[head]
        for gi, g in enumerate(generators):
            y = mul(base, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                words.append(words[head] + (gi,))
                if len(elems) > cap:
                    raise ClosureCapExceeded(
                        f"group closure exceeded the cap of {cap} elements"
                    )
        head += 1
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    gen_indices = [index[g] for g in generators]
    return Group(table, words, gen_names, gen_indices, name=name)


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    if n == 1:
        return Group([[0]], [()], ("x",), (0,), name="cyclic:1")
    return _bfs_build(0, [1], lambda a, b: (a + b) % n, ("x",), name=f"cyclic:{n}")


def dihedral(m: int) -> Group:
    """Order 2m: a reflection u and an m-cycle rotation v with u*v = v^-1*u.

    Named by the rotation order m, so dihedral(5) has order 10.
    """
    if m < 1:
        raise ValueError("dihedral parameter must be >= 1")
    # elements (s, r): s in {0,1} reflection flag, r rotation; right-to-left
    # composition of i -> (-1)^s * i + r on Z_m
    def mul(a, b):
        sa, ra = a
        sb, rb = b
        # apply b then a
        return ((sa + sb) % 2, (rb * (-1) ** sa + ra) % m)

    return _bfs_build(
        (0, 0), [(1, 0), (0, 1)], mul, ("u", "v"), name=f"dihedral:{m}"
    )


_QUAT_AXES = "1ijk"


def _quat_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    sa, xa = a
    sb, xb = b
    sign = sa ^ sb
    if xa == 0:
        return (sign, xb)
    if xb == 0:
        return (sign, xa)
    if xa == xb:
        return (sign ^ 1, 0)  # i*i = j*j = k*k = -1
    # i*j=k, j*k=i, k*i=j; reversed order flips the sign
    if (xa, xb) in ((1, 2), (2, 3), (3, 1)):
        return (sign, 6 - xa - xb)
    return (sign ^ 1, 6 - xa - xb)


def quaternion8() -> Group:
    """The quaternion group of order 8 with generators u = i and v = j."""
    return _bfs_build(
        (0, 0), [(0, 1), (0, 2)], _quat_mul, ("u", "v"), name="quaternion8"
    )


def direct_product(left: Group, right: Group) -> Group:
    """Pairs ordered lexicographically, left factor slow; generators renamed
    x1..xs across the factors."""
    nl, nr = left.order, right.order
    n = nl * nr
    table = [
        [
            left.table[i // nr][j // nr] * nr + right.table[i % nr][j % nr]
            for j in range(n)
        ]
        for i in range(n)
    ]
    k_left = len(left.gen_names)
    gen_names = [f"x{i + 1}" for i in range(k_left + len(right.gen_names))]
    words = []
    for i in range(n):
        lw = left.words[i // nr]
        rw = tuple(g + k_left for g in right.words[i % nr])
        words.append(lw + rw)
    gen_indices = [g * nr + right.identity for g in left.gen_indices] + [
        left.identity * nr + g for g in right.gen_indices
    ]
    name = f"product:{left.name},{right.name}"
    return Group(table, words, gen_names, gen_indices, name=name)


def from_permutations(
    perms: Sequence[dict[int, int] | Sequence[tuple[int, ...]]],
    names: Optional[Sequence[str]] = None,
    cap: int = CLOSURE_CAP,
    name: str = "perm",
) -> Group:
    """Group generated by permutations of a common finite point set.

    Each generator is a mapping or a list of cycles (tuples of points).
    Composition is right to left: (s*t)(x) = s(t(x)).
    """
    maps = [_as_map(p) for p in perms]
    domain = sorted(set().union(*[set(m) for m in maps]) or {0})
    for m in maps:
        for pt in domain:
            m.setdefault(pt, pt)
    pos = {pt: i for i, pt in enumerate(domain)}
    gens = [tuple(pos[m[pt]] for pt in domain) for m in maps]
    identity = tuple(range(len(domain)))

    def mul(a, b):
        return tuple(a[b[i]] for i in range(len(domain)))

    if names is None:
        names = [
            _DEFAULT_GEN_NAMES[i] if i < len(_DEFAULT_GEN_NAMES) else f"g{i + 1}"
            for i in range(len(gens))
        ]
    return _bfs_build(identity, gens, mul, names, name=name, cap=cap)


def _as_map(p) -> dict[int, int]:
    if isinstance(p, dict):
        return dict(p)
    out: dict[int, int] = {}
    for cycle in p:
        for i, pt in enumerate(cycle):
            nxt = cycle[(i + 1) % len(cycle)]
            if pt in out:
                raise ValueError(f"point {pt} appears twice in one permutation")
            out[pt] = nxt
    return out


# --- spec text -----------------------------------------------------------------


def parse_group_spec(text: str) -> Group:
    """CLI group syntax.

    ``cyclic:4``, ``product:cyclic:2,cyclic:4``, ``dihedral:5``,
    ``quaternion8``, ``perm:[(1,2,3),(1,2)(3,4)]``; optional clauses separated
    by ``;``: ``order=[w1,w2,...]`` (ordering override by generator words) and
    ``names=n1,n2`` (generator renaming, applied before ``order``).
    """
    clauses = _split_top(text.strip(), ";")
    group = _parse_base_spec(clauses[0])
    names: Optional[list[str]] = None
    order: Optional[list[str]] = None
    for clause in clauses[1:]:
        key, _, value = clause.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key == "names":
            names = [x.strip() for x in _strip_brackets(value).split(",") if x.strip()]
        elif key == "order":
            order = [x.strip() for x in _strip_brackets(value).split(",") if x.strip()]
        else:
            raise ParseError(f"unknown group spec clause {key!r}")
    if names is not None:
        group = group.with_names(names)
    if order is not None:
        group = group.with_order(order)
    return group


def _parse_base_spec(text: str) -> Group:
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    if kind == "cyclic":
        return cyclic(_positive_int(rest, "cyclic order"))
    if kind == "dihedral":
        return dihedral(_positive_int(rest, "dihedral parameter"))
    if kind == "quaternion8":
        return quaternion8()
    if kind == "product":
        parts = _split_top(rest, ",")
        if len(parts) < 2:
            raise ParseError("product needs at least two factors")
        factors = [_parse_base_spec(p) for p in parts]
        group = factors[0]
        for f in factors[1:]:
            group = direct_product(group, f)
        return group
    if kind == "perm":
        return from_permutations(_parse_cycles(rest), name=text.strip())
    raise ParseError(f"unknown group kind {kind!r}")


def _positive_int(text: str, what: str) -> int:
    try:
        value = int(text.strip())
    except ValueError:
        raise ParseError(f"bad {what}: {text!r}") from None
    if value < 1:
        raise ParseError(f"{what} must be >= 1")
    return value


def _split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside any brackets."""
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in (s.strip() for s in parts) if p]


def _strip_brackets(text: str) -> str:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        return text[1:-1]
    return text


def _parse_cycles(text: str) -> list[list[tuple[int, ...]]]:
    """Parse ``[(1,2,3),(1,2)(3,4)]``: top-level commas separate permutations,
    each permutation is a run of parenthesized cycles."""
    body = _strip_brackets(text)
    perms: list[list[tuple[int, ...]]] = []
    current: list[tuple[int, ...]] = []
    i = 0
    n = len(body)
    saw_cycle = False
    while i < n:
        ch = body[i]
        if ch.isspace():
            i += 1
        elif ch == "(":
            j = body.find(")", i)
            if j < 0:
                raise ParseError("unbalanced parenthesis in permutation", i)
            points = [p.strip() for p in body[i + 1 : j].split(",") if p.strip()]
            try:
                cycle = tuple(int(p) for p in points)
            except ValueError:
                raise ParseError("cycle points must be integers", i) from None
            current.append(cycle)
            saw_cycle = True
            i = j + 1
        elif ch == ",":
            if not saw_cycle:
                raise ParseError("empty permutation in list", i)
            perms.append(current)
            current = []
            saw_cycle = False
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} in permutation list", i)
    if current or saw_cycle:
        perms.append(current)
    if not perms:
        raise ParseError("no permutations given")
    return perms
