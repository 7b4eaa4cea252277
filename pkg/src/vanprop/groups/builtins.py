"""Named group families and the text formats for specifying groups."""
from __future__ import annotations

from pathlib import Path
from typing import Union

from sympy import isprime, primitive_root

from ..errors import InputError
from .perm import DEFAULT_CAP, PermGroup, check_perm, regular_representation


def cyclic(k: int, cap: int = DEFAULT_CAP) -> PermGroup:
    if k < 1:
        raise InputError("cyclic group needs k >= 1")
    gens = [tuple((i + 1) % k for i in range(k))] if k > 1 else []
    return PermGroup(k, gens, cap, f"C{k}")


def dihedral(k: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Symmetries of a regular k-gon, order 2k."""
    if k < 3:
        raise InputError("dihedral group needs k >= 3")
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((-i) % k for i in range(k))
    return PermGroup(k, [rot, ref], cap, f"D{k}")


def symmetric(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    if n < 1:
        raise InputError("symmetric group needs n >= 1")
    gens = []
    if n >= 2:
        gens.append((1, 0) + tuple(range(2, n)))
    if n >= 3:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return PermGroup(n, gens, cap, f"S{n}")


def alternating(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    if n < 1:
        raise InputError("alternating group needs n >= 1")
    gens = []
    for i in range(2, n):
        # 3-cycle 0 -> 1 -> i -> 0
        g = list(range(n))
        g[0], g[1], g[i] = 1, i, 0
        gens.append(tuple(g))
    return PermGroup(n, gens, cap, f"A{n}")


def frobenius(p: int, q: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """C_p x| C_q acting on Z/p by x -> a*x + b, with a of order q."""
    if not isprime(p):
        raise InputError(f"frobenius needs a prime p, got {p}")
    if q < 2 or (p - 1) % q:
        raise InputError(f"frobenius needs q | p-1 and q >= 2, got p={p}, q={q}")
    a = pow(primitive_root(p), (p - 1) // q, p)
    shift = tuple((x + 1) % p for x in range(p))
    scale = tuple((a * x) % p for x in range(p))
    return PermGroup(p, [shift, scale], cap, f"F{p}:{q}")


def extraspecial(p: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Heisenberg group of order p^3 (unitriangular 3x3 over F_p), regular action."""
    if not isprime(p):
        raise InputError(f"extraspecial needs a prime p, got {p}")
    elts = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def op(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    return regular_representation(elts, op, [(1, 0, 0), (0, 1, 0)], cap, f"H{p}")


def quaternion8(cap: int = DEFAULT_CAP) -> PermGroup:
    # units +-1, +-i, +-j, +-k as (sign, axis) with axis in 1, i, j, k = 0..3
    table = {  # axis product: (sign, axis)
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elts = [(s, a) for s in (1, -1) for a in range(4)]

    def op(x, y):
        s, a = table[(x[1], y[1])]
        return (x[0] * y[0] * s, a)

    return regular_representation(elts, op, [(1, 1), (1, 2)], cap, "Q8")


BUILTINS = {
    "cyclic": (cyclic, 1),
    "dihedral": (dihedral, 1),
    "symmetric": (symmetric, 1),
    "alternating": (alternating, 1),
    "frobenius": (frobenius, 2),
    "extraspecial": (extraspecial, 1),
    "quaternion8": (quaternion8, 0),
}


def builtin(name: str, *params: int, cap: int = DEFAULT_CAP) -> PermGroup:
    if name not in BUILTINS:
        raise InputError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}")
    fn, arity = BUILTINS[name]
    if len(params) != arity:
        raise InputError(f"builtin {name} takes {arity} integer parameter(s), got {len(params)}")
    G = fn(*params, cap=cap)
    G.name = ":".join([name] + [str(p) for p in params])
    return G


def parse_group_text(text: str, cap: int = DEFAULT_CAP, name: str = "file") -> PermGroup:
    """First line ``degree d``; then one generator per line as d 0-based images."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise InputError("empty group description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "degree" or not head[1].isdigit():
        raise InputError(f"first line must be 'degree d', got {lines[0]!r}")
    d = int(head[1])
    gens = []
    for ln in lines[1:]:
        try:
            images = [int(tok) for tok in ln.split()]
        except ValueError:
            raise InputError(f"bad generator line {ln!r}") from None
        gens.append(check_perm(images, d))
    return PermGroup(d, gens, cap, name)


def format_group_text(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"] + [" ".join(str(i) for i in g) for g in G.gens]
    return "\n".join(lines) + "\n"


def load_group(source: Union[str, Path], cap: int = DEFAULT_CAP) -> PermGroup:
    """``builtin:frobenius:7:3`` style names, or a path to a group file."""
    s = str(source)
    if s.startswith("builtin:"):
        fields = s.split(":")[1:]
        try:
            params = [int(x) for x in fields[1:]]
        except ValueError:
            raise InputError(f"builtin parameters must be integers: {s!r}") from None
        return builtin(fields[0], *params, cap=cap)
    path = Path(s)
    if not path.exists():
        raise InputError(f"no such group file: {s}")
    return parse_group_text(path.read_text(), cap, path.name)
