"""Surface-group homomorphisms to the quaternion group and their moves.

The fundamental group of a closed genus-g surface has generators
alpha_1..alpha_g, beta_1..beta_g subject to one relation

    R = [alpha_1, beta_1] [alpha_2, beta_2] ... [alpha_g, beta_g].

A homomorphism to the quaternion group Q is recorded by the tuple of
generator images; it is well defined iff R evaluates to +1.  A fixed
finite set of free-group automorphisms (each sending R to a conjugate of
itself) acts on such tuples by precomposition.  This module provides the
word calculus, the move set, a two-phase normalization to the standard
surjection, exhaustive enumeration in low genus, and the genus counts
for the associated covers.

Free words are tuples of nonzero ints: letter m in 1..g is alpha_m,
g+m is beta_m, and a negative letter is the inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from itertools import product

from .qalg import qmul, qinv, qparse, qstr


# ---------------------------------------------------------------------------
# free words


def reduce_word(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inv_word(w):
    return tuple(-x for x in reversed(w))


def concat_words(*ws):
    out = []
    for w in ws:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def conj_word(w, by):
    return concat_words(by, w, inv_word(by))


def cyclic_reduce(w):
    w = reduce_word(w)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def words_conjugate(u, v) -> bool:
    """Conjugacy test in a free group: equal cyclic reductions up to rotation."""
    u = cyclic_reduce(u)
    v = cyclic_reduce(v)
    if len(u) != len(v):
        return False
    if not u:
        return True
    return any(v[i:] + v[:i] == u for i in range(len(v)))


def surface_relator(g):
    parts = []
    for m in range(1, g + 1):
        parts.append((m, g + m, -m, -(g + m)))
    return concat_words(*parts)


# ---------------------------------------------------------------------------
# homomorphism tuples


@dataclass(frozen=True)
class HomTuple:
    """Images of alpha_1..alpha_g, beta_1..beta_g in Q, as (sign, axis)."""

    g: int
    images: tuple

    def __post_init__(self):
        assert len(self.images) == 2 * self.g

    def alpha(self, m):
        return self.images[m - 1]

    def beta(self, m):
        return self.images[self.g + m - 1]


def eval_word(h: HomTuple, w) -> tuple:
    acc = (1, 0)
    for x in w:
        if not 1 <= abs(x) <= 2 * h.g:
            raise ValueError(f"generator index {x} out of range for genus {h.g}")
        img = h.images[abs(x) - 1]
        acc = qmul(acc, img if x > 0 else qinv(img))
    return acc


def classify_hom(h: HomTuple) -> dict:
    valid = eval_word(h, surface_relator(h.g)) == (1, 0)
    axes = {a for (_, a) in h.images if a != 0}
    return {"valid": valid, "surjective": len(axes) >= 2}


def standard_hom(g) -> HomTuple:
    """alpha_{g-1} -> i, alpha_g -> j, every other generator -> +1."""
    assert g >= 2
    images = [(1, 0)] * (2 * g)
    images[g - 2] = (1, 1)
    images[g - 1] = (1, 2)
    return HomTuple(g, tuple(images))


def parse_hom(g, text) -> HomTuple:
    syms = text.replace(",", " ").split()
    if len(syms) != 2 * g:
        raise ValueError(f"expected {2 * g} symbols, got {len(syms)}")
    return HomTuple(g, tuple(qparse(s) for s in syms))


def format_hom(h: HomTuple) -> str:
    return ",".join(qstr(x) for x in h.images)


# ---------------------------------------------------------------------------
# the move calculus


@dataclass(frozen=True)
class Move:
    """A free-group endomorphism given by generator images, acting on
    HomTuples by precomposition."""

    kind: str
    g: int
    images: tuple  # 2g free words

    def substitute(self, w):
        parts = []
        for x in w:
            img = self.images[abs(x) - 1]
            parts.append(img if x > 0 else inv_word(img))
        return concat_words(*parts)


def _identity_images(g):
    return [(t,) for t in range(1, 2 * g + 1)]


def psi_move(g, k) -> Move:
    """The handle-mixing automorphism indexed by k, 1 <= k <= g-1:

        alpha_k   -> alpha_{k+1} alpha_k
        beta_k    -> beta_k
        alpha_{k+1} -> beta_k alpha_{k+1} beta_k^{-1}
        beta_{k+1}  -> alpha_{k+1} beta_{k+1} alpha_{k+1}^{-1} beta_k^{-1}
        others    -> conjugated by alpha_{k+1}

    It sends R to alpha_{k+1} R alpha_{k+1}^{-1}.
    """
    if not 1 <= k <= g - 1:
        raise ValueError(f"psi index {k} out of range for genus {g}")
    a, b = k, g + k          # alpha_k, beta_k
    a1, b1 = k + 1, g + k + 1  # alpha_{k+1}, beta_{k+1}
    imgs = _identity_images(g)
    for t in range(1, 2 * g + 1):
        if t in (a, b, a1, b1):
            continue
        imgs[t - 1] = (a1, t, -a1)
    imgs[a - 1] = (a1, a)
    imgs[b - 1] = (b,)
    imgs[a1 - 1] = (b, a1, -b)
    imgs[b1 - 1] = (a1, b1, -a1, -b)
    return Move(f"PSI({k})", g, tuple(imgs))


def beta_twist(g, m) -> Move:
    """beta_m -> beta_m alpha_m^2."""
    imgs = _identity_images(g)
    imgs[g + m - 1] = (g + m, m, m)
    return Move(f"BETA_TWIST({m})", g, tuple(imgs))


def alpha_slide(g, m) -> Move:
    """alpha_m -> alpha_m beta_m."""
    imgs = _identity_images(g)
    imgs[m - 1] = (m, g + m)
    return Move(f"ALPHA_SLIDE({m})", g, tuple(imgs))


def beta_slide(g, m) -> Move:
    """beta_m -> beta_m alpha_m."""
    imgs = _identity_images(g)
    imgs[g + m - 1] = (g + m, m)
    return Move(f"BETA_SLIDE({m})", g, tuple(imgs))


def conj_move(g, w) -> Move:
    """Every generator conjugated by the word w."""
    w = reduce_word(w)
    imgs = [conj_word(im, w) for im in _identity_images(g)]
    label = ".".join(str(x) for x in w) or "e"
    return Move(f"CONJ({label})", g, tuple(imgs))


def move_set(g):
    moves = [psi_move(g, k) for k in range(1, g)]
    for m in range(1, g + 1):
        moves.append(beta_twist(g, m))
        moves.append(alpha_slide(g, m))
        moves.append(beta_slide(g, m))
    for t in range(1, 2 * g + 1):
        moves.append(conj_move(g, (t,)))
    return moves


def apply_move(h: HomTuple, mv: Move) -> HomTuple:
    assert mv.g == h.g
    return HomTuple(h.g, tuple(eval_word(h, w) for w in mv.images))


def move_fixes_relator_class(mv: Move) -> bool:
    r = surface_relator(mv.g)
    return words_conjugate(mv.substitute(r), r)


def verify_psi_in_Ag(g, k) -> bool:
    """Symbolic check that psi_k sends R exactly to alpha_{k+1} R alpha_{k+1}^{-1}."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    r = surface_relator(g)
    image = psi_move(g, k).substitute(r)
    return image == conj_word(r, (k + 1,))


# ---------------------------------------------------------------------------
# normalization


def _phase1_shape(h: HomTuple) -> bool:
    g = h.g
    if g < 2:
        return False
    if h.alpha(g - 1) != (1, 1) or h.alpha(g) != (1, 2):
        return False
    for m in range(1, g - 1):
        if h.alpha(m)[1] != 0:
            return False
    return all(h.beta(m)[1] == 0 for m in range(1, g + 1))


def _flip_moves(g, m):
    """Move sequence negating the image of alpha_m (m <= g-2) and fixing
    every other image, valid on tuples where the images of alpha_{m+1..g-2}
    and all beta's are +1.
    """
    if m == g - 2:
        return [psi_move(g, m), psi_move(g, m)]
    inner = _flip_moves(g, m + 1)
    return inner + [psi_move(g, m)] + inner


def normalize_hom(h: HomTuple, node_budget=200000) -> dict:
    """Drive h to the standard surjection by moves, if possible.

    Phase 1 handles tuples already in the shape reached by the
    constructive part of the normalization argument (beta images and the
    first g-2 alpha images central, then alpha_{g-1} = i, alpha_g = j)
    with an explicit move program.  Phase 2 is a breadth-first search
    over the full move set, bounded by ``node_budget`` visited tuples.

    Returns {"reached": bool, "moves": [Move]}; replaying the moves on h
    reproduces the standard tuple whenever reached is True.
    """
    cls = classify_hom(h)
    if not cls["valid"]:
        raise ValueError("tuple does not satisfy the surface relation")
    if not cls["surjective"]:
        raise ValueError("tuple is not surjective")
    g = h.g
    target = standard_hom(g)
    if h == target:
        return {"reached": True, "moves": []}

    if _phase1_shape(h):
        moves = []
        work = h

        def push(mv):
            nonlocal work
            moves.append(mv)
            work = apply_move(work, mv)

        # clear the two non-central handles first: their alpha images
        # square to -1, so one twist absorbs a -1 on the beta side
        for m in (g - 1, g):
            if work.beta(m) == (-1, 0):
                push(beta_twist(g, m))
        # central handles: slides put the -1 onto the alpha side
        for m in range(1, g - 1):
            if work.beta(m) == (-1, 0):
                if work.alpha(m) == (1, 0):
                    push(alpha_slide(g, m))
                push(beta_slide(g, m))
        # flip any remaining -1 alpha images, innermost handle last
        for m in range(g - 2, 0, -1):
            if work.alpha(m) == (-1, 0):
                for mv in _flip_moves(g, m):
                    push(mv)
        assert work == target, "phase-1 program left an unexpected tuple"
        return {"reached": True, "moves": moves}

    # phase 2: bounded breadth-first search
    moves = move_set(g)
    seen = {h.images: (None, None)}
    queue = deque([h.images])
    found = None
    while queue and len(seen) <= node_budget:
        cur = queue.popleft()
        cur_h = HomTuple(g, cur)
        for mv in moves:
            nxt = apply_move(cur_h, mv).images
            if nxt in seen:
                continue
            seen[nxt] = (cur, mv)
            if nxt == target.images:
                found = nxt
                queue.clear()
                break
            queue.append(nxt)
    if found is None:
        return {"reached": False, "moves": []}
    path = []
    node = found
    while seen[node][0] is not None:
        prev, mv = seen[node]
        path.append(mv)
        node = prev
    path.reverse()
    return {"reached": True, "moves": path}


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class EnumReport:
    genus: int
    total: int
    valid: int
    surjective: int
    orbit_sizes: tuple
    standard_orbit_size: int


GROUP8 = tuple((s, a) for a in range(4) for s in (1, -1))


def enumerate_surjections(g) -> EnumReport:
    """Exhaustive census of valid tuples at genus g <= 3, with the orbit
    partition of the surjective ones under the move set."""
    if g > 3:
        raise ValueError("enumeration only supported for genus <= 3")
    total = 0
    valid = 0
    surjective = []
    for images in product(GROUP8, repeat=2 * g):
        total += 1
        acc = (1, 0)
        for m in range(g):
            a, b = images[m], images[g + m]
            acc = qmul(acc, qmul(qmul(a, b), qmul(qinv(a), qinv(b))))
        if acc != (1, 0):
            continue
        valid += 1
        axes = {ax for (_, ax) in images if ax != 0}
        if len(axes) >= 2:
            surjective.append(images)
    moves = move_set(g)
    remaining = set(surjective)
    orbit_sizes = []
    standard_orbit = 0
    std = standard_hom(g).images if g >= 2 else None
    while remaining:
        seed = remaining.pop()
        orbit = {seed}
        queue = deque([seed])
        while queue:
            cur = HomTuple(g, queue.popleft())
            for mv in moves:
                nxt = apply_move(cur, mv).images
                if nxt not in orbit:
                    orbit.add(nxt)
                    queue.append(nxt)
        remaining -= orbit
        orbit_sizes.append(len(orbit))
        if std is not None and std in orbit:
            standard_orbit = len(orbit)
    return EnumReport(
        genus=g,
        total=total,
        valid=valid,
        surjective=len(surjective),
        orbit_sizes=tuple(sorted(orbit_sizes, reverse=True)),
        standard_orbit_size=standard_orbit,
    )


# ---------------------------------------------------------------------------
# numerology


def genus_numerology(g, n=None) -> dict:
    """Genus of the two covers, the dimension of the associated abelian
    quotient, and the dimension count n(n-1)/2 for the relevant period
    domain (n defaults to half the abelian-variety dimension 4(g-1))."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    prym_dim = 4 * (g - 1)
    if n is None:
        n = prym_dim // 2
    return {
        "genus_tilde": 8 * g - 7,
        "genus_hat": 4 * g - 3,
        "prym_dim": prym_dim,
        "moduli_dim": n * (n - 1) // 2,
    }
