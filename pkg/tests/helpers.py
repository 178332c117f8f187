"""Shared randomized generators for the engine property tests."""

from glpq.nc import Element
from glpq.tside import tside


def random_word(rng, max_len=12, exp_bound=3):
    ctx = tside()
    word = []
    for _ in range(rng.randint(0, max_len)):
        gen = rng.choice(("a", "d", "beta", "gamma"))
        if gen in ("beta", "gamma"):
            word.append((gen, rng.choice((1, 1, 1, 2))))
        else:
            e = rng.randint(-exp_bound, exp_bound)
            if e:
                word.append((gen, e))
    return word


def random_scalar(rng):
    ctx = tside()
    s = ctx.scalar(rng.randint(-4, 4))
    if rng.random() < 0.5:
        s = s + ctx.p ** rng.randint(-1, 1) * rng.randint(-2, 2)
    if s.is_zero():
        s = ctx.one
    return s


def random_element(rng, n_terms=3, max_len=6):
    ctx = tside()
    e = ctx.pres.zero_elt()
    for _ in range(rng.randint(1, n_terms)):
        e = e + ctx.pres.word_elt(random_word(rng, max_len), random_scalar(rng))
    return e


def renormalize(e):
    """Push every stored term through the rewriting engine once more."""
    pres = e.pres
    out = pres.zero_elt()
    for mono, coeff in e.terms.items():
        word = [(g, exp) for g, exp in enumerate(mono) if exp]
        out = out + pres.word_elt(word, coeff)
    return out


def random_homogeneous(rng, parity, max_len=5):
    """Random element all of whose monomials share the given parity."""
    ctx = tside()
    for _ in range(200):
        e = random_element(rng, n_terms=2, max_len=max_len)
        if e.is_zero():
            continue
        terms = {m: c for m, c in e.terms.items()
                 if ctx.pres.mono_parity(m) == parity}
        if terms:
            return Element(ctx.pres, terms)
    raise AssertionError("could not draw a homogeneous element")
