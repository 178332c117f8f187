"""Canonical deterministic printer for algebra elements.

Terms are ordered by odd content, then by descending even exponents, so
pure even words print before their odd corrections.  Output reparses in
the expression grammar of :mod:`glpq.dsl`.
"""

from __future__ import annotations


def _term_sort_key(pres, mono):
    odd = mono[pres.n_even:]
    even = mono[:pres.n_even]
    return (sum(odd), tuple(-e for e in even), odd)


def _mono_str(pres, mono):
    parts = []
    for g, e in enumerate(mono):
        if e == 0:
            continue
        name = pres.gen_names[g]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def scalar_term(coeff, mono_str, first):
    s = str(coeff)
    if s.startswith("-"):
        sign = "-"
        body = s[1:] if " " not in s else None
        if body is None:
            # re-render the negated scalar so the sign can be folded out
            body = str(-coeff)
    else:
        sign = "+"
        body = s
    if " " in body:
        body = f"({body})"
    if mono_str:
        term = mono_str if body == "1" else f"{body}*{mono_str}"
    else:
        term = body
    if first:
        return term if sign == "+" else f"-{term}"
    return f"{sign} {term}"


def print_element(e):
    """Deterministic canonical rendering of an Element (or wrapper)."""
    elem = getattr(e, "element", e)
    pres = elem.pres
    if not elem.terms:
        return "0"
    keys = sorted(elem.terms, key=lambda m: _term_sort_key(pres, m))
    out = []
    for i, m in enumerate(keys):
        out.append(scalar_term(elem.terms[m], _mono_str(pres, m), i == 0))
    return " ".join(out)
