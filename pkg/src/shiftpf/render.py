"""Text, LaTeX and JSON renderings of expansions."""

from fractions import Fraction

from .partitions import display_key, sort_key


def coeff_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _powers(lam):
    """Group a partition into (part, exponent) pairs, largest part first."""
    out = []
    for part in lam:
        if out and out[-1][0] == part:
            out[-1][1] += 1
        else:
            out.append([part, 1])
    return out


def _tex(x):
    x = str(x)
    return x if len(x) == 1 else "{" + x + "}"


def _monomial(basis, lam, latex):
    if not lam:
        return ""
    if basis == "p":
        if latex:
            return "p_" + _tex(",".join(map(str, lam)))
        return "p[" + ",".join(map(str, lam)) + "]"
    if basis == "P":
        if latex:
            return "P_" + _tex(",".join(map(str, lam)))
        return "P[" + ",".join(map(str, lam)) + "]"
    # V-monomials are products of one-row P's
    pieces = []
    for part, e in _powers(lam):
        if latex:
            pieces.append(f"P_{_tex(part)}" + (f"^{_tex(e)}" if e > 1 else ""))
        else:
            pieces.append(f"P{part}" + (f"^{e}" if e > 1 else ""))
    return ("" if latex else "*").join(pieces)


def format_terms(terms, basis, latex=False):
    """Render ``{partition: coeff}`` as a sum, in display order.

    >>> format_terms({(3,): 2, (1, 1, 1): 20}, "vodd")
    '20*P1^3 + 2*P3'
    """
    items = sorted(((k, Fraction(v)) for k, v in terms.items() if v), key=lambda kv: display_key(kv[0]))
    if not items:
        return "0"
    out = []
    for i, (lam, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = _monomial(basis, lam, latex)
        if not mono:
            body = coeff_str(mag)
        elif mag == 1:
            body = mono
        elif latex:
            body = (rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}" if mag.denominator > 1 else str(mag)) + mono
        else:
            body = f"{coeff_str(mag)}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def terms_json(terms):
    """Term list in canonical partition order with exact rational strings."""
    return [
        {"partition": list(lam), "coeff": coeff_str(c)}
        for lam, c in sorted(terms.items(), key=lambda kv: sort_key(kv[0]))
        if c
    ]
