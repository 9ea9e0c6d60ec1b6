from fractions import Fraction


def to_fraction(value):
    """Parse an exact rational from an int, a Fraction, a `"p/q"` string or
    a `{"numerator": p, "denominator": q}` mapping.

    Floats are refused: every value handled by the package is exact.
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, dict):
        numerator = value.get('numerator')
        denominator = value.get('denominator', 1)
        if not isinstance(numerator, int) or not isinstance(denominator, int):
            raise ValueError("numerator and denominator must be integers")
        if denominator == 0:
            raise ValueError("denominator must be nonzero")
        return Fraction(numerator, denominator)
    raise ValueError(f"cannot read an exact rational from {value!r}")


def rational_to_str(value):
    """Compact exact rendering: `-4`, `1/2`."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rationals_to_str(values):
    return [rational_to_str(v) for v in values]


def word_to_str(word):
    """Hyphen-joined reduced word, `e` for the identity."""
    return '-'.join(str(i) for i in word) if word else 'e'


def root_to_str(root):
    """Root in simple-root coordinates, e.g. `a1+a2+a3` or `a1+2a2`."""
    terms = []
    for index, coefficient in enumerate(root, start=1):
        if coefficient == 0:
            continue
        if coefficient == 1:
            terms.append(f"a{index}")
        elif coefficient == -1:
            terms.append(f"-a{index}")
        else:
            terms.append(f"{coefficient}a{index}")
    return '+'.join(terms).replace('+-', '-') or '0'


def is_palindromic(coefficients):
    trimmed = list(coefficients)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return trimmed == trimmed[::-1]
