from typing import Iterable, Iterator, List, Optional, Sequence, Tuple


def parse_ints(text: str, count: Optional[int] = None) -> Tuple[int, ...]:
    """Parse comma separated integers

    Args:
        text: String like ``"1,2,-1,-1"``. Whitespace around items is ignored.
        count: Expected number of integers. ``None`` accepts any number.

    Return:
        Tuple of parsed integers

    Raises:
        ValueError: If an item is not an integer or the count does not match
    """
    items = [item.strip() for item in text.split(",")]
    try:
        values = tuple(int(item) for item in items)
    except ValueError:
        raise ValueError(f"Expected comma separated integers, got '{text}'")
    if count is not None and len(values) != count:
        raise ValueError(f"Expected {count} integers, got {len(values)} in '{text}'")
    return values


def split_arguments(text: str) -> List[str]:
    """Split a string at commas which are not nested in parentheses

    Args:
        text: Argument list, e.g. ``"Zp:5,tensor(Z,Zp:3)"``

    Return:
        List of stripped argument strings

    Raises:
        ValueError: If parentheses are unbalanced
    """
    args = []
    depth = 0
    start = 0
    for pos, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"Unbalanced parentheses in '{text}'")
        elif char == "," and depth == 0:
            args.append(text[start:pos].strip())
            start = pos + 1
    if depth != 0:
        raise ValueError(f"Unbalanced parentheses in '{text}'")
    args.append(text[start:].strip())
    return args


def power(base: str, exponent: int) -> str:
    """Render ``base`` raised to an integer power

    Return:
        ``""`` for exponent zero, ``base`` for exponent one and
        ``base^exponent`` otherwise.
    """
    if exponent == 0:
        return ""
    if exponent == 1:
        return base
    return f"{base}^{exponent}"


def signed_sum(terms: Iterable[Tuple[int, str]], unit: str = "1") -> str:
    """Render a formal integer combination

    Args:
        terms: Pairs of coefficient and label. The label *unit* (or the empty
            string) is rendered as the bare coefficient.
        unit: Label of the neutral element

    Return:
        String like ``"2*a1*y^-1 - 1"``. The empty combination is ``"0"``.
    """
    parts = []
    for coeff, label in terms:
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        size = abs(coeff)
        if not label or label == unit:
            body = str(size)
        elif size == 1:
            body = label
        else:
            body = f"{size}*{label}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"


def chunk(seq: Sequence, n: int) -> Iterator[Sequence]:
    """Read a sequence in consecutive blocks of a given size

    Args:
        seq: Sequence with a length divisible by *n*
        n: Block size, at least one

    Yields:
        Slices of length *n*
    """
    if n < 1:
        raise ValueError(f"Block size must be positive, got {n}")
    if len(seq) % n:
        raise ValueError(f"Length {len(seq)} is not a multiple of {n}")
    for start in range(0, len(seq), n):
        yield seq[start:start + n]
