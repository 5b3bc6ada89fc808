"""
Family string parser.

Grammar (whitespace around tokens ignored):
    gpr:p,r | g2qr:q,r | g2_q_r:q,r | g3qr:q,r | gpqrsu:p,q,r,s,t
    ms:a,m,S,U...      S is one token, elements joined by '/', empty for {}
    inc:pg,d,r | inc:h11 | noninc:pg,d,r | noninc:h11
    lex:BASE,q=n | dellex:BASE,q=n    BASE is gpr:p,r, k2, k3 or k<n>
"""

import re
from typing import List, Tuple

from .families import FamilyInstance, FamilySpec, FamilyTag, build, gpr_spec

_PREFIX = re.compile(r"\s*([a-z0-9_]+)\s*:")
_COMPLETE = re.compile(r"k(\d+)")
_FIBER = re.compile(r"\s*[a-z]\s*=\s*(\d+)\s*")

_INT_FIELDS = {
    FamilyTag.GPR: ("p", "r"),
    FamilyTag.G2QR: ("q", "r"),
    FamilyTag.G2_Q_R: ("q", "r"),
    FamilyTag.G3QR: ("q", "r"),
    FamilyTag.GPQRSU: ("p", "q", "r", "s", "t"),
}


class SpecParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokens(body: str, offset: int) -> List[Tuple[str, int]]:
    tokens = []
    start = 0
    for part in body.split(","):
        lead = len(part) - len(part.lstrip())
        tokens.append((part.strip(), offset + start + lead))
        start += len(part) + 1
    return tokens


def _int(token: str, position: int, name: str) -> int:
    if not re.fullmatch(r"-?\d+", token):
        raise SpecParseError(f"expected an integer for {name}, got '{token}'", position)
    return int(token)


def _int_set(token: str, position: int, name: str) -> Tuple[int, ...]:
    if not token:
        return ()
    values = []
    cursor = position
    for part in token.split("/"):
        values.append(_int(part.strip(), cursor, name))
        cursor += len(part) + 1
    return tuple(values)


def _parse_base(text: str, offset: int) -> FamilySpec:
    stripped = text.strip()
    complete = _COMPLETE.fullmatch(stripped)
    if complete:
        n = int(complete.group(1))
        return gpr_spec(n, n - 1)
    base = parse_family(text, offset)
    if base.tag is not FamilyTag.GPR:
        raise SpecParseError("lexicographic base must be gpr:p,r or k<n>", offset)
    return base


def parse_family(text: str, offset: int = 0) -> FamilySpec:
    """
    Parse a family string into a FamilySpec.

    Raises:
        SpecParseError: with the position of the offending character
    """
    match = _PREFIX.match(text)
    if not match:
        raise SpecParseError("expected '<family>:' prefix", offset)
    try:
        tag = FamilyTag(match.group(1))
    except ValueError:
        position = offset + match.start(1)
        raise SpecParseError(f"unknown family '{match.group(1)}'", position) from None
    body = text[match.end() :]
    body_offset = offset + match.end()

    if tag in _INT_FIELDS:
        names = _INT_FIELDS[tag]
        tokens = _tokens(body, body_offset)
        if len(tokens) != len(names):
            raise SpecParseError(
                f"{tag.value} takes {len(names)} parameters, got {len(tokens)}", body_offset
            )
        return FamilySpec(
            tag, {name: _int(tok, pos, name) for name, (tok, pos) in zip(names, tokens)}
        )

    if tag is FamilyTag.MS:
        tokens = _tokens(body, body_offset)
        if len(tokens) < 3:
            raise SpecParseError("ms takes a,m,S,U", body_offset)
        (a_tok, a_pos), (m_tok, m_pos), (s_tok, s_pos) = tokens[:3]
        u_values: List[int] = []
        for tok, pos in tokens[3:]:
            u_values.extend(_int_set(tok, pos, "U"))
        return FamilySpec(
            tag,
            {
                "a": _int(a_tok, a_pos, "a"),
                "m": _int(m_tok, m_pos, "m"),
                "S": _int_set(s_tok, s_pos, "S"),
                "U": tuple(u_values),
            },
        )

    if tag in (FamilyTag.INC, FamilyTag.NONINC):
        tokens = _tokens(body, body_offset)
        kind, kind_pos = tokens[0]
        if kind == "h11" and len(tokens) == 1:
            return FamilySpec(tag, {"design": "h11"})
        if kind == "pg" and len(tokens) == 3:
            (d_tok, d_pos), (r_tok, r_pos) = tokens[1:]
            return FamilySpec(
                tag, {"design": "pg", "d": _int(d_tok, d_pos, "d"), "r": _int(r_tok, r_pos, "r")}
            )
        raise SpecParseError("expected 'pg,d,r' or 'h11'", kind_pos)

    # lex / dellex
    head, sep, last = body.rpartition(",")
    fiber = _FIBER.fullmatch(last)
    if not sep or not fiber:
        raise SpecParseError("expected '<base>,q=<fiber>'", body_offset + len(head) + len(sep))
    base = _parse_base(head, body_offset)
    return FamilySpec(tag, {"base": base, "fiber": int(fiber.group(1))})


def load_family(text: str) -> FamilyInstance:
    """Parse and construct in one step."""
    return build(parse_family(text))
