import re
from fractions import Fraction
from typing import TYPE_CHECKING, Any, List, Union
from pydantic.errors import PydanticValueError

if TYPE_CHECKING:
    from pydantic.typing import CallableGenerator

# the unicode minus sign shows up in copied literals
_MINUS = str.maketrans({"−": "-"})
_rational_rgx = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class NotARationalError(PydanticValueError):
    code = "rational.invalid"
    msg_template = 'value "{value}" is not a rational of the form "p/q"'


def parse_rational(value: Union[str, int, Fraction]) -> Fraction:
    """Parse "p/q", "p" or a number into a Fraction; never via float."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        raise NotARationalError(value=value)
    m = _rational_rgx.match(value.translate(_MINUS))
    if m is None or (m.group(2) is not None and int(m.group(2)) == 0):
        raise NotARationalError(value=value)
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def format_rational(q: Union[int, Fraction]) -> str:
    """Serialize as "p/q" with q > 0 in lowest terms, integers as "p/1"."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational_list(text: str) -> List[Fraction]:
    parts = [p for p in text.translate(_MINUS).split(",")]
    if not parts or any(not p.strip() for p in parts):
        raise NotARationalError(value=text)
    return [parse_rational(p) for p in parts]


_group_rgx = re.compile(r"^\s*1\s*/\s*(\d+)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


class NotAGroupLiteralError(PydanticValueError):
    code = "group.invalid_literal"
    msg_template = 'value "{value}" is not a group literal of the form "1/r(w1,w2,w3)"'


class GroupLiteral(str):
    """A syntactically valid "1/r(w1,w2,w3)" string; arithmetic checks happen later."""

    @classmethod
    def __get_validators__(cls) -> "CallableGenerator":
        yield cls.validate

    @classmethod
    def validate(cls, value: Any) -> str:
        if not isinstance(value, str) or not _group_rgx.match(value.translate(_MINUS)):
            raise NotAGroupLiteralError(value=value)
        return value


def split_group_literal(text: str):
    """Return (r, w1, w2, w3) as ints, or None if the syntax is wrong."""
    m = _group_rgx.match(text.translate(_MINUS))
    if m is None:
        return None
    return tuple(int(g) for g in m.groups())
