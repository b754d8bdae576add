import json

from algebra.element import AlgebraElement
from algebra.session import Session
from core.errors import ConfigError
from core.group import GElem, HElem
from core.scalar import ONE
from core.step import StepFunction


def _monomial_text(session: Session, key, slot: int, a, b, value) -> str:
    where = f"{a.to_text()},{b.to_text()};{slot}" if session.matrix else f"{a.to_text()},{b.to_text()}"
    body = f"chi[{where}] U{key.to_text()}"
    if value == ONE:
        return body
    return f"{value.to_text()}*{body}"


def to_text(element: AlgebraElement) -> str:
    """Canonical text form, readable back by utils.parser.parse_expr."""
    if element.is_zero():
        return "0"
    parts = []
    for key, coeff in element.terms:
        for slot, f in enumerate(coeff):
            for (a, b), value in f.pieces:
                parts.append(_monomial_text(element.session, key, slot, a, b, value))
    return " + ".join(parts)


def to_json(element: AlgebraElement) -> dict:
    session = element.session
    terms = []
    for key, coeff in element.terms:
        f = [s.to_json() for s in coeff] if session.matrix else coeff[0].to_json()
        terms.append({"g": key.to_json(), "f": f})
    return {"session": session.to_json(), "terms": terms}


def from_json(data: dict) -> AlgebraElement:
    """Rebuild an element; every term must keep its coefficient inside ran beta_g."""
    session = Session.from_json(data["session"])
    n = session.n
    element = AlgebraElement.zero(session)
    for item in data["terms"]:
        if session.matrix:
            key = HElem.from_json(item["g"], n)
            coeff = tuple(StepFunction.from_json(s, n) for s in item["f"])
        else:
            key = GElem.from_json(item["g"], n)
            coeff = (StepFunction.from_json(item["f"], n),)
        element = element + AlgebraElement.monomial(session, key, coeff)
    return element


def dumps(data) -> str:
    """Byte-stable JSON: sorted keys, fixed separators."""
    return json.dumps(data, sort_keys=True, indent=2)


def serialize(element: AlgebraElement, fmt: str = "text") -> str:
    if fmt == "text":
        return to_text(element)
    if fmt == "json":
        return dumps(to_json(element))
    raise ConfigError(f"unknown format '{fmt}'")


def deserialize(text: str, fmt: str = "json", session: Session | None = None) -> AlgebraElement:
    if fmt == "json":
        return from_json(json.loads(text))
    if fmt == "text":
        if session is None:
            raise ConfigError("text form needs a session to parse against")
        from utils.parser import parse_expr

        return parse_expr(text, session)
    raise ConfigError(f"unknown format '{fmt}'")
