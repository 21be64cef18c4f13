"""JSON (de)serialization for every document the CLI speaks.

Half-integers travel as the strings "k" or "k/2"; general exact rationals
(the complementary exponents) additionally allow "p/q".  Cuspidal symbols
are declared once per document and referenced by name.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .glconstraints import GLLocalComponent, GLNuEntry, TemperedFactor
from .halfint import HalfInt
from .multisegments import (
    ArthurParameter,
    ArthurSummand,
    Cuspidal,
    ExtMultiSegment,
    ExtSegment,
    GroupType,
)
from .segments import VExtZSeg, ZSegment
from .unitarity import APlusRep, BpEntry, NuEntry


def parse_fraction(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    s = str(value).strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not an exact rational: {value!r}") from exc


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _expect(doc: dict, key: str):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing field {key!r}")
    return doc[key]


def parse_group(doc) -> GroupType:
    return GroupType(kind=_expect(doc, "kind"), n=int(_expect(doc, "n")))


def group_to_json(g: GroupType) -> dict:
    return {"kind": g.kind, "n": g.n}


def parse_cuspidals(items) -> dict[str, Cuspidal]:
    registry: dict[str, Cuspidal] = {}
    for item in items:
        c = Cuspidal(
            name=_expect(item, "name"),
            dim=int(_expect(item, "dim")),
            selfdual=_expect(item, "selfdual"),
            dual=item.get("dual"),
        )
        if c.name in registry:
            raise InputError(f"cuspidal {c.name!r} declared twice")
        registry[c.name] = c
    for c in registry.values():
        if not c.is_selfdual:
            partner = registry.get(c.dual_name)
            if partner is not None and partner.dual_name != c.name:
                raise InputError(
                    f"duality is not an involution between {c.name!r} and {partner.name!r}"
                )
    return registry


def cuspidal_to_json(c: Cuspidal) -> dict:
    out = {"name": c.name, "dim": c.dim, "selfdual": c.selfdual}
    if not c.is_selfdual:
        out["dual"] = c.dual
    return out


def _lookup(registry: dict[str, Cuspidal], name: str) -> Cuspidal:
    if name not in registry:
        raise InputError(f"unknown cuspidal {name!r}")
    return registry[name]


def parse_zseg_item(item) -> VExtZSeg:
    return VExtZSeg(
        ZSegment(int(_expect(item, "A")), int(_expect(item, "B"))),
        int(_expect(item, "l")),
        int(_expect(item, "eta")),
    )


def zseg_to_json(e: VExtZSeg) -> dict:
    return {"A": e.A, "B": e.B, "l": e.l, "eta": e.eta}


def parse_sequence(doc) -> tuple[VExtZSeg, ...]:
    return tuple(parse_zseg_item(item) for item in _expect(doc, "sequence"))


def parse_half_segment(item) -> ExtSegment:
    return ExtSegment(
        A=HalfInt.parse(_expect(item, "A")),
        B=HalfInt.parse(_expect(item, "B")),
        l=int(_expect(item, "l")),
        eta=int(_expect(item, "eta")),
    )


def half_segment_to_json(seg: ExtSegment) -> dict:
    return {"A": str(seg.A), "B": str(seg.B), "l": seg.l, "eta": seg.eta}


def parse_multisegment(doc, registry: dict[str, Cuspidal]) -> ExtMultiSegment:
    group = parse_group(_expect(doc, "group"))
    rows = []
    for row in _expect(doc, "rows"):
        rho = _lookup(registry, _expect(row, "rho"))
        segs = tuple(parse_half_segment(s) for s in _expect(row, "segments"))
        rows.append((rho, segs))
    return ExtMultiSegment(group, tuple(rows))


def multisegment_to_json(ms: ExtMultiSegment) -> dict:
    return {
        "group": group_to_json(ms.group),
        "rows": [
            {
                "rho": rho.name,
                "segments": [half_segment_to_json(s) for s in segs],
            }
            for rho, segs in ms.rows
        ],
    }


def parse_multisegment_document(doc) -> ExtMultiSegment:
    registry = parse_cuspidals(_expect(doc, "cuspidals"))
    return parse_multisegment(doc, registry)


def parse_aplus_document(doc) -> APlusRep:
    registry = parse_cuspidals(_expect(doc, "cuspidals"))
    group = parse_group(_expect(doc, "group"))
    nu = tuple(
        NuEntry(
            rho=_lookup(registry, _expect(item, "rho")),
            a=int(_expect(item, "a")),
            b=int(_expect(item, "b")),
            x=parse_fraction(_expect(item, "x")),
        )
        for item in doc.get("nu", [])
    )
    bp = tuple(
        BpEntry(
            rho=_lookup(registry, _expect(item, "rho")),
            a=int(_expect(item, "a")),
            b=int(_expect(item, "b")),
        )
        for item in doc.get("bp", [])
    )
    gp = parse_multisegment(_expect(doc, "gp"), registry)
    return APlusRep(group=group, nu=nu, bp=bp, gp=gp)


def parse_gl_document(doc) -> GLLocalComponent:
    registry = parse_cuspidals(_expect(doc, "cuspidals"))
    nu = tuple(
        GLNuEntry(
            rho=_lookup(registry, _expect(item, "rho")),
            a=int(_expect(item, "a")),
            x=parse_fraction(_expect(item, "x")),
        )
        for item in doc.get("nu", [])
    )
    tempered = tuple(
        TemperedFactor(
            rho=_lookup(registry, _expect(item, "rho")), a=int(_expect(item, "a"))
        )
        for item in doc.get("tempered", [])
    )
    return GLLocalComponent(
        nu=nu, tempered=tempered, global_type=_expect(doc, "global_type")
    )


def parse_parameter_document(doc) -> ArthurParameter:
    registry = parse_cuspidals(_expect(doc, "cuspidals"))
    group = parse_group(_expect(doc, "group"))
    summands = tuple(
        ArthurSummand(
            rho=_lookup(registry, _expect(item, "rho")),
            a=int(_expect(item, "a")),
            b=int(_expect(item, "b")),
            x=parse_fraction(item.get("x", 0)),
        )
        for item in _expect(doc, "summands")
    )
    return ArthurParameter(group=group, summands=summands)
