"""JSON encodings of substitutions, presentations, morphisms, diagrams and expansions.

Decoders raise :class:`FormatError` (a ``ValueError``) on malformed input.
"""
from __future__ import annotations

import json
from pathlib import Path

from .diagram import FIXTURES, Crossing, DiagramError, EmbeddingStage, Wedge, WedgeDiagram, builtin_fixture
from .expansion import EmbeddedExpansion, ExpansionError, FlowExpansion, unknotted_stage
from .fpgroup import GroupMorphism, GroupPresentation, GroupWord, make_morphism
from .symbolic import InvalidInput, Substitution, as_word


class FormatError(ValueError):
    pass


def _need(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise FormatError(f"{key!r} must be {kind.__name__ if isinstance(kind, type) else kind}")
    return val


# -- symbolic words and substitutions -------------------------------------------

def encode_word(word: bytes, n: int):
    return "".join(str(x) for x in word) if n <= 10 else list(word)


def decode_word(raw, n: int | None = None) -> bytes:
    if isinstance(raw, str):
        if not raw.isdigit() and raw:
            raise FormatError(f"word string {raw!r} must be digits")
        letters = [int(c) for c in raw]
    elif isinstance(raw, list) and all(isinstance(x, int) for x in raw):
        letters = raw
    else:
        raise FormatError(f"word must be a digit string or integer list, got {raw!r}")
    try:
        return as_word(letters, n)
    except InvalidInput as exc:
        raise FormatError(str(exc)) from None


def encode_substitution(sub: Substitution) -> dict:
    out = {"alphabet": sub.alphabet,
           "images": [encode_word(im, max(sub.alphabet, sub.target)) for im in sub.images]}
    if sub.target != sub.alphabet:
        out["target"] = sub.target
    return out


def decode_substitution(obj, alphabet: int | None = None, target: int | None = None) -> Substitution:
    images = _need(obj, "images", list)
    alphabet = obj.get("alphabet", alphabet if alphabet is not None else len(images))
    target = obj.get("target", target if target is not None else alphabet)
    if not isinstance(alphabet, int) or not isinstance(target, int):
        raise FormatError("alphabet and target must be integers")
    if len(images) != alphabet:
        raise FormatError(f"{len(images)} images for an alphabet of {alphabet} letters")
    try:
        return Substitution(alphabet, tuple(decode_word(im, target) for im in images), target)
    except InvalidInput as exc:
        raise FormatError(str(exc)) from None


# -- groups -----------------------------------------------------------------------

def encode_group_word(w: GroupWord) -> list:
    return [list(s) for s in w.syllables]


def decode_group_word(raw) -> GroupWord:
    if not isinstance(raw, list):
        raise FormatError(f"group word must be a list of [generator, exponent] pairs, got {raw!r}")
    syl = []
    for pair in raw:
        if (not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(x, int) for x in pair)
                or pair[0] < 0 or pair[1] not in (1, -1)):
            raise FormatError(f"bad syllable {pair!r}")
        syl.append((pair[0], pair[1]))
    return GroupWord.from_syllables(syl)


def encode_presentation(p: GroupPresentation) -> dict:
    return {"rank": p.rank, "names": list(p.names),
            "relators": [encode_group_word(r) for r in p.relators]}


def decode_presentation(obj) -> GroupPresentation:
    rank = _need(obj, "rank", int)
    names = obj.get("names") or ()
    rels = tuple(decode_group_word(r) for r in obj.get("relators", []))
    try:
        return GroupPresentation(rank, rels, tuple(names))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def encode_morphism(f: GroupMorphism) -> dict:
    return {"images": [encode_group_word(w) for w in f.images], "status": f.status}


def decode_morphism(obj, source: GroupPresentation, target: GroupPresentation) -> GroupMorphism:
    images = [decode_group_word(w) for w in _need(obj, "images", list)]
    try:
        return make_morphism(source, target, images)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- diagrams and expansions -------------------------------------------------------

def encode_stage(stage: EmbeddingStage) -> dict:
    d = stage.diagram
    out = {
        "loops": [list(l) for l in d.loops],
        "arcs": d.arcs,
        "names": list(d.names),
        "crossings": [{"over": c.over, "underIn": c.under_in, "underOut": c.under_out, "sign": c.sign}
                      for c in d.crossings],
        "wedge": None if d.wedge is None else {"in": list(d.wedge.incoming), "out": list(d.wedge.outgoing)},
        "traces": [[list(s) for s in t] for t in stage.traces],
    }
    if stage.name:
        out["name"] = stage.name
    if stage.canonical:
        out["canonical"] = True
    return out


def decode_stage(obj, bonding: Substitution | None = None) -> EmbeddingStage:
    """Inline diagram, fixture name, or ``"canonical"`` (the planar stage of ``bonding``)."""
    if obj == "canonical":
        if bonding is None:
            raise FormatError("a canonical stage needs its bonding")
        return unknotted_stage(bonding)
    if isinstance(obj, str):
        try:
            return builtin_fixture(obj)
        except KeyError as exc:
            raise FormatError(exc.args[0]) from None
    try:
        crossings = tuple(Crossing(c["over"], c["underIn"], c["underOut"], c.get("sign", 1))
                          for c in obj.get("crossings", []))
        w = obj.get("wedge")
        wedge = None if w is None else Wedge(tuple(w["in"]), tuple(w["out"]))
        d = WedgeDiagram(_need(obj, "arcs", int), crossings, wedge,
                         tuple(tuple(l) for l in _need(obj, "loops", list)), tuple(obj.get("names", ())))
        traces = tuple(tuple((a, e) for a, e in t) for t in _need(obj, "traces", list))
        return EmbeddingStage(d, traces, obj.get("name", ""), canonical=bool(obj.get("canonical", False)))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed diagram: {exc}") from None
    except DiagramError as exc:
        raise FormatError(str(exc)) from None


def encode_expansion(e: FlowExpansion | EmbeddedExpansion) -> dict:
    base = e.base if isinstance(e, EmbeddedExpansion) else e
    out = {"ranks": list(base.ranks),
           "bondings": [{"images": [list(im) for im in f.images]} for f in base.bondings]}
    if base.periodic_from is not None:
        out["periodicFrom"] = base.periodic_from
    if isinstance(e, EmbeddedExpansion):
        out["stages"] = [_stage_ref(s, f) for s, f in zip(e.stages, base.bondings)]
    return out


def _stage_ref(stage: EmbeddingStage, bonding: Substitution):
    if stage.name in FIXTURES and stage == builtin_fixture(stage.name):
        return stage.name
    if stage == unknotted_stage(bonding):
        return "canonical"
    return encode_stage(stage)


def decode_expansion(obj) -> EmbeddedExpansion | FlowExpansion:
    """Expansion JSON; returns an :class:`EmbeddedExpansion` when ``stages`` is present."""
    ranks = _need(obj, "ranks", list)
    if not all(isinstance(r, int) and r > 0 for r in ranks):
        raise FormatError("ranks must be positive integers")
    bonds = _need(obj, "bondings", list)
    if len(bonds) != len(ranks) - 1:
        raise FormatError(f"{len(ranks)} ranks need {len(ranks) - 1} bondings, got {len(bonds)}")
    subs = [decode_substitution(b, ranks[i + 1], ranks[i]) for i, b in enumerate(bonds)]
    try:
        base = FlowExpansion(tuple(ranks), tuple(subs), obj.get("periodicFrom"))
        if "stages" not in obj:
            return base
        stages = obj["stages"]
        if not isinstance(stages, list) or len(stages) > len(subs):
            raise FormatError("stages must be a list with at most one entry per bonding")
        return EmbeddedExpansion(base, tuple(decode_stage(s, subs[i]) for i, s in enumerate(stages)))
    except (ExpansionError, DiagramError) as exc:
        raise InconsistentInput(str(exc)) from None


class InconsistentInput(ValueError):
    """Well-formed data whose parts contradict each other."""


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True, default=_default)


def _default(x):
    if hasattr(x, "item"):
        return x.item()
    raise TypeError(f"cannot encode {type(x).__name__}")
