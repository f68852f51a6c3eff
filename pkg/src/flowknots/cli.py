"""Command-line front end.

Exit codes: 0 success (a partial certificate still counts), 2 bad input,
3 data that are individually valid but inconsistent with each other.
"""
from __future__ import annotations

import argparse
import sys

from . import diagram as dg
from . import expansion as ex
from .fpgroup import (INF, DirectSystem, GroupPresentation, ResourceLimit, SupernaturalDescriptor,
                      abelian_invariants, abelianize, count_homs, hom_count_to_cyclic,
                      is_free_automorphism, simplified_map, stable_image_rank, target_group,
                      tietze_reduce)
from .serialize import (FormatError, InconsistentInput, decode_expansion, decode_presentation,
                        decode_substitution, decode_word, dumps, encode_expansion, encode_word,
                        load_json)
from .symbolic import (InvalidInput, SturmianParams, sigma_w, tails_equivalent, transition_matrix,
                       word_str)
from .fpgroup.snf import determinant
from .template import ORDER_CONVENTION, BraidConsistencyError, distinct_knot_certificate

CONVENTIONS = {"crossing": dg.CROSSING_CONVENTION, "branchLine": ORDER_CONVENTION}

EXIT_INPUT = 2
EXIT_INCONSISTENT = 3


class UsageError(ValueError):
    pass


# -- report pieces ------------------------------------------------------------------

def _pres(p: GroupPresentation) -> str:
    return str(p)


def _descriptor(d: SupernaturalDescriptor) -> dict:
    return {"primes": {str(p): ("inf" if k == INF else int(k)) for p, k in d.primes},
            "group": d.group_name(), "depth": d.depth}


def _cech(c) -> dict:
    if isinstance(c, SupernaturalDescriptor):
        return {"kind": "rank1", **_descriptor(c)}
    return {"kind": "matrices", "ranks": list(c.ranks), "transposedBondings": [list(map(list, m)) for m in c.matrices],
            "stableRank": c.stable_rank, "determinants": list(c.determinants)}


def _matrix(m) -> list[list[int]]:
    return [[int(x) for x in row] for row in m]


def _outer_presentation(n: int) -> GroupPresentation:
    return GroupPresentation.free(n, ex._outer_names(n))


def _relation_text(d, kind, lhs, rhs, crossing) -> str:
    """Crossings in commuting form: ``out*over = over*in`` (sign +1) or ``over*out = in*over``."""
    if kind == "crossing":
        n = d.names
        o, i, u = n[crossing.over], n[crossing.under_in], n[crossing.under_out]
        sep = "" if all(len(x) == 1 for x in n) else "*"
        left, right = (u + sep + o, o + sep + i) if crossing.sign == 1 else (o + sep + u, i + sep + o)
        return f"{left} = {right}"
    return f"{lhs.format(d.names)} = {rhs.format(d.names)}"


def fixture_report(name: str, budget: int = 1000) -> dict:
    try:
        stage = dg.builtin_fixture(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    d = stage.diagram
    p = dg.wirtinger(d)
    simp = tietze_reduce(p, budget)
    outer = _outer_presentation(len(stage.traces))
    f = dg.inclusion_morphism(stage, outer)
    g = simplified_map(f, budget)
    auto = None
    if g.source.is_free and g.target.is_free and g.source.rank == g.target.rank:
        auto = is_free_automorphism(g)
    status, reason = ex.freeness_witness(p, budget)
    rels = [_relation_text(d, kind, lhs, rhs, c)
            for (kind, lhs, rhs), c in zip(dg.relations(d), list(d.crossings) + [None])]
    return {
        "fixture": name,
        "conventions": CONVENTIONS,
        "presentation": _pres(p),
        "relations": rels,
        "simplified": _pres(simp.presentation),
        "abelianization": str(abelianize(p)),
        "homsS3": count_homs(simp.presentation, "s3"),
        "inclusion": f.format(),
        "simplifiedInclusion": g.format(),
        "automorphism": auto,
        "imageRank": int(stable_image_rank(DirectSystem((outer, p), (f,)), 1, budget)),
        "verdict": status,
        "verdictReason": reason,
        "abelianizedInclusion": _matrix(dg.abelianized_inclusion(stage)),
        "duality": dg.duality_check(stage),
    }


def expansion_report(e, depth: int | None, budget: int = 1000) -> dict:
    if isinstance(e, ex.FlowExpansion):
        e = ex.unknotted_embedding(e)
    depth = e.depth if depth is None else depth
    if not 0 <= depth <= e.depth:
        raise UsageError(f"depth {depth} outside 0..{e.depth} (number of stages)")
    ks = ex.knot_group_system(e, depth, budget)
    pres = ks.system.presentations
    stable = ex.stable_knot_group(ks, budget)
    maps = []
    for k in range(1, depth + 1):
        f = ks.system.map(k)
        maps.append({"stage": k, "images": simplified_map(f, budget).format(), "exact": ks.exact[k - 1],
                     "isomorphism": ex.map_is_isomorphism(ks, k, budget),
                     "imageRank": int(stable_image_rank(ks.system, k, budget))})
    return {
        "conventions": CONVENTIONS,
        "expansion": encode_expansion(e),
        "depth": depth,
        "presentations": [_pres(tietze_reduce(p, budget).presentation) for p in pres],
        "maps": maps,
        "verdict": str(ex.unknotted_certificate(ks, budget)),
        "stableKnotGroup": None if stable is None else _pres(stable),
        "cechH1": _cech(ex.cech_h1(e.base, depth)),
        "duality": ex.duality_report(e, depth),
    }


def sturmian_report(cf, compare=None, length: int = 40, budget: int = 1000) -> dict:
    params = SturmianParams(tuple(cf))
    subs = params.substitutions()
    depth = len(params.cf)
    ks = ex.knot_group_system(ex.sturmian_embedding(params, depth), depth, budget)
    stable = ex.stable_knot_group(ks, budget)
    out = {
        "conventions": CONVENTIONS,
        "cf": list(params.cf),
        "substitutions": [str(s) for s in subs],
        "determinants": [determinant(transition_matrix(s).tolist()) for s in subs],
        "word": word_str(params.word(length)),
        "verdict": str(ex.unknotted_certificate(ks, budget)),
        "stableKnotGroup": None if stable is None else _pres(stable),
    }
    if compare is not None:
        other = SturmianParams(tuple(compare))
        out["compare"] = list(other.cf)
        out["tailsEquivalent"] = tails_equivalent(params, other)
    return out


def sigma_w_report(w: str, alphabet: int) -> dict:
    raw = [int(x) for x in w.split(",")] if "," in w else w
    emb = sigma_w(decode_word(raw, alphabet), alphabet)
    return {"w": encode_word(emb.w, alphabet), "alphabet": alphabet, "mu": emb.mu,
            "returnTime": emb.return_time,
            "images": [encode_word(im, alphabet) for im in emb.substitution.images],
            "uniformAndInjective": emb.check()}


def certificate_report(base, m: int, budget: int) -> dict:
    return {"conventions": CONVENTIONS, **distinct_knot_certificate(base, m, budget).as_dict()}


def homs_report(p: GroupPresentation, target: str) -> dict:
    g = target_group(target)
    out = {"presentation": _pres(p), "target": g.name, "count": count_homs(p, g),
           "abelianization": str(abelianize(p))}
    if target.lower().startswith("z/"):
        out["predictedFromAbelianization"] = hom_count_to_cyclic(
            abelianize(p).free_rank, abelian_invariants(p), g.order)
    return out


# -- text rendering -------------------------------------------------------------------

def render_text(report: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in report.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(val, list) and val and isinstance(val[0], str):
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {v}" for v in val)
        else:
            lines.append(f"{pad}{key}: {val}")
    return "\n".join(lines)


# -- argument handling ------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def _cf_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad continued fraction list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flowknots", description="Knot groups and genus certificates "
                                 "for minimal sets given by substitutions.")
    ap.add_argument("--json", action="store_true", help="emit JSON instead of text")
    ap.add_argument("--tietze-budget", type=_positive, default=1000, help="Tietze moves per presentation")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixture", help="run a built-in embedding stage")
    p.add_argument("name", help=", ".join(dg.FIXTURES))

    p = sub.add_parser("expansion", help="knot-group system of an expansion file")
    p.add_argument("file")
    p.add_argument("--depth", type=_nonnegative)

    p = sub.add_parser("sturmian", help="Sturmian parameters, knot group, tail comparison")
    p.add_argument("cf", nargs="+", type=_positive)
    p.add_argument("--compare", nargs="+", type=_positive)
    p.add_argument("--length", type=_positive, default=40)

    p = sub.add_parser("sigma-w", help="the re-embedding substitution of a seed word")
    p.add_argument("w")
    p.add_argument("--alphabet", type=_positive, default=2)

    p = sub.add_parser("certificate", help="re-embeddings with distinct genus bounds")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--sub", help="substitution JSON file")
    src.add_argument("--cf", type=_cf_list, help="continued fraction entries, e.g. 1,1,1")
    p.add_argument("-m", type=_positive, default=3, dest="count")
    p.add_argument("--budget", type=_positive, default=40, help="maximum seed length")

    p = sub.add_parser("homs", help="count homomorphisms to a finite group")
    p.add_argument("file")
    p.add_argument("--target", default="s3", help="s2, s3, s4 or z/m")
    return ap


def run(args) -> dict:
    b = args.tietze_budget
    if args.command == "fixture":
        return fixture_report(args.name, b)
    if args.command == "expansion":
        return expansion_report(decode_expansion(load_json(args.file)), args.depth, b)
    if args.command == "sturmian":
        return sturmian_report(args.cf, args.compare, args.length, b)
    if args.command == "sigma-w":
        return sigma_w_report(args.w, args.alphabet)
    if args.command == "certificate":
        base = SturmianParams(tuple(args.cf)) if args.cf else decode_substitution(load_json(args.sub))
        return certificate_report(base, args.count, args.budget)
    if args.command == "homs":
        return homs_report(decode_presentation(load_json(args.file)), args.target)
    raise UsageError(f"unknown command {args.command}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except (InconsistentInput, BraidConsistencyError, ex.ExpansionError, dg.DiagramError) as exc:
        print(f"flowknots: inconsistent input: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (UsageError, FormatError, InvalidInput, ResourceLimit, ValueError) as exc:
        print(f"flowknots: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(dumps(report) if args.json else render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
