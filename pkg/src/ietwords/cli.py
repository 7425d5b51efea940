"""Command-line front end.

Every command emits one JSON record per enumerated object followed by a
summary record, all with sorted keys so reruns are byte-identical;
``--pretty`` renders the same records as a table.  Exit codes: 0 for ok,
1 when a checked property is false, 2 for invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import verification
from .amicability import (
    amicable_morphisms,
    check_3iet_preservation,
    ternarization_membership,
    ternarize_morphisms,
)
from .errors import IetWordsError, NotAmicableError
from .iet import ThreeIET, TwoIET, is_nondegenerate_params, three_iet_code, two_iet_code
from .matrices import (
    brute_force_pairs,
    classify_matrix3,
    conjecture_probe,
    count_formula_b,
    count_formula_total,
    unimodular_matrices,
)
from .morphisms import (
    IntMatrix2,
    IntMatrix3,
    Morphism,
    incidence_matrix,
    enumerate_sturmian,
    is_standard_morphism,
    is_sturmian_morphism,
    k_index,
    standard_morphism,
)
from .quadratic import QuadNumber
from .words import Alphabet

EXIT_CODES = {"ok": 0, "property-false": 1, "invalid-input": 2}


def _parse_binary_morphism(text: str, role: str) -> Morphism:
    morphism = Morphism.parse(text)
    if morphism.alphabet is not Alphabet.BINARY:
        raise IetWordsError(f"{role} must be a binary morphism, got {text!r}")
    return morphism


def _parse_ternary_morphism(text: str, role: str) -> Morphism:
    morphism = Morphism.parse(text)
    if morphism.alphabet is not Alphabet.TERNARY:
        raise IetWordsError(f"{role} must be a ternary morphism, got {text!r}")
    if not morphism.is_nonerasing:
        raise IetWordsError(f"{role} must be non-erasing")
    return morphism


def _pair_record(pair) -> dict:
    return {
        "k": pair.k,
        "kbar": pair.kbar,
        "b0": pair.b0,
        "b1": pair.b1,
        "b": pair.b,
        "phi": str(pair.phi),
        "psi": str(pair.psi),
        "eta": str(pair.eta),
        "matrix3": str(incidence_matrix(pair.eta)),
    }


def _cmd_std(args) -> tuple[str, list[dict], dict]:
    matrix = IntMatrix2.parse(args.matrix)
    morphism = standard_morphism(matrix)
    record = {"matrix": str(matrix), "morphism": str(morphism), "k": k_index(morphism)}
    return "ok", [record], {}


def _cmd_enum(args) -> tuple[str, list[dict], dict]:
    matrix = IntMatrix2.parse(args.matrix)
    chain = enumerate_sturmian(matrix)
    records = [
        {
            "index": i,
            "morphism": str(m),
            "k": k_index(m),
            "standard": is_standard_morphism(m),
        }
        for i, m in enumerate(chain)
    ]
    return "ok", records, {"count": len(chain), "expected": matrix.norm - 1}


def _cmd_pairs(args) -> tuple[str, list[dict], dict]:
    matrix = IntMatrix2.parse(args.matrix)
    pairs = brute_force_pairs(matrix)
    if args.b is not None:
        pairs = tuple(pair for pair in pairs if pair.b == args.b)
        expected = count_formula_b(matrix, args.b)
    else:
        expected = count_formula_total(matrix)
    return "ok", [_pair_record(p) for p in pairs], {
        "matrix": str(matrix),
        "total": len(pairs),
        "formula": expected,
    }


def _cmd_count(args) -> tuple[str, list[dict], dict]:
    records = []
    all_match = True
    total = 0
    for matrix in unimodular_matrices(args.max_norm):
        formula = count_formula_total(matrix)
        record = {"matrix": str(matrix), "formula": formula}
        if args.compare:
            brute = len(brute_force_pairs(matrix))
            record["brute"] = brute
            record["match"] = brute == formula
            all_match = all_match and record["match"]
        total += formula
        records.append(record)
    status = "ok" if all_match else "property-false"
    return status, records, {
        "max_norm": args.max_norm,
        "matrices": len(records),
        "total_pairs": total,
        "compared": bool(args.compare),
    }


def _cmd_ternarize(args) -> tuple[str, list[dict], dict]:
    phi = _parse_binary_morphism(args.phi, "--phi")
    psi = _parse_binary_morphism(args.psi, "--psi")
    for role, morphism in (("--phi", phi), ("--psi", psi)):
        if not is_sturmian_morphism(morphism):
            raise IetWordsError(f"{role} morphism {morphism} is not Sturmian")
    try:
        eta = ternarize_morphisms(phi, psi)
    except NotAmicableError as exc:
        return "property-false", [{"amicable": False, "reason": str(exc)}], {}
    b0, b1, b = amicable_morphisms(phi, psi)
    record = {"eta": str(eta), "b0": b0, "b1": b1, "b": b, "amicable": True}
    return "ok", [record], {}


def _cmd_member(args) -> tuple[str, list[dict], dict]:
    eta = _parse_ternary_morphism(args.eta, "--eta")
    outcome = ternarization_membership(eta)
    if outcome.member:
        record = {"member": True, "phi": str(outcome.phi), "psi": str(outcome.psi)}
        return "ok", [record], {}
    return "property-false", [{"member": False, "reason": outcome.reason}], {}


def _cmd_classify(args) -> tuple[str, list[dict], dict]:
    candidate = IntMatrix3.parse(args.matrix3)
    witness = classify_matrix3(candidate)
    if witness is None:
        return "property-false", [
            {"classified": False, "matrix3": str(candidate)}
        ], {}
    record = {
        "classified": True,
        "matrix3": str(candidate),
        "matrix": str(witness.matrix),
        "b0": witness.b0,
        "b1": witness.b1,
        "delta": witness.delta,
    }
    return "ok", [record], {}


def _cmd_word2(args) -> tuple[str, list[dict], dict]:
    transform = TwoIET(QuadNumber.parse(args.slope))
    word = two_iet_code(transform, QuadNumber.parse(args.start), args.n)
    record = {
        "word": str(word),
        "length": len(word),
        "slope": str(transform.slope),
        "start": args.start,
    }
    return "ok", [record], {}


def _cmd_word3(args) -> tuple[str, list[dict], dict]:
    transform = ThreeIET(QuadNumber.parse(args.alpha), QuadNumber.parse(args.beta))
    nondegenerate = is_nondegenerate_params(transform)
    if not nondegenerate:
        print(
            "warning: degenerate parameters, the coding is eventually periodic",
            file=sys.stderr,
        )
    word = three_iet_code(transform, QuadNumber.parse(args.start), args.n)
    record = {
        "word": str(word),
        "length": len(word),
        "alpha": str(transform.alpha),
        "beta": str(transform.beta),
        "start": args.start,
        "nondegenerate": nondegenerate,
    }
    return "ok", [record], {}


def _cmd_preserve(args) -> tuple[str, list[dict], dict]:
    eta = _parse_ternary_morphism(args.eta, "--eta")
    transform = ThreeIET(QuadNumber.parse(args.alpha), QuadNumber.parse(args.beta))
    result = check_3iet_preservation(
        eta, transform, QuadNumber.parse(args.start), args.n, args.kmax
    )
    record = {"preserved": result.ok, "detail": result.detail, "eta": str(eta)}
    status = "ok" if result.ok else "property-false"
    return status, [record], {"n": args.n, "kmax": args.kmax}


def _cmd_probe(args) -> tuple[str, list[dict], dict]:
    eta = _parse_ternary_morphism(args.eta, "--eta")
    report = conjecture_probe(eta)
    records = []
    for item in report.records:
        outcome = item.outcome
        records.append(
            {
                "candidate": item.label,
                "morphism": str(item.morphism),
                "member": outcome.member,
                "phi": str(outcome.phi) if outcome.phi is not None else None,
                "psi": str(outcome.psi) if outcome.psi is not None else None,
                "reason": outcome.reason,
            }
        )
    return "ok", records, {"members": len(report.members())}


def _cmd_verify(args) -> tuple[str, list[dict], dict]:
    suite = verification.SUITES[args.suite]
    kwargs = {}
    if args.max_norm is not None:
        key = "max_n" if args.suite == "lemma-w" else "max_norm"
        kwargs[key] = args.max_norm
    if args.suite == "monoid":
        kwargs["seed"] = args.seed
        if args.samples is not None:
            kwargs["samples"] = args.samples
    if args.suite == "preserve":
        if args.n is not None:
            kwargs["n"] = args.n
        if args.kmax is not None:
            kwargs["kmax"] = args.kmax
    result = suite(**kwargs)
    status = "ok" if result.ok else "property-false"
    return status, result.records, {"suite": result.name, **result.summary}


_HANDLERS: dict[str, Callable] = {
    "std": _cmd_std,
    "enum": _cmd_enum,
    "pairs": _cmd_pairs,
    "count": _cmd_count,
    "ternarize": _cmd_ternarize,
    "member": _cmd_member,
    "classify": _cmd_classify,
    "word2": _cmd_word2,
    "word3": _cmd_word3,
    "preserve": _cmd_preserve,
    "probe": _cmd_probe,
    "verify": _cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ietwords",
        description="Sturmian morphisms, 3iet words, amicability and ternarization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--pretty", action="store_true", help="tabular output")
        return p

    p = add("std", "standard morphism of a unimodular matrix")
    p.add_argument("--matrix", required=True, help="matrix literal 'p0,q0;p1,q1'")

    p = add("enum", "all Sturmian morphisms with a given matrix")
    p.add_argument("--matrix", required=True)

    p = add("pairs", "ordered amicable pairs and their ternarizations")
    p.add_argument("--matrix", required=True)
    p.add_argument("--b", type=int, default=None, help="restrict to one B-count")

    p = add("count", "closed-formula pair counts over a norm sweep")
    p.add_argument("--max-norm", type=int, required=True)
    p.add_argument("--compare", action="store_true", help="cross-check by brute force")

    p = add("ternarize", "ternarization of an amicable pair of morphisms")
    p.add_argument("--phi", required=True, help="morphism literal '0->...,1->...'")
    p.add_argument("--psi", required=True)

    p = add("member", "membership of a ternary morphism in the ternarization monoid")
    p.add_argument("--eta", required=True, help="morphism literal 'A->...,B->...,C->...'")

    p = add("classify", "classify a 3x3 matrix as a ternarization incidence matrix")
    p.add_argument("--matrix3", required=True, help="literal 'r00,r01,r02;...;...'")

    p = add("word2", "coding word of a 2-interval exchange orbit")
    p.add_argument("--slope", required=True, help="'(a+b*sqrt(d))/c' or 'p/q'")
    p.add_argument("--start", default="0")
    p.add_argument("-n", type=int, required=True)

    p = add("word3", "coding word of a 3-interval exchange orbit")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--start", default="0")
    p.add_argument("-n", type=int, required=True)

    p = add("preserve", "prefix-scale 3iet preservation check")
    p.add_argument("--eta", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--start", default="0")
    p.add_argument("-n", type=int, default=1000)
    p.add_argument("--kmax", type=int, default=20)

    p = add("probe", "membership probe of a morphism and its companions")
    p.add_argument("--eta", required=True)

    p = add("verify", "run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=sorted(verification.SUITES),
    )
    p.add_argument("--max-norm", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)

    return parser


def _print_pretty(records: list[dict], summary: dict) -> None:
    if records:
        columns = sorted({key for record in records for key in record})
        table = [[_cell(r.get(c)) for c in columns] for r in records]
        widths = [
            max(len(col), *(len(row[i]) for row in table))
            for i, col in enumerate(columns)
        ]
        print("  ".join(col.ljust(w) for col, w in zip(columns, widths)))
        for row in table:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    print(" ".join(f"{key}={_cell(value)}" for key, value in sorted(summary.items())))


def _cell(value) -> str:
    if value is None:
        return "-"
    return str(value)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        status, records, extras = handler(args)
    except IetWordsError as exc:
        payload = {"command": args.command, "status": "invalid-input", "error": str(exc)}
        print(json.dumps(payload, sort_keys=True))
        return EXIT_CODES["invalid-input"]
    summary = {"command": args.command, "status": status, "records": len(records)}
    summary.update(extras)
    if args.pretty:
        _print_pretty(records, summary)
    else:
        for record in records:
            print(json.dumps(record, sort_keys=True))
        print(json.dumps(summary, sort_keys=True))
    return EXIT_CODES[status]


def console_main() -> None:
    sys.exit(main())
