"""Command-line interface.

Commands: gb, lift, verify, gin, hilbert, predicates.  Results go to
stdout, human-readable by default or as stable JSON with --json;
diagnostics go to stderr.  Exit codes: 0 success, 1 mathematical failure
(verification or genericity agreement failed), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import ExtMonomial, FreePolynomial
from .exterior import ExtIdeal, MonomialIdealExt, groebner_ext, hilbert_ext, initial_ideal_ext
from .freealg import (
    FreeGroebnerCandidate,
    MonomialIdealFree,
    hilbert_rational,
    ideal_slice_rows,
    normal_word_count,
    obstructions_resolve,
)
from .gin import (
    GinRequest,
    gin_ext,
    gin_free,
    gin_lifted,
    hilbert_compare,
    hilbert_compare_ext,
    is_borel_fixed,
)
from .lifting import (
    is_stable,
    is_strongly_stable,
    lift_groebner,
    squeezed_witness,
    stable_witness,
    strongly_stable_witness,
)
from .linalg import rank
from .orders import ExtOrderSpec, FreeOrderSpec
from .parsing import (
    IdealFile,
    ParseError,
    ext_monomial_str,
    ext_poly_pairs,
    ext_poly_str,
    free_poly_pairs,
    free_poly_str,
    parse_ideal,
    word_str,
)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2


class InputError(ValueError):
    pass


class MathFailure(RuntimeError):
    pass


def _load(args) -> IdealFile:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    ideal = parse_ideal(text)
    order = ideal.order
    if args.order or args.varorder:
        kind = args.order or order.kind
        ranking = order.ranking
        if args.varorder:
            try:
                perm = tuple(int(v) for v in args.varorder.split(","))
            except ValueError:
                raise InputError("--varorder must be a comma-separated permutation") from None
            if sorted(perm) != list(range(1, ideal.ctx.n + 1)):
                raise InputError("--varorder must be a permutation of 1..n")
            ranking_list = [0] * ideal.ctx.n
            for pos, var in enumerate(perm, start=1):
                ranking_list[var - 1] = pos
            ranking = tuple(ranking_list)
        try:
            order = ExtOrderSpec(kind, ranking)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        ideal = IdealFile(ideal.ctx, ideal.algebra, order, ideal.generators)
    return ideal


def _require(ideal: IdealFile, algebra: str, command: str) -> None:
    if ideal.algebra != algebra:
        raise InputError(f"'{command}' requires an ideal over the {algebra} algebra")


def _ext_ideal(ideal: IdealFile) -> ExtIdeal:
    try:
        return ExtIdeal(ideal.ctx, ideal.generators, ideal.order)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _monomial_ideal_ext(ideal: IdealFile) -> MonomialIdealExt:
    monos = []
    for g in ideal.generators:
        if len(g) != 1:
            raise InputError("this command requires monomial generators")
        ((m, _),) = g
        monos.append(m)
    return MonomialIdealExt(monos, ideal.order)


def cmd_gb(args) -> int:
    ideal = _load(args)
    _require(ideal, "exterior", "gb")
    I = _ext_ideal(ideal)
    gb = groebner_ext(I)
    init = initial_ideal_ext(gb)
    result = {
        "command": "gb",
        "vars": ideal.ctx.n,
        "order": ideal.order.kind,
        "groebner_basis": [ext_poly_pairs(f, ideal.order) for f in gb.elements],
        "initial_ideal": [ext_monomial_str(m) for m in init],
        "quotient_dimensions": hilbert_ext(I),
    }
    if args.json:
        _emit_json(result)
    else:
        print(f"reduced minimal Groebner basis ({len(gb.elements)} elements):")
        for f in gb.elements:
            print(f"  {ext_poly_str(f, ideal.order)}")
        print("initial ideal minimal generators:")
        print("  " + (", ".join(result["initial_ideal"]) or "(zero ideal)"))
        print(f"quotient dimensions by degree: {result['quotient_dimensions']}")
    return EXIT_OK


def cmd_lift(args) -> int:
    ideal = _load(args)
    _require(ideal, "exterior", "lift")
    I = _ext_ideal(ideal)
    gb = groebner_ext(I)
    try:
        lifted = lift_groebner(gb)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    order = ideal.free_order
    init = initial_ideal_ext(gb)
    squeezed, witness = squeezed_witness(init)
    result = {
        "command": "lift",
        "vars": ideal.ctx.n,
        "order": ideal.order.kind,
        "anti_commutators": [free_poly_pairs(F, order) for F in lifted.anti_commutators],
        "lifted_elements": [
            {
                "source_leading_monomial": ext_monomial_str(max(f.terms, key=ideal.order.ext_key)),
                "multiplier": ext_monomial_str(u),
                "element": free_poly_pairs(F, order),
            }
            for f, u, F in lifted.lifted
        ],
        "initial_ideal_of_preimage": [word_str(w) for w in sorted(lifted.initial_mingens, key=order.word_key)],
        "squeezed": squeezed,
        "naive_lift_minimal": squeezed,
        "squeezed_witness": (
            {"generator": ext_monomial_str(witness[0]), "multiplier": ext_monomial_str(witness[1])}
            if witness
            else None
        ),
    }
    if args.json:
        _emit_json(result)
    else:
        print(f"anti-commutators: {len(lifted.anti_commutators)}")
        print(f"lifted elements ({len(lifted.lifted)}):")
        for f, u, F in lifted.lifted:
            print(f"  multiplier {ext_monomial_str(u)}: {free_poly_str(F, order)}")
        print("minimal generators of the preimage initial ideal:")
        print("  " + ", ".join(result["initial_ideal_of_preimage"]))
        verdict = "minimal" if squeezed else "NOT minimal"
        print(f"initial ideal squeezed: {squeezed} (naive lift is {verdict})")
        if witness:
            print(
                f"  witness: generator {ext_monomial_str(witness[0])} admits "
                f"multiplier {ext_monomial_str(witness[1])}"
            )
    return EXIT_OK


def cmd_verify(args) -> int:
    ideal = _load(args)
    _require(ideal, "free", "verify")
    order = ideal.free_order
    try:
        candidate = FreeGroebnerCandidate(ideal.ctx, list(ideal.generators), order)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    ok, failures = obstructions_resolve(candidate)
    maxdeg = args.maxdeg if args.maxdeg is not None else ideal.ctx.n + 1
    cone = MonomialIdealFree(candidate.leading_words, ideal.ctx.n, order)
    dims = []
    dims_ok = True
    for d in range(maxdeg + 1):
        slice_dim = rank(ideal_slice_rows(list(ideal.generators), ideal.ctx, d), order.word_key)
        cone_dim = ideal.ctx.n**d - normal_word_count(cone, d)
        dims.append({"degree": d, "ideal_slice": slice_dim, "initial_cone": cone_dim})
        if slice_dim != cone_dim:
            dims_ok = False
    result = {
        "command": "verify",
        "vars": ideal.ctx.n,
        "order": ideal.order.kind,
        "obstructions_resolve": ok,
        "failing_obstructions": [
            {
                "pair": [word_str(candidate.leading_words[f.i]), word_str(candidate.leading_words[f.j])],
                "ambiguity": word_str(f.word),
                "remainder": free_poly_pairs(f.remainder, order),
            }
            for f in failures
        ],
        "initial_ideal": [word_str(w) for w in cone],
        "dimension_check": dims,
        "dimensions_agree": dims_ok,
    }
    if args.json:
        _emit_json(result)
    else:
        print(f"obstructions resolve: {ok}")
        for f in failures:
            print(
                f"  FAIL {word_str(candidate.leading_words[f.i])} / "
                f"{word_str(candidate.leading_words[f.j])} at {word_str(f.word)}: "
                f"remainder {free_poly_str(f.remainder, order)}"
            )
        print("initial ideal: " + ", ".join(result["initial_ideal"]))
        print(f"per-degree dimension cross-check (agree: {dims_ok}):")
        for row in dims:
            print(f"  degree {row['degree']}: slice {row['ideal_slice']}, cone {row['initial_cone']}")
    if not (ok and dims_ok):
        return EXIT_MATH
    return EXIT_OK


def cmd_gin(args) -> int:
    ideal = _load(args)
    maxdeg = args.maxdeg if args.maxdeg is not None else ideal.ctx.n + 1
    try:
        req = GinRequest(max_degree=maxdeg, seed=args.seed, trials=args.trials, height=args.height)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    order = ideal.free_order
    if ideal.algebra == "exterior":
        I = _ext_ideal(ideal)
        try:
            res = gin_ext(I, req)
            lifted = gin_lifted(I, req)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        borel_ok, borel_witness = is_borel_fixed(lifted.gin, ideal.ctx)
        hilbert_ok = hilbert_compare_ext(I, res)
        result = {
            "command": "gin",
            "vars": ideal.ctx.n,
            "algebra": "exterior",
            "order": ideal.order.kind,
            "seed": args.seed,
            "trial_seeds": list(res.trial_seeds),
            "agreement": res.agreement and lifted.agreement,
            "gin": [ext_monomial_str(m) for m in res.gin],
            # the gin is stable in the exchange direction matching the
            # term order (x1 is smallest, so exchanges go toward larger
            # indices)
            "gin_strongly_stable": is_strongly_stable(res.gin, toward_larger=True, n=ideal.ctx.n),
            "gin_stable": is_stable(res.gin, toward_larger=True, n=ideal.ctx.n),
            "stability_exchange_direction": "toward_larger",
            "lifted_gin": [word_str(w) for w in lifted.gin],
            "ideal_slice_dimensions": {str(d): v for d, v in sorted(res.slice_dims.items())},
            "borel_fixed": borel_ok,
            "borel_witness": _borel_witness_json(borel_witness),
            "hilbert_series_match": hilbert_ok,
        }
        agreement = result["agreement"]
    else:
        res = gin_free(list(ideal.generators), ideal.ctx, req, order)
        borel_ok, borel_witness = is_borel_fixed(res.gin, ideal.ctx)
        hilbert_ok = hilbert_compare(list(ideal.generators), ideal.ctx, res, maxdeg, order)
        result = {
            "command": "gin",
            "vars": ideal.ctx.n,
            "algebra": "free",
            "order": ideal.order.kind,
            "seed": args.seed,
            "trial_seeds": list(res.trial_seeds),
            "agreement": res.agreement,
            "gin": [word_str(w) for w in res.gin],
            "ideal_slice_dimensions": {str(d): v for d, v in sorted(res.slice_dims.items())},
            "borel_fixed": borel_ok,
            "borel_witness": _borel_witness_json(borel_witness),
            "hilbert_series_match": hilbert_ok,
        }
        agreement = res.agreement
    if args.json:
        _emit_json(result)
    else:
        print(f"gin minimal generators: {', '.join(result['gin'])}")
        if "lifted_gin" in result:
            print(f"lifted gin minimal generators: {', '.join(result['lifted_gin'])}")
            print(f"gin strongly stable: {result['gin_strongly_stable']}")
        print(f"trials agree: {agreement} (seeds {result['trial_seeds']})")
        print(f"Borel-fixed: {borel_ok}")
        if borel_witness:
            w, (i, j), offending = borel_witness
            print(
                f"  witness: X{i} -> X{i} + X{j} maps {word_str(w)} onto "
                f"{word_str(offending)}, which is outside the ideal"
            )
        print(f"Hilbert series preserved: {hilbert_ok}")
    if not agreement:
        print("trials disagree: raise --height or choose a fresh --seed", file=sys.stderr)
        return EXIT_MATH
    if not hilbert_ok:
        return EXIT_MATH
    return EXIT_OK


def _borel_witness_json(witness):
    if witness is None:
        return None
    w, (i, j), offending = witness
    return {"generator": word_str(w), "transformation": [i, j], "offending_word": word_str(offending)}


def cmd_hilbert(args) -> int:
    ideal = _load(args)
    if ideal.algebra == "exterior":
        I = _ext_ideal(ideal)
        vector = hilbert_ext(I)
        result = {
            "command": "hilbert",
            "vars": ideal.ctx.n,
            "algebra": "exterior",
            "quotient_dimensions": vector,
            "numerator": vector,
            "denominator": [1],
        }
    else:
        maxdeg = args.maxdeg if args.maxdeg is not None else ideal.ctx.n + 1
        words = []
        for g in ideal.generators:
            if len(g) != 1:
                raise InputError("hilbert over the free algebra requires monomial generators")
            ((w, _),) = g
            words.append(w)
        B = MonomialIdealFree(words, ideal.ctx.n, ideal.free_order)
        num, den = hilbert_rational(B)
        result = {
            "command": "hilbert",
            "vars": ideal.ctx.n,
            "algebra": "free",
            "quotient_dimensions": [normal_word_count(B, d) for d in range(maxdeg + 1)],
            "numerator": num,
            "denominator": den,
        }
    if args.json:
        _emit_json(result)
    else:
        print(f"quotient dimensions by degree: {result['quotient_dimensions']}")
        print(f"rational form: numerator {result['numerator']}, denominator {result['denominator']}")
    return EXIT_OK


def cmd_predicates(args) -> int:
    ideal = _load(args)
    _require(ideal, "exterior", "predicates")
    L = _monomial_ideal_ext(ideal)
    stable_ok, stable_wit = stable_witness(L)
    strong_ok, strong_wit = strongly_stable_witness(L)
    try:
        squeezed_ok, squeezed_wit = squeezed_witness(L)
    except ValueError as exc:
        raise InputError(str(exc)) from None

    def exchange_json(wit):
        if wit is None:
            return None
        m, i, j = wit
        return {"generator": ext_monomial_str(m), "exchange": [i, j]}

    result = {
        "command": "predicates",
        "vars": ideal.ctx.n,
        "minimal_generators": [ext_monomial_str(m) for m in L],
        "stable": stable_ok,
        "stable_witness": exchange_json(stable_wit),
        "strongly_stable": strong_ok,
        "strongly_stable_witness": exchange_json(strong_wit),
        "squeezed": squeezed_ok,
        "squeezed_witness": (
            {"generator": ext_monomial_str(squeezed_wit[0]), "multiplier": ext_monomial_str(squeezed_wit[1])}
            if squeezed_wit
            else None
        ),
    }
    if args.json:
        _emit_json(result)
    else:
        print(f"minimal generators: {', '.join(result['minimal_generators'])}")
        print(f"stable: {stable_ok}")
        if stable_wit:
            m, i, j = stable_wit
            print(f"  witness: x{i}*({ext_monomial_str(m)}/x{j}) is outside the ideal")
        print(f"strongly stable: {strong_ok}")
        if strong_wit:
            m, i, j = strong_wit
            print(f"  witness: x{i}*({ext_monomial_str(m)}/x{j}) is outside the ideal")
        print(f"squeezed: {squeezed_ok}")
        if squeezed_wit:
            print(
                f"  witness: generator {ext_monomial_str(squeezed_wit[0])} admits "
                f"multiplier {ext_monomial_str(squeezed_wit[1])}"
            )
    return EXIT_OK


def _emit_json(result: dict) -> None:
    print(json.dumps(result, indent=2, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extlift",
        description=(
            "Groebner bases of exterior-algebra ideals, their lifts to the "
            "free associative algebra, and generic initial ideals"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, gin_flags=False, maxdeg=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="ideal file (see README for the grammar)")
        p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
        p.add_argument("--order", choices=["deglex", "degrevlex"], help="override the base order")
        p.add_argument("--varorder", help="override the variable ranking, e.g. 2,1,3")
        if maxdeg:
            p.add_argument("--maxdeg", type=int, help="degree cap (default n+1)")
        if gin_flags:
            p.add_argument("--seed", type=int, default=0, help="master PRNG seed (default 0)")
            p.add_argument("--trials", type=int, default=2, help="independent samples (default 2)")
            p.add_argument("--height", type=int, default=100, help="entry bound for random matrices")
        p.set_defaults(func=func)
        return p

    add("gb", cmd_gb, "reduced minimal exterior Groebner basis and initial ideal")
    add("lift", cmd_lift, "lift the basis to the preimage ideal in the free algebra")
    add("verify", cmd_verify, "check a candidate free-algebra Groebner basis", maxdeg=True)
    add("gin", cmd_gin, "generic initial ideal with Borel and Hilbert reports", gin_flags=True, maxdeg=True)
    add("hilbert", cmd_hilbert, "per-degree dimensions and rational Hilbert series", maxdeg=True)
    add("predicates", cmd_predicates, "stable / strongly stable / squeezed, with witnesses")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MathFailure as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
