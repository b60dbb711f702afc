"""Command-line interface.

    sgp [--gens LIST | --a N] [--format json|csv|text] [--fast|--oracle]
        [--betti-bound N] COMMAND [ARGS]

Exactly one of --gens / --a selects the semigroup; --a N is shorthand for
the consecutive triple <a, a+1, a+2> and unlocks the closed-form paths.
By default each command uses the closed form where one applies and falls
back to enumeration otherwise, noting the fallback on stderr; --fast
demands the closed form (usage error outside its domain) and --oracle
forces enumeration.  JSON output carries a "method" field naming the
code path that produced it.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 non-member
query.  SGP_THREADS caps the verify sweep's worker count; output is
assembled in a fixed order either way, so identical invocations produce
identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import arithmetic_sequence as arith
from . import consecutive_triple as ct
from . import core_semigroup as core
from . import render

CLOSED_FORM = "closed-form"
ENUMERATION = "enumeration"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    gens: tuple | None
    a: int | None
    command: str
    fmt: str
    fast: bool
    oracle: bool
    betti_bound: int | None
    # verify sweep parameters; defaults match the subparser
    a_min: int = 3
    a_max: int = 12
    r_margin: int | None = None
    arith: bool = False
    random_count: int = 0
    seed: int = 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sgp",
        description="Exact factorization analytics for numerical semigroups.")
    p.add_argument("--gens", metavar="LIST",
                   help="comma-separated generators, e.g. 3,4,5")
    p.add_argument("--a", type=int, metavar="N",
                   help="use the semigroup <N, N+1, N+2>")
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default="text", dest="fmt")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fast", action="store_true",
                      help="closed forms only; error outside their domain")
    mode.add_argument("--oracle", action="store_true",
                      help="force brute-force enumeration")
    p.add_argument("--betti-bound", type=int, default=None, metavar="N",
                   help="override the Betti element scan bound")

    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("info", help="generators, Frobenius number, Betti "
                                "classification, unique-length count")
    f = sub.add_parser("factorize", help="all factorizations of an element")
    f.add_argument("r", type=int)
    ap = sub.add_parser("apery", help="Apery set of one or more members")
    ap.add_argument("x", type=int, nargs="+")
    sub.add_parser("betti", help="Betti elements, balanced and unbalanced")
    u = sub.add_parser("ulf", help="all members with a one-length "
                                   "factorization set")
    u.add_argument("--bound", type=int, default=None,
                   help="window bound, needed only when the set is infinite")
    sub.add_parser("table", help="length-by-denumerant partition table "
                                 "(consecutive triples only)")
    sub.add_parser("presentation", help="minimal presentation (consecutive "
                                        "triples and arithmetic sequences)")
    v = sub.add_parser("verify", help="closed forms against the engine")
    v.add_argument("--a-min", type=int, default=3)
    v.add_argument("--a-max", type=int, default=12)
    v.add_argument("--r-margin", type=int, default=None,
                   help="scan this far beyond the two-length threshold "
                        "(default 3a)")
    v.add_argument("--arith", action="store_true",
                   help="also sweep the arithmetic-sequence Betti formulas")
    v.add_argument("--random", type=int, default=0, metavar="N",
                   help="also spot-check N random semigroups for the "
                        "unique-length/Apery identity")
    v.add_argument("--seed", type=int, default=0,
                   help="seed for --random sampling")
    return p


def _parse_gens(text):
    try:
        gens = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError("--gens wants comma-separated integers, got %r"
                         % text)
    if not gens:
        raise UsageError("--gens wants at least one generator")
    return gens


def _config(ns) -> Config:
    # verify sweeps its own parameter grid; other commands address one
    # semigroup and need exactly one selector.
    if ns.command != "verify" and (ns.gens is None) == (ns.a is None):
        raise UsageError("exactly one of --gens / --a is required")
    gens = _parse_gens(ns.gens) if ns.gens is not None else None
    cfg = Config(gens, ns.a, ns.command, ns.fmt, ns.fast, ns.oracle,
                 ns.betti_bound)
    if ns.command == "verify":
        if ns.a_min < 3 or ns.a_max < ns.a_min:
            raise UsageError("need 3 <= a-min <= a-max")
        cfg = Config(gens, ns.a, ns.command, ns.fmt, ns.fast, ns.oracle,
                     ns.betti_bound, ns.a_min, ns.a_max, ns.r_margin,
                     ns.arith, ns.random, ns.seed)
    return cfg


def _semigroup(cfg: Config) -> core.Semigroup:
    if cfg.a is not None:
        if cfg.a < 1:
            raise UsageError("--a wants a positive integer")
        return core.Semigroup((cfg.a, cfg.a + 1, cfg.a + 2))
    return core.Semigroup(cfg.gens)


def _triple_a(cfg: Config):
    """The a of <a, a+1, a+2> when the configured semigroup is one, else None."""
    if cfg.a is not None:
        return cfg.a if cfg.a >= 3 else None
    g = sorted(set(cfg.gens))
    if len(g) == 3 and g[1] == g[0] + 1 and g[2] == g[0] + 2 and g[0] >= 3:
        return g[0]
    return None


def _note_fallback(cfg: Config, command, reason):
    if not cfg.oracle:
        print("fallback=%s command=%s reason=%s" % (ENUMERATION, command,
                                                    reason), file=sys.stderr)


def _require_fast_available(cfg: Config, command, reason):
    # --fast promises the closed form; refuse rather than silently degrade.
    if cfg.fast:
        raise UsageError("--fast: no closed form for %s (%s)"
                         % (command, reason))


def _emit(cfg: Config, text_lines, json_obj, csv_rows=None):
    if cfg.fmt == "json":
        print(json.dumps(json_obj, sort_keys=True))
    elif cfg.fmt == "csv":
        for row in csv_rows if csv_rows is not None else []:
            print(",".join(str(x) for x in row))
    else:
        for line in text_lines:
            print(line)


def cmd_info(cfg: Config) -> int:
    S = _semigroup(cfg)
    a = _triple_a(cfg)
    if a is not None and not cfg.oracle:
        ts = ct.TripleSemigroup(a)
        cls = ct.ubetti_triple(a)
        frob, ulf_size, threshold = ts.frob, len(ct.ulf_triple(a)), ts.ulf_bound
        method = CLOSED_FORM
    else:
        _require_fast_available(cfg, "info", "not a consecutive triple")
        cls = core.betti_elements(S, cfg.betti_bound)
        frob = S.frobenius
        threshold = None
        ulf_size = len(core.ulf(S, scan_bound=cfg.betti_bound)) \
            if cls.unbalanced else None
        method = ENUMERATION
    obj = {"method": method,
           "generators": list(S.generators),
           "minimal_generators": list(S.minimal_generators),
           "frobenius": frob,
           "betti": list(cls.betti),
           "balanced": list(cls.balanced),
           "unbalanced": list(cls.unbalanced),
           "ulf_size": ulf_size}
    if threshold is not None:
        obj["ulf_bound"] = threshold
    lines = ["minimal generators: %s" % (list(S.minimal_generators),),
             "frobenius: %d" % frob]
    if threshold is not None:
        lines.append("two-length threshold: %d" % threshold)
    lines += ["betti: %s (balanced %s, unbalanced %s)"
              % (list(cls.betti), list(cls.balanced), list(cls.unbalanced)),
              "unique-length members: %s"
              % ("unbounded" if ulf_size is None else ulf_size)]
    _emit(cfg, lines, obj, [(k, v) for k, v in sorted(obj.items())])
    return 0


def cmd_factorize(cfg: Config, r) -> int:
    a = _triple_a(cfg)
    method = ENUMERATION
    if a is not None and not cfg.oracle:
        if not ct.member_triple(a, r):
            raise core.NotMemberError(
                "%d is not in <%d, %d, %d>" % (r, a, a + 1, a + 2))
        if ct.ulf_membership_triple(a, r):
            facs = ct.factorizations_triple(a, r)
            method = CLOSED_FORM
        else:
            _require_fast_available(
                cfg, "factorize %d" % r,
                "element has two factorization lengths")
            _note_fallback(cfg, "factorize", "two factorization lengths")
            facs = core.factorizations(_semigroup(cfg), r)
    else:
        _require_fast_available(cfg, "factorize", "not a consecutive triple")
        S = _semigroup(cfg)
        if r not in S:
            raise core.NotMemberError("%d is not in %r" % (r, S))
        facs = core.factorizations(S, r)
    obj = {"method": method, "r": r, "factorizations": [list(f) for f in facs]}
    _emit(cfg, [" ".join(map(str, f)) for f in facs], obj,
          [tuple(f) for f in facs])
    return 0


def cmd_apery(cfg: Config, xs) -> int:
    _require_fast_available(cfg, "apery", "enumeration only")
    S = _semigroup(cfg)
    if _triple_a(cfg) is not None:
        _note_fallback(cfg, "apery", "enumeration only")
    members = core.apery(S, xs[0]) if len(xs) == 1 \
        else core.apery_multi(S, xs)
    obj = {"method": ENUMERATION, "x": sorted(set(xs)), "apery": members}
    _emit(cfg, [" ".join(map(str, members))], obj, [(m,) for m in members])
    return 0


def cmd_betti(cfg: Config) -> int:
    a = _triple_a(cfg)
    if a is not None and not cfg.oracle:
        cls = ct.ubetti_triple(a)
        method = CLOSED_FORM
    else:
        _require_fast_available(cfg, "betti", "not a consecutive triple")
        cls = core.betti_elements(_semigroup(cfg), cfg.betti_bound)
        method = ENUMERATION
    obj = {"method": method, "betti": list(cls.betti),
           "balanced": list(cls.balanced), "unbalanced": list(cls.unbalanced)}
    lines = ["betti: %s" % (list(cls.betti),),
             "balanced: %s" % (list(cls.balanced),),
             "unbalanced: %s" % (list(cls.unbalanced),)]
    _emit(cfg, lines, obj,
          [(b, "balanced" if b in cls.balanced else "unbalanced")
           for b in cls.betti])
    return 0


def cmd_ulf(cfg: Config, bound) -> int:
    a = _triple_a(cfg)
    if a is not None and not cfg.oracle:
        members = [u.r for u in ct.ulf_triple(a)]
        method = CLOSED_FORM
    else:
        _require_fast_available(cfg, "ulf", "not a consecutive triple")
        try:
            members = core.ulf(_semigroup(cfg), bound=bound,
                               scan_bound=cfg.betti_bound)
        except ValueError as exc:
            raise UsageError(str(exc))
        method = ENUMERATION
    obj = {"method": method, "count": len(members), "ulf": members}
    _emit(cfg, [" ".join(map(str, members))], obj, [(m,) for m in members])
    return 0


def cmd_table(cfg: Config) -> int:
    a = _triple_a(cfg)
    if a is None or cfg.oracle:
        raise UsageError("table is defined for consecutive triples only")
    t = render.partition_table(a)
    if cfg.fmt == "csv":
        sys.stdout.write(render.table_to_csv(t))
    elif cfg.fmt == "json":
        sys.stdout.write(render.table_to_json(t))
    else:
        sys.stdout.write(render.table_to_text(t))
    return 0


def _arith_params(gens):
    g = sorted(set(gens))
    if len(g) < 2:
        return None
    a, d = g[0], g[1] - g[0]
    if d < 1:
        return None
    if any(g[i] - g[i - 1] != d for i in range(1, len(g))):
        return None
    try:
        return arith.ArithSemigroup(a, d, len(g) - 1)
    except ValueError:
        return None


def cmd_presentation(cfg: Config) -> int:
    a = _triple_a(cfg)
    if cfg.oracle:
        raise UsageError("presentation has no enumeration mode")
    if a is not None:
        pres = ct.presentation_triple(a)
    else:
        A = _arith_params(cfg.gens)
        if A is None:
            raise UsageError("no closed-form presentation for these "
                             "generators (need a consecutive triple or an "
                             "arithmetic sequence)")
        pres = arith.presentation_arith(A)
    S = _semigroup(cfg)
    obj = {"method": CLOSED_FORM,
           "relations": [[list(x), list(y)] for x, y in pres.relations]}
    lines = ["%s  =  %s   (value %d)"
             % (" ".join(map(str, x)), " ".join(map(str, y)), S.value(x))
             for x, y in pres.relations]
    _emit(cfg, lines, obj,
          [(" ".join(map(str, x)), " ".join(map(str, y)))
           for x, y in pres.relations])
    return 0


def _verify_triple(a, r_margin):
    """Check every closed form for one a; (checks, failure or None)."""
    S = core.Semigroup((a, a + 1, a + 2))
    ts = ct.TripleSemigroup(a)
    top = ts.ulf_bound + (r_margin if r_margin is not None else 3 * a)
    lsets = core.length_sets_up_to(S, top)
    checks = 0
    for r in range(top + 1):
        member = lsets[r] is not None
        if ct.member_triple(a, r) != member:
            return checks, (a, r, "membership mismatch")
        checks += 1
        if member:
            one_length = len(lsets[r]) == 1
            if ct.ulf_membership_triple(a, r) != one_length:
                return checks, (a, r, "unique-length membership mismatch")
            checks += 1
        if member and r < ts.ulf_bound:
            facs = core.factorizations(S, r)
            fast = ct.factorizations_triple(a, r)
            if sorted(fast) != sorted(facs):
                return checks, (a, r, "factorization set mismatch")
            if ct.denumerant_triple(a, r) != len(facs):
                return checks, (a, r, "denumerant mismatch")
            if lsets[r] != {r // a}:
                return checks, (a, r, "length set is not {floor(r/a)}")
            dec = ct.decompose_triple(a, r)
            if ((a + 1) * (2 * dec.d - 2 + dec.i) + dec.c != r
                    or dec.c not in ct.gamma(dec.i)
                    or dec.d != len(facs)):
                return checks, (a, r, "decomposition mismatch")
            checks += 4
    if len(lsets[ts.ulf_bound]) < 2:
        return checks, (a, ts.ulf_bound, "threshold should have two lengths")
    checks += 1
    return checks, None


def _verify_arith(a):
    checks = 0
    for d in (1, 2, 3):
        for n in range(2, min(4, a - 1) + 1):
            try:
                A = arith.ArithSemigroup(a, d, n)
            except ValueError:
                continue
            S = core.Semigroup(A.generators)
            cls = core.betti_elements(S)
            if list(cls.betti) != arith.betti_arith(A):
                return checks, (a, (d, n), "betti mismatch")
            if list(cls.unbalanced) != arith.ubetti_arith(A):
                return checks, (a, (d, n), "unbalanced betti mismatch")
            for x, y in arith.presentation_arith(A).relations:
                if S.value(x) != S.value(y):
                    return checks, (a, (d, n), "relator with unequal sides")
            checks += 3
    return checks, None


def _verify_random(count, seed):
    rng = random.Random(seed)
    checks = 0
    done = 0
    while done < count:
        k = rng.randint(2, 4)
        cand = sorted(rng.sample(range(2, 31), k))
        try:
            S = core.Semigroup(cand)
        except ValueError:
            continue
        if not 2 <= len(S.minimal_generators) <= 4:
            continue
        done += 1
        cls = core.betti_elements(S)
        thm = core.apery_multi(S, cls.unbalanced)
        top = max(max(thm), max(cls.betti)) + max(S.minimal_generators) + 1
        lsets = core.length_sets_up_to(S, top)
        brute = [r for r in range(top + 1)
                 if lsets[r] is not None and len(lsets[r]) == 1]
        if brute != thm:
            return checks, (tuple(S.minimal_generators), None,
                            "unique-length set differs from the Apery form")
        b = min(cls.unbalanced)
        below = all(r in set(thm) for r in range(b) if lsets[r] is not None)
        if not below or b in set(thm):
            return checks, (tuple(S.minimal_generators), b,
                            "least unbalanced Betti element contract")
        checks += 2
    return checks, None


def cmd_verify(cfg: Config) -> int:
    threads = int(os.environ.get("SGP_THREADS", "1") or "1")
    a_values = list(range(cfg.a_min, cfg.a_max + 1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(
                lambda a: _verify_triple(a, cfg.r_margin), a_values))
    else:
        results = [_verify_triple(a, cfg.r_margin) for a in a_values]
    if cfg.arith:
        results += [_verify_arith(a) for a in a_values if a >= 5]
    if cfg.random_count:
        results.append(_verify_random(cfg.random_count, cfg.seed))
    total = sum(c for c, _ in results)
    for _, failure in results:
        if failure is not None:
            print("FAIL %s" % (failure,))
            return 1
    print("PASS (%d checks)" % total)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _config(ns)
        if ns.command == "info":
            return cmd_info(cfg)
        if ns.command == "factorize":
            return cmd_factorize(cfg, ns.r)
        if ns.command == "apery":
            return cmd_apery(cfg, ns.x)
        if ns.command == "betti":
            return cmd_betti(cfg)
        if ns.command == "ulf":
            return cmd_ulf(cfg, ns.bound)
        if ns.command == "table":
            return cmd_table(cfg)
        if ns.command == "presentation":
            return cmd_presentation(cfg)
        if ns.command == "verify":
            return cmd_verify(cfg)
        raise UsageError("unknown command %r" % ns.command)
    except core.NotMemberError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
