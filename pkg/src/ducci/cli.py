"""Command-line interface.

Subcommands: classify, table, verify, graph, oracle, coeff, scan.
Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
3 resource cap exceeded.  Results go to stdout and are deterministic for
fixed inputs and budgets; timing and progress go to stderr.
"""

import argparse
import csv as _csvmod
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor, as_completed

import ducci
from ducci import closure, coeffs, graph, known
from ducci.cache import (append_record, load_cache, record_from_report,
                         report_from_record)
from ducci.closure import (classify_fast, classify_oracle,
                           oracle_report_to_json, report_to_json,
                           scan_conjectures, scan_row_to_json,
                           verify_even_prime_rotation, verify_mixed_rotation,
                           verify_pow2_rotation, verify_prime_rotation)
from ducci.core import (DEFAULT_MAX_STEPS, RingParams, basic_tuple,
                        parse_tuple)
from ducci.errors import ResourceLimitError
from ducci.ntheory import is_prime, primes_upto

DEFAULT_MAX_STATES = closure.DEFAULT_MAX_STATES

TABLE_COLUMNS = ["n", "m", "L", "P", "alpha", "beta_canonical", "betas_raw",
                 "gamma", "classification"]
_CATEGORY_ORDER = {
    "h-closed": 0,
    "weakly-h-closed": 1,
    "not-weakly-h-closed": 2,
    "h-closed-trivial": 3,
    "unresolved": 4,
}


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            a, b = chunk.split(":")
            pairs.append((int(a), int(b)))
        except ValueError:
            raise ValueError(f"bad pair {chunk!r}; expected n:m") from None
    return pairs


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ValueError(f"bad integer list {text!r}") from None


def _steps_budget(args) -> int:
    if getattr(args, "max_steps", None) is not None:
        return args.max_steps
    env = os.environ.get("DUCCI_MAX_STEPS")
    return int(env) if env else DEFAULT_MAX_STEPS


def _states_budget(args) -> int:
    if getattr(args, "max_states", None) is not None:
        return args.max_states
    env = os.environ.get("DUCCI_MAX_STATES")
    return int(env) if env else DEFAULT_MAX_STATES


# --- classify ----------------------------------------------------------------

def _report_row(report) -> dict:
    return report_to_json(report)


def _row_values(row: dict) -> list[str]:
    out = []
    for col in TABLE_COLUMNS:
        v = row.get(col)
        if v is None:
            out.append("")
        elif col == "betas_raw":
            out.append(";".join(str(b) for b in v))
        else:
            out.append(str(v))
    return out


def _rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    wr = _csvmod.writer(buf, lineterminator="\n")
    wr.writerow(TABLE_COLUMNS)
    for row in rows:
        wr.writerow(_row_values(row))
    return buf.getvalue()


def _row_text(row: dict) -> str:
    parts = [f"n={row['n']} m={row['m']}"]
    if row.get("L") is not None:
        parts.append(f"L={row['L']} P={row['P']}")
    if row.get("alpha") is not None:
        parts.append(f"alpha={row['alpha']} beta={row['beta_canonical']} "
                     f"betas_raw={list(row['betas_raw'])} gamma={row['gamma']}")
    if row.get("anomalies"):
        parts.append(f"anomalies={list(row['anomalies'])}")
    if row.get("error"):
        parts.append(f"error={row['error']}")
    return "  ".join(parts)


def cmd_classify(args) -> int:
    params = RingParams(args.n, args.m)
    report = classify_fast(params, max_steps=_steps_budget(args))
    if args.format == "json":
        print(json.dumps(report_to_json(report)))
    elif args.format == "csv":
        print(_rows_to_csv([_report_row(report)]), end="")
    else:
        row = _report_row(report)
        print(f"{row['classification']}: {_row_text(row)}  steps={row['steps']}")
    return 0


# --- oracle ------------------------------------------------------------------

def cmd_oracle(args) -> int:
    params = RingParams(args.n, args.m)
    report = classify_oracle(params, state_cap=_states_budget(args),
                             max_steps=_steps_budget(args))
    if args.format == "json":
        print(json.dumps(oracle_report_to_json(report)))
    else:
        print(f"{report.classification}: n={args.n} m={args.m} "
              f"components={report.component_count} "
              f"universal_betas={list(report.universal_betas)} "
              f"degenerate_betas={list(report.degenerate_betas)} "
              f"weakly_per_state={report.weakly_per_state} "
              f"states={report.states_visited}")
    return 0


# --- coeff -------------------------------------------------------------------

def cmd_coeff(args) -> int:
    if args.mode in ("polypow", "iterative", "triple") and args.m is None:
        raise ValueError(f"--m is required for mode {args.mode}")
    if args.mode == "polypow":
        row = coeffs.row_polypow(args.r, args.n, args.m)
    elif args.mode == "iterative":
        row = coeffs.row_iterative(args.r, args.n, args.m)
    elif args.mode == "binomial":
        row = coeffs.row_binomial_exact(args.r, args.n)
    else:
        if args.n != 3:
            raise ValueError("triple mode requires --n 3")
        t = coeffs.triple_fast(args.r, args.m)
        row = coeffs.CoeffRow(t.r, 3, t.m, t.as_tuple())
    obj = coeffs.row_to_json(row)
    if args.format == "json":
        print(json.dumps(obj))
    elif args.format == "csv":
        print("r,n,m,values")
        print(f"{obj['r']},{obj['n']},{obj['m']},"
              + ";".join(str(v) for v in obj["values"]))
    else:
        print(f"r={obj['r']} n={obj['n']} m={obj['m']} "
              f"values={','.join(str(v) for v in obj['values'])}")
    return 0


# --- graph -------------------------------------------------------------------

def cmd_graph(args) -> int:
    params = RingParams(args.n, args.m)
    start = parse_tuple(args.start, params) if args.start else basic_tuple(params)
    comp = graph.component(start, node_cap=_states_budget(args),
                           max_steps=_steps_budget(args))
    dot = graph.to_dot(comp)
    counts = (f"nodes={len(comp.nodes)} edges={len(comp.edges)} "
              f"cycle={len(comp.cycle_nodes)} tail_depth={comp.tail_depth}")
    if args.out == "-":
        sys.stdout.write(dot)
        print(counts, file=sys.stderr)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dot)
        print(counts)
    return 0


# --- verify ------------------------------------------------------------------

def _print_record(rec) -> None:
    tag = "PASS" if rec.passed else "FAIL"
    args_txt = " ".join(f"{k}={v}" for k, v in rec.params.items())
    print(f"{tag} {rec.name} {args_txt}")
    for c in rec.checks:
        if not c.gating:
            print(f"  INFO {c.label}: {c.observed}")
        elif not c.passed:
            print(f"  FAIL {c.label}: expected {c.expected}, observed {c.observed}")


def _verify_coeff_identities(args) -> int:
    ok = True

    def report(label: str, passed: bool) -> None:
        nonlocal ok
        ok = ok and passed
        print(("PASS " if passed else "FAIL ") + label)

    r_max = args.r_max
    moduli = range(2, args.coeff_m_max + 1)
    for n in range(1, args.n_max + 1):
        running = {m: coeffs.row_iterative(0, n, m).values for m in moduli}
        bad = None
        for r in range(r_max + 1):
            exact = coeffs.row_binomial_exact(r, n).values
            for m in moduli:
                expected = tuple(v % m for v in exact)
                if (running[m] != expected
                        or coeffs.row_polypow(r, n, m).values != expected):
                    bad = (r, m)
                    break
                row = running[m]
                running[m] = tuple((row[j] + row[j - 1]) % m
                                   for j in range(n))
            if bad:
                break
        report(f"row-oracle agreement n={n} m=2..{args.coeff_m_max} "
               f"r<={r_max}", bad is None)
    report("exact row sums 2^r (n in 3,5,8,16; r<=120)", all(
        sum(coeffs.row_binomial_exact(r, n).values) == 2**r
        for n in (3, 5, 8, 16) for r in range(121)))
    report("n=3 mod-6 pattern r=1..120", all(
        coeffs.mod6_pattern_check(r) for r in range(1, 121)))

    import random
    rng = random.Random(20260810)
    good = True
    for _ in range(1000):
        n = rng.randint(1, 12)
        m = rng.randint(2, 12)
        r = rng.randint(2, 60)
        t = rng.randint(1, r - 1)
        s = rng.randint(1, n)
        if not coeffs.lemma_sum_check(r, t, s, n, m):
            good = False
            break
    report("binomial split identity on 1000 random (r,t,s,n,m)", good)

    good = True
    for l in range(1, 13):
        m = 2**l
        al, bl, cl = coeffs.triple_fast(l, m).as_tuple()
        a2, b2, c2 = coeffs.triple_fast(l + 2, m).as_tuple()
        if (a2, b2, c2) != (cl, al, bl):
            good = False
    report("pow2 congruence a_(l+2)=c_l, b_(l+2)=a_l, c_(l+2)=b_l", good)

    good = True
    for m in primes_upto(999):
        if m % 6 == 5:
            if coeffs.triple_fast(m - 1, m).as_tuple() != (0, 0, 1):
                good = False
    report("prime congruence (a,b,c)_(m-1) = (0,0,1) for m = 5 mod 6", good)

    good = True
    for l in range(1, 5):
        for p in (5, 11, 17, 23):
            m = 2**l * p
            al, bl, cl = coeffs.triple_fast(l, m).as_tuple()
            ap, bp, cp = coeffs.triple_fast(l + p - 1, m).as_tuple()
            if (ap, bp, cp) != (bl, cl, al):
                good = False
    report("mixed-modulus congruence (a,b,c)_(l+p-1) = (b,c,a)_l", good)

    good = True
    for (n, m, _a, _b) in known.REFERENCE_H_CLOSED:
        if n % 2 == 0 and (m + 1) % n == 0 and is_prime(m):
            vals = coeffs.row_polypow(m, n, m).values
            expect = (1,) + (0,) * (n - 2) + (1,)
            if vals != expect:
                good = False
    report("even-n prime rows: D^m row is (1,0,...,0,1)", good)

    return 0 if ok else 1


def cmd_verify(args) -> int:
    sel = args.theorem
    max_steps = _steps_budget(args)
    records = []
    if sel == "1.1":
        for l in range(1, args.l_max + 1):
            records.append(verify_pow2_rotation(l, max_steps=max_steps))
    elif sel == "1.2":
        for m in primes_upto(args.m_max - 1):
            if m % 6 == 5:
                records.append(verify_prime_rotation(m, max_steps=max_steps))
    elif sel == "1.3":
        p_list = _parse_ints(args.p_list)
        for l in range(1, args.l_max + 1):
            for p in p_list:
                records.append(verify_mixed_rotation(l, p, max_steps=max_steps))
    elif sel == "2":
        for n, m in _parse_pairs(args.pairs):
            records.append(verify_even_prime_rotation(n, m, max_steps=max_steps))
    elif sel == "coeff-identities":
        return _verify_coeff_identities(args)
    else:
        raise ValueError(f"unknown selector {sel!r}")
    for rec in records:
        _print_record(rec)
    return 0 if all(r.passed for r in records) else 1


# --- table -------------------------------------------------------------------

def _classify_job(job):
    n, m, max_steps = job
    t0 = time.perf_counter()
    try:
        rep = classify_fast(RingParams(n, m), max_steps=max_steps)
        err = None
    except ResourceLimitError as exc:
        rep, err = None, str(exc)
    wall_ms = int((time.perf_counter() - t0) * 1000)
    return n, m, rep, err, wall_ms


def _collect_pairs(args) -> list[tuple[int, int]]:
    pairs: list[tuple[int, int]] = []
    if args.pairs:
        pairs.extend(_parse_pairs(args.pairs))
    if args.known:
        pairs.extend(known.reference_pairs(args.known))
    if args.grid_n:
        for n in _parse_ints(args.grid_n):
            for m in range(args.m_min, args.m_max + 1):
                if args.m_filter == "prime" and not is_prime(m):
                    continue
                if args.m_filter == "prime-minus-one" and (
                        not is_prime(m) or (m + 1) % n != 0):
                    continue
                pairs.append((n, m))
    seen = set()
    out = []
    for p in sorted(pairs):
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _load_expect(args) -> list[tuple]:
    if args.expect_known:
        return known.reference_rows()
    rows = []
    with open(args.expect, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("n,"):
                continue
            parts = line.split(",")
            n, m, cls = int(parts[0]), int(parts[1]), parts[2]
            alpha = int(parts[3]) if len(parts) > 3 and parts[3] != "" else None
            beta = int(parts[4]) if len(parts) > 4 and parts[4] != "" else None
            rows.append((n, m, cls, alpha, beta))
    return rows


def _compare_expect(expect_rows, by_pair) -> list[dict]:
    comparisons = []
    for (n, m, cls, alpha, beta) in expect_rows:
        row = by_pair.get((n, m))
        if row is None:
            continue
        agree = (row["classification"] == cls
                 and (alpha is None or row.get("alpha") == alpha)
                 and (beta is None or row.get("beta_canonical") == beta))
        comparisons.append({
            "n": n, "m": m, "agree": agree,
            "expected": {"classification": cls, "alpha": alpha, "beta": beta},
            "observed": {"classification": row["classification"],
                         "alpha": row.get("alpha"),
                         "beta": row.get("beta_canonical")},
        })
    return comparisons


def cmd_table(args) -> int:
    pairs = _collect_pairs(args)
    if not pairs:
        raise ValueError("no (n, m) pairs selected; use --pairs, --known or --grid-n")
    max_steps = _steps_budget(args)
    tool_version = ducci.__version__
    cached = load_cache(args.cache, tool_version) if args.cache else {}

    todo = [p for p in pairs if p not in cached]
    unresolved: dict[tuple[int, int], str] = {}
    computed = 0
    if todo:
        jobs = [(n, m, max_steps) for (n, m) in todo]
        t0 = time.perf_counter()
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                futs = [pool.submit(_classify_job, j) for j in jobs]
                results = [f.result() for f in as_completed(futs)]
        else:
            results = [_classify_job(j) for j in jobs]
        for (n, m, rep, err, wall_ms) in results:
            if rep is None:
                unresolved[(n, m)] = err
                continue
            rec = record_from_report(rep, wall_ms, tool_version)
            if args.cache:
                append_record(args.cache, rec)
            cached[(n, m)] = rec
            computed += 1
        print(f"classified {computed} pairs ({len(cached)} cached, "
              f"{len(unresolved)} unresolved) in "
              f"{time.perf_counter() - t0:.2f}s", file=sys.stderr)
    else:
        print(f"all {len(pairs)} pairs cached; nothing to compute",
              file=sys.stderr)

    rows = []
    for (n, m) in pairs:
        if (n, m) in cached:
            rows.append(_report_row(report_from_record(cached[(n, m)])))
        else:
            rows.append({"n": n, "m": m, "L": None, "P": None, "alpha": None,
                         "beta_canonical": None, "betas_raw": (), "gamma": None,
                         "classification": "unresolved", "anomalies": (),
                         "error": unresolved.get((n, m), "")})
    rows.sort(key=lambda r: (_CATEGORY_ORDER.get(r["classification"], 9),
                             r["n"], r["m"]))

    comparisons = []
    if args.expect or args.expect_known:
        by_pair = {(r["n"], r["m"]): r for r in rows}
        comparisons = _compare_expect(_load_expect(args), by_pair)

    if args.format == "json":
        out = {"rows": rows}
        if comparisons:
            out["expect"] = comparisons
        print(json.dumps(out))
    elif args.format == "text":
        current = None
        for row in rows:
            if row["classification"] != current:
                current = row["classification"]
                print(f"== {current} ==")
            print(_row_text(row))
        for c in comparisons:
            if c["agree"]:
                print(f"agree n={c['n']} m={c['m']}")
            else:
                print(f"DISAGREE n={c['n']} m={c['m']} "
                      f"expected={c['expected']} observed={c['observed']}")
    else:
        sys.stdout.write(_rows_to_csv(rows))
        for c in comparisons:
            e, o = c["expected"], c["observed"]
            tag = "agree" if c["agree"] else "disagree"
            print(f"#expect,{c['n']},{c['m']},{tag},"
                  f"{e['classification']},{e['alpha']},{e['beta']},"
                  f"{o['classification']},{o['alpha']},{o['beta']}")
    return 3 if unresolved else 0


# --- scan --------------------------------------------------------------------

def cmd_scan(args) -> int:
    rows = scan_conjectures(
        args.family, ns=tuple(_parse_ints(args.n)), p_max=args.p_max,
        l_max=args.l_max, l2_max=args.l2_max, m_max=args.m_cap,
        max_steps=_steps_budget(args))
    if args.format == "json":
        print(json.dumps([scan_row_to_json(r) for r in rows]))
    elif args.format == "csv":
        print("n,m,predicted_alpha,predicted_beta,classification,alpha,"
              "beta_canonical,relation_holds,agree,error")
        for r in rows:
            vals = [r.n, r.m, r.predicted_alpha, r.predicted_beta,
                    r.classification, r.alpha, r.beta_canonical,
                    r.relation_holds, r.agree, r.error]
            print(",".join("" if v is None else str(v) for v in vals))
    else:
        for r in rows:
            pred = ("(no alpha prediction)" if r.predicted_alpha is None
                    else f"predicted alpha={r.predicted_alpha} "
                         f"beta={r.predicted_beta}")
            got = (f"error: {r.error}" if r.error
                   else f"got {r.classification} alpha={r.alpha} "
                        f"beta={r.beta_canonical}")
            mark = {True: "agree", False: "DISAGREE", None: "n/a"}[r.agree]
            print(f"n={r.n} m={r.m}: {pred}; {got} -> {mark}")
    return 0


# --- parser ------------------------------------------------------------------

def _add_budget_flags(p, states=False):
    p.add_argument("--max-steps", type=int, default=None,
                   help="step budget (default 100000000 or DUCCI_MAX_STEPS)")
    if states:
        p.add_argument("--max-states", type=int, default=None,
                       help="state/node cap (default 2000000 or DUCCI_MAX_STATES)")


def _add_format_flag(p, default="text"):
    p.add_argument("--format", choices=("json", "csv", "text"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ducci",
        description="Adjacent-sum dynamics on Z_m^n: cycles, rotation "
                    "closure, coefficient rows, transition graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one (n, m) from the basic orbit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_budget_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("oracle", help="exhaustive classification of a small space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_budget_flags(p, states=True)
    _add_format_flag(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("coeff", help="coefficient row of D^r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=("polypow", "iterative", "binomial",
                                      "triple"), default="polypow")
    _add_format_flag(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("graph", help="extract a transition component as DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--start", default=None,
                   help="start tuple x1,...,xn (default the basic tuple)")
    p.add_argument("--out", default="-", help="output path ('-' = stdout)")
    _add_budget_flags(p, states=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--theorem", required=True,
                   choices=("1.1", "1.2", "1.3", "2", "coeff-identities"))
    p.add_argument("--l-max", type=int, default=12)
    p.add_argument("--m-max", type=int, default=1000)
    p.add_argument("--p-list", default="5,11,17,23,29")
    p.add_argument("--pairs",
                   default="4:3,4:7,4:11,4:19,6:5,6:11,6:17,8:7,8:23,"
                           "10:19,12:11,16:31,32:31")
    p.add_argument("--r-max", type=int, default=200)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--coeff-m-max", type=int, default=12,
                   help="modulus bound of the coeff-identities row sweep")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="classify many pairs with a resumable cache")
    p.add_argument("--pairs", default="", help="explicit list n1:m1,n2:m2,...")
    p.add_argument("--known", choices=("h-closed", "weakly", "not-weakly",
                                       "all"), default=None,
                   help="preset: pairs of a built-in reference table")
    p.add_argument("--grid-n", default="",
                   help="generator: tuple lengths, e.g. 4,5,6")
    p.add_argument("--m-min", type=int, default=3)
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--m-filter", choices=("any", "prime", "prime-minus-one"),
                   default="any", help="generator filter on m")
    p.add_argument("--cache", default=None, help="JSONL cache path")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--expect", default=None,
                   help="CSV of expected rows n,m,classification[,alpha,beta]")
    p.add_argument("--expect-known", action="store_true",
                   help="compare against the built-in reference tables")
    _add_budget_flags(p)
    _add_format_flag(p, default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="probe a conjectured (n, m) family")
    p.add_argument("--family", required=True, choices=closure.SCAN_FAMILIES)
    p.add_argument("--n", default="4,6,8")
    p.add_argument("--p-max", type=int, default=30)
    p.add_argument("--l-max", type=int, default=3)
    p.add_argument("--l2-max", type=int, default=3)
    p.add_argument("--m-cap", type=int, default=100_000)
    _add_budget_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
