"""Command-line front end.

Five subcommands:

* ``simulate`` -- play one game with a chosen strategy and robber,
  optionally writing a replayable JSON-lines trace.
* ``solve``    -- exhaustive optimal values: capture time or cop number.
* ``verify``   -- exact worst case of a strategy over every legal start.
* ``table``    -- CSV of formula values (capture times, work, windows),
  or the smallest team for a deadline with ``--deadline``.
* ``sweep``    -- CSV of the asymptotic trend tables.

Exit codes: 0 success, 2 usage error, 3 solver budget exceeded,
4 no capture (a robber escapes).
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import analysis
from .boards import Board
from .engine import run_game
from .solver import BudgetExceeded, DEFAULT_BUDGET, cop_number, save_table, solve
from .strategies import ALGORITHMS, default_algorithm, make_robber, make_strategy
from .verify import verify_strategy

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NO_CAPTURE = 4

ROBBERS = ("scripted", "greedy", "worst-case", "external")


def _add_board_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", required=True, choices=("grid", "semitorus", "torus"))
    p.add_argument("-m", type=int, required=True, help="rows")
    p.add_argument("-n", type=int, required=True, help="columns")


def _board(args) -> Board:
    return Board.make(args.kind, args.m, args.n)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gridpursuit", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="play one game and report the capture round")
    _add_board_args(p)
    p.add_argument("-k", type=int, help="cop count (default: the family minimum)")
    p.add_argument("--algo", choices=sorted(ALGORITHMS), help="cop strategy id")
    p.add_argument("--robber", default="scripted", choices=ROBBERS)
    p.add_argument("--round-cap", type=int, default=None)
    p.add_argument("--out", help="write the JSON-lines trace here ('-' for stdout)")
    p.add_argument("--seed", type=int, default=None, help="recorded in the trace header")

    p = sub.add_parser("solve", help="exhaustive optimal capture time / cop number")
    _add_board_args(p)
    p.add_argument("-k", type=int, help="cop count (required unless --cop-number)")
    p.add_argument("--cop-number", action="store_true", help="find the smallest winning k")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max state count")
    p.add_argument("--out", help="save the value tables to this .npz file")

    p = sub.add_parser("verify", help="exact worst case of a strategy, all starts")
    _add_board_args(p)
    p.add_argument("-k", type=int, help="cop count (default: the family minimum)")
    p.add_argument("--algo", choices=sorted(ALGORITHMS))

    p = sub.add_parser("table", help="formula values as CSV")
    _add_board_args(p)
    p.add_argument("-k", type=int, help="single cop count (default: a small range)")
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--deadline", type=int, help="emit the smallest team meeting this round")
    p.add_argument("--out", help="write CSV here instead of stdout")

    p = sub.add_parser("sweep", help="asymptotic trend tables as CSV")
    p.add_argument("--trend", required=True, choices=("doubling", "squares"))
    p.add_argument("--out", help="write CSV here instead of stdout")
    return ap


def _default_k(board: Board) -> int:
    return {"grid": 2, "semitorus": 2, "torus": 3}[board.kind]


def cmd_simulate(args) -> int:
    board = _board(args)
    k = args.k if args.k is not None else _default_k(board)
    algo = args.algo or default_algorithm(board, k)
    strategy = make_strategy(algo, board, k)

    trace = None
    close = False
    if args.robber == "external":
        if not args.out or args.out == "-":
            print("simulate: --robber external needs --out FILE (stdout carries the protocol)",
                  file=sys.stderr)
            return EXIT_USAGE
        robber = make_robber("external", board, infile=sys.stdin, outfile=sys.stdout)
    else:
        robber = make_robber(args.robber, board, strategy=strategy)
    if args.out == "-":
        trace = sys.stdout
    elif args.out:
        trace = open(args.out, "w")
        close = True
    try:
        result = run_game(
            board,
            strategy,
            robber,
            round_cap=args.round_cap,
            trace=trace,
            algorithm=algo,
            robber_name=args.robber,
            seed=args.seed,
        )
    finally:
        if close:
            trace.close()

    if result.outcome == "capture":
        msg = f"capture at round t={result.t} (start {result.robber_start})"
        if result.phases:
            d, c, r = result.phases
            msg += f"; phases deploy={d} chase={c} rise={r}"
        print(msg)
        return EXIT_OK
    print(f"no capture within {result.rounds} rounds (start {result.robber_start})")
    return EXIT_NO_CAPTURE


def cmd_solve(args) -> int:
    board = _board(args)
    try:
        if args.cop_number:
            k = cop_number(board, budget=args.budget)
            if k is None:
                print("no cop count up to 8 wins this board")
                return EXIT_NO_CAPTURE
            print(f"cop_number={k}")
            return EXIT_OK
        if args.k is None:
            print("solve: -k is required (or pass --cop-number)", file=sys.stderr)
            return EXIT_USAGE
        result = solve(board, args.k, budget=args.budget)
        t, placement = result.optimal()
        if args.out:
            save_table(args.out, result)
        if t is None:
            print(f"k={args.k}: the robber escapes every placement")
            return EXIT_NO_CAPTURE
        print(f"t*={t} with k={args.k} on {board.kind} {board.m}x{board.n}")
        print("placement: " + ", ".join(str(v) for v in placement))
        return EXIT_OK
    except BudgetExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_BUDGET


def cmd_verify(args) -> int:
    board = _board(args)
    k = args.k if args.k is not None else _default_k(board)
    algo = args.algo or default_algorithm(board, k)
    strategy = make_strategy(algo, board, k)
    res = verify_strategy(board, strategy)
    print(f"{algo} on {board.kind} {board.m}x{board.n} k={k}: {res}")
    return EXIT_OK if res.captures else EXIT_NO_CAPTURE


def _open_out(path):
    if path and path != "-":
        return open(path, "w", newline=""), True
    return sys.stdout, False


def cmd_table(args) -> int:
    board = _board(args)
    out, close = _open_out(args.out)
    w = csv.writer(out)
    try:
        if args.deadline is not None:
            w.writerow(["kind", "m", "n", "deadline", "bound", "k"])
            if board.kind == "grid":
                ts = analysis.grid_team_for_deadline(board.m, board.n, args.deadline)
            elif board.kind == "semitorus":
                ts = analysis.cylinder_team_for_deadline(board.m, board.n, args.deadline)
            else:
                ts = analysis.torus_team_for_deadline(board.m, board.n, args.deadline)
            if ts.k is None:
                w.writerow([board.kind, board.m, board.n, args.deadline,
                            "n/a: no closed form meets this deadline", ""])
            else:
                w.writerow([board.kind, board.m, board.n, args.deadline, ts.render(), ts.k])
            return EXIT_OK

        w.writerow(["kind", "m", "n", "k", "algorithm", "t", "work", "window"])
        ks = [args.k] if args.k is not None else list(range(2, args.k_max + 1))
        for k in ks:
            row = [board.kind, board.m, board.n, k]
            try:
                algo = default_algorithm(board, k)
                t = analysis.strategy_capture_time(board.kind, board.m, board.n, k)
                row += [algo, t, k * t]
            except ValueError as e:
                row += [f"n/a: {e}", "", ""]
                w.writerow(row)
                continue
            if board.kind == "torus":
                win = analysis.torus_window(board.m, board.n, k)
                row.append(str(win))
            else:
                row.append("n/a: windows apply to tori only")
            w.writerow(row)
        return EXIT_OK
    finally:
        if close:
            out.close()


def cmd_sweep(args) -> int:
    out, close = _open_out(args.out)
    w = csv.writer(out)
    try:
        if args.trend == "doubling":
            w.writerow(["i", "m", "n", "t", "lower", "ratio"])
            for row in analysis.doubling_ratio_rows():
                w.writerow([row["i"], row["m"], row["n"], row["t"], row["lower"],
                            analysis.fmt_ratio(row["ratio"])])
        else:
            w.writerow(["n", "window_hi", "lower", "ratio", "limit"])
            for row in analysis.square_window_rows():
                w.writerow([row["n"], analysis.fmt_ratio(row["hi"]), row["lower"],
                            analysis.fmt_ratio(row["ratio"]), analysis.fmt_ratio(row["limit"])])
        return EXIT_OK
    finally:
        if close:
            out.close()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            return cmd_simulate(args)
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "table":
            return cmd_table(args)
        return cmd_sweep(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
