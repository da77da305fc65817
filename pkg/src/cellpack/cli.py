"""Command-line client for the packing service.

Every subcommand drives the HTTP API.  By default an in-process copy of the
service handles the requests; ``--server URL`` points the same commands at a
remote deployment instead.  Files (instances, models, assignments, SVG, CSV)
stay on the client side.

Exit codes: 0 success, 1 infeasible result or failed verification, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import os
import shlex
import subprocess
import sys
import tempfile
from pathlib import Path
from typing import Optional, Sequence

from . import benchmark
from .core import Instance
from .formulations import parse_assignment_text
from .instgen import InstanceFormatError, read_instance, render_instance_text

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2

LP_ROUNDTRIP_MAX_N = 15


class ClientError(Exception):
    """A request the service refused; carries the reported detail."""


class ServiceClient:
    """Thin HTTP client; in-process ASGI by default, remote when given a URL."""

    def __init__(self, base_url: Optional[str] = None) -> None:
        if base_url:
            import httpx

            self._http = httpx.Client(base_url=base_url, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                # starlette 1.3 deprecates its httpx-backed test client at import
                # time; it is still the supported sync in-process transport.
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service.app import create_app

            self._http = TestClient(create_app())

    def close(self) -> None:
        self._http.close()

    def _post(self, path: str, payload: dict):
        response = self._http.post(path, json=payload)
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            raise ClientError(f"{detail}")
        return response

    def generate(self, n: int, seed: int, count: int = 1) -> list[dict]:
        body = self._post(
            "/instances/generate", {"n": n, "seed": seed, "count": count}
        ).json()
        return body["instances"]

    def partition(self, values: list[int]) -> dict:
        return self._post("/instances/partition", {"values": values}).json()

    def solve(
        self,
        instance: dict,
        algo: str,
        eps: Optional[str] = None,
        budgets: Optional[list[int]] = None,
    ) -> dict:
        payload = {"instance": instance, "algo": algo}
        if eps is not None:
            payload["eps"] = eps
        if budgets is not None:
            payload["budgets"] = budgets
        return self._post("/solve", payload).json()

    def emit(self, instance: dict, kind: str, variant: str = "default") -> dict:
        return self._post(
            "/models/emit", {"instance": instance, "kind": kind, "variant": variant}
        ).json()

    def verify_sequence(self, instance: dict, sequence: str) -> dict:
        return self._post(
            "/verify/sequence", {"instance": instance, "sequence": sequence}
        ).json()

    def verify_assignment(
        self, instance: dict, kind: str, assignment: dict, variant: str = "default"
    ) -> dict:
        payload = {
            "instance": instance,
            "kind": kind,
            "variant": variant,
            "assignment": assignment,
        }
        return self._post("/verify/assignment", payload).json()

    def render(self, instance: dict, sequence: str, scale: Optional[float] = None) -> str:
        payload = {"instance": instance, "sequence": sequence}
        if scale is not None:
            payload["scale"] = scale
        return self._post("/render", payload).text


def _instance_payload_from_file(path: str) -> dict:
    inst = read_instance(path)
    return {"lengths": list(inst.original_lengths()), "strip_width": inst.strip_width}


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="ascii", newline="\n")


def cmd_gen(args, client: ServiceClient) -> int:
    out_dir = Path(args.out)
    if args.partition:
        try:
            values = [int(tok) for tok in args.partition.split(",") if tok.strip()]
        except ValueError:
            raise ClientError(f"--partition expects comma-separated integers, got {args.partition!r}")
        if not values:
            raise ClientError("--partition expects at least one value")
        body = client.partition(values)
        inst = body["instance"]
        text = _payload_text(inst)
        path = out_dir / f"partition_m{len(values)}.txt"
        _write_text(path, text)
        print(path)
        print(f"lambda = {body['lam']}")
        return EXIT_OK

    for item in client.generate(args.n, args.seed, args.count):
        inst = item["instance"]
        path = out_dir / f"instance_n{args.n}_seed{item['seed']}.txt"
        _write_text(path, _payload_text(inst))
        print(path)
    return EXIT_OK


def _payload_text(payload: dict) -> str:
    inst = Instance.from_lengths(payload["lengths"], payload["strip_width"])
    return render_instance_text(inst)


def cmd_solve(args, client: ServiceClient) -> int:
    instance = _instance_payload_from_file(args.instance)
    budgets = None
    if args.budgets:
        budgets = [int(tok) for tok in args.budgets.split(",") if tok.strip()]
    result = client.solve(instance, args.algo, eps=args.eps, budgets=budgets)
    print(f"height {result['height']}")
    if result.get("width") is not None:
        print(f"width {result['width']}")
    if result.get("shape") is not None:
        p, q = result["shape"]
        print(f"shape {p}x{q}")
    if result.get("sequence") is not None:
        print(f"sequence {result['sequence'] or '-'}")
    print(f"time_ms {result['elapsed_ms']:.3f}")
    return EXIT_OK


def cmd_emit(args, client: ServiceClient) -> int:
    instance = _instance_payload_from_file(args.instance)
    body = client.emit(instance, args.model, args.variant)
    if args.out:
        _write_text(Path(args.out), body["text"])
        print(args.out)
        print(f"variables {body['variable_count']}")
        print(f"constraints {body['constraint_count']}")
    else:
        sys.stdout.write(body["text"])
    return EXIT_OK


def cmd_verify(args, client: ServiceClient) -> int:
    instance = _instance_payload_from_file(args.instance)
    if args.sequence is not None:
        result = client.verify_sequence(instance, args.sequence)
        state = "feasible" if result["feasible"] else f"infeasible (b={result['strip_width']})"
        print(f"W={result['width']} H={result['height']} {state}")
        return EXIT_OK if result["feasible"] else EXIT_VERIFY

    text = Path(args.assignment).read_text(encoding="ascii")
    try:
        assignment = parse_assignment_text(text, source=args.assignment)
    except ValueError as exc:
        raise ClientError(str(exc))
    result = client.verify_assignment(instance, args.model, assignment, args.variant)
    if result["feasible"]:
        print(f"feasible objective={result['objective']}")
        return EXIT_OK
    print(f"infeasible objective={result['objective']} violated: " + " ".join(result["violated"]))
    return EXIT_VERIFY


def cmd_render(args, client: ServiceClient) -> int:
    instance = _instance_payload_from_file(args.instance)
    svg = client.render(instance, args.sequence, scale=args.scale)
    _write_text(Path(args.out), svg)
    print(args.out)
    return EXIT_OK


def _parse_eps_list(text: str) -> list[str]:
    eps = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not eps:
        raise ClientError("--eps expects a comma-separated list of rationals")
    return eps


def _lp_roundtrip(command: str, lp_text: str) -> float:
    """Run an external solver on an LP file and pull the objective it prints.

    The command receives the LP path as its final argument and must print the
    optimal objective as the last number on stdout.
    """
    with tempfile.NamedTemporaryFile("w", suffix=".lp", delete=False) as handle:
        handle.write(lp_text)
        path = handle.name
    try:
        proc = subprocess.run(
            shlex.split(command) + [path], capture_output=True, text=True, timeout=300
        )
    finally:
        os.unlink(path)
    if proc.returncode != 0:
        raise ClientError(f"lp-roundtrip solver failed: {proc.stderr.strip()[:200]}")
    numbers = []
    for tok in proc.stdout.replace(",", " ").split():
        try:
            numbers.append(float(tok))
        except ValueError:
            continue
    if not numbers:
        raise ClientError("lp-roundtrip solver printed no numeric objective")
    return numbers[-1]


def cmd_bench(args, client: ServiceClient) -> int:
    eps_list = _parse_eps_list(args.eps)
    header = ["n", "seed", "opt"]
    header += [f"fptas_{eps}" for eps in eps_list]
    header += ["dp_ms"] + [f"fptas_{eps}_ms" for eps in eps_list]

    rows = []
    roundtrips = 0
    for n in benchmark.SUITE_SIZES:
        for seed in benchmark.SUITE_SEEDS:
            item = client.generate(n, seed, 1)[0]
            payload = item["instance"]
            name = benchmark.suite_filename(n, seed)
            digest = benchmark.SUITE_SHA256.get(name)
            if digest is None:
                raise ClientError(f"no pinned digest for {name}")
            actual = hashlib.sha256(_payload_text(payload).encode("ascii")).hexdigest()
            if actual != digest:
                print(
                    f"benchmark suite mismatch for {name}: expected {digest}, got {actual}",
                    file=sys.stderr,
                )
                return EXIT_VERIFY

            dp = client.solve(payload, "dp")
            fp = [client.solve(payload, "fptas", eps=eps) for eps in eps_list]
            row = [n, seed, dp["height"]]
            row += [r["height"] for r in fp]
            row += [f"{dp['elapsed_ms']:.3f}"] + [f"{r['elapsed_ms']:.3f}" for r in fp]
            rows.append(row)

            if args.lp_roundtrip and n <= LP_ROUNDTRIP_MAX_N:
                # the sorted model is a plain ILP, the most portable of the three
                body = client.emit(payload, "sorted")
                found = _lp_roundtrip(args.lp_roundtrip, body["text"])
                if round(found) != dp["height"]:
                    print(
                        f"lp-roundtrip mismatch on {name}: solver {found}, dp {dp['height']}",
                        file=sys.stderr,
                    )
                    return EXIT_VERIFY
                roundtrips += 1

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    if args.out:
        _write_text(Path(args.out), buffer.getvalue())
        print(args.out)
    else:
        sys.stdout.write(buffer.getvalue())
    if args.lp_roundtrip:
        print(f"lp-roundtrip ok on {roundtrips} instances", file=sys.stderr)
    return EXIT_OK


def cmd_serve(args, _client: ServiceClient) -> int:
    import uvicorn

    uvicorn.run("cellpack.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cellpack",
        description="Pack squares into independent partition cells of a strip.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default runs the service in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate instance files")
    p_gen.add_argument("--n", type=int, default=None, help="number of squares")
    p_gen.add_argument("--seed", type=int, default=None, help="first seed")
    p_gen.add_argument("--count", type=int, default=1, help="instances for consecutive seeds")
    p_gen.add_argument("--partition", default=None, help="comma-separated values for the adversarial generator")
    p_gen.add_argument("--out", default=".", help="output directory")
    p_gen.set_defaults(handler=cmd_gen)

    p_solve = sub.add_parser("solve", help="solve an instance file")
    p_solve.add_argument("--algo", choices=("dp", "dp-lowmem", "fptas", "oracle", "kdim"), default="dp")
    p_solve.add_argument("--eps", default=None, help="exact rational like 1/2; required for fptas")
    p_solve.add_argument("--budgets", default=None, help="comma-separated capacities for kdim")
    p_solve.add_argument("instance", help="instance file")
    p_solve.set_defaults(handler=cmd_solve)

    p_emit = sub.add_parser("emit", help="emit a solver model file")
    p_emit.add_argument("--model", choices=("basic", "sorted", "rc"), required=True)
    p_emit.add_argument("--variant", choices=("default", "relaxed"), default="default")
    p_emit.add_argument("--out", default=None, help="output path; default prints to stdout")
    p_emit.add_argument("instance", help="instance file")
    p_emit.set_defaults(handler=cmd_emit)

    p_verify = sub.add_parser("verify", help="check a sequence or a model assignment")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--sequence", default=None, help="string over R/C")
    group.add_argument("--assignment", default=None, help="two-column 'name value' file")
    p_verify.add_argument("--model", choices=("basic", "sorted", "rc"), default="rc")
    p_verify.add_argument("--variant", choices=("default", "relaxed"), default="default")
    p_verify.add_argument("instance", help="instance file")
    p_verify.set_defaults(handler=cmd_verify)

    p_render = sub.add_parser("render", help="draw a packing as SVG")
    p_render.add_argument("--sequence", required=True, help="string over R/C")
    p_render.add_argument("--scale", type=float, default=None, help="pixels per length unit")
    p_render.add_argument("--out", required=True, help="output SVG path")
    p_render.add_argument("instance", help="instance file")
    p_render.set_defaults(handler=cmd_render)

    p_bench = sub.add_parser("bench", help="run the pinned 60-instance benchmark")
    p_bench.add_argument("--eps", default="0.1,0.5", help="comma-separated fptas epsilons")
    p_bench.add_argument("--out", default=None, help="CSV path; default prints to stdout")
    p_bench.add_argument(
        "--lp-roundtrip",
        default=None,
        help="external solver command; gets the LP path appended, must print the objective",
    )
    p_bench.set_defaults(handler=cmd_bench)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "gen" and not args.partition:
        if args.n is None or args.seed is None:
            parser.error("gen requires --n and --seed (or --partition)")
        if args.n < 1:
            parser.error(f"--n must be at least 1, got {args.n}")
        if args.count < 1:
            parser.error(f"--count must be at least 1, got {args.count}")
    if args.command == "solve" and args.algo == "fptas" and args.eps is None:
        parser.error("--eps is required for --algo fptas")

    client = None if args.command == "serve" else ServiceClient(args.server)
    try:
        return args.handler(args, client)
    except (ClientError, InstanceFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if client is not None:
            client.close()


if __name__ == "__main__":
    sys.exit(main())
