"""Batch command-line front end.

Every command is a thin client of the HTTP service: by default it talks to
an in-process application instance (no socket, same process), while
``--server URL`` (or CHERNCALC_SERVER) targets a running one.  JSON output
is the service response body byte for byte; ``--format text`` renders the
same data for reading.  Exit codes: 0 success, 1 verification failure,
2 usage or input errors.
"""

from __future__ import annotations

import asyncio
import json
import sys
from dataclasses import dataclass
from typing import Callable, NoReturn

import click
import httpx
from click.core import ParameterSource

from .bigpoly import render_terms
from .partitions import parse_partition


@dataclass
class Config:
    degree: int
    degree_explicit: bool
    fmt: str
    seed: int
    server: str | None


def _fail(message: str) -> NoReturn:
    text = " ".join(str(message).split()) or "invalid input"
    click.echo(f"error: {text}", err=True)
    sys.exit(2)


def _parse_class(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(f"malformed class JSON: {exc}")
    if not isinstance(obj, dict) or not set(obj) <= {"pos", "neg"}:
        _fail('class JSON must be an object {"pos": [[...]], "neg": [[...]]}')
    return obj


def _parts(text: str) -> list[int]:
    try:
        return list(parse_partition(text))
    except ValueError as exc:
        _fail(str(exc))


def _error_detail(resp: httpx.Response) -> str:
    try:
        detail = resp.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, str):
        return detail
    if isinstance(detail, list) and detail:
        first = detail[0]
        loc = ".".join(str(x) for x in first.get("loc", ()) if x != "body")
        msg = first.get("msg", "invalid input")
        return f"{loc}: {msg}" if loc else msg
    return f"service returned status {resp.status_code}"


def _post(cfg: Config, path: str, payload: dict) -> httpx.Response:
    if cfg.server:
        try:
            resp = httpx.post(
                f"{cfg.server.rstrip('/')}{path}", json=payload, timeout=300.0
            )
        except httpx.HTTPError as exc:
            _fail(f"cannot reach {cfg.server}: {exc}")
    else:
        from .service.app import app

        async def call() -> httpx.Response:
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://cherncalc"
            ) as client:
                return await client.post(path, json=payload)

        resp = asyncio.run(call())
    if resp.status_code >= 400:
        _fail(_error_detail(resp))
    return resp


# -- text renderers ------------------------------------------------------------


def _poly_text(obj: dict) -> str:
    return render_terms(
        obj["vars"], [(t["exps"], int(t["coeff"])) for t in obj["terms"]]
    )


def _series_text(obj: dict) -> str:
    return "\n".join(
        f"t^{i}: {_poly_text(c)}" for i, c in enumerate(obj["coefficients"])
    )


def _class_text(obj: dict) -> str:
    def side(rows: list) -> str:
        if not rows:
            return "(none)"
        return "  ".join("[" + ",".join(str(c) for c in vec) + "]" for vec in rows)

    return f"pos: {side(obj['pos'])}\nneg: {side(obj['neg'])}"


def _reports_text(reports: list) -> str:
    lines = [
        f"{'PASS' if r['pass'] else 'FAIL'} {r['case']} "
        f"{json.dumps(r['inputs'], sort_keys=True)}"
        for r in reports
    ]
    good = sum(1 for r in reports if r["pass"])
    lines.append(f"{good}/{len(reports)} checks passed")
    return "\n".join(lines)


def _presentation_text(obj: dict) -> str:
    lines = [f"generators: {', '.join(obj['generators'])}", "relations:"]
    lines.extend(f"  {_poly_text(f)}" for f in obj["relations"])
    lines.append(f"rank: {obj['rank']}")
    checks = " ".join(f"{k}={v}" for k, v in obj["checks"].items())
    lines.append(f"checks: {checks}")
    return "\n".join(lines)


def _emit(cfg: Config, resp: httpx.Response, renderer: Callable) -> None:
    if cfg.fmt == "json":
        click.echo(resp.text)
    else:
        click.echo(renderer(resp.json()))


# -- command tree ------------------------------------------------------------


@click.group()
@click.option(
    "--degree",
    type=click.IntRange(min=1),
    default=8,
    show_default=True,
    help="Series truncation degree.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "text"]),
    default="json",
    show_default=True,
    envvar="CHERNCALC_FORMAT",
    help="Output rendering.",
)
@click.option(
    "--seed",
    type=int,
    default=0,
    show_default=True,
    help="Seed for randomized verification inputs.",
)
@click.option(
    "--server",
    default=None,
    metavar="URL",
    help="Base URL of a running service; default runs in-process.",
)
@click.pass_context
def cli(ctx: click.Context, degree: int, fmt: str, seed: int, server: str | None) -> None:
    """Exact Chern-class calculus on split virtual bundles."""
    source = ctx.get_parameter_source("degree")
    ctx.obj = Config(
        degree=degree,
        degree_explicit=source is not None and source != ParameterSource.DEFAULT,
        fmt=fmt,
        seed=seed,
        server=server,
    )


_CLASS_HELP = 'Class JSON, e.g. {"pos":[[1,0]],"neg":[[0,1]]}.'


@cli.group()
def chern() -> None:
    """Chern series and operations on classes."""


@chern.command("total")
@click.option("--class", "kclass", required=True, help=_CLASS_HELP)
@click.option("--roots", type=int, default=None, help="Ambient root count.")
@click.pass_obj
def chern_total(cfg: Config, kclass: str, roots: int | None) -> None:
    """Total Chern series of a class."""
    payload: dict = {"x": _parse_class(kclass), "degree": cfg.degree}
    if roots is not None:
        payload["roots"] = roots
    _emit(cfg, _post(cfg, "/chern/total", payload), _series_text)


@chern.command("tensor")
@click.option("--x", "x", required=True, help=_CLASS_HELP)
@click.option("--y", "y", required=True, help=_CLASS_HELP)
@click.pass_obj
def chern_tensor(cfg: Config, x: str, y: str) -> None:
    """Tensor product of two classes."""
    payload = {"x": _parse_class(x), "y": _parse_class(y)}
    _emit(cfg, _post(cfg, "/chern/tensor", payload), _class_text)


@chern.command("lambda")
@click.argument("k", type=click.IntRange(min=0))
@click.option("--class", "kclass", required=True, help=_CLASS_HELP)
@click.pass_obj
def chern_lambda(cfg: Config, k: int, kclass: str) -> None:
    """K-th exterior power of a class."""
    payload = {"k": k, "x": _parse_class(kclass)}
    _emit(cfg, _post(cfg, "/chern/lambda", payload), _class_text)


@chern.command("dual")
@click.option("--class", "kclass", required=True, help=_CLASS_HELP)
@click.pass_obj
def chern_dual(cfg: Config, kclass: str) -> None:
    """Dual class (every line inverted)."""
    _emit(cfg, _post(cfg, "/chern/dual", {"x": _parse_class(kclass)}), _class_text)


@cli.command("universal-poly")
@click.option("--n", type=click.IntRange(min=1), required=True, help="Rank of the first factor.")
@click.option("--m", type=click.IntRange(min=1), required=True, help="Rank of the second factor.")
@click.option("--i", type=click.IntRange(min=1), required=True, help="Chern degree.")
@click.pass_obj
def universal_poly(cfg: Config, n: int, m: int, i: int) -> None:
    """Universal polynomial for c_i of a rank-n by rank-m tensor product."""
    _emit(cfg, _post(cfg, "/universal-poly", {"n": n, "m": m, "i": i}), _poly_text)


@cli.command("lr")
@click.option("--mu", required=True, help="Outer partition, e.g. 2,1.")
@click.option("--eps", default="", help="First factor partition.")
@click.option("--nu", default="", help="Second factor partition.")
@click.pass_obj
def lr(cfg: Config, mu: str, eps: str, nu: str) -> None:
    """Littlewood-Richardson coefficient of mu in eps * nu."""
    payload = {"mu": _parts(mu), "eps": _parts(eps), "nu": _parts(nu)}
    resp = _post(cfg, "/lr", payload)
    _emit(cfg, resp, lambda obj: f"coefficient: {obj['coefficient']}")


@cli.command("schur")
@click.option("--mu", required=True, help="Partition indexing the operation.")
@click.option("--class", "kclass", required=True, help=_CLASS_HELP)
@click.pass_obj
def schur(cfg: Config, mu: str, kclass: str) -> None:
    """Schur operation S^mu applied to a class."""
    payload = {"mu": _parts(mu), "x": _parse_class(kclass)}
    _emit(cfg, _post(cfg, "/schur", payload), _class_text)


@cli.command("gamma-degree")
@click.option("--class", "kclass", required=True, help=_CLASS_HELP)
@click.option("--roots", type=int, default=None, help="Ambient root count.")
@click.pass_obj
def gamma_degree(cfg: Config, kclass: str, roots: int | None) -> None:
    """Filtration degree of the rank-zero part of a class."""
    payload: dict = {"x": _parse_class(kclass), "degree": cfg.degree}
    if roots is not None:
        payload["roots"] = roots
    resp = _post(cfg, "/gamma/degree", payload)
    _emit(cfg, resp, lambda obj: f"filtration degree: {obj['degree']}")


@cli.command("gamma-series")
@click.option("--class", "kclass", required=True, help=_CLASS_HELP)
@click.option("--roots", type=int, default=None, help="Ambient root count.")
@click.pass_obj
def gamma_series(cfg: Config, kclass: str, roots: int | None) -> None:
    """Gamma series of a class in the shifted line generators."""
    payload: dict = {"x": _parse_class(kclass), "degree": cfg.degree}
    if roots is not None:
        payload["roots"] = roots
    _emit(cfg, _post(cfg, "/gamma/series", payload), _series_text)


@cli.group()
def grass() -> None:
    """Grassmannian presentation and its Schur-basis model."""


@grass.command("present")
@click.argument("m", type=click.IntRange(min=1))
@click.argument("n", type=click.IntRange(min=2))
@click.pass_obj
def grass_present(cfg: Config, m: int, n: int) -> None:
    """Generators, relations and model checks for Gr(m, n)."""
    resp = _post(cfg, "/grass/present", {"m": m, "n": n})
    _emit(cfg, resp, _presentation_text)
    if not all(resp.json()["checks"].values()):
        sys.exit(1)


@grass.command("rank")
@click.argument("m", type=click.IntRange(min=1))
@click.argument("n", type=click.IntRange(min=2))
@click.pass_obj
def grass_rank(cfg: Config, m: int, n: int) -> None:
    """Z-rank of the Schur-basis model of Gr(m, n)."""
    resp = _post(cfg, "/grass/rank", {"m": m, "n": n})
    _emit(cfg, resp, lambda obj: f"rank: {obj['rank']}")


@cli.group()
def grr() -> None:
    """Verification harness for the factorial comparison maps."""


@grr.command("verify")
@click.option(
    "--max-i",
    "max_i",
    type=click.IntRange(1, 6),
    default=5,
    show_default=True,
    help="Largest degree to verify.",
)
@click.pass_obj
def grr_verify(cfg: Config, max_i: int) -> None:
    """Run the vanishing, factor and composition checks."""
    payload: dict = {"max_i": max_i, "seed": cfg.seed}
    if cfg.degree_explicit:
        payload["degree"] = cfg.degree
    resp = _post(cfg, "/grr/verify", payload)
    _emit(cfg, resp, _reports_text)
    if not all(r["pass"] for r in resp.json()):
        sys.exit(1)


@cli.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=click.IntRange(1, 65535), default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("cherncalc.service.app:app", host=host, port=port)


def main() -> None:
    cli(auto_envvar_prefix="CHERNCALC")


if __name__ == "__main__":
    main()
