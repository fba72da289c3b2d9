"""Command-line front end. Every subcommand is a thin wrapper over the
library; artifacts go to files, summaries go to stdout as JSON.

Exit codes: 0 success, 1 validation/usage error, 2 backend or transport
failure. ``--config FILE`` loads key=value defaults (dotted keys select
subcommands, e.g. ``pairs.build.min-label-count = 2``); explicit flags
always win over the file, the file wins over built-in defaults.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Sequence

import click

from .corpus import (
    annotation_histogram,
    anonymize,
    audit_anonymization,
    read_corpus,
    write_corpus,
)
from .errors import ConcordError, ValidationError
from .gateway import (
    BackendDescriptor,
    BackendKind,
    dumps_predictions,
    loads_predictions,
    make_backend,
)
from .metrics import dumps_disagreements, extract_disagreements
from .metrics import evaluate as evaluate_metrics
from .pairs import (
    PairDataset,
    Split,
    SplitSpec,
    build_pairs,
    downsample_negatives,
    filter_hapaxes,
    read_pairs,
    split as split_pairs,
    write_pairs,
)
from .triage import (
    Verdict,
    action_from_dict,
    append_ledger,
    apply_revisions,
    next_round,
    parse_category,
    read_ledger,
    record_verdict,
    replay,
    round_report,
    train_backend,
    Revision,
    RoundMarker,
)


def _echo_json(payload) -> None:
    click.echo(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))


def _parse_scalar(raw: str):
    value = raw.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    low = value.lower()
    if low in ("true", "false"):
        return low == "true"
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            continue
    return value


def _load_config(path: str) -> dict:
    """key=value lines into a nested default map (dots select subcommands)."""
    tree: dict = {}
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        if not sep:
            raise ValidationError(f"config line {line_no}: expected key=value")
        node = tree
        parts = [p.strip().replace("-", "_") for p in key.strip().split(".")]
        for part in parts[:-1]:
            node = node.setdefault(part, {})
        node[parts[-1]] = _parse_scalar(value)
    return tree


def _parse_kv(pairs: Sequence[str]) -> dict:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ValidationError(f"expected key=value, got {item!r}")
        out[key.strip()] = _parse_scalar(value)
    return out


def _descriptor(backend: str | None, params: Sequence[str]) -> BackendDescriptor:
    if not backend:
        raise ValidationError(
            "no backend configured (use --backend or set CONCORD_BACKEND_URL)"
        )
    kv = {k: str(v) for k, v in _parse_kv(params).items()}
    if backend.startswith(("http://", "https://")):
        return BackendDescriptor(BackendKind.REMOTE, endpoint=backend, params=kv)
    try:
        kind = BackendKind(backend)
    except ValueError:
        raise ValidationError(
            f"unknown backend {backend!r} (expected a URL, 'oracle' or 'lexical')"
        ) from None
    return BackendDescriptor(kind, params=kv)


def _split_arg(value: str) -> Split | None:
    if value == "all":
        return None
    try:
        return Split(value)
    except ValueError:
        raise ValidationError(f"unknown split {value!r}") from None


def _spec_options(fn):
    fn = click.option("--seed", type=int, default=20, show_default=True)(fn)
    fn = click.option(
        "--fractions",
        default="0.68,0.05,0.27",
        show_default=True,
        help="train,val,test fractions",
    )(fn)
    fn = click.option("--no-stratify", is_flag=True, help="shuffle without stratifying by gold")(fn)
    fn = click.option(
        "--group-by-question",
        is_flag=True,
        help="partition questions instead of pairs; cross-partition pairs are dropped",
    )(fn)
    return fn


def _make_spec(fractions: str, seed: int, no_stratify: bool, group_by_question: bool) -> SplitSpec:
    try:
        parts = tuple(float(f) for f in fractions.split(","))
    except ValueError:
        raise ValidationError(f"bad fractions {fractions!r}") from None
    return SplitSpec(
        fractions=parts,
        seed=seed,
        stratified=not no_stratify,
        group_by_question=group_by_question,
    )


def _backend_options(fn):
    fn = click.option(
        "--backend",
        envvar="CONCORD_BACKEND_URL",
        default=None,
        help="backend URL, 'oracle' or 'lexical' [env: CONCORD_BACKEND_URL]",
    )(fn)
    fn = click.option(
        "--backend-param",
        multiple=True,
        help="backend parameter as key=value (e.g. theta=0.5, reference=corpus.jsonl)",
    )(fn)
    return fn


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def cli(ctx, config_path):
    """Paraphrase-pair dataset builder and annotation audit pipeline."""
    if config_path:
        ctx.default_map = _load_config(config_path)


@cli.command()
@click.option("--corpus", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write normalized corpus here")
def ingest(src, out):
    """Parse and validate a corpus file; optionally write it back normalized."""
    corpus = read_corpus(src)
    if out:
        write_corpus(corpus, out)
    histogram = annotation_histogram(corpus)
    _echo_json(
        {
            "version": corpus.version_id,
            "dialogs": len(corpus.dialogs),
            "turns": corpus.n_turns,
            "questions": len(corpus.questions),
            "labels": len(histogram),
            "out": out,
        }
    )


@cli.command(name="anonymize")
@click.option("--corpus", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--usernames", type=click.Path(exists=True, dir_okay=False), default=None, help="file with one username per line")
@click.option("--force", is_flag=True, help="replace even dictionary-colliding usernames")
@click.option("--audit-only", is_flag=True, help="only scan for suspicious replacement tokens")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None)
def anonymize_cmd(src, out, usernames, force, audit_only, report_path):
    """Replace usernames with placeholder tokens, or audit prior replacements."""
    corpus = read_corpus(src)
    if audit_only:
        suspects = audit_anonymization(corpus)
        _echo_json({"suspects": suspects, "n_suspects": len(suspects)})
        return
    if not usernames or not out:
        raise ValidationError("anonymize needs --usernames and --out (or --audit-only)")
    names = [n for n in Path(usernames).read_text(encoding="utf-8").splitlines() if n.strip()]
    revised, report = anonymize(corpus, names, force=force)
    write_corpus(revised, out)
    if report_path:
        Path(report_path).write_text(report.to_json(), encoding="utf-8")
    _echo_json(
        {
            "version": revised.version_id,
            "sites": len(report.replacements),
            "collisions": len(report.collisions),
            "forced": report.forced,
            "out": out,
        }
    )


@cli.group()
def pairs():
    """Build, re-split, and export paraphrase-pair datasets."""


@pairs.command(name="build")
@click.option("--corpus", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.option("--min-label-count", type=int, default=2, show_default=True)
@click.option("--balance", type=float, default=None, help="downsample negatives to this ratio per positive")
@_spec_options
def pairs_build(src, out, min_label_count, balance, fractions, seed, no_stratify, group_by_question):
    """Corpus to split pair TSV: filter rare labels, expand ordered pairs, partition."""
    corpus = read_corpus(src)
    questions = filter_hapaxes(corpus, min_label_count)
    dataset = build_pairs(questions)
    if balance is not None:
        dataset = downsample_negatives(dataset, balance, seed)
    dataset = split_pairs(dataset, _make_spec(fractions, seed, no_stratify, group_by_question))
    write_pairs(dataset, out)
    _echo_json({"out": out, **dataset.stats.to_dict()})


@pairs.command(name="split")
@click.option("--pairs", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@_spec_options
def pairs_split(src, out, fractions, seed, no_stratify, group_by_question):
    """Re-partition an existing pair TSV with a new seed or fractions."""
    dataset = read_pairs(src)
    fresh = PairDataset(dataset.pairs, {}, seed=seed)
    dataset = split_pairs(fresh, _make_spec(fractions, seed, no_stratify, group_by_question))
    write_pairs(dataset, out)
    _echo_json({"out": out, **dataset.stats.to_dict()})


@pairs.command(name="export")
@click.option("--pairs", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.option("--split", "which", default="all", show_default=True, type=click.Choice(["all", "train", "val", "test"]))
def pairs_export(src, out, which):
    """Copy a pair TSV, optionally keeping a single partition."""
    dataset = read_pairs(src)
    part = _split_arg(which)
    if part is not None:
        subset = dataset.slice(part)
        dataset = PairDataset(subset, {p.pair_id: part for p in subset}, seed=dataset.seed)
    write_pairs(dataset, out)
    _echo_json({"out": out, **dataset.stats.to_dict()})


@cli.command()
@click.option("--pairs", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--train-config", multiple=True, help="training option as key=value")
@click.option("--workdir", type=click.Path(file_okay=False), default=None)
@click.option("--timeout", type=float, default=3600.0, show_default=True)
@_backend_options
def train(src, train_config, workdir, timeout, backend, backend_param):
    """Train the backend on the TSV's train/val partitions and wait."""
    dataset = read_pairs(src)
    engine = make_backend(_descriptor(backend, backend_param))
    status = train_backend(
        engine, dataset, config=_parse_kv(train_config), workdir=workdir, timeout=timeout
    )
    _echo_json({"status": status.status, "detail": status.detail})


@cli.command()
@click.option("--pairs", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--split", "which", default="all", show_default=True, type=click.Choice(["all", "train", "val", "test"]))
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="write predictions JSONL here instead of stdout")
@_backend_options
def predict(src, which, out, backend, backend_param):
    """Score pairs with the backend; emit predictions JSONL."""
    dataset = read_pairs(src)
    subset = dataset.slice(_split_arg(which))
    records = make_backend(_descriptor(backend, backend_param)).predict(subset)
    text = dumps_predictions(records)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        _echo_json({"n": len(records), "out": out})
    else:
        click.echo(text, nl=False)


@cli.command()
@click.option("--preds", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--pairs", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--split", "which", default="test", show_default=True, type=click.Choice(["all", "train", "val", "test"]))
def evaluate(preds, src, which):
    """Score predictions against gold; metrics JSON on stdout."""
    dataset = read_pairs(src)
    gold = dataset.slice(_split_arg(which))
    records = loads_predictions(Path(preds).read_text(encoding="utf-8"))
    report = evaluate_metrics(records, gold)
    _echo_json({"split": which, "metrics": report.to_dict(), "rendered": report.rendered()})


@cli.command()
@click.option("--preds", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--pairs", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--corpus", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--split", "which", default="test", show_default=True, type=click.Choice(["all", "train", "val", "test"]))
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def disagreements(preds, src, corpus, which, out):
    """List model-vs-gold disagreements, most confident first, as JSONL."""
    dataset = read_pairs(src)
    gold = dataset.slice(_split_arg(which))
    records = loads_predictions(Path(preds).read_text(encoding="utf-8"))
    rows = extract_disagreements(records, gold, read_corpus(corpus))
    text = dumps_disagreements(rows)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        _echo_json({"n": len(rows), "out": out})
    else:
        click.echo(text, nl=False)


@cli.command()
@click.option("--pairs", "src", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--split", "which", default="test", show_default=True, type=click.Choice(["all", "train", "val", "test"]))
@_backend_options
def audit(src, which, backend, backend_param):
    """Predict and evaluate in one step, refusing circular setups."""
    descriptor = _descriptor(backend, backend_param)
    if descriptor.kind is BackendKind.ORACLE:
        raise ValidationError(
            "audit refuses the oracle backend: scoring gold labels against "
            "themselves cannot reveal annotation problems"
        )
    dataset = read_pairs(src)
    gold = dataset.slice(_split_arg(which))
    records = make_backend(descriptor).predict(gold)
    report = evaluate_metrics(records, gold)
    _echo_json({"split": which, "metrics": report.to_dict(), "rendered": report.rendered()})


def _round_options(fn):
    fn = click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True, dir_okay=False))(fn)
    fn = click.option("--ledger", "ledger_path", required=True, type=click.Path(dir_okay=False))(fn)
    fn = click.option("--min-label-count", type=int, default=2, show_default=True)(fn)
    fn = click.option("--eval-split", default="test", show_default=True, type=click.Choice(["all", "train", "val", "test"]))(fn)
    fn = _spec_options(fn)
    fn = _backend_options(fn)
    return fn


def _replayed_state(
    corpus_path, ledger_path, backend, backend_param,
    fractions, seed, no_stratify, group_by_question, min_label_count, eval_split,
):
    engine = make_backend(_descriptor(backend, backend_param))
    state = replay(
        read_corpus(corpus_path),
        read_ledger(ledger_path),
        engine,
        spec=_make_spec(fractions, seed, no_stratify, group_by_question),
        min_count=min_label_count,
        eval_split=_split_arg(eval_split),
    )
    return state, engine


@cli.group()
def verdict():
    """Record reviewer verdicts against the current round."""


@verdict.command(name="add")
@_round_options
@click.option("--pair", "pair_id", required=True)
@click.option("--category", required=True, help="prediction_error, annotation_error or prep_error")
@click.option("--note", default="")
@click.option("--actor", default="cli")
@click.option("--action", "action_json", default=None, help='revision as JSON, e.g. {"type":"merge_labels",...}')
def verdict_add(
    corpus_path, ledger_path, backend, backend_param, fractions, seed,
    no_stratify, group_by_question, min_label_count, eval_split,
    pair_id, category, note, actor, action_json,
):
    """Close one disagreement; appends to the ledger."""
    state, _ = _replayed_state(
        corpus_path, ledger_path, backend, backend_param,
        fractions, seed, no_stratify, group_by_question, min_label_count, eval_split,
    )
    action = None
    if action_json:
        try:
            action = action_from_dict(json.loads(action_json))
        except json.JSONDecodeError as exc:
            raise ValidationError(f"--action is not valid JSON: {exc.msg}") from None
    verdict_obj = Verdict(pair_id=pair_id, category=parse_category(category), note=note, actor=actor)
    state, entry = record_verdict(state, verdict_obj, action)
    append_ledger(ledger_path, entry)
    _echo_json(
        {
            "rev_id": entry.rev_id,
            "pair_id": entry.pair_id,
            "category": entry.category.value,
            "open": state.open_count,
            "closed": state.closed_count,
        }
    )


@cli.command(name="apply")
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--ledger", "ledger_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False))
def apply_cmd(corpus_path, ledger_path, out):
    """Apply ledgered revisions to a corpus, honoring round boundaries.

    Verdicts between round markers supersede per pair; each marker (and
    the end of the ledger) flushes the surviving revisions in rev order.
    """
    corpus = read_corpus(corpus_path)
    pending: dict = {}
    markers = revisions_applied = 0

    def flush(always: bool) -> None:
        nonlocal corpus, revisions_applied
        staged = [
            Revision(rev_id=e.rev_id, action=e.action, provenance=e.pair_id)
            for e in sorted(pending.values(), key=lambda e: e.rev_id)
            if e.action is not None
        ]
        if staged or always:
            corpus = apply_revisions(corpus, staged)
            revisions_applied += len(staged)
        pending.clear()

    for record in read_ledger(ledger_path):
        if isinstance(record, RoundMarker):
            markers += 1
            flush(always=True)
        else:
            pending[record.pair_id] = record
    flush(always=False)

    write_corpus(corpus, out)
    _echo_json(
        {
            "out": out,
            "version": corpus.version_id,
            "rounds_advanced": markers,
            "revisions_applied": revisions_applied,
        }
    )


@cli.group(name="round")
def round_group():
    """Advance or summarize review rounds."""


@round_group.command(name="next")
@_round_options
@click.option("--actor", default="cli")
@click.option("--no-retrain", is_flag=True, help="skip training when the round advances")
@click.option("--workdir", type=click.Path(file_okay=False), default=None)
def round_next(
    corpus_path, ledger_path, backend, backend_param, fractions, seed,
    no_stratify, group_by_question, min_label_count, eval_split,
    actor, no_retrain, workdir,
):
    """Close the round: apply revisions, retrain, reopen on the new corpus."""
    state, engine = _replayed_state(
        corpus_path, ledger_path, backend, backend_param,
        fractions, seed, no_stratify, group_by_question, min_label_count, eval_split,
    )
    state, marker = next_round(
        state, engine, actor=actor, train=not no_retrain, workdir=workdir
    )
    append_ledger(ledger_path, marker)
    _echo_json(round_report(state))


@cli.command()
@_round_options
def report(
    corpus_path, ledger_path, backend, backend_param, fractions, seed,
    no_stratify, group_by_question, min_label_count, eval_split,
):
    """Current round summary as JSON (replays the ledger)."""
    state, _ = _replayed_state(
        corpus_path, ledger_path, backend, backend_param,
        fractions, seed, no_stratify, group_by_question, min_label_count, eval_split,
    )
    _echo_json(round_report(state))


@cli.group()
def triage():
    """Interactive review service."""


@triage.command(name="serve")
@_round_options
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8337, show_default=True)
@click.option("--token", default=None, help="require this bearer token on /api")
@click.option("--ui", "ui_dir", type=click.Path(file_okay=False, exists=True), default=None)
@click.option("--no-retrain", is_flag=True, help="skip training when rounds advance")
@click.option("--workdir", type=click.Path(file_okay=False), default=None)
def triage_serve(
    corpus_path, ledger_path, backend, backend_param, fractions, seed,
    no_stratify, group_by_question, min_label_count, eval_split,
    host, port, token, ui_dir, no_retrain, workdir,
):
    """Serve the REST review API (and optionally a UI) over flat-file state."""
    import uvicorn

    from .service import StateStore, build_app

    store = StateStore(
        corpus_path,
        ledger_path,
        make_backend(_descriptor(backend, backend_param)),
        spec=_make_spec(fractions, seed, no_stratify, group_by_question),
        min_count=min_label_count,
        eval_split=_split_arg(eval_split),
        train_on_advance=not no_retrain,
        workdir=workdir,
    )
    app = build_app(store, auth_token=token, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch argv and return the exit code instead of raising SystemExit."""
    try:
        cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="concord",
            standalone_mode=False,
        )
        return 0
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.exceptions.ClickException as exc:
        exc.show()
        return 1
    except ConcordError as exc:
        click.echo(f"error: {exc}", err=True)
        return exc.exit_code
    except SystemExit as exc:  # click may still exit on --help
        code = exc.code
        return int(code) if code else 0


def main() -> None:  # pragma: no cover - console entry point
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
