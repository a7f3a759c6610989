"""Input documents, provenance and deterministic report serialization."""

import hashlib
import json
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from bourbaki_degree import __version__
from bourbaki_degree.core.errors import UsageError
from bourbaki_degree.core.models import InputDocument, Provenance, ReportDocument
from bourbaki_degree.resolution.betti import BettiTable


def load_document(path: str | Path) -> InputDocument:
    """Read and validate a JSON input document; ``-`` reads stdin."""
    try:
        text = Path("/dev/stdin").read_text() if str(path) == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return InputDocument.model_validate_json(text)
    except ValidationError as exc:
        raise UsageError(f"invalid input document {path}: {exc}") from exc


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def input_hash(document: InputDocument) -> str:
    """sha256 over the canonical JSON of the parsed document."""
    payload = canonical_json(document.model_dump(mode="json", exclude_none=True))
    return hashlib.sha256(payload.encode()).hexdigest()


def provenance(document: InputDocument, field: str, seed: int) -> Provenance:
    return Provenance(
        engine_version=__version__,
        input_hash=input_hash(document),
        field=field,
        seed=seed,
    )


def dump(model: BaseModel | list[BaseModel]) -> str:
    """JSON with aliases and sorted keys so identical inputs give identical bytes."""
    if isinstance(model, list):
        data: Any = [m.model_dump(mode="json", by_alias=True) for m in model]
    else:
        data = model.model_dump(mode="json", by_alias=True)
    return json.dumps(data, sort_keys=True)


def write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _aligned(pairs: list[tuple[str, str]]) -> list[str]:
    width = max((len(k) for k, _ in pairs), default=0)
    return [f"{k.ljust(width)}  {v}" for k, v in pairs]


def render_text(document: ReportDocument) -> str:
    """Aligned human-readable summary of a report document."""
    r = document.report
    pairs = [
        ("field", r.field),
        ("n", str(r.n)),
        ("rows", " | ".join(", ".join(row) for row in r.rows)),
        ("d1, d2, d", f"{r.d1}, {r.d2}, {r.d}"),
        ("e", str(r.e)),
        ("e0, e1", f"{r.e0}, {r.e1} (raw {r.e1_raw})"),
        ("q, l, s", f"{r.q}, {r.ell}, {r.s}"),
        ("Bour", str(r.bour) if r.bour is not None else "- (compressible)"),
        ("dim, depth, pd of Q", f"{r.dim_q}, {r.depth_q}, {r.pd_q}"),
        ("shape", r.shape.value if r.shape else "-"),
        ("Hilb(Q)", r.series_q.text),
        ("Hilb(Q) twisted", r.series_q_twisted.text),
        ("Hilbert polynomial", r.hilbert_polynomial_q),
        ("bounds ok", str(r.bounds_ok)),
    ]
    if r.betti_q:
        pairs.append(("Betti(Q)", BettiTable.from_models(r.betti_q).render()))
    if r.bourbaki_ideal is not None:
        pairs.append(("Hilb poly of R/I", r.bourbaki_ideal.hilbert_polynomial))
    if document.equigenerated is not None:
        eq = document.equigenerated
        pairs += [
            ("deg(R/J)", str(eq.deg_rj)),
            ("tau", str(eq.tau) if eq.tau is not None else "-"),
            ("value classes", ", ".join(c.value for c in eq.value_classes) or "-"),
            ("identity ok", str(eq.identity_ok)),
        ]
    if document.row_wise is not None:
        rw = document.row_wise
        pairs += [
            ("e_f, e_g", f"{rw.e_f}, {rw.e_g}"),
            ("deg(R/I_f), deg(R/I_g)", f"{rw.deg_ri_f}, {rw.deg_ri_g}"),
        ]
    if document.distribution is not None:
        pairs.append(("regular sequence", str(document.distribution.regular_sequence)))
    if document.oracle is not None:
        pairs.append(("oracle agrees", str(all(row.agree for row in document.oracle))))
    if document.comparison is not None:
        pairs.append((f"vs {document.comparison.field}", "; ".join(document.comparison.differences) or "identical"))
    return "\n".join(_aligned(pairs))
