"""Kronecker-Weierstrass normal forms of 2x4 linear matrices with their known invariants."""

from functools import lru_cache

from bourbaki_degree.core.config import get_settings
from bourbaki_degree.core.models import (
    BlockKind,
    BlockSpec,
    CatalogEntry,
    ExpectedInvariants,
    KWSpec,
    ShapeTag,
)
from bourbaki_degree.resolution.betti import BettiTable
from bourbaki_degree.resolution.shapes import buchsbaum_rim_table, free_table, nearly_free_table

# Linear matrices: d1 = d2 = 1.
D1 = D2 = 1


def D(m: int) -> BlockSpec:
    return BlockSpec(kind=BlockKind.NILPOTENT, size=m)


def J(m: int, parameter: int) -> BlockSpec:
    return BlockSpec(kind=BlockKind.JORDAN, size=m, parameter=parameter)


def B(m: int) -> BlockSpec:
    return BlockSpec(kind=BlockKind.SCROLL, size=m)


def _spec(name: str, *blocks: BlockSpec, pattern: str = "") -> KWSpec:
    return KWSpec(name=name, blocks=tuple(blocks), pattern=pattern)


def _buchsbaum_rim() -> ExpectedInvariants:
    return ExpectedInvariants(
        bour=3,
        e=2,
        e0=0,
        e1=0,
        shape=ShapeTag.BUCHSBAUM_RIM,
        betti=buchsbaum_rim_table(D1, D2).to_models(),
        source="buchsbaum-rim",
    )


def _free() -> ExpectedInvariants:
    return ExpectedInvariants(
        bour=0,
        e=1,
        e0=0,
        e1=2,
        shape=ShapeTag.FREE,
        betti=free_table(D1, D2, 1, 0).to_models(),
        source="free",
    )


def _nearly_free(codim: int) -> ExpectedInvariants:
    e0, e1 = (0, 1) if codim == 2 else (1, -1)
    return ExpectedInvariants(
        bour=1,
        e=1,
        e0=e0,
        e1=e1,
        shape=ShapeTag.NEARLY_FREE,
        betti=nearly_free_table(D1, D2, 1, e0).to_models(),
        source=f"nearly-free-codim-{codim}",
    )


def _bourbaki_two() -> ExpectedInvariants:
    # 0 -> R(-4) -> R^4(-3) -> R^5(-2) -> R^4 -> R^2(1)
    betti = BettiTable.from_shifts([(-1, -1), (0,) * 4, (2,) * 5, (3,) * 4, (4,)])
    return ExpectedInvariants(
        bour=2, e=2, e0=0, e1=1, shape=ShapeTag.OTHER, betti=betti.to_models(), source="bour-2"
    )


@lru_cache
def catalog() -> tuple[CatalogEntry, ...]:
    """Every normal form, once per parameter coincidence pattern."""
    settings = get_settings()
    lam, mu, rho = settings.kw_lambda, settings.kw_mu, settings.kw_rho
    fourth = max(lam, mu, rho) + 2

    br = [
        _spec("B4", B(4)),
        _spec("D3", D(3)),
        _spec("J4", J(4, lam), pattern="l"),
        _spec("J3B1", J(3, lam), B(1), pattern="l"),
        _spec("B3J1", B(3), J(1, mu), pattern="m"),
        _spec("B3B1", B(3), B(1)),
        _spec("B2B2", B(2), B(2)),
        _spec("J2B2", J(2, lam), B(2), pattern="l"),
        _spec("B2B1B1", B(2), B(1), B(1)),
        _spec("B2B1J1", B(2), B(1), J(1, lam), pattern="l"),
        _spec("J2B1B1", J(2, lam), B(1), B(1), pattern="l"),
        _spec("B1B1B1B1", B(1), B(1), B(1), B(1)),
        _spec("J3J1-distinct", J(3, lam), J(1, mu), pattern="l,m"),
        _spec("J2J2-distinct", J(2, lam), J(2, mu), pattern="l,m"),
        _spec("B2J1J1-distinct", B(2), J(1, lam), J(1, mu), pattern="l,m"),
        _spec("J2B1J1-distinct", J(2, lam), B(1), J(1, mu), pattern="l,m"),
        _spec("J2J1J1-distinct", J(2, lam), J(1, mu), J(1, rho), pattern="l,m,r"),
        _spec(
            "J1J1J1J1-distinct",
            J(1, lam),
            J(1, mu),
            J(1, rho),
            J(1, fourth),
            pattern="a,b,c,d",
        ),
    ]
    free = [
        _spec("D1J2", D(1), J(2, lam), pattern="l"),
        _spec("D1B2", D(1), B(2)),
        _spec("J2J2-equal", J(2, lam), J(2, lam), pattern="l,l"),
        _spec("D1D1", D(1), D(1)),
        _spec("D1B1B1", D(1), B(1), B(1)),
        _spec("D1B1J1", D(1), B(1), J(1, lam), pattern="l"),
        _spec("D1J1J1-distinct", D(1), J(1, mu), J(1, lam), pattern="m,l"),
        _spec("J1J1J1J1-pairs", J(1, lam), J(1, lam), J(1, mu), J(1, mu), pattern="l,l,m,m"),
    ]
    codim_two = [
        _spec("D2J1", D(2), J(1, lam), pattern="l"),
        _spec("J3J1-equal", J(3, lam), J(1, lam), pattern="l,l"),
        _spec("B2J1J1-zero", B(2), J(1, 0), J(1, 0), pattern="0,0"),
        _spec("J2B1J1-equal", J(2, lam), B(1), J(1, lam), pattern="l,l"),
        _spec("J2J1J1-pair", J(2, lam), J(1, mu), J(1, mu), pattern="l,m,m"),
        _spec(
            "J1J1J1J1-one-pair",
            J(1, lam),
            J(1, lam),
            J(1, mu),
            J(1, rho),
            pattern="l,l,m,r",
        ),
    ]
    codim_one = [
        _spec("D1J1J1-equal", D(1), J(1, lam), J(1, lam), pattern="l,l"),
        _spec("J1J1J1J1-triple", J(1, lam), J(1, lam), J(1, lam), J(1, mu), pattern="l,l,l,m"),
        _spec("J2J1J1-equal", J(2, lam), J(1, lam), J(1, lam), pattern="l,l,l"),
    ]

    entries = [CatalogEntry(spec=s, expected=_buchsbaum_rim()) for s in br]
    entries += [
        CatalogEntry(
            spec=s,
            expected=_free(),
            note="listed as D1|D2, which has five columns" if s.name == "D1D1" else None,
        )
        for s in free
    ]
    entries += [CatalogEntry(spec=s, expected=_nearly_free(2)) for s in codim_two]
    entries += [
        CatalogEntry(
            spec=s,
            expected=_nearly_free(1),
            note=(
                "grouped with the codimension-two forms, but its minors share the factor y1"
                if s.name == "J2J1J1-equal"
                else None
            ),
        )
        for s in codim_one
    ]
    entries.append(CatalogEntry(spec=_spec("D2B1", D(2), B(1)), expected=_bourbaki_two()))
    return tuple(entries)


def find(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.spec.name == name:
            return entry
    raise KeyError(name)
