"""Blind two-experimentalist protocol.

One party secretly prepares a two-particle system with one member of a pair
of spectrally identical theories; the other identifies the pair from the
spectrum, calibrates a yes/no projector (the first reading is postulated to
be the ordinary one) and then measures the discriminating eigenstate.
"""

from __future__ import annotations

import functools
import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .chirality import PAIRS, Pair, discriminate, embed_observable, measure, parse_level
from .gmatrix import OutOfRegime, collision_set
from .multiparticle import SpectrumFingerprint, all_energies, fingerprint, space
from .poly import PolyScalar, parse_poly

__all__ = [
    "TrialConfig",
    "Report",
    "GedankenError",
    "CollisionAtLambda",
    "UnknownFingerprint",
    "ORDINARY",
    "COLORED",
    "INCONCLUSIVE",
    "LEVELS",
    "INDISTINGUISHABLE_PAIR",
    "lcg_next",
    "pick_hidden",
    "identify_pair",
    "run_blind_test",
    "emit_report",
    "parse_report",
]

ORDINARY, COLORED, INCONCLUSIVE = "Ordinary", "Colored", "Inconclusive"
LEVELS = (parse_poly("l+2"), parse_poly("2l+1"))
_L_PLUS_1, _L_PLUS_2 = parse_poly("l+1"), LEVELS[0]
INDISTINGUISHABLE_PAIR = "fLS_sub/pCLS_sub"

# Numerical Recipes LCG
LCG_A, LCG_C, LCG_M = 1664525, 1013904223, 2**32


class GedankenError(ValueError):
    pass


class CollisionAtLambda(GedankenError):
    pass


class UnknownFingerprint(GedankenError):
    pass


def lcg_next(state: int) -> int:
    return (LCG_A * state + LCG_C) % LCG_M


def pick_hidden(seed: int, pair: Pair) -> str:
    """Member of the pair chosen by one LCG step from ``seed``."""
    x = lcg_next(seed % LCG_M)
    members = pair.members
    return members[(x >> 16) % len(members)]


@dataclass(frozen=True)
class TrialConfig:
    seed: int
    pair: str
    trials: int = 1
    lam: Fraction | None = None
    level: PolyScalar = LEVELS[0]

    def __post_init__(self):
        if self.pair not in PAIRS:
            raise GedankenError(f"unknown pair {self.pair!r}; choose from {tuple(PAIRS)}")
        if self.trials < 1:
            raise GedankenError("trials must be at least 1")
        level = parse_level(self.level)
        if level not in LEVELS:
            raise GedankenError(f"level must be one of {', '.join(map(str, LEVELS))}")
        object.__setattr__(self, "level", level)
        if self.lam is not None:
            lam = Fraction(self.lam)
            object.__setattr__(self, "lam", lam)
            if lam in collision_set(all_energies()):
                raise CollisionAtLambda(
                    f"l = {lam} makes distinct energy levels coincide; pick another value"
                )
            if lam <= 1:
                warnings.warn(f"l = {lam} is outside the regime l > 1", OutOfRegime, stacklevel=3)


@dataclass(frozen=True)
class Report:
    seed: int
    pair: str
    hidden: str
    fingerprint: SpectrumFingerprint
    identified_pair: str
    discriminating_level: PolyScalar | None
    calibration_outcome: int | None
    trial_outcomes: tuple[int, ...]
    verdict: str
    correct: bool
    lam: Fraction | None = None
    hidden_rays: tuple[str, ...] = field(default=())


@functools.lru_cache(maxsize=None)
def _known_fingerprints() -> dict[SpectrumFingerprint, str]:
    out = {}
    for p in PAIRS.values():
        for label in (p.ordinary, p.colored):
            out[fingerprint(space(label))] = p.name
    return out


def identify_pair(fp: SpectrumFingerprint) -> str:
    """Pair label read off the spectrum.

    E=2 separates the algebra pairs from the superalgebra ones (two quanta in
    one mode are Pauli-blocked in the latter). Among algebra pairs the
    multiplicity of l+1 decides min (2) vs sub (1); among superalgebra pairs
    the presence of E=l+2 decides min vs sub.
    """
    if 2 in fp:
        name = "LA_min/CLA_min" if fp.multiplicity(_L_PLUS_1) == 2 else "fCLA_sub/pLA_sub"
    else:
        name = "LS_min/CLS_min" if _L_PLUS_2 in fp else "fLS_sub/pCLS_sub"
    if _known_fingerprints().get(fp) != name:
        raise UnknownFingerprint(f"spectrum {fp} matches no two-particle space")
    return name


def _statistics(pair: Pair, label: str) -> str:
    return ORDINARY if label in pair.ordinary_algebras else COLORED


def run_blind_test(cfg: TrialConfig) -> Report:
    pair = PAIRS[cfg.pair]
    hidden = pick_hidden(cfg.seed, pair)
    hs = space(hidden)
    fp = fingerprint(hs)
    if cfg.lam is not None:
        values = {e(cfg.lam) for e in fp.energies()}
        assert len(values) == len(fp.entries), "evaluated spectrum lost a level"
    name = identify_pair(fp)
    assert name == pair.name
    base = dict(
        seed=cfg.seed,
        pair=pair.name,
        hidden=hidden,
        fingerprint=fp,
        identified_pair=name,
        lam=cfg.lam,
    )
    if name == INDISTINGUISHABLE_PAIR:
        return Report(
            **base,
            discriminating_level=None,
            calibration_outcome=None,
            trial_outcomes=(),
            verdict=INCONCLUSIVE,
            correct=True,
        )

    ordinary = space(pair.ordinary).rays(cfg.level)
    colored = space(pair.colored).rays(cfg.level)
    assert len(ordinary) == len(colored) == 1
    verdict_pp = discriminate(ordinary[0], colored[0])
    observables = [embed_observable(verdict_pp.p_plus), embed_observable(verdict_pp.p_minus)]
    # calibration: the apparatus reading 1 on the ordinary state is the one kept
    obs = next(o for o in observables if measure(ordinary[0], o) == 1)
    calibration = measure(ordinary[0], obs)

    (state,) = hs.rays(cfg.level)
    outcomes = tuple(measure(state, obs) for _ in range(cfg.trials))
    if all(x == 1 for x in outcomes):
        verdict = ORDINARY
    elif all(x == 0 for x in outcomes):
        verdict = COLORED
    else:
        verdict = INCONCLUSIVE
    return Report(
        **base,
        discriminating_level=cfg.level,
        calibration_outcome=calibration,
        trial_outcomes=outcomes,
        verdict=verdict,
        correct=verdict == _statistics(pair, hidden),
        hidden_rays=(str(state),),
    )


def _to_dict(r: Report) -> dict:
    return {
        "seed": r.seed,
        "pair": r.pair,
        "hidden": r.hidden,
        "lambda": None if r.lam is None else str(r.lam),
        "fingerprint": {str(e): m for e, m in r.fingerprint.entries},
        "identified_pair": r.identified_pair,
        "discriminating_level": None if r.discriminating_level is None else str(r.discriminating_level),
        "measured_state": list(r.hidden_rays),
        "calibration_outcome": r.calibration_outcome,
        "trial_outcomes": list(r.trial_outcomes),
        "verdict": r.verdict,
        "correct": r.correct,
    }


def emit_report(r: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(_to_dict(r), indent=2) + "\n"
    if fmt != "text":
        raise GedankenError(f"unknown format {fmt!r}")
    lines = [
        f"seed: {r.seed}",
        f"pair: {r.pair}",
        f"lambda: {'formal' if r.lam is None else r.lam}",
        "spectrum:",
        "  energy      mult" + ("  value" if r.lam is not None else ""),
    ]
    for e, m in r.fingerprint.entries:
        extra = f"  {e(r.lam)}" if r.lam is not None else ""
        lines.append(f"  {str(e):<10}  {m:>4}{extra}")
    lines.append(f"identified pair: {r.identified_pair}")
    if r.discriminating_level is not None:
        lines.append(f"discriminating level: E={r.discriminating_level}")
        lines.append(f"measured state: {', '.join(r.hidden_rays)}")
        lines.append(f"calibration outcome: {r.calibration_outcome}")
        lines.append(f"trial outcomes: {' '.join(map(str, r.trial_outcomes))}")
    lines.append(f"hidden: {r.hidden}")
    lines.append(f"verdict: {r.verdict} ({'correct' if r.correct else 'WRONG'})")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> Report:
    """Inverse of ``emit_report(r, "json")``."""
    d = json.loads(text)
    level = d["discriminating_level"]
    return Report(
        seed=d["seed"],
        pair=d["pair"],
        hidden=d["hidden"],
        fingerprint=SpectrumFingerprint(tuple((parse_poly(e), m) for e, m in d["fingerprint"].items())),
        identified_pair=d["identified_pair"],
        discriminating_level=None if level is None else parse_poly(level),
        calibration_outcome=d["calibration_outcome"],
        trial_outcomes=tuple(d["trial_outcomes"]),
        verdict=d["verdict"],
        correct=d["correct"],
        lam=None if d["lambda"] is None else Fraction(d["lambda"]),
        hidden_rays=tuple(d["measured_state"]),
    )
