from dataclasses import dataclass, field, replace

from core.constants import IDENTITY_TOLERANCE

# slack recorded for a failed exact (canonical-form) relation
EXACT_FAILURE_SLACK = -1.0


@dataclass(frozen=True)
class Witness:
    subjects: tuple[str, ...]
    lhs: float | str
    rhs: float | str
    slack: float
    context: str = ""

    def describe(self) -> str:
        prefix = f"[{self.context}] " if self.context else ""
        return (
            f"{prefix}({', '.join(self.subjects)}): lhs={self.lhs} rhs={self.rhs} "
            f"slack={self.slack}"
        )


@dataclass
class PropertyCheck:
    name: str
    tolerance: float = IDENTITY_TOLERANCE
    checked: int = 0
    violations: int = 0
    exercised: int = 0
    worst_slack: float | None = None
    worst_witness: Witness | None = None
    first_violation: Witness | None = None

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def _record(self, witness: Witness, holds: bool) -> bool:
        self.checked += 1
        if self.worst_slack is None or witness.slack < self.worst_slack:
            self.worst_slack = witness.slack
            self.worst_witness = witness
        if not holds:
            self.violations += 1
            if self.first_violation is None:
                self.first_violation = witness
        return holds

    def at_most(self, subjects: tuple[str, ...], lhs: float, rhs: float) -> bool:
        slack = rhs - lhs
        return self._record(
            Witness(subjects, lhs, rhs, slack), holds=slack >= -self.tolerance
        )

    def equal(self, subjects: tuple[str, ...], lhs: float, rhs: float) -> bool:
        slack = -abs(lhs - rhs)
        return self._record(
            Witness(subjects, lhs, rhs, slack), holds=slack >= -self.tolerance
        )

    def exact(
        self, subjects: tuple[str, ...], holds: bool, lhs: str = "", rhs: str = ""
    ) -> bool:
        slack = 0.0 if holds else EXACT_FAILURE_SLACK
        return self._record(Witness(subjects, lhs, rhs, slack), holds=holds)


@dataclass
class PropertyReport:
    title: str
    checks: dict[str, PropertyCheck] = field(default_factory=dict)

    def check(self, name: str, tolerance: float = IDENTITY_TOLERANCE) -> PropertyCheck:
        if name not in self.checks:
            self.checks[name] = PropertyCheck(name=name, tolerance=tolerance)
        return self.checks[name]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks.values())

    @property
    def violations(self) -> int:
        return sum(check.violations for check in self.checks.values())

    @property
    def checked(self) -> int:
        return sum(check.checked for check in self.checks.values())

    @property
    def failing(self) -> list[PropertyCheck]:
        return [check for check in self.checks.values() if not check.passed]

    @property
    def worst_slack(self) -> float | None:
        slacks = [
            check.worst_slack
            for check in self.checks.values()
            if check.worst_slack is not None
        ]
        return min(slacks) if slacks else None

    @property
    def first_violation(self) -> Witness | None:
        for check in self.failing:
            return check.first_violation
        return None

    def merge(
        self, other: "PropertyReport", context: str = "", prefix: str = ""
    ) -> None:
        """
        Fold another report's counts into this one, clause by clause.
        Witnesses are tagged with ``context``; clause names get ``prefix``.
        """

        def tag(witness: Witness | None) -> Witness | None:
            if witness is None or not context:
                return witness
            return replace(witness, context=context)

        for name, theirs in other.checks.items():
            ours = self.check(prefix + name, tolerance=theirs.tolerance)
            ours.checked += theirs.checked
            ours.violations += theirs.violations
            ours.exercised += theirs.exercised
            if theirs.worst_slack is not None and (
                ours.worst_slack is None or theirs.worst_slack < ours.worst_slack
            ):
                ours.worst_slack = theirs.worst_slack
                ours.worst_witness = tag(theirs.worst_witness)
            if ours.first_violation is None:
                ours.first_violation = tag(theirs.first_violation)
