"""Check registry, verification report, and its JSON and table renderings.

Every check id maps to exactly one claim string; reports list every check
they ran (or recorded as an assumption), sorted by id, and serialize to a
versioned JSON layout that round-trips.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"

PASS = "pass"
FAIL = "fail"
ASSUMED = "assumed-out-of-scope"

CLAIMS: dict[str, str] = {
    "theta-base": "the interleaved translate of the standard base is a theta-base, "
    "with all four parity families witnessed",
    "fixed-roots": "the theta-fixed roots are exactly e_i - e_{2n+1-i}",
    "restricted-system": "the restricted root system has n(n-1) roots and type A_{n-1}",
    "max-split-subsets": "there are n-1 maximal theta-split subsets, each dropping "
    "one non-fixed simple root",
    "split-parabolic-scan": "standard theta-split parabolics arise exactly from "
    "theta-split subsets",
    "minimal-split-parabolic": "the fixed simple roots cut out the minimal standard "
    "theta-split parabolic",
    "balanced-partitions": "block parabolics stable under the involution are the "
    "balanced partitions",
    "elliptic-levi": "among balanced partitions only the half-half Levi has split "
    "part equal to the center",
    "delta-identity": "the fixed-parabolic modulus times the inverse half modulus "
    "restricts to |det| on the fixed Levi",
    "coset-enumeration": "table-built double-coset representatives match the "
    "symmetric-group orbit partition one-to-one",
    "elliptic-coset-count": "the middle Levi has n+1 self-cosets, exactly two of "
    "which normalize it",
    "case1-structure": "case 1 occurs only for even n at the middle split subset, "
    "with blockwise symplectic fixed points",
    "unramified-coefficients": "the half-determinant pair character expands over "
    "the simple roots with coefficients (1, ..., n, ..., 1)",
    "involution-algebra": "involution identities hold exactly on random rational "
    "matrices",
    "case1-nondistinction": "case-1 terms carry no invariant functional "
    "(analytic input, recorded as an assumption)",
    "multiplicity-one": "the invariant functional is unique up to scalar "
    "(analytic input, recorded as an assumption)",
}
# relative square integrability checks are registered per segment datum
RELATIVE_CASSELMAN_CLAIM = (
    "every case-2 exponent of the induced double is strictly contracting on "
    "every non-central dominant generator"
)


def claim_for(check_id: str) -> str:
    if check_id.startswith("relative-casselman:"):
        return RELATIVE_CASSELMAN_CLAIM
    return CLAIMS[check_id]


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    claim: str
    status: str
    details: str
    seconds: float

    def __post_init__(self) -> None:
        if self.status not in (PASS, FAIL, ASSUMED):
            raise ValueError(f"invalid status {self.status}")


@dataclass
class VerificationReport:
    n: int
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        if any(c.check_id == result.check_id for c in self.checks):
            raise ValueError(f"duplicate check id {result.check_id}")
        self.checks.append(result)

    @property
    def sorted_checks(self) -> list[CheckResult]:
        return sorted(self.checks, key=lambda c: c.check_id)

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def exit_code(self) -> int:
        return 0 if not self.failed else 1

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "checks": [
                {
                    "id": c.check_id,
                    "claim": c.claim,
                    "status": c.status,
                    "details": c.details,
                    "seconds": round(c.seconds, 6),
                }
                for c in self.sorted_checks
            ],
            "summary": {
                "pass": sum(1 for c in self.checks if c.status == PASS),
                "fail": sum(1 for c in self.checks if c.status == FAIL),
                "assumed": sum(1 for c in self.checks if c.status == ASSUMED),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @staticmethod
    def from_dict(data: dict) -> "VerificationReport":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError("unsupported schema version")
        report = VerificationReport(n=int(data["n"]))
        for c in data["checks"]:
            report.add(
                CheckResult(
                    check_id=c["id"],
                    claim=c["claim"],
                    status=c["status"],
                    details=c["details"],
                    seconds=float(c["seconds"]),
                )
            )
        return report

    @staticmethod
    def from_json(text: str) -> "VerificationReport":
        return VerificationReport.from_dict(json.loads(text))

    def render_table(self) -> str:
        rows = [("check", "status", "time", "details")]
        for c in self.sorted_checks:
            rows.append(
                (c.check_id, c.status, f"{c.seconds:.3f}s", c.details)
            )
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        lines = [f"verification report for n = {self.n}"]
        for idx, r in enumerate(rows):
            lines.append(
                f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]:>{widths[2]}}  {r[3]}"
            )
            if idx == 0:
                lines.append("-" * (sum(widths) + 6 + max(len(x[3]) for x in rows)))
        summary = self.to_dict()["summary"]
        lines.append(
            f"{summary['pass']} pass, {summary['fail']} fail, "
            f"{summary['assumed']} assumed-out-of-scope"
        )
        return "\n".join(lines)
