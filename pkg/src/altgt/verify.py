"""Exhaustive exact verification suites.

Every check is an exact structural equality; there are no tolerances
anywhere.  Each suite walks its shapes in deterministic order, stops at the
first failure within a shape, and keeps going across shapes so a report
collects every counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import associator, yor
from .geodesics import class_members, geodesic_representatives, path_equivalent
from .gt import embed, gt_vector, restrict
from .labels import AltLabel, dim_alt, labels, level_dimension_total
from .partitions import partitions_of, self_conjugate_partitions
from .scalars import ONE
from .tableaux import enumerate_syt, reference_tableau
from .yor import GTVector, identity_matrix, is_zero_matrix, mat_add, mat_eq, mat_mul


@dataclass(frozen=True)
class Check:
    suite: str
    subject: str
    status: str  # "pass" or "fail"
    witness: str | None = None

    def line(self) -> str:
        text = f"{self.status.upper():4s} {self.suite:5s} {self.subject}"
        if self.witness:
            text += f"  [{self.witness}]"
        return text

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "subject": self.subject,
            "status": self.status,
            "witness": self.witness,
        }


@dataclass
class Report:
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status != "pass"]

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def lines(self) -> list[str]:
        out = [c.line() for c in self.checks]
        bad = len(self.failures())
        out.append(f"{len(self.checks)} checks, {bad} failures")
        return out

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json_dict() for c in self.checks]}


# the anchor-tableau coefficients for every self-conjugate shape with n < 10
FOURTH_ROOT_TABLE = {
    "2,1": 1j,
    "2,2": 1j,
    "3,1,1": complex(-1),
    "3,2,1": complex(-1),
    "4,1,1,1": -1j,
    "4,2,1,1": -1j,
    "3,3,2": -1j,
    "3,3,3": -1j,
    "5,1,1,1,1": complex(1),
}


def _diff_witness(name: str, a, b) -> str:
    for r, (ra, rb) in enumerate(zip(a, b)):
        for c, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return f"{name}: entry ({r},{c}) is {x}, expected {y}"
    return f"{name}: matrices agree"


def verify_yor(max_n: int) -> Report:
    """Defining identities of the orthogonal representation for all shapes
    with 2 <= n <= max_n: symmetry, involution, braid, distant commutation."""
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    checks: list[Check] = []
    for n in range(2, max_n + 1):
        for shape in partitions_of(n):
            subject = f"shape {shape}"
            mats = {i: yor.rep_matrix(shape, i) for i in range(1, n)}
            dim = len(enumerate_syt(shape))
            ident = identity_matrix(dim)
            failure = None
            for i, m in mats.items():
                real = all(x == x.conjugate() for row in m for x in row)
                sym = all(
                    m[r][c] == m[c][r] for r in range(dim) for c in range(dim)
                )
                if not (real and sym):
                    failure = f"generator {i} not a real symmetric matrix"
                    break
            if failure is None:
                for i, m in mats.items():
                    if not mat_eq(mat_mul(m, m), ident):
                        failure = _diff_witness(f"square of generator {i}",
                                                mat_mul(m, m), ident)
                        break
            if failure is None:
                for i in range(1, n - 1):
                    lhs = mat_mul(mats[i], mat_mul(mats[i + 1], mats[i]))
                    rhs = mat_mul(mats[i + 1], mat_mul(mats[i], mats[i + 1]))
                    if not mat_eq(lhs, rhs):
                        failure = _diff_witness(f"braid at {i}", lhs, rhs)
                        break
            if failure is None:
                for i in range(1, n):
                    for j in range(i + 2, n):
                        lhs = mat_mul(mats[i], mats[j])
                        rhs = mat_mul(mats[j], mats[i])
                        if not mat_eq(lhs, rhs):
                            failure = _diff_witness(
                                f"commutation ({i},{j})", lhs, rhs
                            )
                            break
                    if failure:
                        break
            if failure is None:
                checks.append(Check("yor", subject, "pass"))
            else:
                checks.append(Check("yor", subject, "fail", failure))
    return Report(checks)


def verify_associator(max_n: int) -> Report:
    """Identities of the intertwiner for self-conjugate shapes with n <= max_n:
    anticommutation, involution, eigenspace split, anchor coefficients, and
    compatibility along self-conjugate covers."""
    if max_n < 3:
        raise ValueError(f"max_n must be at least 3, got {max_n}")
    checks: list[Check] = []
    for n in range(3, max_n + 1):
        for shape in self_conjugate_partitions(n):
            subject = f"shape {shape}"
            basis = enumerate_syt(shape)
            dim = len(basis)
            phi = associator.phi_matrix(shape)
            failure = None
            for i in range(1, n):
                m = yor.rep_matrix(shape, i)
                anti = mat_add(mat_mul(m, phi), mat_mul(phi, m))
                if not is_zero_matrix(anti):
                    failure = f"generator {i} does not anticommute"
                    break
            if failure is None and not mat_eq(mat_mul(phi, phi), identity_matrix(dim)):
                failure = "square is not the identity"
            if failure is None:
                # the matrix pairs each tableau with its transpose, so each
                # orbit contributes one +1 and one -1 eigenvector
                plus = minus = 0
                for t in basis:
                    image = associator.apply_phi(shape, GTVector.basis(t))
                    support = image.support()
                    if len(support) != 1 or support[0] != t.conjugate():
                        failure = f"not a monomial pairing at {t}"
                        break
                    c_t = image.coefficient(t.conjugate())
                    c_back = associator.assoc_coeff(shape, t.conjugate())
                    if c_t * c_back != ONE:
                        failure = f"pairing at {t} does not invert"
                        break
                    if t.row_word() < t.conjugate().row_word():
                        plus += 1
                        minus += 1
                if failure is None and not (plus == minus == dim // 2):
                    failure = f"eigenspaces split {plus}/{minus}, expected {dim // 2} each"
            if failure is None:
                expected = FOURTH_ROOT_TABLE.get(str(shape))
                if expected is not None:
                    got = associator.assoc_coeff(shape, reference_tableau(shape))
                    if got.as_fourth_root() != expected:
                        failure = f"anchor coefficient {got}, expected {expected}"
            if failure is None:
                checks.append(Check("assoc", subject, "pass"))
            else:
                checks.append(Check("assoc", subject, "fail", failure))
        # cover compatibility: the intertwiner commutes with adding the
        # final diagonal box
        for shape in self_conjugate_partitions(n):
            partner, role = shape.self_conjugate_cover_partner()
            if role != "larger":
                continue
            small = partner
            subject = f"cover {small} up to {shape}"
            failure = None
            for t in enumerate_syt(small):
                lifted = embed(GTVector.basis(t), shape)
                one = associator.apply_phi(shape, lifted)
                other = embed(associator.apply_phi(small, GTVector.basis(t)), shape)
                if one != other:
                    failure = f"disagrees at {t}"
                    break
            if failure is None:
                checks.append(Check("assoc", subject, "pass"))
            else:
                checks.append(Check("assoc", subject, "fail", failure))
    return Report(checks)


def verify_gt(label: AltLabel) -> Report:
    """Full exact audit of the basis attached to one label."""
    subject = f"label {label}"
    paths = geodesic_representatives(label)
    vectors = [gt_vector(p) for p in paths]
    failure = None

    if len(paths) != dim_alt(label):
        failure = f"{len(paths)} classes, expected dimension {dim_alt(label)}"

    if failure is None:
        for p, v in zip(paths, vectors):
            if any(c.as_fourth_root() is None for _, c in v.items()):
                failure = f"non-unit coefficient on {p}"
                break

    if failure is None:
        # every term's partial shapes must follow the path up to conjugation
        for p, v in zip(paths, vectors):
            for t, _ in v.items():
                for step in p:
                    part = t.prefix_shape(step.n)
                    if part != step.partition and part != step.partition.conjugate():
                        failure = f"support of {p} strays at level {step.n}"
                        break
                if failure:
                    break
            if failure:
                break

    if failure is None and label.is_signed():
        for p, v in zip(paths, vectors):
            expected = v if label.sign == 1 else -v
            if associator.apply_phi(label.partition, v) != expected:
                failure = f"not a {label.sign:+d} eigenvector on {p}"
                break

    if failure is None:
        for a in range(len(vectors)):
            for b in range(a + 1, len(vectors)):
                if not vectors[a].inner(vectors[b]).is_zero():
                    failure = f"vectors for {paths[a]} and {paths[b]} not orthogonal"
                    break
            if failure:
                break

    if failure is None and label.n >= 3:
        # equivalent paths ending here must give the same vector up to a
        # fourth root of unity
        for p, base in zip(paths, vectors):
            mates = [m for m in class_members(p) if m.endpoint == label]
            for mate in mates:
                assert path_equivalent(p, mate)
                other = gt_vector(mate)
                if set(other.support()) != set(base.support()):
                    failure = f"class of {p} has mismatched supports"
                    break
                t0 = base.support()[0]
                ratio = other.coefficient(t0) / base.coefficient(t0)
                if ratio.as_fourth_root() is None:
                    failure = f"class of {p}: ratio {ratio} is not a unit"
                    break
                if other != base.scale(ratio):
                    failure = f"class of {p}: members not proportional"
                    break
            if failure:
                break

    if failure is None and label.n >= 3:
        # walking one step back down the path must recover the shorter vector
        for p, v in zip(paths, vectors):
            head, prev = p.labels[-1], p.labels[-2]
            shorter = gt_vector(p.truncated())
            if not head.is_signed() or prev.is_signed():
                if v != embed(shorter, head.partition):
                    failure = f"{p} does not extend its truncation"
                    break
            else:
                if restrict(v, prev.partition) != shorter:
                    failure = f"{p} does not restrict to its truncation"
                    break
                carried = embed(shorter, head.partition)
                mirrored = associator.apply_phi(head.partition, carried)
                rebuilt = carried + mirrored if head.sign == 1 else carried - mirrored
                if v != rebuilt:
                    failure = f"{p} is not the eigenspace completion"
                    break

    if failure is None:
        return Report([Check("gt", subject, "pass")])
    return Report([Check("gt", subject, "fail", failure)])


def verify_gt_range(max_n: int) -> Report:
    """verify_gt over every label with 2 <= n <= max_n, plus the level
    dimension count sum(dim^2) = n!/2."""
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    report = Report([])
    for n in range(2, max_n + 1):
        total, expected = level_dimension_total(n)
        if total == expected:
            report.checks.append(Check("gt", f"level {n} dimension count", "pass"))
        else:
            report.checks.append(
                Check(
                    "gt",
                    f"level {n} dimension count",
                    "fail",
                    f"sum of squares {total}, expected {expected}",
                )
            )
        for label in labels(n):
            report.extend(verify_gt(label))
    return Report(report.checks)
