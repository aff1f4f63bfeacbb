from dataclasses import dataclass, field


@dataclass(frozen=True)
class Finding:
    instance: str
    check: str
    passed: bool
    witness: str = "-"

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{self.instance}\t{self.check}\t{status}\t{self.witness}"


@dataclass
class Report:
    """Ordered list of findings; one line per finding when rendered."""

    title: str = ""
    findings: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, instance, check, passed, witness="-"):
        if isinstance(passed, (tuple, list)):
            raise TypeError(f"{check}: verdict must be a truth value, not a {type(passed).__name__}")
        self.findings.append(Finding(str(instance), check, bool(passed), _fmt(witness)))
        return bool(passed)

    def extend(self, other):
        self.findings.extend(other.findings)
        self.notes.extend(other.notes)

    @property
    def ok(self):
        return all(f.passed for f in self.findings)

    def failures(self):
        return [f for f in self.findings if not f.passed]

    def lines(self):
        out = [f"# {n}" for n in self.notes]
        out.extend(f.line() for f in self.findings)
        return out

    def render(self):
        return "\n".join(self.lines())


def _fmt(witness):
    if witness is None:
        return "-"
    return str(witness).replace("\t", " ").replace("\n", " ")
