"""Check reports: the result currency of every axiom verification.

A check never raises on a mathematical failure; it returns a
:class:`CheckReport` whose ``passed`` flag is True exactly when no
residual was nonzero.  Reports keep the first ``MAX_WITNESSES`` failing
basis-index tuples (1-based, matching e_1..e_n) together with a
printable witness, plus the total failure count, and may nest
sub-reports for composite checks: a composite fails iff any sub-check
fails.
"""

MAX_WITNESSES = 16


class CheckReport:
    def __init__(self, name, failures=(), total_failures=None, subreports=()):
        self.name = name
        self.failures = tuple(failures)
        self.total_failures = len(self.failures) if total_failures is None else total_failures
        self.subreports = tuple(subreports)

    @property
    def passed(self):
        return self.total_failures == 0 and all(s.passed for s in self.subreports)

    def sub(self, name):
        for s in self.subreports:
            if s.name == name:
                return s
        raise KeyError(name)

    def all_failures(self):
        out = [(self.name, key, witness) for key, witness in self.failures]
        for s in self.subreports:
            out.extend(s.all_failures())
        return out

    def format(self, indent=""):
        lines = [f"{indent}{self.name}: {'pass' if self.passed else 'FAIL'}"]
        if self.total_failures:
            lines.append(f"{indent}  failures: {self.total_failures}")
            for key, witness in self.failures:
                shown = ",".join(str(k) for k in key)
                lines.append(f"{indent}  at ({shown}): {witness}")
        for s in self.subreports:
            lines.append(s.format(indent + "  "))
        return "\n".join(lines)

    def __repr__(self):
        return f"CheckReport({self.name!r}, passed={self.passed}, failures={self.total_failures})"


class FailureLog:
    """Accumulator used by checkers while scanning basis tuples."""

    def __init__(self):
        self.items = []
        self.total = 0

    def add(self, key, witness):
        self.total += 1
        if len(self.items) < MAX_WITNESSES:
            self.items.append((tuple(key), str(witness)))

    def report(self, name, subreports=()):
        return CheckReport(name, self.items, self.total, subreports)


def combined(name, *subreports):
    return CheckReport(name, (), 0, subreports)


class EquivalenceReport:
    """Named verdicts that a theorem asserts to be identical."""

    def __init__(self, name, verdicts):
        self.name = name
        self.verdicts = dict(verdicts)

    @property
    def agree(self):
        flags = [r.passed for r in self.verdicts.values()]
        return all(f == flags[0] for f in flags)

    @property
    def passed(self):
        return self.agree and all(r.passed for r in self.verdicts.values())

    def verdict(self, label):
        return self.verdicts[label].passed

    def format(self):
        lines = [f"{self.name}: agree={self.agree}"]
        for label, rep in self.verdicts.items():
            lines.append(f"  [{label}] {'pass' if rep.passed else 'FAIL'}")
        return "\n".join(lines)

    def __repr__(self):
        states = {k: v.passed for k, v in self.verdicts.items()}
        return f"EquivalenceReport({self.name!r}, {states})"
