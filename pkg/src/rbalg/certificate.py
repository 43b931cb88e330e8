"""Certificates: reproducible records of a named check on a named object.

The digest is the sha256 of the canonical emission of the target's
reference closure, so identical digests mean identical mathematical
input, and re-running the named check must reproduce the verdict.
Witnesses keep the first failing index tuples with their residuals.
"""

import hashlib

from . import structfile as sfmod
from .algebra import check_associativity, check_bimodule, check_coassociativity
from .bialgebra import (ASIBialgebra, check_asi_bialgebra, check_frobenius, check_matched_pair,
                        check_rb_asi_bialgebra, check_triple_equivalence)
from .dendriform import (check_dendriform, check_manin_triple, check_rb_dendriform,
                         check_two_cocycle)
from .errors import UnknownCheck
from .reports import CheckReport, EquivalenceReport, combined
from .rota_baxter import (check_admissible, check_equivalence, check_rb_algebra,
                          check_rb_coalgebra, check_rb_representation)
from .structfile import Certificate, Realizer
from .yang_baxter import (admissibility_conditions, aybe_residual, check_o_operator,
                          check_weak_o_operator, coboundary_conditions, connes_check,
                          operator_form_check, pi_admissible_check)
from .reports import FailureLog


def closure_names(sf, name):
    """The target and everything it references, in dependency order."""
    seen = []

    def visit(n):
        decl = sf.get(n)
        for ref in decl.refs.values():
            visit(ref)
        if n not in seen:
            seen.append(n)

    visit(name)
    return seen


def input_digest(sf, name):
    sub = sfmod.StructureFile(sf.field)
    for n in closure_names(sf, name):
        sub.objects[n] = sf.objects[n]
    text = sfmod.emit_text(sub)
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def _check_aybe(realizer, name):
    algebra, r = realizer.r_element(name)
    log = FailureLog()
    residual = aybe_residual(algebra, r)
    if not residual.is_zero:
        log.add(("residual",), repr(residual))
    return log.report("aybe")


def _check_admissible_aybe(realizer, name):
    base, q, r = realizer.admissible_r(name)
    log = FailureLog()
    residual = aybe_residual(base.algebra, r)
    if not residual.is_zero:
        log.add(("residual",), repr(residual))
    return combined("admissible-aybe", log.report("aybe"),
                    admissibility_conditions(r, base.operator, q))


def _check_coboundary(realizer, name):
    base, q, r = realizer.admissible_r(name)
    return coboundary_conditions(base.algebra, base.operator, q, base.weight, r)


def _check_operator_form(realizer, name):
    base, q, r = realizer.admissible_r(name)
    return operator_form_check(base, q, r)


def _check_rb_algebra(realizer, name):
    rb = realizer.rb_algebra(name)
    return check_rb_algebra(rb.algebra, rb.operator, rb.weight)


def _check_rb_coalgebra(realizer, name):
    rbc = realizer.rb_coalgebra(name)
    return check_rb_coalgebra(rbc.coalgebra, rbc.operator, rbc.weight)


def _check_asi(realizer, name):
    algebra, coalgebra = realizer.asi_bialgebra(name)
    return check_asi_bialgebra(ASIBialgebra(algebra, coalgebra, check=False))


def _check_equivalence(realizer, name):
    return check_equivalence(*realizer.equivalence(name))


def _check_pi(realizer, name):
    return pi_admissible_check(*realizer.pi_admissible(name))


def _check_triple(realizer, name):
    return check_triple_equivalence(*realizer.double(name))


def _check_manin(realizer, name):
    return check_manin_triple(*realizer.manin(name))


def _check_cocycle(realizer, name):
    return check_two_cocycle(*realizer.cocycle(name))


def _check_connes(realizer, name):
    return connes_check(*realizer.connes(name))


CHECKS = {
    "associativity": lambda r, n: check_associativity(r.algebra(n)),
    "coassociativity": lambda r, n: check_coassociativity(r.coalgebra(n)),
    "bimodule": lambda r, n: check_bimodule(r.representation(n)),
    "rb-algebra": _check_rb_algebra,
    "rb-coalgebra": _check_rb_coalgebra,
    "rb-representation": lambda r, n: check_rb_representation(r.rb_representation(n)),
    "admissible": lambda r, n: check_admissible(r.admissible_quadruple(n)),
    "equivalence": _check_equivalence,
    "asi-bialgebra": _check_asi,
    "rb-asi-bialgebra": lambda r, n: check_rb_asi_bialgebra(r.rb_asi_bialgebra(n)),
    "matched-pair": lambda r, n: check_matched_pair(r.matched_pair(n)),
    "frobenius": lambda r, n: check_frobenius(r.frobenius(n)),
    "triple-equivalence": _check_triple,
    "aybe": _check_aybe,
    "admissible-aybe": _check_admissible_aybe,
    "coboundary": _check_coboundary,
    "operator-form": _check_operator_form,
    "connes": _check_connes,
    "weak-o-operator": lambda r, n: check_weak_o_operator(r.o_operator(n)),
    "o-operator": lambda r, n: check_o_operator(r.o_operator(n)),
    "dendriform": lambda r, n: check_dendriform(r.dendriform(n)),
    "rb-dendriform": lambda r, n: check_rb_dendriform(r.rb_dendriform(n)),
    "two-cocycle": _check_cocycle,
    "manin-triple": _check_manin,
    "pi-admissible": _check_pi,
}


def _witnesses(report):
    if isinstance(report, EquivalenceReport):
        return tuple((label, "pass" if sub.passed else "fail")
                     for label, sub in report.verdicts.items())
    out = []
    for where, key, text in report.all_failures():
        shown = ",".join(str(k) for k in key)
        out.append((f"{where}:{shown}", text))
        if len(out) >= 16:
            break
    return tuple(out)


def _total_failures(report):
    if isinstance(report, EquivalenceReport):
        return sum(0 if sub.passed else 1 for sub in report.verdicts.values())
    return report.total_failures + sum(_total_failures(s) for s in report.subreports)


def run_check(sf, target, check):
    """Run a named check against a named object; returns (report, certificate)."""
    if check not in CHECKS:
        raise UnknownCheck(f"no check named {check!r}")
    realizer = Realizer(sf)
    report = CHECKS[check](realizer, target)
    cert = Certificate(check=check, target=target, digest=input_digest(sf, target),
                       verdict="pass" if report.passed else "fail",
                       failures=_total_failures(report), witnesses=_witnesses(report))
    return report, cert


def certificate_text(cert):
    lines = ["certificate",
             f"  check {cert.check}",
             f"  object {cert.target}",
             f"  digest {cert.digest}",
             f"  verdict {cert.verdict}",
             f"  failures {cert.failures}"]
    for where, text in cert.witnesses:
        lines.append(f"  witness {where} = {text}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def verify_certificate(sf, cert):
    """Re-run the certified check; True when digest and verdict reproduce."""
    if cert.digest != input_digest(sf, cert.target):
        return False
    report, _ = run_check(sf, cert.target, cert.check)
    return report.passed == cert.passed
