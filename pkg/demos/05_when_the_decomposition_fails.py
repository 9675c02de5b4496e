"""The dihedral counterexample: a decomposition that enumeration refutes.

The direct-product decomposition demonstrated in demo 04 presumes that the
group itself sits inside its twisted unitary subgroup. That holds exactly
when every non-central element squares to the derived generator e and
every central element is an involution. The quaternion family satisfies
both; the dihedral family does not:

  in D8, a reflection s has s^2 = 1, so s * s^twist = s * (s e) = e != 1.

Enumeration therefore finds half the predicted count, and the verifier
reports the containment failure with a witness instead of glossing over
it. Everything that does not depend on the containment — the factor sizes,
their internal structure, and the coefficient-system characterization of
unitarity — still checks out exactly.
"""

from __future__ import annotations

import f2units as f


def main() -> None:
    g = f.make_dihedral(8)
    form = f.make_odot_form(g)
    sigma = f.odot_involution(form)
    e = f.basis(g, form.e)

    s = f.basis(g, 4)
    s_twist = f.ga_involute(sigma, s)
    print(f"s * s^twist = {f.render_element(f.ga_mul(s, s_twist))}   (need 1 for unitarity)")
    bad = [g.label(i) for i in range(g.order)
           if not f.ga_mul(f.basis(g, i), f.ga_involute(sigma, f.basis(g, i))).is_one()]
    print(f"group elements that are not unitary: {bad}")
    print()

    v = f.enumerate_unitary(g, sigma)
    w = f.build_central_unipotent(form)
    t_sub = f.build_torsion_complement(form)
    print(f"predicted order |G|*|T|*|W| = {g.order * t_sub.order * w.order}")
    print(f"enumerated order            = {v.order}")
    print()

    report = f.verify_odot_decomposition(form)
    print(f"verification report: {'PASS' if report.passed else 'FAIL'}")
    for check in report.checks:
        marker = "ok  " if check.passed else "FAIL"
        witness = f"   (witness: {check.witness})" if check.witness else ""
        print(f"  {marker} {check.name}{witness}")
    print()

    # the quadrant-coefficient system still characterizes unitarity exactly,
    # for every one of the 128 normalized units
    agree = all(
        f.check_unitary_quadrant_system(form, f.AlgebraElement(g, m))
        == (m in v.mask_set())
        for m in range(1 << g.order)
        if bin(m).count("1") % 2 == 1
    )
    print(f"coefficient-system biconditional across all 128 normalized units: {agree}")
    print(f"half of {2 ** (g.order - 1)} normalized units are unitary: {v.order}")


if __name__ == "__main__":
    main()
