"""Smoke test for the python bindings: registry access, canonical arithmetic,
one r-matrix solve and one bracket table."""
import json
import sys

sys.path.insert(0, sys.argv[1] if len(sys.argv) > 1 else ".")

import _superbialg as sb


def main():
    algebras = sb.algebras()
    assert "B" in algebras and "C^5_p" in algebras, algebras
    assert len(sb.pairs()) == 74

    assert sb.simplify("psi*chi + chi*psi") == "0"
    assert sb.simplify("exp(-x)*exp(-x)") == "exp(-2*x)"
    assert sb.simplify("sin(x)^2 + cos(x)^2") == "1"

    assert sb.verify("B")
    assert sb.verify("(B,(A_{1,1}+A))")
    assert sb.verify("(C^1_p,C^1_{-p}.i)", {"p": "2"})

    sol = json.loads(sb.solve("(B,(A_{1,1}+A))"))
    assert sol["consistent"]
    assert {"i": 2, "j": 2, "coeff": "-1/2"} in sol["particular"] or any(
        t["coeff"] == "-1/2" for t in sol["particular"]
    )

    table = json.loads(sb.poisson("(B,(A_{1,1}+A))"))
    entries = {(e["mu"], e["nu"]): e["value"] for e in table["entries"]}
    assert entries[("psi", "psi")] == "-1/2 + 1/2*exp(-2*x)", entries

    dual = json.loads(sb.poisson("(B,(A_{1,1}+A))", side="dual"))
    dentries = {(e["mu"], e["nu"]): e["value"] for e in dual["entries"]}
    assert dentries[("x~", "psi~")] == "-psi~", dentries

    total, failures = sb.golden_status()
    assert total > 100 and not failures, failures
    print(f"python smoke test ok ({total} golden rows verified)")


if __name__ == "__main__":
    main()
