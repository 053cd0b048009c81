"""Smoke test for the cmreg Python extension.

Build it first:

    cargo build -p cmreg-python --features extension-module --release

then run `python3 python/smoke_test.py`. When `cmreg` is not importable the
script loads target/release/libcmreg_python.so directly.
"""

import importlib.machinery
import importlib.util
import math
import pathlib
import sys


def load():
    try:
        import cmreg

        return cmreg
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        lib = root / "target" / profile / "libcmreg_python.so"
        if lib.exists():
            loader = importlib.machinery.ExtensionFileLoader("cmreg", str(lib))
            spec = importlib.util.spec_from_loader("cmreg", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            sys.modules["cmreg"] = module
            return module
    sys.exit("cmreg extension not found; build it with "
             "`cargo build -p cmreg-python --features extension-module --release`")


def main():
    cm = load()

    assert cm.eval_f(2, [0, 0, 0], 0) == 3
    assert cm.eval_f(0, [1, 2, 3], 5) == -5
    assert cm.eval_e(1, [2, 0]) == -5
    assert cm.eval_g(2, 2, 2, 0, 0) == 5
    rho, pi, delta = cm.submodule_gendeg_bound(1, 2, 1, 1, 2)
    assert delta == 378, (rho, pi, delta)
    big = cm.eval_f(4, [5, 5, 5, 5, 5], 0)
    assert isinstance(big, int) and big > 2**64

    a = cm.Module("Q[x,y] (x^2, x*y)")
    assert (a.dim, a.depth, a.reg) == (1, 0, 1)
    assert a.diagonal == [1]
    assert a.betti == [(0, 0, 1), (1, 2, 2), (2, 3, 1)]
    assert a.deficiency_reg(1) == 1 and a.deficiency_reg(0) == -1
    assert a.a(2) == -math.inf
    assert a.h(1, -3) == 1

    report = a.verify("thm3.6,thm4.2,prop4.12,serre", window=(-4, 4))
    assert report.all_passed, report.failures
    margins = report.margins()
    assert margins["thm3.6[i=1]"] == 0
    assert margins["prop4.12[b]"] == 0

    b = cm.Module.ideal(["x", "y", "z"], ["x*y", "x*z"])
    assert (b.dim, b.depth, b.a(1), b.a(2)) == (2, 1, 0, -2)
    assert b.diagonal == [2, 0]
    full = b.verify()
    assert sorted(full.failures) == ["prop4.12[a]", "prop4.12[b]"], full.failures

    gf = cm.Module.ideal(["x", "y"], ["x^2", "x*y"], prime=7)
    assert gf.field == "GF(7)" and gf.reg == 1

    try:
        cm.Module("Q[x,y] (x + w)")
    except ValueError as err:
        assert "w" in str(err)
    else:
        raise AssertionError("unknown variable accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
