use cmreg_python::cmreg_module;
use pyo3::ffi::c_str;
use pyo3::prelude::*;

#[test]
fn module_is_usable_from_python() {
    pyo3::append_to_inittab!(cmreg_module);
    Python::attach(|py| {
        py.run(
            c_str!(
                r#"
import math
import cmreg
assert cmreg.eval_f(2, [0, 0, 0]) == 3
assert cmreg.ideal_mumford_bound(1, 2, 0) == cmreg.eval_g(1, 2, 1, 0, 1)
m = cmreg.Module("Q[x,y] (x^2, x*y)")
assert m.reg == 1 and m.a(2) == -math.inf
r = m.verify("thm3.6")
assert r.all_passed and len(r) == 2
assert [c.id for c in r.checks] == ["thm3.6[i=0]", "thm3.6[i=1]"]
assert r.checks[1].margin == 0
assert '"id": "thm3.6[i=1]"' in r.to_json()
try:
    cmreg.Module("Q[x] (x^2 + x)")
    raise SystemExit("nonhomogeneous input accepted")
except ValueError:
    pass
"#
            ),
            None,
            None,
        )
        .unwrap();
    });
}
