use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

fn run(code: &std::ffi::CStr) {
    Python::attach(|py| {
        let module = wrap_pymodule!(pymvpoly::pymvpoly)(py);
        let globals = PyDict::new(py);
        globals.set_item("mv", module).unwrap();
        if let Err(e) = py.run(code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn datum_construction_and_validation() {
    run(c"
d = mv.Datum('sl2hat', [('high', 2, 1), ('low', 1, 3)], [2, 1])
assert d.real == [('low', 1, 3), ('high', 2, 1)]
assert d.weight() == (5, 7)
assert mv.Datum.from_json(d.to_json()) == d
assert hash(d) == hash(mv.Datum.from_json(d.to_json()))
for bad in [lambda: mv.Datum('sl2hat', delta=[1, 2]),
            lambda: mv.Datum('b2', []),
            lambda: mv.Datum('sl2hat', [('mid', 1, 1)]),
            lambda: mv.Datum('sl2hat', [('low', 1, 0)])]:
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError('accepted invalid datum')
");
}

#[test]
fn completion_and_crystal_operators() {
    run(c"
lam = mv.Datum.imaginary('a2(2)', [2, 1])
p = mv.complete_from_left(lam)
assert p.is_mv()
assert p.right.real == [('low', 1, 4), ('high', 1, 2)] and p.right.delta == [1]
assert mv.complete_from_right(p.right) == p
c = mv.Crystal('a2(2)')
b = c.apply('e0 e1 e1 e1')
assert c.phi(1, b) == 3
assert c.e(1, c.f(1, b)) == b
assert c.star(b).left == b.right
try:
    c.tau(b)
except ValueError:
    pass
else:
    raise AssertionError('tau is only defined for sl2hat')
try:
    c.e(0, mv.Polytope(mv.Datum('a2(2)', [('low', 1, 1)]), mv.Datum('a2(2)')))
except ValueError:
    pass
else:
    raise AssertionError('non-MV start accepted')
");
}

#[test]
fn verification_from_python() {
    run(c"
import json
ok, text = mv.run_verify('crystal', 'sl2hat', depth=2)
assert ok
assert json.loads(text)['suite'] == 'crystal-axioms'
try:
    mv.run_verify('nope', 'sl2hat')
except ValueError:
    pass
");
}
