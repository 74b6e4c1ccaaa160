#ifndef MAGMOID_TEST_FIXTURES_HPP
#define MAGMOID_TEST_FIXTURES_HPP

#include "magmoid/core.hpp"

namespace fixtures {

// The 2-element commutative semilattice: xx=x, xy=yx=x, yy=y.
inline magmoid::Magmoid ex72() {
    auto m = magmoid::make_magmoid("ex72", {"x", "y"});
    m.set_cell(0, 0, 0);
    m.set_cell(0, 1, 0);
    m.set_cell(1, 0, 0);
    m.set_cell(1, 1, 1);
    return m;
}

// The 2-element group: ee=e, ea=ae=a, aa=e.
inline magmoid::Magmoid z2() {
    auto m = magmoid::make_magmoid("z2", {"e", "a"});
    m.set_cell(0, 0, 0);
    m.set_cell(0, 1, 1);
    m.set_cell(1, 0, 1);
    m.set_cell(1, 1, 0);
    return m;
}

// Left-zero semigroup: uv = u for all u, v.
inline magmoid::Magmoid left_zero() {
    auto m = magmoid::make_magmoid("leftzero", {"p", "q"});
    m.set_cell(0, 0, 0);
    m.set_cell(0, 1, 0);
    m.set_cell(1, 0, 1);
    m.set_cell(1, 1, 1);
    return m;
}

// Two-object discrete groupoid: only the diagonal cells defined.
inline magmoid::Magmoid discrete2() {
    auto m = magmoid::make_magmoid("discrete2", {"e1", "e2"});
    m.set_cell(0, 0, 0);
    m.set_cell(1, 1, 1);
    return m;
}

// The interval category as a magmoid: e1e1=e1, e2e2=e2, e1f=f, fe2=f.
inline magmoid::Magmoid interval() {
    auto m = magmoid::make_magmoid("interval", {"e1", "e2", "f"});
    m.set_cell(0, 0, 0);
    m.set_cell(1, 1, 1);
    m.set_cell(0, 2, 2);
    m.set_cell(2, 1, 2);
    return m;
}

}  // namespace fixtures

#endif
