#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "magmoid/classifier.hpp"
#include "magmoid/involution.hpp"
#include "magmoid/pinv.hpp"

using namespace magmoid;

TEST_CASE("validate involutions on the fixtures") {
    CHECK(validate_involution(fixtures::z2(), identity_involution(fixtures::z2())));
    CHECK(validate_involution(fixtures::ex72(), identity_involution(fixtures::ex72())));

    auto lz = fixtures::left_zero();
    auto violations = involution_violations(lz, identity_involution(lz));
    REQUIRE(!violations.empty());
    CHECK(violations.front().kind == InvolutionViolation::NotAntihomomorphic);
    CHECK(violations.front().x == 0);
    CHECK(violations.front().y == 1);
}

TEST_CASE("unities are the fixed points") {
    CHECK(unities(fixtures::z2(), identity_involution(fixtures::z2())) == 0b11);
    CHECK(unities(fixtures::ex72(), identity_involution(fixtures::ex72())) == 0b11);
}

TEST_CASE("involution preinverses") {
    auto z = fixtures::z2();
    CHECK(involution_preinverse(z, identity_involution(z), 1) == 1);
    auto ex = fixtures::ex72();
    CHECK(involution_preinverse(ex, identity_involution(ex), 0) == 0);
    auto d = fixtures::discrete2();
    CHECK(involution_preinverse(d, identity_involution(d), 0) == 0);
}

TEST_CASE("find_involutions") {
    auto z = fixtures::z2();
    auto zi = find_involutions(z);
    REQUIRE(zi.size() == 1);
    CHECK(zi[0].map == std::vector<int>{0, 1});

    auto exi = find_involutions(fixtures::ex72());
    REQUIRE(exi.size() == 1);
    CHECK(exi[0].map == std::vector<int>{0, 1});

    CHECK(find_involutions(fixtures::left_zero()).empty());
}

namespace {

template <typename Fn>
void for_all(int n, Fn fn) {
    const int cells = n * n;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= n + 1;
    for (long code = 1; code < total; ++code) {
        Magmoid m = make_magmoid("m", n == 2 ? std::vector<std::string>{"a", "b"}
                                             : std::vector<std::string>{"a", "b", "c"});
        long c = code;
        for (int i = cells - 1; i >= 0; --i) {
            m.table[static_cast<size_t>(i)] = static_cast<int>(c % (n + 1)) - 1;
            c /= n + 1;
        }
        fn(m);
    }
}

}  // namespace

TEST_CASE("products with the star image are unities, exhaustively") {
    for (int n : {2, 3})
        for_all(n, [](const Magmoid& m) {
            for (const auto& inv : find_involutions(m)) {
                for (int x = 0; x < m.order(); ++x) {
                    int sx = inv.star(x);
                    if (sx == undef) continue;
                    int xs = m.cell(x, sx), sxx = m.cell(sx, x);
                    // (x x*)* = (x x*) whenever defined
                    if (xs != undef) CHECK(inv.star(xs) == xs);
                    if (sxx != undef) CHECK(inv.star(sxx) == sxx);
                }
            }
        });
}

TEST_CASE("(x x* x) = x makes the two products idempotents") {
    for_all(2, [](const Magmoid& m) {
        if (!associativity_flags(m).S3) return;
        for (const auto& inv : find_involutions(m)) {
            for (int x = 0; x < m.order(); ++x) {
                int sx = inv.star(x);
                int xs = m.cell(x, sx);
                if (xs == undef || m.cell(xs, x) != x) continue;
                CHECK(m.cell(xs, xs) == xs);
                int sxx = m.cell(sx, x);
                if (sxx != undef) CHECK(m.cell(sxx, sxx) == sxx);
            }
        }
    });
}

TEST_CASE("on groupoids the strong preinverse map is a total involution") {
    for (int n : {2, 3})
        for_all(n, [](const Magmoid& m) {
            ClassificationReport c = classify(m);
            if (!c.groupoid) return;
            InverseReport inv = inverse_report(m);
            Involution i;
            i.map.resize(m.order());
            for (int x = 0; x < m.order(); ++x)
                i.map[x] = set_elements(inv.strongI[x], m.order()).front();
            CHECK(validate_involution(m, i));
        });
}

// ---------------------------------------------------------------------------
// Moore-Penrose fixture

TEST_CASE("moore_penrose on the three reference matrices") {
    auto r1 = moore_penrose(Matrix{{1, 0}, {0, 0}});
    CHECK(approx_equal(r1.pinv, Matrix{{1, 0}, {0, 0}}, 1e-9));

    auto r2 = moore_penrose(Matrix{{2}});
    CHECK(approx_equal(r2.pinv, Matrix{{0.5}}, 1e-9));

    auto r3 = moore_penrose(Matrix{{1, 2}});
    CHECK(r3.pinv.rows == 2);
    CHECK(r3.pinv.cols == 1);
    CHECK(approx_equal(r3.pinv, Matrix{{0.2}, {0.4}}, 1e-9));
}

TEST_CASE("penrose conditions and fixture membership") {
    Matrix a{{1, 2}, {3, 4}, {5, 6}};
    auto r = moore_penrose(a);
    CHECK(penrose_conditions_hold(a, r.pinv, 1e-9));
    CHECK(r.fixture.transpose_closed());
    int ai = r.fixture.find(a);
    REQUIRE(ai >= 0);
    auto pre = r.fixture.involution_preinverse(ai);
    REQUIRE(pre.has_value());
    CHECK(approx_equal(r.fixture.members[static_cast<size_t>(*pre)], r.pinv, 1e-9));
}

TEST_CASE("square invertible input recovers the ordinary inverse") {
    Matrix a{{1, 2}, {3, 4}};
    auto r = moore_penrose(a);
    Matrix inv{{-2, 1}, {1.5, -0.5}};
    CHECK(max_norm_diff(r.pinv, inv) <= 1e-9);
}

TEST_CASE("zero matrix maps to its transpose") {
    auto r = moore_penrose(Matrix{{0, 0}, {0, 0}, {0, 0}});
    CHECK(r.pinv.rows == 2);
    CHECK(r.pinv.cols == 3);
    CHECK(max_norm_diff(r.pinv, Matrix{{0, 0, 0}, {0, 0, 0}}) == 0.0);
}

TEST_CASE("fixture unities are the symmetric members") {
    MatrixFixture f;
    f.add(Matrix{{1, 2}, {2, 1}});
    f.add(Matrix{{1, 2}, {3, 4}});
    for (int i : f.unity_indices()) CHECK(is_symmetric(f.members[static_cast<size_t>(i)], f.tol));
    CHECK(f.unity_indices().size() == 1);
}

TEST_CASE("matrix inversion validates as a partial involution inside a fixture") {
    MatrixFixture f;
    f.add(Matrix{{1, 2}, {3, 4}});
    f.add(Matrix{{2, 0}, {0, 2}});
    f.add(Matrix{{1, 0, 0}});  // not square: outside the partial map's domain
    CHECK(f.inversion_is_partial_involution());
}

TEST_CASE("size guard") {
    Matrix big(4, 4);
    CHECK_THROWS_AS(moore_penrose(big), std::invalid_argument);
}
