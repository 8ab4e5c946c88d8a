#include <doctest.h>

#include "corep/group.hpp"
#include "test_support.hpp"

using namespace corep;
using namespace testsupport;

namespace {
const Tolerance kTol{};

GroupElement antilinear(const CMatrix& m) { return GroupElement{m, true, {}}; }
}

TEST_CASE("compose follows the antilinear twist") {
    const GroupElement k = antilinear(identity_matrix(2));
    const GroupElement kk = compose(k, k);
    CHECK(!kk.antilinear);
    CHECK(max_abs_diff(kk.matrix, identity_matrix(2)) == 0.0);

    const GroupElement theta = antilinear(m2(0, 1, -1, 0));
    const GroupElement theta2 = compose(theta, theta);
    CHECK(!theta2.antilinear);
    CHECK(max_abs_diff(theta2.matrix, -identity_matrix(2)) == 0.0);

    const GroupElement g{rot2(0.7), false, {1}};
    const GroupElement ge = compose(g, identity_element(2));
    CHECK(max_abs_diff(ge.matrix, g.matrix) == 0.0);
    CHECK(!ge.antilinear);

    CHECK_THROWS_AS(compose(g, identity_element(3)), ShapeError);
}

TEST_CASE("inverse_element inverts antilinear elements too") {
    const GroupElement theta = antilinear(m2(0, 1, -1, 0));
    const GroupElement inv = inverse_element(theta, kTol);
    CHECK(inv.antilinear);
    const GroupElement product = compose(theta, inv);
    CHECK(!product.antilinear);
    CHECK(max_abs_diff(product.matrix, identity_matrix(2)) < 1e-14);
}

TEST_CASE("finite closure of small cyclic groups") {
    const auto c4 = close_finite({gen(m1(Complex(0, 1)), 1)}, 16, kTol);
    REQUIRE(c4.size() == 4);
    // breadth-first, lexicographic words
    CHECK(c4[0].word == Word{});
    CHECK(c4[1].word == Word{1});
    CHECK(c4[2].word == Word{1, 1});
    CHECK(c4[3].word == Word{1, 1, 1});

    const auto z2 = close_finite({gen(m1(-1), 1)}, 16, kTol);
    CHECK(z2.size() == 2);

    // Oracle for the 3-cycle: powers of the rotation collected by hand.
    const CMatrix r = rot2(2.0 * M_PI / 3.0);
    const auto c3 = close_finite({gen(r, 1)}, 16, kTol);
    CHECK(c3.size() == 3);
    std::vector<CMatrix> expected{identity_matrix(2), r, CMatrix(r * r)};
    for (const auto& e : c3) {
        bool found = false;
        for (const auto& x : expected) found = found || max_abs_diff(e.matrix, x) < 1e-12;
        CHECK(found);
    }
}

TEST_CASE("finite closure is closed under products") {
    const auto g = make_c4v();
    const auto closure = element_set(g, kTol);
    CHECK(closure.size() == 8);
    for (const auto& x : closure) {
        for (const auto& y : closure) {
            const GroupElement p = compose(x, y);
            CHECK(find_matching_element(closure, p.matrix, 1e-10) != nullptr);
        }
    }
}

TEST_CASE("closure that does not terminate hits the cap") {
    CHECK_THROWS_AS(close_finite({gen(rot2(1.0), 1)}, 64, kTol), StructureError);
}

TEST_CASE("sampling is deterministic and spans the right set") {
    auto g = make_su2();
    const auto s1 = sample_elements(g);
    const auto s2 = sample_elements(g);
    REQUIRE(s1.size() == s2.size());
    CHECK(s1.size() == 64 + 2 + 1);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i].word == s2[i].word);
        CHECK(max_abs_diff(s1[i].matrix, s2[i].matrix) == 0.0);
    }
    CHECK(s1[0].word == Word{});
    CHECK(s1[1].word == Word{1});
    CHECK(s1[2].word == Word{2});

    g.sampling.sample_count = 0;
    CHECK(sample_elements(g).size() == 3);  // identity + the two generators

    // Different seed, different tail.
    auto g2 = make_su2(43);
    const auto s3 = sample_elements(g2);
    bool any_difference = false;
    for (std::size_t i = 3; i < s3.size(); ++i) any_difference |= (s3[i].word != s1[i].word);
    CHECK(any_difference);
}

TEST_CASE("sampled special-linear words keep unit determinant") {
    MagneticGroup g;
    g.kind = GroupKind::Sampled;
    g.unitary_generators = {gen(m2(1, 1, 0, 1), 1), gen(m2(1, 0, 1, 1), 2),
                            gen(m2(2, 0, 0, 0.5), 3)};
    g.generator_names = {"u1", "u2", "w"};
    g.a0 = {identity_matrix(2), true, {}};
    g.a0_squared_word = {};
    g.sampling = {64, 8, 42};
    const auto samples = sample_elements(g);
    CHECK(samples.size() == 64 + 3 + 1);
    for (const auto& e : samples) {
        CHECK(std::abs(e.matrix.determinant() - Complex(1.0)) <
              1e-9 * std::max(1.0, max_abs(e.matrix)));
    }
}

TEST_CASE("conjugation by a0") {
    const auto c4 = make_c4();
    const GroupElement r{rot2(M_PI / 2.0), false, {1}};
    // Plain conjugation sends a real rotation to itself.
    CHECK(max_abs_diff(conjugate_by_a0(c4, r, kTol).matrix, r.matrix) < 1e-15);

    CHECK(max_abs_diff(conjugate_by_a0(c4, identity_element(2), kTol).matrix,
                       identity_matrix(2)) < 1e-15);

    // Spin rotations about z commute with time reversal.
    const auto su2 = make_su2();
    const GroupElement d{spin_rz(0.37), false, {}};
    CHECK(max_abs_diff(conjugate_by_a0(su2, d, kTol).matrix, d.matrix) < 1e-14);

    CHECK_THROWS_AS(conjugate_by_a0(c4, GroupElement{identity_matrix(2), true, {}}, kTol),
                    Error);
}

TEST_CASE("composition is associative on sampled triples") {
    const auto su2 = make_su2();
    const auto samples = sample_elements(su2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 32; ++t) {
        const auto& x = samples[rng() % samples.size()];
        const auto& y = samples[rng() % samples.size()];
        const auto& z = samples[rng() % samples.size()];
        const CMatrix left = compose(compose(x, y), z).matrix;
        const CMatrix right = compose(x, compose(y, z)).matrix;
        CHECK(max_abs_diff(left, right) < 1e-12);
    }
}

TEST_CASE("a0 conjugation is an automorphism on samples") {
    const auto su2 = make_su2();
    const auto samples = sample_elements(su2);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 16; ++t) {
        const auto& x = samples[rng() % samples.size()];
        const auto& y = samples[rng() % samples.size()];
        const CMatrix lhs = conjugate_by_a0(su2, compose(x, y), kTol).matrix;
        const CMatrix rhs =
            (conjugate_by_a0(su2, x, kTol).matrix * conjugate_by_a0(su2, y, kTol).matrix);
        CHECK(max_abs_diff(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("group validation checks the declared a0 square") {
    auto g = make_double_group();
    CHECK_NOTHROW(validate(g, kTol));
    const GroupElement sq = compose(g.a0, g.a0);
    CHECK(max_abs_diff(sq.matrix, carrier_matrix(g, g.a0_squared_word, kTol)) < 1e-15);

    g.a0_squared_word = {};  // now claims Theta^2 = E, which is false
    CHECK_THROWS_AS(validate(g, kTol), StructureError);

    auto h = make_c4();
    h.a0.antilinear = false;
    CHECK_THROWS_AS(validate(h, kTol), StructureError);
}

TEST_CASE("conjugated generators resolve to words") {
    const auto c4 = make_c4();
    const auto closure = element_set(c4, kTol);
    const auto conj = resolve_a0_conjugation(c4, closure, kTol);
    REQUIRE(conj.backward.size() == 1);
    CHECK(conj.backward[0] == Word{1});
    CHECK(conj.forward[0] == Word{1});

    const auto su2 = make_su2();
    const auto samples = sample_elements(su2);
    const auto sconj = resolve_a0_conjugation(su2, samples, kTol);
    CHECK(sconj.backward[0] == Word{1});
    CHECK(sconj.backward[1] == Word{2});

    // Moving a0 to a0 * g lands the conjugates on g^-1 (...) g words, which
    // the sampled-group search still resolves.
    auto moved = su2;
    const GroupElement& g = samples[10];
    moved.a0 = compose(moved.a0, g);
    moved.a0_squared_word = concat_words(
        concat_words(su2.a0_squared_word, sconj.apply(g.word)), g.word);
    CHECK_NOTHROW(validate(moved, kTol));
    const auto mconj = resolve_a0_conjugation(moved, samples, kTol);
    const CMatrix expect =
        (inverse(moved.a0.matrix, kTol) * su2.unitary_generators[0].matrix *
         moved.a0.matrix)
            .conjugate();
    CHECK(max_abs_diff(carrier_matrix(moved, mconj.backward[0], kTol), expect) < 1e-9);
}

TEST_CASE("a conjugate falling outside the closure is a structural error") {
    // Klein four group of diagonal sign matrices; a0 = [[1,1],[0,-1]] K
    // squares to the identity, but conjugating diag(1,-1) by it gives
    // [[1,2],[0,-1]], which is not in the group.
    MagneticGroup g;
    g.unitary_generators = {gen(m2(-1, 0, 0, -1), 1), gen(m2(1, 0, 0, -1), 2)};
    g.generator_names = {"inv", "mz"};
    g.a0 = {m2(1, 1, 0, -1), true, {}};
    g.a0_squared_word = {};
    CHECK_NOTHROW(validate(g, kTol));
    const auto closure = element_set(g, kTol);
    CHECK(closure.size() == 4);
    CHECK_THROWS_AS(resolve_a0_conjugation(g, closure, kTol), StructureError);
}

TEST_CASE("word labels") {
    CHECK(word_label({}, {"c4"}) == "e");
    CHECK(word_label({1, 1}, {"c4"}) == "c4*c4");
    CHECK(word_label({-2, 1}, {"c4", "m"}) == "m^-1*c4");
}
