#include <doctest.h>

#include "test_util.hpp"

#include <array>

using namespace lefib;
using testutil::curve;

namespace {

// Independent oracle: naive long-long matrices, built from the twist formula
// by hand, kept apart from the library path it checks.
using Mat2 = std::array<std::array<long long, 2>, 2>;

Mat2 mul2(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

constexpr Mat2 kTa{{{1, -1}, {0, 1}}};   // x -> x + <x,a> a with a = (1,0)
constexpr Mat2 kTb{{{1, 0}, {1, 1}}};    // b = (0,1)

bool matches(const SymplecticMatrix& m, const Mat2& o) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (m.matrix().at(i, j) != o[i][j])
                return false;
    return true;
}

}  // namespace

TEST_CASE("transvection matrices on the torus") {
    FiberSurface torus(1, 0);
    CHECK(matches(transvection_matrix(SignedTwist(curve(torus, {1, 0}), 1), torus), kTa));
    CHECK(matches(transvection_matrix(SignedTwist(curve(torus, {0, 1}), 1), torus), kTb));
    CHECK(matches(transvection_matrix(SignedTwist(curve(torus, {1, 0}), -1), torus),
                  Mat2{{{1, 1}, {0, 1}}}));
}

TEST_CASE("transvections are symplectic for random curves up to genus 4") {
    std::mt19937_64 rng(23);
    for (int g = 1; g <= 4; ++g) {
        FiberSurface f(g, 0);
        for (int i = 0; i < 25; ++i) {
            HomologyClass h = testutil::random_class(f, rng);
            SignedTwist t(CurveClass::on(f, "c", h.coords), (i % 2) ? 1 : -1);
            CHECK(is_symplectic(transvection_matrix(t, f).matrix()));
        }
    }
}

TEST_CASE("a twist about a trivial class acts as the identity, with a warning") {
    FiberSurface f(2, 0);
    bool warn = false;
    SymplecticMatrix m =
        transvection_matrix(SignedTwist(CurveClass::on(f, "z", {Int(0), Int(0), Int(0), Int(0)}), 1), f, &warn);
    CHECK(warn);
    CHECK(m.is_identity());
}

TEST_CASE("word evaluation") {
    FiberSurface g2(2, 0);
    CHECK(word_to_matrix(TwistWord(), g2).is_identity());

    FiberSurface torus(1, 0);
    SignedTwist ta(curve(torus, {1, 0}), 1);
    SignedTwist tb(curve(torus, {0, 1}), 1);

    // oracle: the sixth power of T_a T_b is the identity
    Mat2 p{{{1, 0}, {0, 1}}};
    for (int i = 0; i < 6; ++i)
        p = mul2(p, mul2(kTa, kTb));
    CHECK(p == Mat2{{{1, 0}, {0, 1}}});

    TwistWord w;
    for (int i = 0; i < 6; ++i) {
        w.letters.push_back(ta);
        w.letters.push_back(tb);
    }
    CHECK(word_to_matrix(w, torus).is_identity());

    // oracle: both braid words multiply to [[0,-1],[1,0]]
    CHECK(mul2(mul2(kTa, kTb), kTa) == Mat2{{{0, -1}, {1, 0}}});
    CHECK(mul2(mul2(kTb, kTa), kTb) == Mat2{{{0, -1}, {1, 0}}});
    TwistWord aba = TwistWord({ta, tb, ta});
    TwistWord bab = TwistWord({tb, ta, tb});
    CHECK(matches(word_to_matrix(aba, torus), Mat2{{{0, -1}, {1, 0}}}));
    CHECK(word_to_matrix(aba, torus) == word_to_matrix(bab, torus));
}

TEST_CASE("word evaluation is a monoid homomorphism and respects inverses") {
    std::mt19937_64 rng(37);
    for (int g : {1, 2}) {
        FiberSurface f(g, 0);
        for (int i = 0; i < 20; ++i) {
            TwistWord u = testutil::random_word(f, rng, 4);
            TwistWord v = testutil::random_word(f, rng, 3);
            CHECK(word_to_matrix(u.concat(v), f) == word_to_matrix(u, f) * word_to_matrix(v, f));
            CHECK(word_to_matrix(u.inverse(), f) == word_to_matrix(u, f).inverse());
        }
    }
}

TEST_CASE("words with mixed fibers are rejected") {
    FiberSurface torus(1, 0);
    FiberSurface g2(2, 0);
    TwistWord w;
    w.letters.emplace_back(curve(torus, {1, 0}), 1);
    w.letters.emplace_back(curve(g2, {1, 0, 0, 0}), 1);
    CHECK_THROWS_AS(word_to_matrix(w, torus), DimensionError);
}

TEST_CASE("relation library: symplectic equality of both sides") {
    for (auto [name, genus] : std::initializer_list<std::pair<const char*, int>>{
             {"braid", 1}, {"braid", 2}, {"braid", 3}, {"chain", 1}, {"chain", 2},
             {"lantern", 2}, {"lantern", 3}, {"hyperelliptic", 2}}) {
        FiberSurface f(genus, 0);
        auto [lhs, rhs] = relation_library(name, f);
        CAPTURE(name);
        CAPTURE(genus);
        CHECK(word_to_matrix(lhs, f) == word_to_matrix(rhs, f));
    }
}

TEST_CASE("relation library: shapes and error cases") {
    FiberSurface torus(1, 0);
    auto [b_lhs, b_rhs] = relation_library("braid", torus);
    CHECK(b_lhs.size() == 3);
    CHECK(b_rhs.size() == 3);

    auto [c_lhs, c_rhs] = relation_library("chain", torus);
    CHECK(c_lhs.size() == 12);
    CHECK(c_rhs.empty());

    FiberSurface g2(2, 0);
    auto [l_lhs, l_rhs] = relation_library("lantern", g2);
    CHECK(l_lhs.size() == 4);
    CHECK(l_rhs.size() == 3);
    for (const SignedTwist& t : l_lhs.letters) {
        CHECK(t.sign == 1);
        CHECK_FALSE(t.curve.homology.is_zero());
    }
    for (const SignedTwist& t : l_rhs.letters) {
        CHECK(t.sign == 1);
        CHECK_FALSE(t.curve.homology.is_zero());
    }

    CHECK_THROWS_AS(relation_library("lantern", torus), UnsupportedError);
    CHECK_THROWS_AS(relation_library("hyperelliptic", FiberSurface(3, 0)), UnsupportedError);
    CHECK_THROWS_AS(relation_library("", g2), std::invalid_argument);
    CHECK_THROWS_AS(relation_library("nonsense", g2), std::invalid_argument);
}

TEST_CASE("presentation validation") {
    FiberSurface torus(1, 0);
    Presentation p;
    p.fiber = torus;
    p.generators = {curve(torus, {1, 0}), curve(torus, {0, 1})};
    auto [braid_lhs, braid_rhs] = relation_library("braid", torus);
    auto [chain_lhs, chain_rhs] = relation_library("chain", torus);
    p.relator_names = {"braid", "chain"};
    p.relators = {braid_lhs.concat(braid_rhs.inverse()), chain_lhs};
    PresentationReport rep = validate_presentation(p);
    CHECK(rep.ok());
    CHECK(rep.relator_checks.size() == 2);

    SUBCASE("a relator that is a single twist fails") {
        TwistWord bad;
        bad.letters.emplace_back(curve(torus, {1, 0}), 1);
        p.relators.push_back(bad);
        p.relator_names.push_back("bad");
        PresentationReport r2 = validate_presentation(p);
        CHECK_FALSE(r2.ok());
        CHECK_FALSE(r2.relator_checks.back().pass);
    }

    SUBCASE("a homologically trivial generator fails") {
        p.generators.push_back(CurveClass::on(torus, "z", {Int(0), Int(0)}));
        PresentationReport r2 = validate_presentation(p);
        CHECK_FALSE(r2.ok());
        CHECK_FALSE(r2.generator_checks.back().pass);
    }
}

TEST_CASE("class normalization and canonical names") {
    HomologyClass h({Int(0), Int(-2), Int(1), Int(0)});
    HomologyClass n = normalized_class(h);
    CHECK(n.coords == IntVec{Int(0), Int(2), Int(-1), Int(0)});
    CHECK(canonical_curve_name(n) == "c_0_2_m1_0");
}
