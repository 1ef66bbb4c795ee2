#include <doctest.h>

#include "fixtures.hpp"
#include "spalg/twist.hpp"

using namespace spalg;

TEST_CASE("twisting by the identity changes nothing") {
    Field f;
    std::uint64_t seed = 11;
    Tensor t = fixtures::random_tensor(2, 3, f, seed);
    CHECK(twist_tensor(t, Matrix::identity(2, f)) == t);
    CHECK_THROWS_WITH_AS(twist_tensor(t, Matrix::identity(3, f)),
                         "matrix does not act on this space", Error);
}

TEST_CASE("twisting by a scalar matrix scales by a triangular power") {
    Field f;
    Tensor w = fixtures::symmetric3(f);
    Matrix two = Matrix::identity(3, f) * f.of(2);
    // positions contribute sigma^2, sigma^1, sigma^0
    CHECK(twist_tensor(w, two) == w * f.of(8));
}

TEST_CASE("twisted potentials of the symmetric fixture") {
    Field f;
    Tensor w = fixtures::symmetric3(f);
    Matrix s1 = fixtures::perm_matrix({0, 2, 1}, f);  // swap y,z
    Matrix s2 = fixtures::perm_matrix({1, 2, 0}, f);  // x->y->z->x

    Tensor w1 = fixtures::from_terms(3, 3, f,
                                     {{{0, 2, 2}, 1},
                                      {{0, 1, 1}, 1},
                                      {{1, 0, 2}, 1},
                                      {{1, 1, 0}, 1},
                                      {{2, 0, 1}, 1},
                                      {{2, 2, 0}, 1}});
    Tensor w2 = fixtures::from_terms(3, 3, f,
                                     {{{2, 2, 2}, 1},
                                      {{2, 0, 1}, 1},
                                      {{0, 1, 2}, 1},
                                      {{0, 0, 0}, 1},
                                      {{1, 1, 1}, 1},
                                      {{1, 2, 0}, 1}});
    CHECK(twist_tensor(w, s1) == w1);
    CHECK(twist_tensor(w, s2) == w2);

    Presentation p = fixtures::pres_of(w, 2);
    std::vector<Tensor> r1{
        fixtures::from_terms(3, 2, f, {{{2, 2}, 1}, {{1, 1}, 1}}),
        fixtures::from_terms(3, 2, f, {{{1, 0}, 1}, {{0, 2}, 1}}),
        fixtures::from_terms(3, 2, f, {{{0, 1}, 1}, {{2, 0}, 1}}),
    };
    std::vector<Tensor> r2{
        fixtures::from_terms(3, 2, f, {{{1, 2}, 1}, {{0, 0}, 1}}),
        fixtures::from_terms(3, 2, f, {{{2, 0}, 1}, {{1, 1}, 1}}),
        fixtures::from_terms(3, 2, f, {{{0, 1}, 1}, {{2, 2}, 1}}),
    };
    CHECK(twist_subspace(p.R, s1) == TensorSubspace::span(r1));
    CHECK(twist_subspace(p.R, s2) == TensorSubspace::span(r2));

    // the twisted relations are the derivations of the twisted potential
    for (const Matrix& s : {s1, s2}) {
        Potential tw = twist_potential(Potential(w), s).normalized;
        CHECK(derivation_quotient(tw, 1).R == twist_subspace(p.R, s));
    }
}

TEST_CASE("twist reports of the symmetric fixture") {
    Field f;
    Potential w(fixtures::symmetric3(f));
    Presentation p = fixtures::pres_of(w.tensor(), 2);
    Matrix nu = nakayama_via_phi(w, 3);
    REQUIRE(nu.is_identity());

    Matrix s1 = fixtures::perm_matrix({0, 2, 1}, f);
    TwistReport rep1 = twist_report(w, p, 3, nu, s1);
    CHECK(rep1.nakayama_twisted == s1);
    CHECK_FALSE(rep1.cy_status);
    CHECK(rep1.hdet_preserved);
    CHECK_FALSE(cy_twist_criterion(s1, w, nu));

    Matrix s2 = fixtures::perm_matrix({1, 2, 0}, f);
    TwistReport rep2 = twist_report(w, p, 3, nu, s2);
    CHECK(rep2.nakayama_twisted.is_identity());
    CHECK(rep2.cy_status);
    CHECK(rep2.hdet_preserved);
    CHECK(cy_twist_criterion(s2, w, nu));

    // scalar twists satisfy the criterion automatically
    Matrix two = Matrix::identity(3, f) * f.of(2);
    CHECK(cy_twist_criterion(two, w, nu));
}

TEST_CASE("criterion demands a calabi-yau source") {
    Field f;
    Potential wq(fixtures::quantum_plane(f.of(2)));
    Matrix nu = nakayama_via_phi(wq, 2);
    CHECK_THROWS_WITH_AS(cy_twist_criterion(Matrix::identity(2, f), wq, nu),
                         "criterion requires Calabi-Yau source", Error);
}

TEST_CASE("twisting the quantum plane rescales its parameter") {
    Field f;
    Potential wq(fixtures::quantum_plane(f.of(2)));
    Presentation p = fixtures::pres_of(wq.tensor(), 2);
    Matrix nu = nakayama_via_phi(wq, 2);
    Matrix s = fixtures::diag({f.of(3), f.of(1)});

    TwistReport rep = twist_report(wq, p, 2, nu, s);
    CHECK(rep.w_twisted_raw == fixtures::from_terms(2, 2, f, {{{0, 1}, 3}, {{1, 0}, -2}}));
    // the twist is the quantum plane at q' = 2/3, whose own Nakayama map
    // is diag(1/q', q')
    CHECK(rep.nakayama_twisted == fixtures::diag({f.of(3, 2), f.of(2, 3)}));
    CHECK_FALSE(rep.cy_status);
    CHECK(rep.hdet_preserved);
    // the original Nakayama map survives as an automorphism of the twist
    CHECK(apply_factorwise(nu, rep.w_twisted_raw) == rep.w_twisted_raw);
}

TEST_CASE("twisting the commutative plane by the swap") {
    Field f;
    Potential w(fixtures::comm_plane(f));
    Presentation p = fixtures::pres_of(w.tensor(), 2);
    Matrix nu = nakayama_via_phi(w, 2);
    Matrix swap = fixtures::perm_matrix({1, 0}, f);

    TwistReport rep = twist_report(w, p, 2, nu, swap);
    CHECK(rep.w_twisted_raw == fixtures::from_terms(2, 2, f, {{{1, 1}, 1}, {{0, 0}, -1}}));
    CHECK(rep.nakayama_twisted == Matrix::identity(2, f) * f.of(-1));
    CHECK_FALSE(rep.cy_status);
    CHECK(rep.hdet_preserved);
    CHECK_FALSE(cy_twist_criterion(swap, w, nu));
}

TEST_CASE("a wrong nakayama map is rejected") {
    Field f;
    Potential w(fixtures::symmetric3(f));
    Presentation p = fixtures::pres_of(w.tensor(), 2);
    Matrix wrong = fixtures::diag({f.of(1), f.of(1), f.of(2)});
    CHECK_THROWS_WITH_AS(twist_report(w, p, 3, wrong, Matrix::identity(3, f)),
                         "twisted potential fails its Nakayama identity", Error);
}

TEST_CASE("twisting commutes with taking derivatives") {
    std::uint64_t seed = 23;
    for (const Field& f : {Field(), Field::prime(7)}) {
        std::vector<Tensor> gens{fixtures::random_tensor(3, 3, f, seed),
                                 fixtures::random_tensor(3, 3, f, seed)};
        TensorSubspace w = TensorSubspace::span(3, 3, f, gens);
        Matrix s = fixtures::random_invertible(3, f, seed);
        for (std::size_t i = 0; i <= 3; ++i) CHECK(twist_commutes_with_partial(w, s, i));
        CHECK_THROWS_WITH_AS(twist_commutes_with_partial(w, s, 4),
                             "derivative order exceeds the tensor order", Error);
    }
}

TEST_CASE("iterated twists compose") {
    Field f7 = Field::prime(7);
    std::uint64_t seed = 5;
    Tensor t = fixtures::random_tensor(3, 3, f7, seed);
    Matrix s = fixtures::random_invertible(3, f7, seed);
    CHECK(twist_tensor(twist_tensor(t, s), s) == twist_tensor(t, s * s));

    Matrix a = fixtures::diag({f7.of(2), f7.of(3), f7.of(5)});
    Matrix b = fixtures::diag({f7.of(4), f7.of(1), f7.of(6)});
    CHECK(twist_tensor(twist_tensor(t, a), b) == twist_tensor(t, a * b));
}

TEST_CASE("the twisting matrix stays an automorphism of the twist") {
    Field f;
    Tensor w = fixtures::symmetric3(f);
    for (const auto& img : {std::vector<std::size_t>{0, 2, 1}, std::vector<std::size_t>{1, 2, 0}}) {
        Matrix s = fixtures::perm_matrix(img, f);
        Potential tw = twist_potential(Potential(w), s).normalized;
        CHECK(is_automorphism(s, fixtures::pres_of(tw.tensor(), 2), tw).verdict);
    }
}

TEST_CASE("three-variable polynomial potential") {
    Field f;
    Potential w = poly3_potential(f);
    CHECK(w.ell() == 3);
    CHECK(is_calabi_yau(w, 3));
    CHECK(nakayama_via_phi(w, 3).is_identity());
    // relations are the three commutators
    Presentation p = fixtures::pres_of(w.tensor(), 2);
    std::vector<Tensor> comm{
        fixtures::from_terms(3, 2, f, {{{1, 2}, 1}, {{2, 1}, -1}}),
        fixtures::from_terms(3, 2, f, {{{2, 0}, 1}, {{0, 2}, -1}}),
        fixtures::from_terms(3, 2, f, {{{0, 1}, 1}, {{1, 0}, -1}}),
    };
    CHECK(p.R == TensorSubspace::span(comm));
}

TEST_CASE("polynomial-ring twist classifier over the rationals") {
    Field f;
    Poly3Verdict id_case = poly3_cy_twist_classifier(Matrix::identity(3, f));
    CHECK(id_case.cy);
    REQUIRE(id_case.xi.has_value());
    CHECK(id_case.xi->is_one());
    REQUIRE(id_case.target_relations.has_value());
    CHECK(*id_case.target_relations == fixtures::pres_of(poly3_potential(f).tensor(), 2).R);

    Poly3Verdict distinct = poly3_cy_twist_classifier(fixtures::diag({f.of(1), f.of(2), f.of(3)}));
    CHECK_FALSE(distinct.cy);
    CHECK_FALSE(distinct.xi.has_value());

    // only the trivial cube root exists over the rationals
    Poly3Verdict scaled = poly3_cy_twist_classifier(fixtures::diag({f.of(5), f.of(5), f.of(5)}));
    CHECK(scaled.cy);
    CHECK(scaled.xi->is_one());
}

TEST_CASE("polynomial-ring twist classifier in characteristic seven") {
    Field f = Field::prime(7);
    // 2 is a primitive cube root of unity mod 7
    Matrix s = fixtures::diag({f.of(3), f.of(6), f.of(5)});  // 3*diag(1,2,4)
    Poly3Verdict v = poly3_cy_twist_classifier(s);
    CHECK(v.cy);
    REQUIRE(v.xi.has_value());
    CHECK(*v.xi == f.of(2));

    // the reported target presentation is the derivation quotient of the twist
    Potential tw = twist_potential(poly3_potential(f), s).normalized;
    REQUIRE(v.target_relations.has_value());
    CHECK(*v.target_relations == derivation_quotient(tw, 1).R);

    CHECK(poly3_cy_twist_classifier(fixtures::diag({f.of(1), f.of(2), f.of(4)})).cy);
    CHECK_FALSE(poly3_cy_twist_classifier(fixtures::diag({f.of(1), f.of(2), f.of(3)})).cy);
}

TEST_CASE("classifier handles non-diagonal automorphisms") {
    Field f;
    Poly3Verdict cycle = poly3_cy_twist_classifier(fixtures::perm_matrix({1, 2, 0}, f));
    CHECK(cycle.cy);
    CHECK_FALSE(cycle.xi.has_value());  // verdict only; no diagonal parameter

    Poly3Verdict swap = poly3_cy_twist_classifier(fixtures::perm_matrix({1, 0, 2}, f));
    CHECK_FALSE(swap.cy);
}

TEST_CASE("classifier input validation") {
    Field f;
    CHECK_THROWS_WITH_AS(poly3_cy_twist_classifier(Matrix::identity(2, f)),
                         "classifier expects a 3×3 matrix", Error);
    CHECK_THROWS_WITH_AS(poly3_cy_twist_classifier(Matrix(3, 3, f)),
                         "automorphism candidate is not invertible", Error);
}
