#include <doctest.h>

#include "fixtures.hpp"
#include "spalg/ext.hpp"
#include "spalg/symmetry.hpp"

using namespace spalg;

namespace {

ExtFrobenius make_ext(const Tensor& w, std::size_t m, std::size_t d) {
    Potential p(w);
    GradedAlgebra alg(fixtures::pres_of(w, m));
    return ExtFrobenius(alg, p, d);
}

}  // namespace

TEST_CASE("ext dimensions follow the dual components") {
    ExtFrobenius comm = make_ext(fixtures::comm_plane(), 2, 2);
    CHECK(comm.ext_dim(0) == 1);
    CHECK(comm.ext_dim(1) == 2);
    CHECK(comm.ext_dim(2) == 1);

    ExtFrobenius cubic = make_ext(fixtures::cubic_w(), 3, 3);
    CHECK(cubic.ext_dim(0) == 1);
    CHECK(cubic.ext_dim(1) == 2);
    CHECK(cubic.ext_dim(2) == 2);
    CHECK(cubic.ext_dim(3) == 1);

    ExtFrobenius sym = make_ext(fixtures::symmetric3(), 2, 3);
    CHECK(sym.ext_dim(1) == 3);
    CHECK(sym.ext_dim(2) == 3);
    CHECK(sym.ext_dim(3) == 1);
}

TEST_CASE("degree profile consistency is enforced") {
    Potential w(fixtures::comm_plane());
    GradedAlgebra alg(fixtures::pres_of(w.tensor(), 2));
    CHECK_THROWS_WITH_AS(ExtFrobenius(alg, w, 3), "homological degree profile is inconsistent",
                         Error);
}

TEST_CASE("gram matrices of the plane fixtures") {
    Field f;
    ExtFrobenius comm = make_ext(fixtures::comm_plane(), 2, 2);
    const Matrix& g1 = comm.gram(1);
    CHECK(g1.at(0, 0).is_zero());
    CHECK(g1.at(0, 1) == f.of(-1));
    CHECK(g1.at(1, 0) == f.of(1));
    CHECK(g1.at(1, 1).is_zero());

    ExtFrobenius qp = make_ext(fixtures::quantum_plane(f.of(2)), 2, 2);
    const Matrix& h1 = qp.gram(1);
    CHECK(h1.at(0, 1) == f.of(-1));
    CHECK(h1.at(1, 0) == f.of(2));

    for (std::size_t i = 0; i <= 2; ++i) {
        CHECK(comm.gram(i).is_invertible());
        CHECK(qp.gram(i).is_invertible());
    }
}

TEST_CASE("pairing matches the gram entries and respects degrees") {
    Field f;
    ExtFrobenius comm = make_ext(fixtures::comm_plane(), 2, 2);
    ExtClass xd = comm.dual_basis_class(1, 0);
    ExtClass yd = comm.dual_basis_class(1, 1);
    CHECK(comm.pairing(xd, yd) == f.of(-1));
    CHECK(comm.pairing(yd, xd) == f.of(1));
    CHECK(comm.pairing(xd, xd).is_zero());
    CHECK(comm.pairing(comm.unit(), comm.top()) == f.of(1));
    CHECK_THROWS_WITH_AS(comm.pairing(comm.unit(), comm.unit()),
                         "Frobenius pairing requires complementary degrees", Error);
}

TEST_CASE("products anticommute in the quadratic case") {
    Field f;
    ExtFrobenius comm = make_ext(fixtures::comm_plane(), 2, 2);
    ExtClass xd = comm.dual_basis_class(1, 0);
    ExtClass yd = comm.dual_basis_class(1, 1);

    ExtClass xy = comm.product(xd, yd);
    ExtClass yx = comm.product(yd, xd);
    REQUIRE(xy.coords.size() == 1);
    CHECK(xy.coords[0] == f.of(-1));
    CHECK(yx.coords[0] == f.of(1));
    CHECK(comm.product(xd, xd).coords[0].is_zero());

    ExtClass via_unit = comm.product(comm.unit(), xd);
    CHECK(via_unit.coords == xd.coords);

    CHECK_THROWS_WITH_AS(comm.product(comm.top(), comm.top()),
                         "product degree exceeds the global dimension", Error);
}

TEST_CASE("odd-degree products vanish for higher relation degree") {
    ExtFrobenius cubic = make_ext(fixtures::cubic_w(), 3, 3);
    ExtClass a = cubic.dual_basis_class(1, 0);
    ExtClass b = cubic.dual_basis_class(1, 1);
    ExtClass ab = cubic.product(a, b);
    for (const auto& c : ab.coords) CHECK(c.is_zero());

    // odd times even survives in general: w has an x(xy^2)-term, none for x(x^2y)
    ExtClass ae2 = cubic.product(a, cubic.dual_basis_class(2, 1));
    CHECK(ae2.i == 3);
    bool nonzero = false;
    for (const auto& c : ae2.coords) nonzero = nonzero || !c.is_zero();
    CHECK(nonzero);
    for (const auto& c : cubic.product(a, cubic.dual_basis_class(2, 0)).coords)
        CHECK(c.is_zero());
}

TEST_CASE("products pair associatively against the potential") {
    // <f, g.h> computed two ways: pairing(f, product(g,h)) vs gram data
    ExtFrobenius sym = make_ext(fixtures::symmetric3(), 2, 3);
    for (std::size_t r = 0; r < sym.ext_dim(1); ++r) {
        ExtClass f1 = sym.dual_basis_class(1, r);
        for (std::size_t s = 0; s < sym.ext_dim(2); ++s) {
            ExtClass f2 = sym.dual_basis_class(2, s);
            Scalar direct = sym.pairing(f1, f2);
            ExtClass prod = sym.product(f1, f2);
            // pairing with the unit reads off the top coefficient
            Scalar via_product = sym.pairing(sym.unit(), prod) * Field().sign(1 * 2);
            CHECK(direct == via_product);
        }
    }
}

TEST_CASE("mu fixes the unit and the top class") {
    Field f;
    CHECK(make_ext(fixtures::comm_plane(), 2, 2).mu_fixes_unit_and_top());
    CHECK(make_ext(fixtures::quantum_plane(f.of(2)), 2, 2).mu_fixes_unit_and_top());
    CHECK(make_ext(fixtures::cubic_w(), 3, 3).mu_fixes_unit_and_top());
    CHECK(make_ext(fixtures::symmetric3(), 2, 3).mu_fixes_unit_and_top());
}

TEST_CASE("mu oracles on the planes") {
    Field f;
    ExtFrobenius comm = make_ext(fixtures::comm_plane(), 2, 2);
    CHECK(comm.mu(1) == Matrix::identity(2, f) * f.of(-1));

    ExtFrobenius qp = make_ext(fixtures::quantum_plane(f.of(2)), 2, 2);
    CHECK(qp.mu(1) == Matrix::diagonal({f.of(-1, 2), f.of(-2)}));
    CHECK(qp.mu(0).is_identity());
    CHECK(qp.mu(2).is_identity());
}

TEST_CASE("shriek restricts along the dual filtration") {
    Field f;
    ExtFrobenius qp = make_ext(fixtures::quantum_plane(f.of(2)), 2, 2);
    Matrix nu = Matrix::diagonal({f.of(1, 2), f.of(2)});
    Matrix sh1 = qp.shriek(nu, 1);
    CHECK(sh1 == nu.transpose());

    Matrix swap = fixtures::perm_matrix({1, 0}, f);
    CHECK_THROWS_WITH_AS(qp.shriek(swap, 2), "automorphism does not preserve the dual filtration",
                         Error);
}

TEST_CASE("the frobenius nakayama map is the shriek of the signed nakayama map") {
    Field f;
    auto run = [&](const Tensor& w, std::size_t m, std::size_t d) {
        ExtFrobenius e = make_ext(w, m, d);
        Matrix nu = nakayama_via_phi(Potential(w), d);
        CHECK(e.verify_nakayama_identity(nu));
    };
    run(fixtures::comm_plane(), 2, 2);
    run(fixtures::quantum_plane(f.of(2)), 2, 2);
    run(fixtures::quantum_plane(f.of(3)), 2, 2);
    run(fixtures::cubic_w(), 3, 3);
    run(fixtures::symmetric3(), 2, 3);
}

TEST_CASE("the pairing scales by hdet under shrieked automorphisms") {
    Field f;
    ExtFrobenius qp = make_ext(fixtures::quantum_plane(f.of(2)), 2, 2);
    Potential wq(fixtures::quantum_plane(f.of(2)));
    Matrix s = Matrix::diagonal({f.of(3), f.of(5)});
    CHECK(qp.check_hdet_pairing(s, hdet(s, wq)));
    CHECK_FALSE(qp.check_hdet_pairing(s, f.of(99)));

    ExtFrobenius sym = make_ext(fixtures::symmetric3(), 2, 3);
    Potential ws(fixtures::symmetric3());
    for (const auto& img : {std::vector<std::size_t>{0, 2, 1}, std::vector<std::size_t>{1, 2, 0}}) {
        Matrix sigma = fixtures::perm_matrix(img, f);
        CHECK(sym.check_hdet_pairing(sigma, hdet(sigma, ws)));
    }

    ExtFrobenius cubic = make_ext(fixtures::cubic_w(), 3, 3);
    Potential wc(fixtures::cubic_w());
    Matrix swap = fixtures::perm_matrix({1, 0}, f);
    CHECK(cubic.check_hdet_pairing(swap, hdet(swap, wc)));
}

TEST_CASE("non-frobenius shapes are rejected") {
    Field f;
    // relations x", xy give dual spaces of unequal complementary dimensions
    std::vector<Tensor> rels{Tensor::basis(2, {0, 0}, f), Tensor::basis(2, {0, 1}, f)};
    Presentation p(2, 2, TensorSubspace::span(rels));
    GradedAlgebra alg(p);
    Tensor w4 = Tensor::basis(2, {0, 0, 0, 0}, f);
    ExtFrobenius e(alg, Potential(w4), 4);
    CHECK_THROWS_WITH_AS(e.mu(0), "not Frobenius", Error);
}
