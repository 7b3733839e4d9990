#include "doctest.h"

#include <random>

#include "coh1/matrix.hpp"
#include "coh1/subspace.hpp"

using namespace coh1;

namespace {

Eigen::VectorXd vec2(double x, double y) {
    Eigen::VectorXd v(2);
    v << x, y;
    return v;
}

std::mt19937_64 rng(20240817);

Eigen::VectorXd random_vec(int n) {
    std::normal_distribution<double> N(0.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = N(rng);
    return v;
}

}  // namespace

TEST_CASE("quaternion Hamilton relations") {
    auto I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
    CHECK(abs_diff(I * J, K) == 0.0);
    CHECK(abs_diff(J * K, I) == 0.0);
    CHECK(abs_diff(K * I, J) == 0.0);
    CHECK(abs_diff(I * I, Quaternion(-1)) == 0.0);

    Quaternion q(0.3, -1.2, 0.7, 2.0);
    CHECK(abs_diff(Quaternion(1) * q, q) == 0.0);
    // (1+i)(1+j) = 1 + i + j + k
    CHECK(abs_diff(Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0), Quaternion(1, 1, 1, 1)) == 0.0);
}

TEST_CASE("quaternion norm and conjugation") {
    Quaternion p(1.5, -0.2, 3.0, 0.4), q(-2.0, 1.0, 0.5, -1.1);
    CHECK(abs_diff(p.conj() * p, Quaternion(p.norm2())) < 1e-12);
    CHECK((p * q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-12));
    CHECK(abs_diff((p * q).conj(), q.conj() * p.conj()) < 1e-12);
}

TEST_CASE("matrix ring guards and involution") {
    Mat m(2, 2, Ring::C);
    m.set(0, 1, Quaternion(1, 2, 0, 0));
    CHECK_THROWS(m.set(0, 0, Quaternion(0, 0, 1, 0)));
    Mat h(2, 2, Ring::H);
    h.set(0, 1, Quaternion(1, 2, 3, 4));
    h.set(1, 0, Quaternion(0, -1, 0, 2));
    CHECK((h.conj_transpose().conj_transpose() - h).max_abs() == 0.0);
}

TEST_CASE("realify convention") {
    Mat r(1, 1, Ring::R);
    r.set(0, 0, Quaternion(5));
    Eigen::VectorXd vr = realify(r);
    REQUIRE(vr.size() == 1);
    CHECK(vr[0] == 5.0);

    Mat h(1, 1, Ring::H);
    h.set(0, 0, Quaternion::i());
    Eigen::VectorXd vh = realify(h);
    REQUIRE(vh.size() == 4);
    CHECK(vh[0] == 0.0);
    CHECK(vh[1] == 1.0);
    CHECK(vh[2] == 0.0);
    CHECK(vh[3] == 0.0);
}

TEST_CASE("realify is linear and round-trips") {
    std::normal_distribution<double> N(0.0, 1.0);
    MatShape shape{2, 3, Ring::H};
    auto random_mat = [&] {
        Mat m(2, 3, Ring::H);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) m.set(i, j, Quaternion(N(rng), N(rng), N(rng), N(rng)));
        return m;
    };
    for (int t = 0; t < 10; ++t) {
        Mat x = random_mat(), y = random_mat();
        CHECK((realify(x + y) - (realify(x) + realify(y))).norm() < 1e-12);
        CHECK((unrealify(shape, realify(x)) - x).max_abs() < 1e-15);
    }
}

TEST_CASE("left-multiplication operator recovered column by column") {
    // The matrix of X -> AX in realified coordinates, recovered from unit
    // vectors, must reproduce realify(A X) for random X.
    std::normal_distribution<double> N(0.0, 1.0);
    Quaternion a(N(rng), N(rng), N(rng), N(rng));
    Mat A(2, 2, Ring::H);
    A.set(0, 0, a);
    A.set(0, 1, Quaternion::j());
    A.set(1, 0, Quaternion(0.5));
    A.set(1, 1, a * a);
    MatShape shape{2, 3, Ring::H};
    const int D = shape.real_dim();
    Eigen::MatrixXd M(D, D);
    for (int k = 0; k < D; ++k)
        M.col(k) = realify(A * unrealify(shape, Eigen::VectorXd::Unit(D, k)));
    for (int t = 0; t < 5; ++t) {
        Eigen::VectorXd x = random_vec(D);
        CHECK((M * x - realify(A * unrealify(shape, x))).norm() < 1e-10);
    }
}

TEST_CASE("orthonormalize basic cases") {
    auto amb = make_euclidean(2);
    Eigen::MatrixXd v(2, 2);
    v << 1, 0, 0, 2;
    Subspace s = orthonormalize(amb, v);
    CHECK(s.dim() == 2);
    CHECK(s.gram_residual() < 1e-12);

    Eigen::MatrixXd dep(2, 2);
    dep << 1, 2, 0, 0;
    CHECK(orthonormalize(amb, dep).dim() == 1);

    CHECK(orthonormalize(amb, Eigen::MatrixXd(2, 0)).dim() == 0);
}

TEST_CASE("project") {
    auto amb = make_euclidean(2);
    Eigen::MatrixXd x_axis(2, 1);
    x_axis << 1, 0;
    Subspace s = orthonormalize(amb, x_axis);
    CHECK((project(s, vec2(3, 4)) - vec2(3, 0)).norm() < 1e-12);
    // idempotence on members
    CHECK((project(s, project(s, vec2(3, 4))) - project(s, vec2(3, 4))).norm() < 1e-12);
    Subspace z = zero_subspace(amb);
    CHECK(project(z, vec2(3, 4)).norm() == 0.0);
}

TEST_CASE("kernel") {
    auto amb3 = make_euclidean(3);
    CHECK(kernel(amb3, Eigen::MatrixXd::Identity(3, 3)).dim() == 0);
    CHECK(kernel(amb3, Eigen::MatrixXd::Zero(3, 3)).dim() == 3);
    Eigen::MatrixXd m(1, 2);
    m << 1, 0;  // (x, y) -> x
    Subspace k = kernel(make_euclidean(2), m);
    REQUIRE(k.dim() == 1);
    CHECK(std::abs(k.basis_vector(0)[0]) < 1e-12);
}

TEST_CASE("complement and intersection") {
    auto amb = make_euclidean(2);
    Subspace u = full_subspace(amb);
    Eigen::MatrixXd xm(2, 1);
    xm << 1, 0;
    Subspace x_axis = orthonormalize(amb, xm);
    Subspace c = complement_within(u, x_axis);
    REQUIRE(c.dim() == 1);
    CHECK(std::abs(c.basis_vector(0)[0]) < 1e-12);
    CHECK(complement_within(u, u).dim() == 0);
    CHECK(complement_within(u, zero_subspace(amb)).dim() == 2);

    auto amb3 = make_euclidean(3);
    Eigen::MatrixXd p1(3, 2), p2(3, 2);
    p1 << 1, 0, 0, 1, 0, 0;  // xy-plane
    p2 << 1, 0, 0, 0, 0, 1;  // xz-plane
    Subspace line = intersect(orthonormalize(amb3, p1), orthonormalize(amb3, p2));
    REQUIRE(line.dim() == 1);
    CHECK(std::abs(std::abs(line.basis_vector(0)[0]) - 1.0) < 1e-12);

    Subspace u1 = orthonormalize(amb3, p1);
    CHECK(subspace_equal(intersect(u1, u1), u1));
}

TEST_CASE("subspace_equal") {
    auto amb = make_euclidean(2);
    Eigen::MatrixXd rot(2, 2), id(2, 2);
    double c = std::cos(0.7), s = std::sin(0.7);
    rot << c, -s, s, c;
    id << 1, 0, 0, 1;
    CHECK(subspace_equal(orthonormalize(amb, rot), orthonormalize(amb, id)));
    Eigen::MatrixXd xm(2, 1), ym(2, 1);
    xm << 1, 0;
    ym << 0, 1;
    CHECK_FALSE(subspace_equal(orthonormalize(amb, xm), orthonormalize(amb, ym)));
    CHECK(subspace_equal(zero_subspace(amb), zero_subspace(amb)));
}

TEST_CASE("dimension identity for random subspaces of R^20") {
    auto amb = make_euclidean(20);
    for (int t = 0; t < 25; ++t) {
        int du = 3 + static_cast<int>(rng() % 8), dw = 3 + static_cast<int>(rng() % 8);
        Eigen::MatrixXd mu(20, du), mw(20, dw);
        for (int i = 0; i < du; ++i) mu.col(i) = random_vec(20);
        for (int i = 0; i < dw; ++i) mw.col(i) = random_vec(20);
        Subspace u = orthonormalize(amb, mu), w = orthonormalize(amb, mw);
        CHECK(subspace_sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
    }
}

TEST_CASE("projection is a contraction") {
    auto amb = make_euclidean(20);
    Eigen::MatrixXd m(20, 7);
    for (int i = 0; i < 7; ++i) m.col(i) = random_vec(20);
    Subspace s = orthonormalize(amb, m);
    for (int t = 0; t < 20; ++t) {
        Eigen::VectorXd x = random_vec(20);
        CHECK(project(s, x).norm() <= x.norm() + 1e-12);
        CHECK(amb->dot(x - project(s, x), project(s, x)) < 1e-9);
    }
}

TEST_CASE("weighted ambient geometry") {
    // SPD Gram: orthonormalize + project must respect it.
    Eigen::MatrixXd g(2, 2);
    g << 2.0, 0.3, 0.3, 1.0;
    auto amb = std::make_shared<Ambient>(2, g);
    Eigen::MatrixXd v(2, 2);
    v << 1, 1, 0, 1;
    Subspace s = orthonormalize(amb, v);
    CHECK(s.dim() == 2);
    CHECK(s.gram_residual() < 1e-10);
    Eigen::MatrixXd one(2, 1);
    one << 1, 0;
    Subspace l = orthonormalize(amb, one);
    Eigen::VectorXd r = vec2(0.4, 1.7) - project(l, vec2(0.4, 1.7));
    CHECK(std::abs(amb->dot(r, l.basis_vector(0))) < 1e-10);
}
