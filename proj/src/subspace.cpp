#include "coh1/subspace.hpp"

#include <stdexcept>

namespace coh1 {

Ambient::Ambient(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("Ambient: negative dimension");
}

Ambient::Ambient(int dim, Eigen::MatrixXd gram) : dim_(dim), gram_(std::move(gram)) {
    if (gram_.rows() != dim || gram_.cols() != dim)
        throw std::invalid_argument("Ambient: Gram matrix shape mismatch");
    Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (gram_ + gram_.transpose()));
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("Ambient: Gram matrix not positive definite");
    chol_ = llt.matrixL();
}

double Ambient::dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("Ambient::dot: dimension mismatch");
    if (euclidean()) return x.dot(y);
    return x.dot(gram_ * y);
}

AmbientPtr make_euclidean(int dim) { return std::make_shared<Ambient>(dim); }

Subspace::Subspace(AmbientPtr ambient, Eigen::MatrixXd basis, double tol)
    : ambient_(std::move(ambient)), basis_(std::move(basis)), tol_(tol) {
    if (!ambient_) throw std::invalid_argument("Subspace: null ambient");
    if (basis_.size() != 0 && basis_.rows() != ambient_->dim())
        throw std::invalid_argument("Subspace: basis/ambient dimension mismatch");
    if (basis_.size() == 0) basis_.resize(ambient_->dim(), 0);
}

double Subspace::gram_residual() const {
    if (dim() == 0) return 0.0;
    Eigen::MatrixXd g(dim(), dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) g(i, j) = ambient_->dot(basis_.col(i), basis_.col(j));
    g -= Eigen::MatrixXd::Identity(dim(), dim());
    return g.cwiseAbs().maxCoeff();
}

Subspace orthonormalize(const AmbientPtr& ambient, const Eigen::MatrixXd& vectors, double tol) {
    if (!ambient) throw std::invalid_argument("orthonormalize: null ambient");
    const int n = ambient->dim();
    if (vectors.size() != 0 && vectors.rows() != n)
        throw std::invalid_argument("orthonormalize: vector dimension mismatch");

    const int m = static_cast<int>(vectors.cols());
    std::vector<Eigen::VectorXd> work;
    work.reserve(m);
    for (int i = 0; i < m; ++i) work.push_back(vectors.col(i));

    double max_norm = 0.0;
    for (auto& v : work) max_norm = std::max(max_norm, ambient->norm(v));
    if (max_norm == 0.0) return Subspace(ambient, Eigen::MatrixXd(n, 0), tol);

    std::vector<Eigen::VectorXd> basis;
    std::vector<bool> used(work.size(), false);
    const double drop = tol * max_norm;
    // Modified Gram-Schmidt, largest remaining column first, one
    // re-orthogonalization pass per accepted vector.
    for (size_t step = 0; step < work.size(); ++step) {
        int pick = -1;
        double best = drop;
        for (size_t i = 0; i < work.size(); ++i) {
            if (used[i]) continue;
            double nn = ambient->norm(work[i]);
            if (nn > best) {
                best = nn;
                pick = static_cast<int>(i);
            }
        }
        if (pick < 0) break;
        used[pick] = true;
        Eigen::VectorXd v = work[pick];
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) v -= ambient->dot(b, v) * b;
        double nv = ambient->norm(v);
        if (nv <= drop) continue;
        v /= nv;
        for (size_t i = 0; i < work.size(); ++i)
            if (!used[i]) work[i] -= ambient->dot(v, work[i]) * v;
        basis.push_back(std::move(v));
    }

    Eigen::MatrixXd out(n, static_cast<int>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i) out.col(static_cast<int>(i)) = basis[i];
    return Subspace(ambient, std::move(out), tol);
}

Subspace orthonormalize(const AmbientPtr& ambient, const std::vector<Eigen::VectorXd>& vectors,
                        double tol) {
    Eigen::MatrixXd m(ambient->dim(), static_cast<int>(vectors.size()));
    for (size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<int>(i)) = vectors[i];
    return orthonormalize(ambient, m, tol);
}

Eigen::VectorXd project(const Subspace& s, const Eigen::VectorXd& x) {
    if (x.size() != s.ambient_dim()) throw std::invalid_argument("project: dimension mismatch");
    Eigen::VectorXd p = Eigen::VectorXd::Zero(x.size());
    for (int i = 0; i < s.dim(); ++i)
        p += s.ambient()->dot(s.basis_vector(i), x) * s.basis_vector(i);
    return p;
}

double residual_norm(const Subspace& s, const Eigen::VectorXd& x) {
    return s.ambient()->norm(x - project(s, x));
}

bool contains(const Subspace& s, const Eigen::VectorXd& x) {
    double nx = s.ambient()->norm(x);
    if (nx == 0.0) return true;
    return residual_norm(s, x) <= s.tol() * std::max(1.0, nx);
}

bool contains(const Subspace& outer, const Subspace& inner) {
    for (int i = 0; i < inner.dim(); ++i)
        if (!contains(outer, inner.basis_vector(i))) return false;
    return true;
}

int numerical_rank(const Eigen::MatrixXd& m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return 0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tol * sv[0]) ++r;
    return r;
}

Subspace kernel(const AmbientPtr& domain, const Eigen::MatrixXd& map, double tol) {
    const int n = domain->dim();
    if (map.cols() != n) throw std::invalid_argument("kernel: domain dimension mismatch");
    if (map.rows() == 0 || map.cwiseAbs().maxCoeff() == 0.0) return full_subspace(domain, tol);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(map, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > tol * sv[0]) ++rank;
    Eigen::MatrixXd null = svd.matrixV().rightCols(n - rank);
    // Right singular vectors are Euclid-orthonormal; re-orthonormalize in the
    // ambient geometry.
    return orthonormalize(domain, null, tol);
}

Subspace complement_within(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw std::invalid_argument("complement_within: ambient mismatch");
    if (!contains(u, w)) throw std::invalid_argument("complement_within: W not contained in U");
    Eigen::MatrixXd residuals(u.ambient_dim(), u.dim());
    for (int i = 0; i < u.dim(); ++i)
        residuals.col(i) = u.basis_vector(i) - project(w, u.basis_vector(i));
    Subspace c = orthonormalize(u.ambient(), residuals, u.tol());
    if (c.dim() != u.dim() - w.dim())
        throw std::runtime_error("complement_within: unexpected rank drop");
    return c;
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw std::invalid_argument("intersect: ambient mismatch");
    if (u.dim() == 0 || w.dim() == 0) return zero_subspace(u.ambient(), u.tol());
    // x = U a = W b  <=>  (a; b) in ker [U | -W].
    Eigen::MatrixXd stacked(u.ambient_dim(), u.dim() + w.dim());
    stacked.leftCols(u.dim()) = u.basis();
    stacked.rightCols(w.dim()) = -w.basis();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > u.tol() * sv[0]) ++rank;
    int k = static_cast<int>(stacked.cols()) - rank;
    if (k <= 0) return zero_subspace(u.ambient(), u.tol());
    Eigen::MatrixXd combos(u.ambient_dim(), k);
    for (int i = 0; i < k; ++i) {
        Eigen::VectorXd ab = svd.matrixV().col(rank + i);
        combos.col(i) = u.basis() * ab.head(u.dim());
    }
    return orthonormalize(u.ambient(), combos, u.tol());
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw std::invalid_argument("subspace_sum: ambient mismatch");
    Eigen::MatrixXd stacked(u.ambient_dim(), u.dim() + w.dim());
    stacked.leftCols(u.dim()) = u.basis();
    stacked.rightCols(w.dim()) = w.basis();
    return orthonormalize(u.ambient(), stacked, u.tol());
}

bool subspace_equal(const Subspace& u, const Subspace& w, double tol) {
    if (u.ambient_dim() != w.ambient_dim()) return false;
    if (u.dim() != w.dim()) return false;
    for (int i = 0; i < u.dim(); ++i)
        if (u.ambient()->norm(u.basis_vector(i) - project(w, u.basis_vector(i))) > tol)
            return false;
    for (int i = 0; i < w.dim(); ++i)
        if (w.ambient()->norm(w.basis_vector(i) - project(u, w.basis_vector(i))) > tol)
            return false;
    return true;
}

Subspace zero_subspace(const AmbientPtr& ambient, double tol) {
    return Subspace(ambient, Eigen::MatrixXd(ambient->dim(), 0), tol);
}

Subspace full_subspace(const AmbientPtr& ambient, double tol) {
    if (!ambient->euclidean()) {
        Eigen::MatrixXd id = Eigen::MatrixXd::Identity(ambient->dim(), ambient->dim());
        return orthonormalize(ambient, id, tol);
    }
    return Subspace(ambient, Eigen::MatrixXd::Identity(ambient->dim(), ambient->dim()), tol);
}

}  // namespace coh1
