#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace coh1 {

inline constexpr double kDefaultTol = 1e-8;

/// Ambient coordinate space with a fixed symmetric positive-definite inner
/// product. An empty Gram matrix means the standard Euclidean product.
class Ambient {
  public:
    explicit Ambient(int dim);                       // Euclidean
    Ambient(int dim, Eigen::MatrixXd gram);          // general SPD

    int dim() const { return dim_; }
    bool euclidean() const { return gram_.size() == 0; }
    const Eigen::MatrixXd& gram() const { return gram_; }

    double dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
    double norm(const Eigen::VectorXd& x) const { return std::sqrt(std::max(0.0, dot(x, x))); }

    /// Cholesky factor L with gram = L L^T (identity when Euclidean).
    const Eigen::MatrixXd& chol() const { return chol_; }

  private:
    int dim_;
    Eigen::MatrixXd gram_;  // empty => identity
    Eigen::MatrixXd chol_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_euclidean(int dim);

/// A linear subspace of an ambient space, stored as an orthonormal basis
/// (with respect to the ambient inner product). Immutable after construction.
class Subspace {
  public:
    Subspace() = default;
    /// Wraps an already-orthonormal basis; validation is left to the caller.
    Subspace(AmbientPtr ambient, Eigen::MatrixXd orthonormal_basis, double tol);

    int ambient_dim() const { return ambient_ ? ambient_->dim() : 0; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    double tol() const { return tol_; }
    const Eigen::MatrixXd& basis() const { return basis_; }
    Eigen::VectorXd basis_vector(int i) const { return basis_.col(i); }
    const AmbientPtr& ambient() const { return ambient_; }

    /// Max-norm deviation of the basis Gram matrix from the identity.
    double gram_residual() const;

  private:
    AmbientPtr ambient_;
    Eigen::MatrixXd basis_;  // ambient_dim x dim, orthonormal columns
    double tol_ = kDefaultTol;
};

/// Span of the given vectors (columns). Modified Gram-Schmidt with column
/// pivoting and one re-orthogonalization pass; rank decided against the
/// largest column norm. Dependent inputs silently reduce the rank.
Subspace orthonormalize(const AmbientPtr& ambient, const Eigen::MatrixXd& vectors,
                        double tol = kDefaultTol);
Subspace orthonormalize(const AmbientPtr& ambient, const std::vector<Eigen::VectorXd>& vectors,
                        double tol = kDefaultTol);

/// Orthogonal projection of x onto S.
Eigen::VectorXd project(const Subspace& s, const Eigen::VectorXd& x);

/// Norm of the component of x orthogonal to S.
double residual_norm(const Subspace& s, const Eigen::VectorXd& x);

/// True iff x lies in S within S's tolerance (relative to |x|).
bool contains(const Subspace& s, const Eigen::VectorXd& x);
/// True iff every basis vector of inner lies in outer.
bool contains(const Subspace& outer, const Subspace& inner);

/// Null space of a linear map given by its matrix (rows map to the codomain).
/// Rank decided by singular values sigma_k > tol * sigma_1. The kernel basis
/// is orthonormal with respect to the ambient product on the domain.
Subspace kernel(const AmbientPtr& domain, const Eigen::MatrixXd& map, double tol = kDefaultTol);

/// U "minus" W: orthogonal complement of W inside U. Throws if W is not
/// contained in U at the tolerance.
Subspace complement_within(const Subspace& u, const Subspace& w);

/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& u, const Subspace& w);

/// Sum (span of the union).
Subspace subspace_sum(const Subspace& u, const Subspace& w);

/// Dimension check plus two-sided basis-vector containment at tol.
bool subspace_equal(const Subspace& u, const Subspace& w, double tol = kDefaultTol);

/// The zero subspace.
Subspace zero_subspace(const AmbientPtr& ambient, double tol = kDefaultTol);

/// Full ambient space.
Subspace full_subspace(const AmbientPtr& ambient, double tol = kDefaultTol);

/// Numerical rank of a matrix (sigma_k > tol * sigma_1).
int numerical_rank(const Eigen::MatrixXd& m, double tol = kDefaultTol);

}  // namespace coh1
