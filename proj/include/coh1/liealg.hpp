#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coh1/matrix.hpp"
#include "coh1/subspace.hpp"

namespace coh1 {

/// Cartan decomposition g = k + p as subspaces of the coordinate space.
struct CartanSplit {
    Subspace k;  ///< +1 eigenspace of theta
    Subspace p;  ///< -1 eigenspace of theta
};

/// A matrix Lie algebra with an explicit real basis.
///
/// Elements are handled as coordinate vectors with respect to the stored
/// basis. The basis is orthonormalized against the real trace form at build
/// time, so the normalized B_theta inner product is conditioned near the
/// identity. All caches (ad matrices, Gram matrices) are filled during
/// construction; instances are immutable afterwards.
class LieAlgebra {
  public:
    using ThetaFn = std::function<Mat(const Mat&)>;

    /// Builds the algebra, verifies bracket closure, theta involutivity and
    /// automorphism property, positive-definiteness of B_theta, and the
    /// proportionality of the Killing form to the real trace form.
    LieAlgebra(MatShape shape, std::vector<Mat> raw_basis, ThetaFn theta,
               double tol = kDefaultTol);

    int dim() const { return d_; }
    const MatShape& shape() const { return shape_; }
    double tol() const { return tol_; }
    const AmbientPtr& ambient() const { return ambient_; }

    const std::vector<Mat>& basis() const { return basis_; }
    const Mat& basis_mat(int i) const { return basis_[i]; }

    /// Coordinates of a matrix (throws if it lies outside the span).
    Eigen::VectorXd coords_of(const Mat& x) const;
    /// Matrix realization of a coordinate vector.
    Mat to_matrix(const Eigen::VectorXd& coords) const;

    /// Lie bracket in coordinates.
    Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
    /// ad(x) as a dim x dim matrix.
    Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;
    const Eigen::MatrixXd& ad_basis(int i) const { return ad_[i]; }

    const Eigen::MatrixXd& theta_matrix() const { return theta_; }
    Eigen::VectorXd theta(const Eigen::VectorXd& x) const { return theta_ * x; }
    /// Projection to p along k: (x - theta x)/2.
    Eigen::VectorXd project_p(const Eigen::VectorXd& x) const { return 0.5 * (x - theta_ * x); }
    Eigen::VectorXd project_k(const Eigen::VectorXd& x) const { return 0.5 * (x + theta_ * x); }
    Subspace project_p(const Subspace& s) const;

    const Eigen::MatrixXd& killing_gram() const { return killing_; }
    const Eigen::MatrixXd& btheta_gram() const { return btheta_; }
    /// Constant c with Killing = c * (real trace form).
    double trace_form_constant() const { return trace_const_; }
    /// Residual of that proportionality (max-abs, relative).
    double trace_form_residual() const { return trace_resid_; }

    double btheta_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
        return ambient_->dot(x, y);
    }
    double btheta_norm(const Eigen::VectorXd& x) const { return ambient_->norm(x); }

    /// +1/-1 eigenspaces of theta.
    CartanSplit cartan_split() const;

  private:
    MatShape shape_;
    std::vector<Mat> basis_;
    int d_ = 0;
    double tol_;
    Eigen::MatrixXd realified_;  // real_dim x d, orthonormal columns
    std::vector<Eigen::MatrixXd> ad_;
    Eigen::MatrixXd theta_;
    Eigen::MatrixXd killing_;
    Eigen::MatrixXd btheta_;
    double trace_const_ = 0.0;
    double trace_resid_ = 0.0;
    AmbientPtr ambient_;
};

/// True iff S is closed under the bracket at tolerance.
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

/// Smallest bracket-closed subspace containing the seed. Iterates
/// S <- S + [S,S] until the dimension stabilizes (at most dim g rounds).
Subspace generated_subalgebra(const LieAlgebra& g, const Subspace& seed);

/// { X in m : [X, v] subset of v }.
Subspace normalizer(const LieAlgebra& g, const Subspace& m, const Subspace& v);

/// { X in m : [X, s] = 0 }.
Subspace centralizer(const LieAlgebra& g, const Subspace& m, const Subspace& s);

/// Span of all brackets [u, w], u in U, w in W.
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& w);

/// Max bracket residual outside a target space: max over basis pairs of
/// |(1 - P_target)[u_i, w_j]|.
double bracket_residual(const LieAlgebra& g, const Subspace& u, const Subspace& w,
                        const Subspace& target);

/// Structure profile of a subalgebra: dimension, center dimension, signature
/// of its own Killing form, and the derived series dimensions.
struct Fingerprint {
    int dim = 0;
    int center_dim = 0;
    int sig_pos = 0, sig_neg = 0, sig_zero = 0;
    std::vector<int> derived_dims;

    std::string to_string() const;
};

Fingerprint fingerprint(const LieAlgebra& g, const Subspace& s);

}  // namespace coh1
