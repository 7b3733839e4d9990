#include "coh1/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace coh1 {

LieAlgebra::LieAlgebra(MatShape shape, std::vector<Mat> raw_basis, ThetaFn theta_fn, double tol)
    : shape_(shape), tol_(tol) {
    const int real_dim = shape_.real_dim();
    if (raw_basis.empty()) throw std::invalid_argument("LieAlgebra: empty basis");

    // Orthonormalize the realified raw basis against the trace form, which is
    // the Euclidean product in realified coordinates.
    Eigen::MatrixXd raw(real_dim, static_cast<int>(raw_basis.size()));
    for (size_t i = 0; i < raw_basis.size(); ++i) raw.col(static_cast<int>(i)) = realify(raw_basis[i]);
    AmbientPtr euclid = make_euclidean(real_dim);
    Subspace span = orthonormalize(euclid, raw, tol);
    if (span.dim() != static_cast<int>(raw_basis.size()))
        throw std::invalid_argument("LieAlgebra: raw basis is linearly dependent");
    d_ = span.dim();
    realified_ = span.basis();
    basis_.reserve(d_);
    for (int i = 0; i < d_; ++i) basis_.push_back(unrealify(shape_, realified_.col(i)));

    // ad matrices; closure residual must stay below tol.
    ad_.assign(d_, Eigen::MatrixXd::Zero(d_, d_));
    double closure_resid = 0.0;
    for (int a = 0; a < d_; ++a) {
        for (int b = 0; b < d_; ++b) {
            Eigen::VectorXd w = realify(coh1::bracket(basis_[a], basis_[b]));
            Eigen::VectorXd c = realified_.transpose() * w;
            closure_resid = std::max(closure_resid, (w - realified_ * c).norm());
            ad_[a].col(b) = c;
        }
    }
    if (closure_resid > 100 * tol)
        throw std::invalid_argument("LieAlgebra: basis not closed under bracket, residual " +
                                    std::to_string(closure_resid));

    // theta in coordinates; involutive automorphism.
    theta_.resize(d_, d_);
    for (int a = 0; a < d_; ++a) {
        Eigen::VectorXd w = realify(theta_fn(basis_[a]));
        Eigen::VectorXd c = realified_.transpose() * w;
        if ((w - realified_ * c).norm() > 100 * tol)
            throw std::invalid_argument("LieAlgebra: theta does not preserve the algebra");
        theta_.col(a) = c;
    }
    if ((theta_ * theta_ - Eigen::MatrixXd::Identity(d_, d_)).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("LieAlgebra: theta is not involutive");
    for (int a = 0; a < std::min(d_, 6); ++a)
        for (int b = 0; b < std::min(d_, 6); ++b) {
            Eigen::VectorXd lhs = theta_ * ad_[a] * Eigen::VectorXd::Unit(d_, b);
            Eigen::VectorXd rhs = ad(theta_.col(a)) * theta_.col(b);
            if ((lhs - rhs).norm() > 1e-6)
                throw std::invalid_argument("LieAlgebra: theta is not an automorphism");
        }

    // Killing form via ad traces.
    killing_.resize(d_, d_);
    for (int a = 0; a < d_; ++a)
        for (int b = a; b < d_; ++b) {
            double k = (ad_[a] * ad_[b]).trace();
            killing_(a, b) = k;
            killing_(b, a) = k;
        }

    // Proportionality to the real trace form (signed).
    Eigen::MatrixXd trace_gram(d_, d_);
    for (int a = 0; a < d_; ++a)
        for (int b = a; b < d_; ++b) {
            double t = (basis_[a] * basis_[b]).re_trace();
            trace_gram(a, b) = t;
            trace_gram(b, a) = t;
        }
    double denom = trace_gram.cwiseAbs2().sum();
    if (denom == 0.0) throw std::invalid_argument("LieAlgebra: degenerate trace form");
    trace_const_ = (killing_.cwiseProduct(trace_gram)).sum() / denom;
    trace_resid_ = (killing_ - trace_const_ * trace_gram).cwiseAbs().maxCoeff() /
                   std::max(1.0, std::abs(trace_const_) * trace_gram.cwiseAbs().maxCoeff());

    // B_theta(X, Y) = -B(X, theta Y); normalized by the trace constant this is
    // the ambient inner product for all subspace geometry.
    btheta_ = -killing_ * theta_;
    btheta_ = 0.5 * (btheta_ + btheta_.transpose()).eval();
    Eigen::LLT<Eigen::MatrixXd> llt(btheta_);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("LieAlgebra: B_theta not positive definite (wrong theta?)");
    Eigen::MatrixXd gn = btheta_ / trace_const_;
    if ((gn - Eigen::MatrixXd::Identity(d_, d_)).cwiseAbs().maxCoeff() > 1e-6)
        throw std::invalid_argument("LieAlgebra: normalized B_theta far from identity");
    ambient_ = std::make_shared<Ambient>(d_, gn);
}

Eigen::VectorXd LieAlgebra::coords_of(const Mat& x) const {
    Eigen::VectorXd w = realify(x);
    Eigen::VectorXd c = realified_.transpose() * w;
    double resid = (w - realified_ * c).norm();
    if (resid > 1000 * tol_ * std::max(1.0, w.norm()))
        throw std::invalid_argument("LieAlgebra::coords_of: matrix outside the algebra, residual " +
                                    std::to_string(resid));
    return c;
}

Mat LieAlgebra::to_matrix(const Eigen::VectorXd& coords) const {
    if (coords.size() != d_) throw std::invalid_argument("to_matrix: dimension mismatch");
    return unrealify(shape_, realified_ * coords);
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(d_);
    for (int a = 0; a < d_; ++a)
        if (x[a] != 0.0) r += x[a] * (ad_[a] * y);
    return r;
}

Eigen::MatrixXd LieAlgebra::ad(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d_, d_);
    for (int a = 0; a < d_; ++a)
        if (x[a] != 0.0) m += x[a] * ad_[a];
    return m;
}

Subspace LieAlgebra::project_p(const Subspace& s) const {
    Eigen::MatrixXd proj(d_, s.dim());
    for (int i = 0; i < s.dim(); ++i) proj.col(i) = project_p(s.basis_vector(i));
    return orthonormalize(ambient_, proj, tol_);
}

CartanSplit LieAlgebra::cartan_split() const {
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d_, d_);
    Subspace k = kernel(ambient_, theta_ - id, tol_);
    Subspace p = kernel(ambient_, theta_ + id, tol_);
    if (k.dim() + p.dim() != d_)
        throw std::runtime_error("cartan_split: eigenspace dimensions do not add up");
    return {k, p};
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
    for (int i = 0; i < s.dim(); ++i)
        for (int j = i + 1; j < s.dim(); ++j) {
            Eigen::VectorXd br = g.bracket(s.basis_vector(i), s.basis_vector(j));
            if (residual_norm(s, br) > s.tol() * std::max(1.0, g.btheta_norm(br))) return false;
        }
    return true;
}

Subspace generated_subalgebra(const LieAlgebra& g, const Subspace& seed) {
    Subspace s = seed;
    for (int round = 0; round <= g.dim(); ++round) {
        std::vector<Eigen::VectorXd> vecs;
        for (int i = 0; i < s.dim(); ++i) vecs.push_back(s.basis_vector(i));
        for (int i = 0; i < s.dim(); ++i)
            for (int j = i + 1; j < s.dim(); ++j)
                vecs.push_back(g.bracket(s.basis_vector(i), s.basis_vector(j)));
        Subspace next = orthonormalize(g.ambient(), vecs, s.tol());
        if (next.dim() == s.dim()) return next;
        s = next;
    }
    throw std::runtime_error("generated_subalgebra: closure iteration did not stabilize");
}

// Shared core: rows of the constraint matrix are residuals of [X, b_i]
// against the target (v for normalizer, 0 for centralizer).
static Subspace constrained_subalgebra(const LieAlgebra& g, const Subspace& m, const Subspace& v,
                                       bool normalize) {
    if (m.dim() == 0) return m;
    const int d = g.dim();
    const int nv = v.dim();
    if (nv == 0) return m;
    Eigen::MatrixXd rows(nv * d, m.dim());
    for (int j = 0; j < m.dim(); ++j) {
        for (int i = 0; i < nv; ++i) {
            Eigen::VectorXd br = g.bracket(m.basis_vector(j), v.basis_vector(i));
            if (normalize) br -= project(v, br);
            rows.block(i * d, j, d, 1) = br;
        }
    }
    Subspace coeff = kernel(make_euclidean(m.dim()), rows, m.tol());
    if (coeff.dim() == 0) return zero_subspace(g.ambient(), m.tol());
    Eigen::MatrixXd out = m.basis() * coeff.basis();
    return orthonormalize(g.ambient(), out, m.tol());
}

Subspace normalizer(const LieAlgebra& g, const Subspace& m, const Subspace& v) {
    return constrained_subalgebra(g, m, v, true);
}

Subspace centralizer(const LieAlgebra& g, const Subspace& m, const Subspace& s) {
    return constrained_subalgebra(g, m, s, false);
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& w) {
    std::vector<Eigen::VectorXd> vecs;
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < w.dim(); ++j)
            vecs.push_back(g.bracket(u.basis_vector(i), w.basis_vector(j)));
    return orthonormalize(g.ambient(), vecs, u.tol());
}

double bracket_residual(const LieAlgebra& g, const Subspace& u, const Subspace& w,
                        const Subspace& target) {
    double r = 0.0;
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < w.dim(); ++j) {
            Eigen::VectorXd br = g.bracket(u.basis_vector(i), w.basis_vector(j));
            r = std::max(r, residual_norm(target, br));
        }
    return r;
}

Fingerprint fingerprint(const LieAlgebra& g, const Subspace& s) {
    if (!is_subalgebra(g, s)) throw std::invalid_argument("fingerprint: not a subalgebra");
    Fingerprint fp;
    fp.dim = s.dim();

    // Center of s.
    fp.center_dim = centralizer(g, s, s).dim();

    // Killing form of s itself, computed from its internal structure
    // constants.
    const int n = s.dim();
    if (n > 0) {
        std::vector<Eigen::MatrixXd> ads(n, Eigen::MatrixXd::Zero(n, n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Eigen::VectorXd br = g.bracket(s.basis_vector(a), s.basis_vector(b));
                for (int c = 0; c < n; ++c)
                    ads[a](c, b) = g.btheta_dot(s.basis_vector(c), br);
            }
        Eigen::MatrixXd killing(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                double k = (ads[a] * ads[b]).trace();
                killing(a, b) = k;
                killing(b, a) = k;
            }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(killing);
        double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
        for (int i = 0; i < n; ++i) {
            double ev = es.eigenvalues()[i];
            if (ev > 1e-7 * scale)
                ++fp.sig_pos;
            else if (ev < -1e-7 * scale)
                ++fp.sig_neg;
            else
                ++fp.sig_zero;
        }
    }

    // Derived series.
    Subspace cur = s;
    fp.derived_dims.push_back(cur.dim());
    while (cur.dim() > 0) {
        Subspace next = bracket_span(g, cur, cur);
        fp.derived_dims.push_back(next.dim());
        if (next.dim() == cur.dim()) break;
        cur = next;
    }
    return fp;
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "{dim=" << dim << ", center=" << center_dim << ", sig=(" << sig_pos << "," << sig_neg
       << "," << sig_zero << "), derived=[";
    for (size_t i = 0; i < derived_dims.size(); ++i) os << (i ? "," : "") << derived_dims[i];
    os << "]}";
    return os.str();
}

}  // namespace coh1
