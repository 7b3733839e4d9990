#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coh1/quaternion.hpp"

namespace coh1 {

/// Ground ring of a matrix space. Entries are stored as quaternions for all
/// three rings; the tag controls validity and the realification convention.
enum class Ring { R, C, H };

int ring_dim(Ring r);
std::string ring_name(Ring r);

/// Dense matrix over R, C or H. Entries row-major.
///
/// Realification convention: entries scanned row-major, each entry expanded
/// as (a) for R, (a,b) for C, (a,b,c,d) for H.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols, Ring ring);

    static Mat zeros(int rows, int cols, Ring ring) { return Mat(rows, cols, ring); }
    static Mat identity(int n, Ring ring);
    /// Matrix with a single nonzero entry at (r, c). Throws if the value does
    /// not lie in the ring.
    static Mat unit(int rows, int cols, Ring ring, int r, int c, Quaternion value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Ring ring() const { return ring_; }

    const Quaternion& at(int r, int c) const { return e_[idx(r, c)]; }
    /// Sets an entry; throws std::invalid_argument if value is outside the ring.
    void set(int r, int c, Quaternion value);

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;  // ring product; shapes must match
    Mat operator*(double s) const;
    friend Mat operator*(double s, const Mat& m) { return m * s; }
    /// Left/right scalar multiplication by a ring element (entrywise q*X / X*q).
    Mat scale_left(Quaternion q) const;
    Mat scale_right(Quaternion q) const;

    /// Conjugate transpose X*.
    Mat conj_transpose() const;
    /// Entrywise conjugation (no transpose).
    Mat conj_entries() const;

    Quaternion trace() const;
    double re_trace() const { return trace().a; }

    double max_abs() const;

    /// Commutator XY - YX.
    friend Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

  private:
    int idx(int r, int c) const { return r * cols_ + c; }
    void check_ring(const Quaternion& q) const;

    int rows_ = 0, cols_ = 0;
    Ring ring_ = Ring::R;
    std::vector<Quaternion> e_;
};

/// Shape + ring of a matrix space; fixes the realified dimension.
struct MatShape {
    int rows = 0;
    int cols = 0;
    Ring ring = Ring::R;

    int real_dim() const { return rows * cols * ring_dim(ring); }
    bool operator==(const MatShape&) const = default;
};

Mat bracket(const Mat& x, const Mat& y);

/// Row-major realification of X into R^(rows*cols*ring_dim).
Eigen::VectorXd realify(const Mat& x);

/// Inverse of realify for the given shape.
Mat unrealify(const MatShape& shape, const Eigen::VectorXd& v);

}  // namespace coh1
