#include "coh1/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace coh1 {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    os << q.a;
    if (q.b != 0.0) os << (q.b > 0 ? "+" : "") << q.b << "i";
    if (q.c != 0.0) os << (q.c > 0 ? "+" : "") << q.c << "j";
    if (q.d != 0.0) os << (q.d > 0 ? "+" : "") << q.d << "k";
    return os;
}

int ring_dim(Ring r) {
    switch (r) {
        case Ring::R: return 1;
        case Ring::C: return 2;
        case Ring::H: return 4;
    }
    return 0;
}

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::R: return "R";
        case Ring::C: return "C";
        case Ring::H: return "H";
    }
    return "?";
}

Mat::Mat(int rows, int cols, Ring ring) : rows_(rows), cols_(cols), ring_(ring) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    e_.assign(static_cast<size_t>(rows) * cols, Quaternion{});
}

Mat Mat::identity(int n, Ring ring) {
    Mat m(n, n, ring);
    for (int i = 0; i < n; ++i) m.e_[m.idx(i, i)] = Quaternion{1.0};
    return m;
}

Mat Mat::unit(int rows, int cols, Ring ring, int r, int c, Quaternion value) {
    Mat m(rows, cols, ring);
    m.set(r, c, value);
    return m;
}

void Mat::check_ring(const Quaternion& q) const {
    if (ring_ == Ring::R && !q.is_real())
        throw std::invalid_argument("Mat: non-real entry in a real matrix");
    if (ring_ == Ring::C && !q.is_complex())
        throw std::invalid_argument("Mat: non-complex entry in a complex matrix");
}

void Mat::set(int r, int c, Quaternion value) {
    check_ring(value);
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::invalid_argument("Mat::set: index out of range");
    e_[idx(r, c)] = value;
}

static void check_same_shape(const Mat& a, const Mat& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.ring() != b.ring())
        throw std::invalid_argument(std::string("Mat: shape/ring mismatch in ") + op);
}

Mat Mat::operator+(const Mat& o) const {
    check_same_shape(*this, o, "operator+");
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    check_same_shape(*this, o, "operator-");
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& q : r.e_) q = -q;
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_ || ring_ != o.ring_)
        throw std::invalid_argument("Mat: shape/ring mismatch in operator*");
    Mat r(rows_, o.cols_, ring_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Quaternion& x = e_[idx(i, k)];
            if (x.norm2() == 0.0) continue;
            for (int j = 0; j < o.cols_; ++j) r.e_[r.idx(i, j)] += x * o.e_[o.idx(k, j)];
        }
    return r;
}

Mat Mat::operator*(double s) const {
    Mat r = *this;
    for (auto& q : r.e_) q *= s;
    return r;
}

Mat Mat::scale_left(Quaternion q) const {
    Mat r = *this;
    for (auto& e : r.e_) e = q * e;
    return r;
}

Mat Mat::scale_right(Quaternion q) const {
    Mat r = *this;
    for (auto& e : r.e_) e = e * q;
    return r;
}

Mat Mat::conj_transpose() const {
    Mat r(cols_, rows_, ring_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.e_[r.idx(j, i)] = e_[idx(i, j)].conj();
    return r;
}

Mat Mat::conj_entries() const {
    Mat r = *this;
    for (auto& q : r.e_) q = q.conj();
    return r;
}

Quaternion Mat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::trace: not square");
    Quaternion t;
    for (int i = 0; i < rows_; ++i) t += e_[idx(i, i)];
    return t;
}

double Mat::max_abs() const {
    double m = 0.0;
    for (const auto& q : e_) m = std::max(m, q.norm());
    return m;
}

Eigen::VectorXd realify(const Mat& x) {
    const int rd = ring_dim(x.ring());
    Eigen::VectorXd v(static_cast<Eigen::Index>(x.rows()) * x.cols() * rd);
    Eigen::Index p = 0;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            const Quaternion& q = x.at(i, j);
            v[p++] = q.a;
            if (rd >= 2) v[p++] = q.b;
            if (rd == 4) {
                v[p++] = q.c;
                v[p++] = q.d;
            }
        }
    return v;
}

Mat unrealify(const MatShape& shape, const Eigen::VectorXd& v) {
    if (v.size() != shape.real_dim())
        throw std::invalid_argument("unrealify: dimension mismatch");
    const int rd = ring_dim(shape.ring);
    Mat m(shape.rows, shape.cols, shape.ring);
    Eigen::Index p = 0;
    for (int i = 0; i < shape.rows; ++i)
        for (int j = 0; j < shape.cols; ++j) {
            Quaternion q;
            q.a = v[p++];
            if (rd >= 2) q.b = v[p++];
            if (rd == 4) {
                q.c = v[p++];
                q.d = v[p++];
            }
            m.set(i, j, q);
        }
    return m;
}

}  // namespace coh1
