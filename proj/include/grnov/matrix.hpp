#ifndef GRNOV_MATRIX_HPP
#define GRNOV_MATRIX_HPP

#include <stdexcept>
#include <vector>

namespace grnov {

template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: shapes");
    Matrix<T> r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_sub: shapes");
    Matrix<T> r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

template <class T>
Matrix<T> mat_neg(const Matrix<T>& a) {
    Matrix<T> r = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = -a.at(i, j);
    return r;
}

// zero: additive identity used to seed accumulators
template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shapes");
    Matrix<T> r(a.rows(), b.cols(), zero);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
    return r;
}

template <class T>
bool mat_eq(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

// 2x2 block assembly; empty blocks are sized from their neighbors
template <class T>
Matrix<T> mat_block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                       const Matrix<T>& d, const T& zero) {
    int r0 = a.rows() ? a.rows() : b.rows();
    int r1 = c.rows() ? c.rows() : d.rows();
    int c0 = a.cols() ? a.cols() : c.cols();
    int c1 = b.cols() ? b.cols() : d.cols();
    Matrix<T> m(r0 + r1, c0 + c1, zero);
    auto put = [&](const Matrix<T>& x, int ro, int co) {
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) m.at(ro + i, co + j) = x.at(i, j);
    };
    put(a, 0, 0);
    put(b, 0, c0);
    put(c, r0, 0);
    put(d, r0, c0);
    return m;
}

}  // namespace grnov

#endif
