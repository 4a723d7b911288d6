#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcp {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense arbitrary-precision integer matrix, row-major.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    IntMat(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto &row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged initializer");
            for (long long v : row)
                a_.emplace_back(v);
        }
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int &operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool operator==(const IntMat &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMat &o) const { return !(*this == o); }

    IntVec col(std::size_t j) const {
        IntVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    IntVec row(std::size_t i) const {
        IntVec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            v[j] = (*this)(i, j);
        return v;
    }

    IntVec mul(const IntVec &x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("dimension mismatch in mul");
        IntVec y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                s += (*this)(i, j) * x[j];
            y[i] = std::move(s);
        }
        return y;
    }

    IntMat mul(const IntMat &b) const {
        if (b.rows_ != cols_)
            throw std::invalid_argument("dimension mismatch in mul");
        IntMat c(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int &aik = (*this)(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    IntMat transposed() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_cols(std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, j), (*this)(i, k));
    }

    // col_j <- a*col_j + b*col_k ; col_k <- c*col_j_old + d*col_k
    void combine_cols(std::size_t j, std::size_t k, const Int &a, const Int &b,
                      const Int &c, const Int &d) {
        for (std::size_t i = 0; i < rows_; ++i) {
            Int vj = (*this)(i, j), vk = (*this)(i, k);
            (*this)(i, j) = a * vj + b * vk;
            (*this)(i, k) = c * vj + d * vk;
        }
    }

    void add_col_multiple(std::size_t dst, std::size_t src, const Int &f) {
        if (f == 0)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) += f * (*this)(i, src);
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = -(*this)(i, j);
    }

    bool col_is_zero(std::size_t j) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, j) != 0)
                return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j)
                    s += ' ';
                s += (*this)(i, j).str();
            }
            s += '\n';
        }
        return s;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

inline std::ostream &operator<<(std::ostream &os, const IntMat &m) {
    return os << m.to_string();
}

inline bool is_zero(const IntVec &v) {
    for (const Int &x : v)
        if (x != 0)
            return false;
    return true;
}

inline IntVec vec_sub(const IntVec &a, const IntVec &b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_add(const IntVec &a, const IntVec &b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline IntVec vec_neg(const IntVec &a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

inline IntVec vec_scale(const Int &c, const IntVec &a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = c * a[i];
    return r;
}

// Columns of a matrix assembled from a list of vectors.
inline IntMat from_columns(const std::vector<IntVec> &cols, std::size_t dim) {
    IntMat m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim)
            throw std::invalid_argument("column dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

} // namespace rcp
