#pragma once

#include "tbt/gf.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tbt {

using Vec = std::vector<int>; // entries reduced mod p

// Dense matrix over GF(p), row-major. Rows are vectors; a matrix used as a
// linear map sends the column vector x to M*x.
class Mat {
public:
    Mat() : field_(), rows_(0), cols_(0) {}
    Mat(GF field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Mat(GF field, std::initializer_list<std::initializer_list<int>> rows);

    static Mat identity(GF field, std::size_t n);
    static Mat from_rows(GF field, const std::vector<Vec>& rows, std::size_t cols);

    const GF& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, int v) { data_[r * cols_ + c] = field_.reduce(v); }

    Vec row(std::size_t r) const;
    void append_row(const Vec& v);

    Mat transpose() const;
    Mat mul(const Mat& other) const;      // this * other
    Vec apply(const Vec& x) const;        // this * x (x as column), returns column as Vec
    Mat vstack(const Mat& below) const;

    // In-place Gauss-Jordan to reduced row echelon form. Returns pivot columns.
    std::vector<std::size_t> rref_in_place();

    // RREF with zero rows removed; row space is preserved.
    Mat rref() const;
    std::size_t rank() const;

    // Basis of {x : M x = 0}, one kernel vector per row (not canonicalized).
    Mat kernel_basis() const;

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ && field_ == o.field_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    GF field_;
    std::size_t rows_, cols_;
    std::vector<int> data_;
};

bool is_zero_vec(const Vec& v);
Vec add_vecs(const GF& f, const Vec& a, const Vec& b);
Vec scale_vec(const GF& f, int c, const Vec& a);
int dot(const GF& f, const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

} // namespace tbt
