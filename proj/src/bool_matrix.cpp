#include "gma/bool_matrix.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "gma/error.hpp"

namespace gma {

BoolMatrix::BoolMatrix(int dim) : dim_(dim), words_per_row_((dim + 63) / 64) {
    if (dim < 1) throw InputError("bool matrix: dimension must be positive");
    bits_.assign(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(words_per_row_), 0);
}

BoolMatrix BoolMatrix::identity(int dim) {
    BoolMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, true);
    return m;
}

BoolMatrix BoolMatrix::of_function(const std::vector<int>& f) {
    BoolMatrix m(static_cast<int>(f.size()));
    for (int q = 0; q < m.dim(); ++q) m.set(q, f[static_cast<std::size_t>(q)], true);
    return m;
}

bool BoolMatrix::get(int row, int col) const {
    std::size_t idx = static_cast<std::size_t>(row) * static_cast<std::size_t>(words_per_row_) +
                      static_cast<std::size_t>(col / 64);
    return (bits_[idx] >> (col % 64)) & 1u;
}

void BoolMatrix::set(int row, int col, bool value) {
    std::size_t idx = static_cast<std::size_t>(row) * static_cast<std::size_t>(words_per_row_) +
                      static_cast<std::size_t>(col / 64);
    std::uint64_t bit = std::uint64_t{1} << (col % 64);
    if (value) bits_[idx] |= bit;
    else bits_[idx] &= ~bit;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw InputError("bool matrix: dimension mismatch");
    BoolMatrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
        const std::uint64_t* lrow = &bits_[static_cast<std::size_t>(i) * static_cast<std::size_t>(words_per_row_)];
        std::uint64_t* orow = &out.bits_[static_cast<std::size_t>(i) * static_cast<std::size_t>(words_per_row_)];
        for (int k = 0; k < dim_; ++k) {
            if ((lrow[k / 64] >> (k % 64)) & 1u) {
                const std::uint64_t* rrow =
                    &rhs.bits_[static_cast<std::size_t>(k) * static_cast<std::size_t>(words_per_row_)];
                for (int w = 0; w < words_per_row_; ++w) orow[w] |= rrow[w];
            }
        }
    }
    return out;
}

std::vector<int> BoolMatrix::row_ones(int row) const {
    std::vector<int> cols;
    for (int c = 0; c < dim_; ++c) {
        if (get(row, c)) cols.push_back(c);
    }
    return cols;
}

BoolMatrix bool_matrix_power(const BoolMatrix& m, const BigNat& n) {
    if (n < 0) throw InputError("bool matrix power: negative exponent");
    BoolMatrix result = BoolMatrix::identity(m.dim());
    BoolMatrix base = m;
    BigNat e = n;
    while (e > 0) {
        if ((e & 1) != 0) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

BigNat lcm_range(std::uint64_t from, std::uint64_t to) {
    BigNat acc = 1;
    for (std::uint64_t v = from; v <= to; ++v) acc = boost::integer::lcm(acc, BigNat(v));
    return acc;
}

}  // namespace gma
