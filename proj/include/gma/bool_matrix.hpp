#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gma {

using BigNat = boost::multiprecision::cpp_int;

// Square 0/1 matrix under the (or, and) product. Rows are bit-packed.
class BoolMatrix {
public:
    explicit BoolMatrix(int dim);

    static BoolMatrix identity(int dim);
    // Matrix of a map f: state -> state, entry (q, f(q)) = 1.
    static BoolMatrix of_function(const std::vector<int>& f);

    int dim() const { return dim_; }
    bool get(int row, int col) const;
    void set(int row, int col, bool value);

    BoolMatrix operator*(const BoolMatrix& rhs) const;
    bool operator==(const BoolMatrix&) const = default;

    // Column indices with a 1 in the given row.
    std::vector<int> row_ones(int row) const;

private:
    int dim_;
    int words_per_row_;
    std::vector<std::uint64_t> bits_;
};

// Boolean n-th power by repeated squaring; n = 0 gives the identity.
BoolMatrix bool_matrix_power(const BoolMatrix& m, const BigNat& n);

BigNat lcm_range(std::uint64_t from, std::uint64_t to);

}  // namespace gma
