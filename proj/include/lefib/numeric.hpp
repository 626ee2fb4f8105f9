#ifndef LEFIB_NUMERIC_HPP
#define LEFIB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefib {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense matrix of exact integers, row major.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMat operator*(const IntMat& other) const;
    IntMat transpose() const;
    IntVec apply(const IntVec& v) const;

    bool operator==(const IntMat& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_; }
    bool operator!=(const IntMat& other) const { return !(*this == other); }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Standard symplectic form on Z^{2g}, block diagonal with blocks [[0,1],[-1,0]]
// in the basis a_1, b_1, ..., a_g, b_g.
IntMat standard_symplectic_form(std::size_t genus);

bool is_symplectic(const IntMat& m);

// Inverse of a symplectic matrix: M^{-1} = J^{-1} M^T J, exact over Z.
IntMat symplectic_inverse(const IntMat& m);

// Basis of the rational kernel of an integer matrix, each basis vector scaled
// to integer entries.
std::vector<IntVec> integer_kernel_basis(const IntMat& m);

// Signature (#positive - #negative diagonal entries after congruence
// diagonalization) of a symmetric matrix with rational entries.
int signature_of_symmetric(const std::vector<std::vector<Rat>>& q);

Int gcd(Int a, Int b);

}  // namespace lefib

#endif
