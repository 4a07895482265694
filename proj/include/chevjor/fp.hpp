// Dense linear algebra over a prime field GF(p). Matrices are small (a few
// hundred rows at most, entries reduced mod a machine-sized prime), so a
// plain row-major vector<long> with textbook Gaussian elimination is both
// fast enough and easy to audit.
//
// Convention used throughout the library: module elements are ROW vectors of
// coordinates, a basis is a matrix whose rows are the basis vectors, and
// operators act by right multiplication (v -> v * M).
#pragma once

#include <cstddef>
#include <vector>

#include "chevjor/numeric.hpp"

namespace chevjor {

long fp_inv(long a, long p);
bool is_prime(long p);

class FpMat {
public:
    FpMat() : p_(2), rows_(0), cols_(0) {}
    FpMat(long p, std::size_t rows, std::size_t cols);

    static FpMat identity(long p, std::size_t n);
    // Reduce an integer matrix (row-major, rows x cols) mod p.
    static FpMat reduce(long p, std::size_t rows, std::size_t cols,
                        const std::vector<Int>& entries);

    long p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    long& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    long at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const FpMat& o) const = default;

    FpMat mul(const FpMat& rhs) const;
    FpMat transpose() const;
    FpMat add(const FpMat& rhs) const;
    FpMat scale(long c) const;
    FpMat pow(long e) const; // square matrices only

    std::size_t rank() const;

    // Reduced row echelon form, plus the pivot column of each nonzero row.
    struct Rref;
    Rref rref() const;

    // Row echelon with transform: returns (E, U, pivots) where U * this = E,
    // U invertible, E reduced. Rows of E beyond pivots.size() are zero.
    struct EchelonT;
    EchelonT echelon_with_transform() const;

    // Basis (as rows) of { v : this * v^T = 0 }, in rref form.
    FpMat kernel() const;

private:
    long p_;
    std::size_t rows_, cols_;
    std::vector<long> a_;
};

struct FpMat::Rref {
    FpMat mat;
    std::vector<std::size_t> pivots;
};

struct FpMat::EchelonT {
    FpMat ech;
    FpMat transform;
    std::vector<std::size_t> pivots;
};

// Solve x * B = v where the rows of B are independent. Fails (precondition)
// if v is outside the row space.
std::vector<long> solve_xB_eq_v(const FpMat& B, const std::vector<long>& v);

// Kronecker product; block (i,j) of the result is a(i,j) * b. Row i*b.rows()+r,
// column j*b.cols()+c holds a(i,j)*b(r,c), matching the convention that the
// tensor basis vector (i,r) sits at position i*b.rows()+r.
FpMat kron(const FpMat& a, const FpMat& b);

} // namespace chevjor
