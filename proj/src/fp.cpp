#include "chevjor/fp.hpp"

#include <algorithm>

namespace chevjor {

namespace {

inline long mulmod(long a, long b, long p) {
    return static_cast<long>((static_cast<long long>(a) * b) % p);
}

} // namespace

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long fp_inv(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    require(a != 0, "fp_inv of zero");
    // Extended Euclid on (a, p).
    long old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    check_internal(old_r == 1, "fp_inv: argument not invertible");
    old_s %= p;
    if (old_s < 0) old_s += p;
    return old_s;
}

FpMat::FpMat(long p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    require(p >= 2, "FpMat modulus must be at least 2");
}

FpMat FpMat::identity(long p, std::size_t n) {
    FpMat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMat FpMat::reduce(long p, std::size_t rows, std::size_t cols,
                    const std::vector<Int>& entries) {
    require(entries.size() == rows * cols, "FpMat::reduce: size mismatch");
    FpMat m(p, rows, cols);
    Int r;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        mpz_mod_ui(r.get_mpz_t(), entries[k].get_mpz_t(),
                   static_cast<unsigned long>(p));
        m.a_[k] = r.get_si();
    }
    return m;
}

FpMat FpMat::mul(const FpMat& rhs) const {
    require(p_ == rhs.p_ && cols_ == rhs.rows_, "FpMat::mul: shape/modulus mismatch");
    FpMat out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            long aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                long v = out.at(i, j) + mulmod(aik, rhs.at(k, j), p_);
                out.at(i, j) = v >= p_ ? v - p_ : v;
            }
        }
    return out;
}

FpMat FpMat::transpose() const {
    FpMat out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

FpMat FpMat::add(const FpMat& rhs) const {
    require(p_ == rhs.p_ && rows_ == rhs.rows_ && cols_ == rhs.cols_,
            "FpMat::add: shape/modulus mismatch");
    FpMat out(p_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) {
        long v = a_[k] + rhs.a_[k];
        out.a_[k] = v >= p_ ? v - p_ : v;
    }
    return out;
}

FpMat FpMat::scale(long c) const {
    c %= p_;
    if (c < 0) c += p_;
    FpMat out(p_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = mulmod(a_[k], c, p_);
    return out;
}

FpMat FpMat::pow(long e) const {
    require(rows_ == cols_, "FpMat::pow: matrix not square");
    require(e >= 0, "FpMat::pow: negative exponent");
    FpMat acc = identity(p_, rows_);
    FpMat base = *this;
    while (e > 0) {
        if (e & 1) acc = acc.mul(base);
        base = base.mul(base);
        e >>= 1;
    }
    return acc;
}

FpMat::EchelonT FpMat::echelon_with_transform() const {
    EchelonT res{*this, identity(p_, rows_), {}};
    FpMat& E = res.ech;
    FpMat& U = res.transform;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && E.at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(E.at(piv, j), E.at(row, j));
            for (std::size_t j = 0; j < rows_; ++j) std::swap(U.at(piv, j), U.at(row, j));
        }
        long inv = fp_inv(E.at(row, col), p_);
        for (std::size_t j = 0; j < cols_; ++j) E.at(row, j) = mulmod(E.at(row, j), inv, p_);
        for (std::size_t j = 0; j < rows_; ++j) U.at(row, j) = mulmod(U.at(row, j), inv, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            long f = E.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                long v = E.at(i, j) - mulmod(f, E.at(row, j), p_);
                if (v < 0) v += p_;
                E.at(i, j) = v;
            }
            for (std::size_t j = 0; j < rows_; ++j) {
                long v = U.at(i, j) - mulmod(f, U.at(row, j), p_);
                if (v < 0) v += p_;
                U.at(i, j) = v;
            }
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

FpMat::Rref FpMat::rref() const {
    EchelonT e = echelon_with_transform();
    FpMat out(p_, e.pivots.size(), cols_);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = e.ech.at(i, j);
    return Rref{out, e.pivots};
}

std::size_t FpMat::rank() const { return echelon_with_transform().pivots.size(); }

FpMat FpMat::kernel() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    FpMat out(p_, free_cols.size(), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        out.at(k, fc) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            long v = r.mat.at(i, fc);
            if (v != 0) out.at(k, r.pivots[i]) = p_ - v;
        }
    }
    return out;
}

FpMat kron(const FpMat& a, const FpMat& b) {
    require(a.p() == b.p(), "kron: factors live over different primes");
    long p = a.p();
    FpMat out(p, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            long av = a.at(i, j);
            if (av == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    long bv = b.at(r, c);
                    if (bv == 0) continue;
                    out.at(i * b.rows() + r, j * b.cols() + c) =
                        static_cast<long>(static_cast<long long>(av) * bv % p);
                }
        }
    return out;
}

std::vector<long> solve_xB_eq_v(const FpMat& B, const std::vector<long>& v) {
    require(v.size() == B.cols(), "solve_xB_eq_v: length mismatch");
    // Eliminate on [B^T | v^T]; consistency of the last column gives x.
    long p = B.p();
    FpMat aug(p, B.cols(), B.rows() + 1);
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) aug.at(j, i) = B.at(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j) {
        long e = v[j] % p;
        if (e < 0) e += p;
        aug.at(j, B.rows()) = e;
    }
    FpMat::Rref r = aug.rref();
    std::vector<long> x(B.rows(), 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        require(r.pivots[i] < B.rows(), "solve_xB_eq_v: vector outside row space");
        x[r.pivots[i]] = r.mat.at(i, B.rows());
    }
    return x;
}

} // namespace chevjor
