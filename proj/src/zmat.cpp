#include "chevjor/zmat.hpp"

#include <algorithm>

namespace chevjor {

ZMat ZMat::identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::mul(const ZMat& rhs) const {
    require(cols_ == rhs.rows_, "ZMat::mul: shape mismatch");
    ZMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += aik * b;
            }
        }
    return out;
}

ZMat ZMat::transpose() const {
    ZMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

ZMat ZMat::add(const ZMat& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "ZMat::add: shape mismatch");
    ZMat out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + rhs.a_[k];
    return out;
}

ZMat ZMat::scale(const Int& c) const {
    ZMat out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
    return out;
}

bool ZMat::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

FpMat ZMat::mod_p(long p) const { return FpMat::reduce(p, rows_, cols_, a_); }

ZMat::HnfT ZMat::hnf_with_transform() const { return hnf_impl(true); }

ZMat::Hnf ZMat::hnf() const {
    HnfT t = hnf_impl(false);
    return {std::move(t.h), std::move(t.pivots)};
}

ZMat::HnfT ZMat::hnf_impl(bool want_transform) const {
    HnfT res{*this, want_transform ? identity(rows_) : ZMat(), {}};
    ZMat& H = res.h;
    ZMat& U = res.transform;
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(H.at(a, j), H.at(b, j));
        if (want_transform)
            for (std::size_t j = 0; j < rows_; ++j) std::swap(U.at(a, j), U.at(b, j));
    };
    auto addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) H.at(dst, j) += q * H.at(src, j);
        if (want_transform)
            for (std::size_t j = 0; j < rows_; ++j) U.at(dst, j) += q * U.at(src, j);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) H.at(r, j) = -H.at(r, j);
        if (want_transform)
            for (std::size_t j = 0; j < rows_; ++j) U.at(r, j) = -U.at(r, j);
    };

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        // Euclid over the entries of this column at or below `row`.
        while (true) {
            std::size_t best = rows_;
            for (std::size_t i = row; i < rows_; ++i) {
                if (H.at(i, col) == 0) continue;
                if (best == rows_ || mpz_cmpabs(H.at(i, col).get_mpz_t(),
                                                H.at(best, col).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == rows_) break; // column clear below
            swap_rows(row, best);
            bool cleared = true;
            for (std::size_t i = row + 1; i < rows_; ++i) {
                if (H.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H.at(i, col).get_mpz_t(), H.at(row, col).get_mpz_t());
                addmul(i, row, -q);
                if (H.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (H.at(row, col) == 0) continue;
        if (H.at(row, col) < 0) negate_row(row);
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H.at(i, col).get_mpz_t(), H.at(row, col).get_mpz_t());
            addmul(i, row, -q);
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

Int ZMat::det() const {
    require(rows_ == cols_, "ZMat::det: matrix not square");
    if (rows_ == 0) return 1;
    // Bareiss fraction-free elimination.
    ZMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < rows_; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < rows_ && m.at(s, k) == 0) ++s;
            if (s == rows_) return 0;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(k, j), m.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows_; ++i)
            for (std::size_t j = k + 1; j < cols_; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j),
                                       prev, "Bareiss determinant");
        prev = m.at(k, k);
    }
    Int d = m.at(rows_ - 1, rows_ - 1);
    return sign < 0 ? Int(-d) : d;
}

std::vector<Int> solve_in_lattice(const ZMat& H, const std::vector<std::size_t>& pivots,
                                  const std::vector<Int>& v) {
    require(v.size() == H.cols(), "solve_in_lattice: length mismatch");
    std::vector<Int> res = v;
    std::vector<Int> x(pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        std::size_t c = pivots[j];
        x[j] = exact_div(res[c], H.at(j, c), "lattice solve pivot");
        if (x[j] == 0) continue;
        for (std::size_t t = c; t < H.cols(); ++t) res[t] -= x[j] * H.at(j, t);
    }
    for (const Int& r : res)
        check_internal(r == 0, "solve_in_lattice: vector outside row lattice");
    return x;
}

} // namespace chevjor
