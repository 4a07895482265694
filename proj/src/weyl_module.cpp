#include "chevjor/weyl_module.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <type_traits>

namespace chevjor {

namespace {

// Ring-specific glue, selected by matrix type. The prime rides along even
// for ZMat (where it is ignored) to keep one code path.

template <typename MatT> MatT make_mat(long p, std::size_t r, std::size_t c);
template <> ZMat make_mat<ZMat>(long, std::size_t r, std::size_t c) { return ZMat(r, c); }
template <> FpMat make_mat<FpMat>(long p, std::size_t r, std::size_t c) {
    return FpMat(p, r, c);
}

template <typename MatT> MatT make_identity(long p, std::size_t n);
template <> ZMat make_identity<ZMat>(long, std::size_t n) { return ZMat::identity(n); }
template <> FpMat make_identity<FpMat>(long p, std::size_t n) {
    return FpMat::identity(p, n);
}

ZMat scaled(const ZMat& m, const Int& c) { return m.scale(c); }
FpMat scaled(const FpMat& m, const Int& c) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m.p()));
    return m.scale(r.get_si());
}

void copy_entry(ZMat& dst, std::size_t i, std::size_t j, const ZMat& src, std::size_t a,
                std::size_t b) {
    dst.at(i, j) = src.at(a, b);
}
void copy_entry(FpMat& dst, std::size_t i, std::size_t j, const FpMat& src, std::size_t a,
                std::size_t b) {
    dst.at(i, j) = src.at(a, b);
}

template <typename MatT>
MatT top_rows(const MatT& m, long p, std::size_t r) {
    MatT out = make_mat<MatT>(p, r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) copy_entry(out, i, j, m, i, j);
    return out;
}

// Row reduction of the candidate pairing matrix, uniform over the two
// rings: the reduced nonzero rows and their pivot columns. The basis of the
// new weight space is DEFINED by these rows: basis vector s is the lattice
// (resp. vector space) element whose pairings against the candidates form
// row s. No combination-of-candidates transform is kept; the transform's
// entries can grow enormously over Z, and everything downstream is
// recoverable from pairings alone because the form is nondegenerate on
// every weight space.
struct ZReduced {
    ZMat rows;
    std::vector<std::size_t> pivots;
};
ZReduced reduce_pairings(const ZMat& p_mat) {
    auto h = p_mat.hnf();
    std::size_t r = h.pivots.size();
    return {top_rows(h.h, 0, r), h.pivots};
}

struct FpReduced {
    FpMat rows;
    std::vector<std::size_t> pivots;
};
FpReduced reduce_pairings(const FpMat& p_mat) {
    auto e = p_mat.rref();
    std::size_t r = e.pivots.size();
    return {top_rows(e.mat, p_mat.p(), r), e.pivots};
}

// Solver for x * B = v against a fixed full-row-rank B, used to convert
// pairing vectors back into coordinates. The integer version echelonizes
// B once; solutions are exact because callers only ask for vectors that
// lie in the row lattice.
class ZRowSolver {
public:
    explicit ZRowSolver(const ZMat& b) {
        auto t = b.hnf_with_transform();
        check_internal(t.pivots.size() == b.rows(), "row solver needs full row rank");
        h_ = std::move(t.h);
        u_ = std::move(t.transform);
        pivots_ = std::move(t.pivots);
    }
    std::vector<Int> solve(const std::vector<Int>& v) const {
        std::vector<Int> y = solve_in_lattice(h_, pivots_, v);
        std::vector<Int> x(u_.cols());
        for (std::size_t j = 0; j < u_.cols(); ++j)
            for (std::size_t s = 0; s < y.size(); ++s) x[j] += y[s] * u_.at(s, j);
        return x;
    }

private:
    ZMat h_, u_;
    std::vector<std::size_t> pivots_;
};

class FpRowSolver {
public:
    explicit FpRowSolver(const FpMat& b) : b_(b) {}
    std::vector<long> solve(const std::vector<long>& v) const { return solve_xB_eq_v(b_, v); }

private:
    FpMat b_;
};

ZRowSolver make_row_solver(const ZMat& b) { return ZRowSolver(b); }
FpRowSolver make_row_solver(const FpMat& b) { return FpRowSolver(b); }

Int round_nearest(const Rat& m) {
    Rat h = m + Rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
    return q;
}

// LLL reduction working directly on a positive definite Gram matrix:
// returns a unimodular T such that T * g * T^T is the Gram of a reduced
// basis. Without this the bases picked level by level grow more and more
// skew and entry sizes explode exponentially with the depth of the weight
// diagram. Textbook algorithm, Gram-Schmidt data kept in exact rationals.
ZMat lll_transform(const ZMat& g0) {
    std::size_t n = g0.rows();
    ZMat t = ZMat::identity(n);
    if (n <= 1) return t;

    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
    std::vector<Rat> B(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat s(g0.at(i, j));
            for (std::size_t l = 0; l < j; ++l) s -= mu[i][l] * mu[j][l] * B[l];
            mu[i][j] = s / B[j];
        }
        Rat s(g0.at(i, i));
        for (std::size_t l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * B[l];
        check_internal(s > 0, "pairing form is not positive definite");
        B[i] = s;
    }

    auto red = [&](std::size_t k, std::size_t j) {
        Int q = round_nearest(mu[k][j]);
        if (q == 0) return;
        for (std::size_t c = 0; c < n; ++c) t.at(k, c) -= q * t.at(j, c);
        mu[k][j] -= Rat(q);
        for (std::size_t l = 0; l < j; ++l) mu[k][l] -= Rat(q) * mu[j][l];
    };

    const Rat delta(99, 100);
    std::size_t k = 1;
    while (k < n) {
        red(k, k - 1);
        if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            for (std::size_t c = 0; c < n; ++c) std::swap(t.at(k - 1, c), t.at(k, c));
            Rat m = mu[k][k - 1];
            Rat bnew = B[k] + m * m * B[k - 1];
            mu[k][k - 1] = m * B[k - 1] / bnew;
            B[k] = B[k - 1] * B[k] / bnew;
            B[k - 1] = bnew;
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k - 1][j], mu[k][j]);
            for (std::size_t i = k + 1; i < n; ++i) {
                Rat tt = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * tt;
                mu[i][k - 1] = tt + mu[k][k - 1] * mu[i][k];
            }
            k = k > 1 ? k - 1 : 1;
        } else {
            for (std::size_t j = k - 1; j-- > 0;) red(k, j);
            ++k;
        }
    }
    return t;
}

// Exact inverse of a unimodular matrix: its Hermite form is the identity,
// so the recorded transform is the inverse.
ZMat unimodular_inverse(const ZMat& t) {
    auto h = t.hnf_with_transform();
    check_internal(h.h == ZMat::identity(t.rows()), "matrix is not unimodular");
    return h.transform;
}

std::vector<Int> row_of(const ZMat& m, std::size_t i) {
    std::vector<Int> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
    return v;
}
std::vector<long> row_of(const FpMat& m, std::size_t i) {
    std::vector<long> v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
    return v;
}

template <typename MatT, typename Elem>
void put_row(MatT& m, std::size_t i, const std::vector<Elem>& v) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = v[j];
}

// Coordinates of row `src_row` of P with respect to the reduced pairing
// rows, written into row `dst_row` of M.
void solve_coords(const ZMat& rows, const std::vector<std::size_t>& pivots, const ZMat& p_mat,
                  std::size_t src_row, ZMat& m, std::size_t dst_row) {
    std::vector<Int> v(p_mat.cols());
    for (std::size_t j = 0; j < p_mat.cols(); ++j) v[j] = p_mat.at(src_row, j);
    std::vector<Int> x = solve_in_lattice(rows, pivots, v);
    for (std::size_t j = 0; j < x.size(); ++j) m.at(dst_row, j) = x[j];
}
void solve_coords(const FpMat& rows, const std::vector<std::size_t>& pivots,
                  const FpMat& p_mat, std::size_t src_row, FpMat& m, std::size_t dst_row) {
    (void)pivots;
    std::vector<long> v(p_mat.cols());
    for (std::size_t j = 0; j < p_mat.cols(); ++j) v[j] = p_mat.at(src_row, j);
    std::vector<long> x = solve_xB_eq_v(rows, v);
    for (std::size_t j = 0; j < x.size(); ++j) m.at(dst_row, j) = x[j];
}

template <typename MatT>
ModuleRep<MatT> build_rep(const RootDatum& datum, const Weight& lambda, long p,
                          std::size_t cap) {
    require(datum.is_dominant(lambda), "highest weight must be dominant");
    Int wd = weyl_dimension(datum, lambda);
    if (wd > static_cast<unsigned long>(cap))
        throw cap_error("module dimension " + wd.get_str() + " exceeds the cap " +
                        std::to_string(cap));

    CharacterSession chars(datum, lambda);
    ModuleRep<MatT> rep;
    rep.datum = &datum;
    rep.highest = lambda;
    rep.prime = p;

    std::vector<Weight> alpha_w(datum.rank());
    for (int i = 0; i < datum.rank(); ++i) {
        RootVec e(datum.rank(), 0);
        e[i] = 1;
        alpha_w[i] = datum.weight_of_root(e);
    }

    // The weight diagram, level by level below lambda. Every weight of the
    // module is reachable from lambda by single steps down simple roots
    // that stay inside the diagram, so a layered walk finds all of them.
    std::vector<std::vector<Weight>> layers{{lambda}};
    std::set<Weight> seen{lambda};
    while (true) {
        std::vector<Weight> next;
        for (const Weight& w : layers.back())
            for (int i = 0; i < datum.rank(); ++i) {
                Weight c = datum.sub(w, alpha_w[i]);
                if (!seen.count(c) && chars.mult(c) > 0) {
                    seen.insert(c);
                    next.push_back(c);
                }
            }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(next));
    }

    // Top block: the highest weight vector with <v, v> = 1.
    rep.weights.push_back(lambda);
    rep.windex[lambda] = 0;
    rep.dims.push_back(1);
    rep.offsets.push_back(0);
    rep.total = 1;
    MatT one = make_mat<MatT>(p, 1, 1);
    one.at(0, 0) = 1;
    rep.gram.push_back(one);
    rep.lower.emplace_back();
    rep.raise.emplace_back();

    struct Group {
        int i;
        long k;
        std::size_t src; // block index of mu + k alpha_i
    };

    // Per-block solvers against the Gram matrices, built on first use;
    // raising matrices are recovered from pairings through these.
    using RowSolverT = decltype(make_row_solver(std::declval<const MatT&>()));
    std::map<std::size_t, RowSolverT> gram_solver;

    auto raise_of = [&](std::size_t b, int i, long k) -> const MatT* {
        auto it = rep.raise[b].find({i, k});
        return it == rep.raise[b].end() ? nullptr : &it->second;
    };
    auto lower_of = [&](std::size_t b, int i, long k) -> const MatT* {
        auto it = rep.lower[b].find({i, k});
        return it == rep.lower[b].end() ? nullptr : &it->second;
    };

    // Matrix of e_{ie}^(ke) f_{if}^(kf) on the basis of block src (row
    // vectors; coordinates land at weight w_src + ke alpha_ie - kf alpha_if).
    // Empty optional means the zero map.
    auto composed = [&](std::size_t src, int ie, long ke, int i_f,
                        long kf) -> std::optional<MatT> {
        if (ke == 0 && kf == 0) return make_identity<MatT>(p, rep.dims[src]);
        if (ke == 0) {
            const MatT* low = lower_of(src, i_f, kf);
            return low ? std::optional<MatT>(*low) : std::nullopt;
        }
        const MatT* up = raise_of(src, ie, ke);
        if (!up) return std::nullopt;
        if (kf == 0) return *up;
        std::size_t mid = rep.block_of(datum.add(rep.weights[src], [&] {
            Weight s = alpha_w[ie];
            for (auto& c : s) c *= ke;
            return s;
        }()));
        check_internal(mid != ModuleRep<MatT>::npos, "raising matrix without target block");
        const MatT* low = lower_of(mid, i_f, kf);
        if (!low) return std::nullopt;
        return up->mul(*low);
    };

    // e_{ie}^(ke) applied to the candidates f_{g.i}^(g.k) (basis of g.src),
    // via the divided-power commutation rule.
    auto ef_product = [&](int ie, long ke, const Group& g) -> std::optional<MatT> {
        if (ie != g.i) return composed(g.src, ie, ke, g.i, g.k);
        std::optional<MatT> acc;
        long m = rep.weights[g.src][ie];
        for (long j = 0; j <= std::min(ke, g.k); ++j) {
            Int c = binomial(Int(m + ke - g.k), j);
            if (c == 0) continue;
            auto term = composed(g.src, ie, ke - j, ie, g.k - j);
            if (!term) continue;
            MatT scaled_term = scaled(*term, c);
            acc = acc ? std::optional<MatT>(acc->add(scaled_term))
                      : std::optional<MatT>(std::move(scaled_term));
        }
        return acc;
    };

    for (std::size_t h = 1; h < layers.size(); ++h) {
        for (const Weight& mu : layers[h]) {
            RootVec up_coords = datum.root_coords(datum.sub(lambda, mu));

            std::vector<Group> groups;
            std::vector<std::size_t> gstart;
            std::size_t ncand = 0;
            for (int i = 0; i < datum.rank(); ++i)
                for (long k = 1; k <= up_coords[i]; ++k) {
                    Weight nu = mu;
                    for (int j = 0; j < datum.rank(); ++j) nu[j] += k * alpha_w[i][j];
                    std::size_t b = rep.block_of(nu);
                    if (b == ModuleRep<MatT>::npos || rep.dims[b] == 0) continue;
                    groups.push_back({i, k, b});
                    gstart.push_back(ncand);
                    ncand += rep.dims[b];
                }

            // Pairwise contravariant products of the candidates.
            MatT pmat = make_mat<MatT>(p, ncand, ncand);
            for (std::size_t a = 0; a < groups.size(); ++a) {
                std::size_t nu1 = groups[a].src;
                for (std::size_t b = 0; b < groups.size(); ++b) {
                    auto w = ef_product(groups[a].i, groups[a].k, groups[b]);
                    if (!w) continue;
                    MatT block = rep.gram[nu1].mul(w->transpose());
                    for (std::size_t s = 0; s < block.rows(); ++s)
                        for (std::size_t t = 0; t < block.cols(); ++t)
                            copy_entry(pmat, gstart[a] + s, gstart[b] + t, block, s, t);
                }
            }
            check_internal(pmat == pmat.transpose(),
                           "candidate pairing matrix is not symmetric");

            auto dec = reduce_pairings(pmat);
            std::size_t r = dec.pivots.size();
            if (p == 0)
                check_internal(Int(r) == chars.mult(mu),
                               "weight space rank disagrees with the character");

            std::size_t nb = rep.weights.size();
            rep.weights.push_back(mu);
            rep.windex[mu] = nb;
            rep.dims.push_back(r);
            rep.offsets.push_back(rep.total);
            rep.total += r;
            rep.lower.emplace_back();
            rep.raise.emplace_back();
            if (r == 0) {
                rep.gram.push_back(make_mat<MatT>(p, 0, 0));
                continue;
            }

            // Express each candidate in the new basis (pairings determine
            // coordinates). Sliced by family, these become the lowering
            // matrices into mu.
            MatT amat = make_mat<MatT>(p, ncand, r);
            for (std::size_t t = 0; t < ncand; ++t) solve_coords(dec.rows, dec.pivots, pmat, t, amat, t);

            // Pairings of the basis among itself: row s of dec.rows lists
            // <b_s, c_t> over candidates t, and c_t = sum_u amat[t][u] b_u,
            // so gram * amat^T = dec.rows.
            auto asolver = make_row_solver(amat.transpose());
            MatT gram_new = make_mat<MatT>(p, r, r);
            for (std::size_t s = 0; s < r; ++s) put_row(gram_new, s, asolver.solve(row_of(dec.rows, s)));
            check_internal(gram_new == gram_new.transpose(),
                           "basis pairing matrix is not symmetric");

            // Swap the basis for a lattice-reduced one before anything is
            // derived from it, otherwise entry sizes snowball with depth.
            if constexpr (std::is_same_v<MatT, ZMat>) {
                if (r >= 2) {
                    ZMat t = lll_transform(gram_new);
                    if (t != ZMat::identity(r)) {
                        gram_new = t.mul(gram_new).mul(t.transpose());
                        amat = amat.mul(unimodular_inverse(t));
                    }
                }
            }

            for (std::size_t g = 0; g < groups.size(); ++g) {
                MatT m = make_mat<MatT>(p, rep.dims[groups[g].src], r);
                for (std::size_t s = 0; s < m.rows(); ++s)
                    for (std::size_t j = 0; j < r; ++j)
                        copy_entry(m, s, j, amat, gstart[g] + s, j);
                rep.lower[groups[g].src][{groups[g].i, groups[g].k}] = std::move(m);
            }

            // Raising matrices out of mu, one per candidate family, by
            // contravariance: <e^(k) b_s, b'_u> = <b_s, f^(k) b'_u>, and the
            // pairings against the target basis pin the coordinates down.
            for (const Group& gt : groups) {
                const MatT& low = rep.lower[gt.src].at({gt.i, gt.k});
                MatT pv = gram_new.mul(low.transpose());
                auto it = gram_solver.find(gt.src);
                if (it == gram_solver.end())
                    it = gram_solver.emplace(gt.src, make_row_solver(rep.gram[gt.src])).first;
                MatT x = make_mat<MatT>(p, r, rep.dims[gt.src]);
                for (std::size_t s = 0; s < r; ++s) put_row(x, s, it->second.solve(row_of(pv, s)));
                rep.raise[nb][{gt.i, gt.k}] = std::move(x);
            }
            rep.gram.push_back(std::move(gram_new));
        }
    }

    if (p == 0)
        check_internal(Int(static_cast<unsigned long>(rep.total)) == wd,
                       "total dimension disagrees with the Weyl formula");
    return rep;
}

} // namespace

template <typename MatT>
MatT ModuleRep<MatT>::lower_global(int i, long k) const {
    require(k >= 1, "divided power must be at least 1");
    MatT out = make_mat<MatT>(prime, total, total);
    for (std::size_t b = 0; b < weights.size(); ++b) {
        auto it = lower[b].find({i, k});
        if (it == lower[b].end()) continue;
        Weight dst_w = weights[b];
        for (int j = 0; j < datum->rank(); ++j)
            dst_w[j] -= k * datum->cartan()[j][i];
        std::size_t d = block_of(dst_w);
        check_internal(d != npos, "lowering block without target");
        for (std::size_t s = 0; s < it->second.rows(); ++s)
            for (std::size_t t = 0; t < it->second.cols(); ++t)
                copy_entry(out, offsets[b] + s, offsets[d] + t, it->second, s, t);
    }
    return out;
}

template <typename MatT>
MatT ModuleRep<MatT>::raise_global(int i, long k) const {
    require(k >= 1, "divided power must be at least 1");
    MatT out = make_mat<MatT>(prime, total, total);
    for (std::size_t b = 0; b < weights.size(); ++b) {
        auto it = raise[b].find({i, k});
        if (it == raise[b].end()) continue;
        Weight dst_w = weights[b];
        for (int j = 0; j < datum->rank(); ++j)
            dst_w[j] += k * datum->cartan()[j][i];
        std::size_t d = block_of(dst_w);
        check_internal(d != npos, "raising block without target");
        for (std::size_t s = 0; s < it->second.rows(); ++s)
            for (std::size_t t = 0; t < it->second.cols(); ++t)
                copy_entry(out, offsets[b] + s, offsets[d] + t, it->second, s, t);
    }
    return out;
}

template <typename MatT>
long ModuleRep<MatT>::power_bound(int i) const {
    long best = 0;
    for (std::size_t b = 0; b < weights.size(); ++b) {
        for (const auto& [key, m] : lower[b])
            if (key.first == i) best = std::max(best, key.second);
        for (const auto& [key, m] : raise[b])
            if (key.first == i) best = std::max(best, key.second);
    }
    return best;
}

template <typename MatT>
std::vector<Weight> ModuleRep<MatT>::coordinate_weights() const {
    std::vector<Weight> out;
    out.reserve(total);
    for (std::size_t b = 0; b < weights.size(); ++b)
        for (std::size_t s = 0; s < dims[b]; ++s) out.push_back(weights[b]);
    return out;
}

template struct ModuleRep<ZMat>;
template struct ModuleRep<FpMat>;

IntegralRep construct_weyl_module(const RootDatum& datum, const Weight& lambda,
                                  std::size_t dimension_cap) {
    return build_rep<ZMat>(datum, lambda, 0, dimension_cap);
}

FpRep construct_simple_fp(const RootDatum& datum, const Weight& lambda, long p,
                          std::size_t dimension_cap) {
    require(is_prime(p), "modulus must be prime");
    return build_rep<FpMat>(datum, lambda, p, dimension_cap);
}

} // namespace chevjor
