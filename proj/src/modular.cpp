#include "chevjor/modular.hpp"

#include <array>
#include <optional>
#include <utility>

#include "chevjor/errors.hpp"
#include "chevjor/structure_constants.hpp"

namespace chevjor {

namespace {

// A weight-homogeneous operator on the integral module, stored block by
// block: blocks[b] is the matrix from block b into the block of
// weights[b] + shift. Absent blocks are zero; an all-zero operator has an
// empty map. Every stored block points at a weight that exists in the
// module, which the composition below relies on.
struct BlockOp {
    Weight shift;
    std::map<std::size_t, ZMat> blocks;
};

std::size_t shifted_block(const IntegralRep& rep, std::size_t b, const Weight& shift) {
    return rep.block_of(rep.datum->add(rep.weights[b], shift));
}

void prune(BlockOp& op) {
    for (auto it = op.blocks.begin(); it != op.blocks.end();)
        it = it->second.is_zero() ? op.blocks.erase(it) : std::next(it);
}

// "x then y" on row vectors, i.e. the matrix product M_x M_y blockwise.
BlockOp compose(const IntegralRep& rep, const BlockOp& x, const BlockOp& y) {
    BlockOp out;
    out.shift = rep.datum->add(x.shift, y.shift);
    for (const auto& [b, m] : x.blocks) {
        std::size_t mid = shifted_block(rep, b, x.shift);
        check_internal(mid != IntegralRep::npos, "block operator maps into a missing weight");
        auto it = y.blocks.find(mid);
        if (it == y.blocks.end()) continue;
        ZMat prod = m.mul(it->second);
        if (!prod.is_zero()) out.blocks.emplace(b, std::move(prod));
    }
    return out;
}

// x - y for operators of equal shift.
BlockOp subtract(const BlockOp& x, const BlockOp& y) {
    BlockOp out = x;
    for (const auto& [b, m] : y.blocks) {
        auto it = out.blocks.find(b);
        if (it == out.blocks.end())
            out.blocks.emplace(b, m.scale(-1));
        else
            it->second = it->second.add(m.scale(-1));
    }
    prune(out);
    return out;
}

BlockOp divide(const BlockOp& x, const Int& c) {
    BlockOp out;
    out.shift = x.shift;
    for (const auto& [b, m] : x.blocks) {
        ZMat q(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                q.at(i, j) = exact_div(m.at(i, j), c, "root operator division");
        out.blocks.emplace(b, std::move(q));
    }
    return out;
}

RootVec negate(const RootVec& r) {
    RootVec out = r;
    for (long& x : out) x = -x;
    return out;
}

using OpCache = std::map<std::pair<std::size_t, int>, BlockOp>;

// The root vector e_gamma (positive = true) or f_gamma as a block operator,
// for gamma the positive root of the given index. Simple roots come straight
// from the stored one-step matrices; every other root is the commutator of
// its defining pair divided by the structure constant, recursively.
const BlockOp& root_vector_op(const IntegralRep& rep, const ChevalleyConstants& cc,
                              std::size_t idx, bool positive, OpCache& cache) {
    auto key = std::make_pair(idx, positive ? 1 : 0);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    const RootDatum& datum = *rep.datum;
    const RootVec& gamma = datum.positive_roots()[idx];
    BlockOp op;
    if (datum.height(gamma) == 1) {
        std::size_t i = 0;
        while (gamma[i] == 0) ++i;
        Weight alpha = datum.weight_of_root(gamma);
        op.shift = positive ? alpha : datum.sub(Weight(datum.rank(), 0), alpha);
        PowerKey pk{static_cast<int>(i), 1};
        const auto& family = positive ? rep.raise : rep.lower;
        for (std::size_t b = 0; b < rep.weights.size(); ++b) {
            auto it = family[b].find(pk);
            if (it != family[b].end() && !it->second.is_zero())
                op.blocks.emplace(b, it->second);
        }
    } else {
        auto [ia, id] = cc.defining_pair(idx);
        const BlockOp& a = root_vector_op(rep, cc, ia, positive, cache);
        const BlockOp& d = root_vector_op(rep, cc, id, positive, cache);
        RootVec ra = datum.positive_roots()[ia], rd = datum.positive_roots()[id];
        if (!positive) {
            ra = negate(ra);
            rd = negate(rd);
        }
        long coef = cc.n(ra, rd);
        check_internal(coef != 0, "defining pair with vanishing structure constant");
        // [x_a, x_d] as an operator is M_d M_a - M_a M_d in row convention.
        op = divide(subtract(compose(rep, d, a), compose(rep, a, d)), coef);
        prune(op);
    }
    return cache.emplace(key, std::move(op)).first->second;
}

// Next divided power: x^(k+1) = x^(k) x / (k+1). Powers of one root vector
// commute, so the composition order does not matter.
BlockOp next_divided_power(const IntegralRep& rep, const BlockOp& current,
                           const BlockOp& base, long k_next) {
    return divide(compose(rep, current, base), k_next);
}

ZMat dense_block_op(const IntegralRep& rep, const BlockOp& op) {
    ZMat out(rep.total, rep.total);
    for (const auto& [b, m] : op.blocks) {
        std::size_t d = shifted_block(rep, b, op.shift);
        check_internal(d != IntegralRep::npos, "block operator maps into a missing weight");
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out.at(rep.offsets[b] + i, rep.offsets[d] + j) = m.at(i, j);
    }
    return out;
}

// Resolve a signed root to (positive root index, sign). Rejects non-roots.
std::pair<std::size_t, bool> resolve_root(const RootDatum& datum, const RootVec& beta) {
    require(beta.size() == static_cast<std::size_t>(datum.rank()),
            "root vector has the wrong rank");
    long idx = datum.root_index(beta);
    if (idx >= 0) return {static_cast<std::size_t>(idx), true};
    idx = datum.root_index(negate(beta));
    require(idx >= 0, "not a root of this system");
    return {static_cast<std::size_t>(idx), false};
}

// Choice of head coordinates and radical basis for every weight block,
// together with the inverse of the stacked basis [complement; radical],
// which converts block coordinates into (head, radical) coordinates.
struct HeadData {
    std::vector<std::size_t> hdim, hoff;
    std::vector<std::vector<std::size_t>> head_pos;
    std::vector<FpMat> rad;
    std::vector<FpMat> inv_basis;
    std::size_t total = 0;
};

HeadData build_head_data(const IntegralRep& rep, long p, bool quotient) {
    std::size_t nb = rep.weights.size();
    HeadData hd;
    hd.hdim.resize(nb);
    hd.hoff.resize(nb);
    hd.head_pos.resize(nb);
    hd.rad.resize(nb);
    hd.inv_basis.resize(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        std::size_t d = rep.dims[b];
        hd.hoff[b] = hd.total;
        if (!quotient) {
            hd.hdim[b] = d;
            for (std::size_t i = 0; i < d; ++i) hd.head_pos[b].push_back(i);
            hd.rad[b] = FpMat(p, 0, d);
            hd.inv_basis[b] = FpMat::identity(p, d);
            hd.total += d;
            continue;
        }
        FpMat g = rep.gram[b].mod_p(p);
        FpMat::Rref rr = g.rref();
        hd.head_pos[b] = rr.pivots;
        hd.hdim[b] = rr.pivots.size();
        hd.rad[b] = g.kernel();
        check_internal(hd.hdim[b] + hd.rad[b].rows() == d,
                       "form rank and radical do not fill the weight space");
        // Unit vectors at the pivot coordinates complement the radical:
        // the kernel rows are supported off their own pivot pattern, so the
        // stack is invertible. The transform of its reduced echelon form
        // (which is the identity) is exactly the inverse.
        FpMat basis(p, d, d);
        for (std::size_t s = 0; s < hd.hdim[b]; ++s) basis.at(s, rr.pivots[s]) = 1;
        for (std::size_t s = 0; s < hd.rad[b].rows(); ++s)
            for (std::size_t j = 0; j < d; ++j)
                basis.at(hd.hdim[b] + s, j) = hd.rad[b].at(s, j);
        FpMat::EchelonT et = basis.echelon_with_transform();
        check_internal(et.pivots.size() == d, "head basis failed to be invertible");
        hd.inv_basis[b] = et.transform;
        hd.total += hd.hdim[b];
    }
    return hd;
}

// Reduce a block operator mod p and push it down to the head basis. Returns
// nothing when the result is zero. Checks that the operator sends radical
// vectors into the radical, which is what makes the quotient action exist.
std::optional<FpMat> transport(const IntegralRep& rep, const HeadData& hd, long p,
                               const BlockOp& op) {
    FpMat out(p, hd.total, hd.total);
    bool any = false;
    for (const auto& [b, m] : op.blocks) {
        std::size_t d = shifted_block(rep, b, op.shift);
        check_internal(d != IntegralRep::npos, "block operator maps into a missing weight");
        if (hd.hdim[d] == 0) continue; // image is pure radical there
        FpMat x = m.mod_p(p);
        if (hd.rad[b].rows() > 0) {
            FpMat coords = hd.rad[b].mul(x).mul(hd.inv_basis[d]);
            for (std::size_t s = 0; s < coords.rows(); ++s)
                for (std::size_t t = 0; t < hd.hdim[d]; ++t)
                    check_internal(coords.at(s, t) == 0,
                                   "root operator does not preserve the form radical");
        }
        if (hd.hdim[b] == 0) continue;
        FpMat sel(p, hd.hdim[b], x.cols());
        for (std::size_t s = 0; s < hd.hdim[b]; ++s)
            for (std::size_t j = 0; j < x.cols(); ++j)
                sel.at(s, j) = x.at(hd.head_pos[b][s], j);
        FpMat coords = sel.mul(hd.inv_basis[d]);
        for (std::size_t s = 0; s < hd.hdim[b]; ++s)
            for (std::size_t t = 0; t < hd.hdim[d]; ++t) {
                long v = coords.at(s, t);
                if (v != 0) {
                    out.at(hd.hoff[b] + s, hd.hoff[d] + t) = v;
                    any = true;
                }
            }
    }
    if (!any) return std::nullopt;
    return out;
}

ModularModule reduce_common(const IntegralRep& rep, long p, bool quotient) {
    require(is_prime(p), "characteristic must be prime");
    HeadData hd = build_head_data(rep, p, quotient);

    ModularModule out;
    out.datum = rep.datum;
    out.p = p;
    out.highest = rep.highest;
    out.dim = hd.total;
    for (std::size_t b = 0; b < rep.weights.size(); ++b)
        for (std::size_t s = 0; s < hd.hdim[b]; ++s)
            out.basis_weights.push_back(rep.weights[b]);

    const RootDatum& datum = *rep.datum;
    ChevalleyConstants cc(datum);
    OpCache cache;
    out.plus_ops.resize(datum.num_positive());
    out.minus_ops.resize(datum.num_positive());
    for (std::size_t idx = 0; idx < datum.num_positive(); ++idx)
        for (bool positive : {true, false}) {
            const BlockOp& base = root_vector_op(rep, cc, idx, positive, cache);
            auto& slot = positive ? out.plus_ops[idx] : out.minus_ops[idx];
            BlockOp cur = base;
            for (long k = 1; !cur.blocks.empty(); ++k) {
                check_internal(k <= static_cast<long>(rep.weights.size()),
                               "divided power chain failed to terminate");
                if (auto mat = transport(rep, hd, p, cur)) slot.emplace(k, std::move(*mat));
                cur = next_divided_power(rep, cur, base, k + 1);
            }
        }
    return out;
}

long powmod(long base, long e, long p) {
    base %= p;
    if (base < 0) base += p;
    long long r = 1, b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<long>(r);
}

bool fp_zero(const FpMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

ModularModule apply_twists(const ModularModule& mod, int twists) {
    ModularModule out = mod;
    for (int t = 0; t < twists; ++t) out = frobenius_twist(out);
    return out;
}

ModularModule tensor(const ModularModule& a, const ModularModule& b) {
    long p = a.p;
    ModularModule out;
    out.datum = a.datum;
    out.p = p;
    out.highest = a.datum->add(a.highest, b.highest);
    out.dim = a.dim * b.dim;
    out.basis_weights.reserve(out.dim);
    for (const Weight& wa : a.basis_weights)
        for (const Weight& wb : b.basis_weights)
            out.basis_weights.push_back(a.datum->add(wa, wb));

    FpMat ida = FpMat::identity(p, a.dim), idb = FpMat::identity(p, b.dim);
    std::size_t nroots = a.plus_ops.size();
    out.plus_ops.resize(nroots);
    out.minus_ops.resize(nroots);
    for (std::size_t idx = 0; idx < nroots; ++idx)
        for (bool positive : {true, false}) {
            const auto& ma = positive ? a.plus_ops[idx] : a.minus_ops[idx];
            const auto& mb = positive ? b.plus_ops[idx] : b.minus_ops[idx];
            auto& slot = positive ? out.plus_ops[idx] : out.minus_ops[idx];
            long maxa = ma.empty() ? 0 : ma.rbegin()->first;
            long maxb = mb.empty() ? 0 : mb.rbegin()->first;
            // Divided powers act on a tensor product through the
            // comultiplication x^(k) -> sum x^(i) (x) x^(k-i).
            for (long k = 1; k <= maxa + maxb; ++k) {
                FpMat sum(p, out.dim, out.dim);
                bool any = false;
                for (long i = 0; i <= k; ++i) {
                    const FpMat* fa = &ida;
                    const FpMat* fb = &idb;
                    if (i > 0) {
                        auto it = ma.find(i);
                        if (it == ma.end()) continue;
                        fa = &it->second;
                    }
                    if (k - i > 0) {
                        auto it = mb.find(k - i);
                        if (it == mb.end()) continue;
                        fb = &it->second;
                    }
                    sum = sum.add(kron(*fa, *fb));
                    any = true;
                }
                if (any && !fp_zero(sum)) slot.emplace(k, std::move(sum));
            }
        }
    return out;
}

} // namespace

ZMat integral_root_power(const IntegralRep& rep, const RootVec& beta, long k) {
    require(rep.prime == 0, "integral operators need the integral module");
    require(k >= 0, "negative divided power");
    if (k == 0) return ZMat::identity(rep.total);
    auto [idx, positive] = resolve_root(*rep.datum, beta);
    ChevalleyConstants cc(*rep.datum);
    OpCache cache;
    const BlockOp& base = root_vector_op(rep, cc, idx, positive, cache);
    BlockOp cur = base;
    for (long j = 1; j < k && !cur.blocks.empty(); ++j)
        cur = next_divided_power(rep, cur, base, j + 1);
    return dense_block_op(rep, cur);
}

ZMat integral_root_element(const IntegralRep& rep, const RootVec& beta, const Int& t) {
    require(rep.prime == 0, "integral operators need the integral module");
    auto [idx, positive] = resolve_root(*rep.datum, beta);
    ChevalleyConstants cc(*rep.datum);
    OpCache cache;
    const BlockOp& base = root_vector_op(rep, cc, idx, positive, cache);
    ZMat x = ZMat::identity(rep.total);
    BlockOp cur = base;
    Int tk = t;
    for (long k = 1; !cur.blocks.empty(); ++k) {
        check_internal(k <= static_cast<long>(rep.weights.size()),
                       "divided power chain failed to terminate");
        if (tk != 0) x = x.add(dense_block_op(rep, cur).scale(tk));
        cur = next_divided_power(rep, cur, base, k + 1);
        tk *= t;
    }
    return x;
}

ModularModule irreducible_head_mod_p(const IntegralRep& rep, long p) {
    return reduce_common(rep, p, true);
}

ModularModule reduce_mod_p(const IntegralRep& rep, long p) {
    return reduce_common(rep, p, false);
}

WeightMultTable head_multiplicities(const IntegralRep& rep, long p) {
    require(is_prime(p), "characteristic must be prime");
    WeightMultTable table;
    table.datum = rep.datum;
    table.highest = rep.highest;
    for (std::size_t b = 0; b < rep.weights.size(); ++b) {
        if (!rep.datum->is_dominant(rep.weights[b])) continue;
        std::size_t r = rep.gram[b].mod_p(p).rank();
        if (r > 0) table.entries[rep.weights[b]] = static_cast<long>(r);
    }
    return table;
}

FpMat root_element(const ModularModule& mod, const RootVec& beta, long t) {
    auto [idx, positive] = resolve_root(*mod.datum, beta);
    require(idx < mod.plus_ops.size(), "module stores no operators for this root");
    const auto& ops = positive ? mod.plus_ops[idx] : mod.minus_ops[idx];
    FpMat x = FpMat::identity(mod.p, mod.dim);
    for (const auto& [k, m] : ops) {
        long tk = powmod(t, k, mod.p);
        if (tk != 0) x = x.add(m.scale(tk));
    }
    return x;
}

ModularModule frobenius_twist(const ModularModule& mod) {
    ModularModule out;
    out.datum = mod.datum;
    out.p = mod.p;
    out.dim = mod.dim;
    out.highest = mod.highest;
    for (long& c : out.highest) c *= mod.p;
    out.basis_weights.reserve(mod.basis_weights.size());
    for (const Weight& w : mod.basis_weights) {
        Weight s = w;
        for (long& c : s) c *= mod.p;
        out.basis_weights.push_back(std::move(s));
    }
    // x^(k) acts through the twist as the untwisted x^(k/p) when p | k and
    // as zero otherwise, so the stored powers just move up by a factor p.
    out.plus_ops.resize(mod.plus_ops.size());
    out.minus_ops.resize(mod.minus_ops.size());
    for (std::size_t idx = 0; idx < mod.plus_ops.size(); ++idx) {
        for (const auto& [k, m] : mod.plus_ops[idx]) out.plus_ops[idx].emplace(k * mod.p, m);
        for (const auto& [k, m] : mod.minus_ops[idx]) out.minus_ops[idx].emplace(k * mod.p, m);
    }
    return out;
}

ModularModule steinberg_product(const std::vector<ModularModule>& factors,
                                const std::vector<int>& twists) {
    require(!factors.empty(), "empty product");
    require(factors.size() == twists.size(), "one twist per factor");
    const RootDatum* datum = factors[0].datum;
    long p = factors[0].p;
    for (const ModularModule& f : factors) {
        require(f.datum == datum, "factors must share a root datum");
        require(f.p == p, "factors must share a characteristic");
        for (long c : f.highest)
            require(0 <= c && c < p, "factors must be restricted");
    }
    for (int t : twists) require(t >= 0, "negative twist");

    ModularModule acc = apply_twists(factors[0], twists[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = tensor(acc, apply_twists(factors[i], twists[i]));
    return acc;
}

std::size_t trivial_fixed_space(const ModularModule& mod) {
    // v is fixed by every x_beta(t) exactly when every stored divided power
    // kills it; stack their transposes and read off the kernel.
    std::size_t rows = 0;
    for (const auto* family : {&mod.plus_ops, &mod.minus_ops})
        for (const auto& slot : *family) rows += mod.dim * slot.size();
    if (rows == 0) return mod.dim;
    FpMat stack(mod.p, rows, mod.dim);
    std::size_t at = 0;
    for (const auto* family : {&mod.plus_ops, &mod.minus_ops})
        for (const auto& slot : *family)
            for (const auto& [k, m] : slot) {
                (void)k;
                for (std::size_t i = 0; i < mod.dim; ++i)
                    for (std::size_t j = 0; j < mod.dim; ++j)
                        stack.at(at + i, j) = m.at(j, i);
                at += mod.dim;
            }
    return stack.kernel().rows();
}

WeightMultTable modular_weight_multiplicities(const ModularModule& mod) {
    WeightMultTable table;
    table.datum = mod.datum;
    table.highest = mod.highest;
    for (const Weight& w : mod.basis_weights)
        if (mod.datum->is_dominant(w)) table.entries[w] += 1;
    return table;
}

} // namespace chevjor
