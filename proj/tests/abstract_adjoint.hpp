// Test helper: the adjoint Lie algebra built directly from a structure
// constant table, with no representation machinery in the loop. Basis
// order: positive root vectors in root order, then the coroot generators
// h_1..h_rank, then negative root vectors in root order. Used to verify
// the constant tables (Jacobi identity) and as an independent oracle for
// adjoint representation matrices.
#pragma once

#include <map>

#include "chevjor/structure_constants.hpp"

namespace chevjor_test {

using namespace chevjor;

class AbstractAdjoint {
public:
    explicit AbstractAdjoint(const RootDatum& datum)
        : datum_(&datum), cc_(datum), np_(datum.num_positive()) {}

    std::size_t dim() const { return 2 * np_ + datum_->rank(); }
    const ChevalleyConstants& constants() const { return cc_; }

    std::size_t e_index(std::size_t k) const { return k; }
    std::size_t h_index(int i) const { return np_ + i; }
    std::size_t f_index(std::size_t k) const { return np_ + datum_->rank() + k; }

    using Elt = std::map<std::size_t, Int>;

    Elt bracket(std::size_t x, std::size_t y) const {
        bool hx = is_h(x), hy = is_h(y);
        if (hx && hy) return {};
        if (hx || hy) {
            // [h_i, e_r] = <r, alpha_i^vee> e_r; weight coordinates of the
            // root are exactly these pairings.
            if (hx) {
                int i = static_cast<int>(x - np_);
                long c = datum_->weight_of_root(signed_root(y))[i];
                return c == 0 ? Elt{} : Elt{{y, Int(c)}};
            }
            Elt res = bracket(y, x);
            for (auto& [k, v] : res) v = -v;
            return res;
        }
        RootVec a = signed_root(x), b = signed_root(y);
        RootVec sum(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
        bool zero = std::all_of(sum.begin(), sum.end(), [](long c) { return c == 0; });
        if (zero) {
            // [e_a, e_{-a}] = h_{a^vee}, expanded over the simple coroots.
            Elt res;
            std::size_t k = x < np_ ? x : x - np_ - datum_->rank();
            long da = datum_->positive_root_lengths()[k];
            const RootVec& pr = datum_->positive_roots()[k];
            for (int i = 0; i < datum_->rank(); ++i) {
                Int c = exact_div(Int(pr[i]) * datum_->half_lengths()[i], Int(da),
                                  "coroot expansion");
                if (c != 0) res[h_index(i)] = x < np_ ? c : -c;
            }
            return res;
        }
        long n = cc_.n(a, b);
        if (n == 0) return {};
        long idx = datum_->root_index(sum);
        if (idx >= 0) return {{e_index(idx), Int(n)}};
        for (auto& c : sum) c = -c;
        idx = datum_->root_index(sum);
        return {{f_index(idx), Int(n)}};
    }

    Elt bracket(const Elt& u, std::size_t z) const {
        Elt res;
        for (const auto& [i, c] : u)
            for (const auto& [k, v] : bracket(i, z)) {
                Int& slot = res[k];
                slot += c * v;
                if (slot == 0) res.erase(k);
            }
        return res;
    }

private:
    bool is_h(std::size_t x) const { return x >= np_ && x < np_ + datum_->rank(); }

    RootVec signed_root(std::size_t x) const {
        if (x < np_) return datum_->positive_roots()[x];
        RootVec r = datum_->positive_roots()[x - np_ - datum_->rank()];
        for (auto& c : r) c = -c;
        return r;
    }

    const RootDatum* datum_;
    ChevalleyConstants cc_;
    std::size_t np_;
};

} // namespace chevjor_test
