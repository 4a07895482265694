#include "chevjor/characters.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <utility>

namespace chevjor {

Int WeightMultTable::total_dimension() const {
    Int total = 0;
    for (const auto& [w, m] : entries) total += m * datum->orbit_size(w);
    return total;
}

Int WeightMultTable::mult(const Weight& w) const {
    auto it = entries.find(datum->dominant_representative(w));
    return it == entries.end() ? Int(0) : it->second;
}

Int weyl_dimension(const RootDatum& datum, const Weight& lambda) {
    require(datum.is_dominant(lambda), "weyl_dimension requires a dominant weight");
    Weight lr = datum.add(lambda, datum.rho());
    Rat num = 1, den = 1;
    for (std::size_t k = 0; k < datum.num_positive(); ++k) {
        const RootVec& a = datum.positive_roots()[k];
        num *= Rat(datum.pair_coroot(lr, a));
        den *= Rat(datum.pair_coroot(datum.rho(), a));
    }
    Rat d = num / den;
    check_internal(d.get_den() == 1 && d > 0, "dimension formula gave a non-integer");
    return Int(d.get_num());
}

CharacterSession::CharacterSession(const RootDatum& datum, const Weight& lambda)
    : datum_(&datum), lambda_(lambda), zero_(0) {
    require(datum.is_dominant(lambda), "character requires a dominant highest weight");
    Weight lr = datum.add(lambda, datum.rho());
    lambda_norm_ = datum.form(lr, lr);
    mults_[lambda] = 1;
}

bool CharacterSession::in_module(const Weight& w, RootVec& diff_out) const {
    Weight diff = datum_->sub(lambda_, w);
    if (!datum_->in_root_lattice(diff)) return false;
    diff_out = datum_->root_coords(diff);
    return std::all_of(diff_out.begin(), diff_out.end(), [](long c) { return c >= 0; });
}

const Int& CharacterSession::mult(const Weight& w) {
    return mult_dominant(datum_->dominant_representative(w));
}

const Int& CharacterSession::mult_dominant(const Weight& mu) {
    auto it = mults_.find(mu);
    if (it != mults_.end()) return it->second;

    RootVec diff;
    if (!in_module(mu, diff)) return zero_ = 0, zero_;

    // Freudenthal: ((l+r,l+r) - (m+r,m+r)) mult(m)
    //            = 2 sum_{a>0} sum_{k>=1} mult(m+ka) (m+ka, a).
    Rat rhs = 0;
    for (std::size_t idx = 0; idx < datum_->num_positive(); ++idx) {
        const RootVec& a = datum_->positive_roots()[idx];
        // k is bounded by the root coordinates of lambda - mu.
        long kmax = -1;
        for (int i = 0; i < datum_->rank(); ++i)
            if (a[i] > 0) {
                long b = diff[i] / a[i];
                kmax = kmax < 0 ? b : std::min(kmax, b);
            }
        if (kmax <= 0) continue;
        Weight wa = datum_->weight_of_root(a);
        Weight cur = mu;
        for (long k = 1; k <= kmax; ++k) {
            cur = datum_->add(cur, wa);
            const Int& m = mult_dominant(datum_->dominant_representative(cur));
            if (m == 0) continue;
            rhs += Rat(m) * datum_->form(cur, wa);
        }
    }
    Weight mr = datum_->add(mu, datum_->rho());
    Rat denom = lambda_norm_ - datum_->form(mr, mr);
    check_internal(denom > 0, "Freudenthal denominator not positive");
    Rat val = 2 * rhs / denom;
    check_internal(val.get_den() == 1, "Freudenthal gave a non-integer multiplicity");
    return mults_[mu] = Int(val.get_num());
}

// Closure of {lambda} under subtracting positive roots while staying
// dominant, visited in increasing height of lambda - mu. Completeness of
// this walk is certified by the dimension identity in full_table(); the
// early-exit scans only ever conclude "multiplicity free" on characters
// whose table also passes that identity in the test suite.
template <typename Visit>
void CharacterSession::walk_dominant(Visit visit) {
    auto height_of = [this](const Weight& w) {
        return datum_->height(datum_->root_coords(datum_->sub(lambda_, w)));
    };
    std::set<Weight> seen{lambda_};
    using Item = std::pair<long, Weight>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.push({0, lambda_});
    while (!queue.empty()) {
        auto [h, mu] = queue.top();
        queue.pop();
        if (!visit(mu)) return;
        for (std::size_t idx = 0; idx < datum_->num_positive(); ++idx) {
            Weight nxt = datum_->sub(mu, datum_->weight_of_root(datum_->positive_roots()[idx]));
            if (!datum_->is_dominant(nxt) || !seen.insert(nxt).second) continue;
            queue.push({height_of(nxt), nxt});
        }
    }
}

const std::vector<Weight>& CharacterSession::dominant_weights() {
    if (enumerated_) return dominant_;
    walk_dominant([this](const Weight& mu) {
        dominant_.push_back(mu);
        return true;
    });
    enumerated_ = true;
    return dominant_;
}

WeightMultTable CharacterSession::full_table() {
    WeightMultTable table;
    table.datum = datum_;
    table.highest = lambda_;
    for (const Weight& mu : dominant_weights()) {
        const Int& m = mult_dominant(mu);
        if (m > 0) table.entries[mu] = m;
    }
    check_internal(table.total_dimension() == weyl_dimension(*datum_, lambda_),
                   "character total disagrees with the dimension formula");
    return table;
}

bool CharacterSession::multiplicity_free_nonzero() {
    Weight zero(datum_->rank(), 0);
    bool free = true;
    walk_dominant([&](const Weight& mu) {
        if (mu != zero && mult_dominant(mu) >= 2) {
            free = false;
            return false;
        }
        return true;
    });
    return free;
}

WeightMultTable freudenthal_multiplicities(const RootDatum& datum, const Weight& lambda) {
    CharacterSession session(datum, lambda);
    return session.full_table();
}

std::vector<ScanEntry> scan_multiplicity_free(const RootDatum& datum, long coefficient_bound) {
    require(coefficient_bound >= 1, "scan bound must be at least 1");
    std::vector<ScanEntry> hits;
    Weight lambda(datum.rank(), 0);
    while (true) {
        // Odometer over {0..bound}^rank, skipping lambda = 0.
        int pos = 0;
        while (pos < datum.rank() && lambda[pos] == coefficient_bound) lambda[pos++] = 0;
        if (pos == datum.rank()) break;
        ++lambda[pos];
        CharacterSession session(datum, lambda);
        if (session.multiplicity_free_nonzero())
            hits.push_back({lambda, weyl_dimension(datum, lambda)});
    }
    std::sort(hits.begin(), hits.end(),
              [](const ScanEntry& a, const ScanEntry& b) { return a.lambda < b.lambda; });
    return hits;
}

} // namespace chevjor
