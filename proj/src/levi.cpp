#include "chevjor/levi.hpp"

#include <algorithm>

#include "chevjor/errors.hpp"
#include "chevjor/fp.hpp"
#include "chevjor/sl2.hpp"

namespace chevjor {

namespace {

// 0-based kept indices for a removed 1-based node.
std::vector<int> kept_indices(const RootDatum& datum, int removed_node) {
    require(removed_node >= 1 && removed_node <= datum.rank(),
            "removed node out of range");
    std::vector<int> kept;
    for (int j = 0; j < datum.rank(); ++j)
        if (j != removed_node - 1) kept.push_back(j);
    return kept;
}

bool levi_dominant(const Weight& mu, const std::vector<int>& kept) {
    for (int j : kept)
        if (mu[static_cast<std::size_t>(j)] < 0) return false;
    return true;
}

Weight project(const Weight& mu, const std::vector<int>& kept) {
    Weight key;
    key.reserve(kept.size());
    for (int j : kept) key.push_back(mu[static_cast<std::size_t>(j)]);
    return key;
}

} // namespace

LeviLevelReport level_decomposition(const WeightMultTable& source, int removed_node,
                                    long p) {
    require(source.datum != nullptr, "source table carries no root datum");
    const RootDatum& datum = *source.datum;
    std::vector<int> kept = kept_indices(datum, removed_node);
    require(p == 0 || is_prime(p), "coefficient field must be prime or zero");

    LeviLevelReport report;
    report.datum = &datum;
    report.lambda = source.highest;
    report.removed_node = removed_node;
    for (int j : kept) report.levi_nodes.push_back(j + 1);
    report.source_table = source;
    report.p = p;
    for (std::size_t j = 1; j < report.lambda.size(); ++j)
        if (p == 3 && report.lambda[j] != 0) report.p3_warning = true;

    // Every weight of the module appears once across the orbits of the
    // dominant table entries. Each sub-Weyl-group orbit within a level is
    // recorded at its unique Levi-dominant member; the orbit-size factor
    // in report_total restores the full count.
    for (const auto& [dom, mult] : source.entries) {
        for (const Weight& mu : datum.weyl_orbit(dom)) {
            Weight diff = datum.sub(source.highest, mu);
            require(datum.in_root_lattice(diff),
                    "source table corrupt: a weight lies outside the root "
                    "lattice shifted by the highest weight");
            RootVec rc = datum.root_coords(diff);
            for (long c : rc)
                require(c >= 0,
                        "source table corrupt: a weight is not below the "
                        "highest weight");
            if (!levi_dominant(mu, kept)) continue;
            std::size_t d = static_cast<std::size_t>(rc[static_cast<std::size_t>(removed_node - 1)]);
            if (d >= report.levels.size()) {
                report.levels.resize(d + 1);
                report.ambient.resize(d + 1);
            }
            Weight key = project(mu, kept);
            report.levels[d][key] += mult;
            auto [it, inserted] = report.ambient[d].emplace(key, mu);
            check_internal(it->second == mu,
                           "two ambient weights shared one level and key");
        }
    }

    check_internal(report_total(report) == source.total_dimension(),
                   "level tables do not account for the full dimension");
    return report;
}

Weight smith_top_factor(const RootDatum& datum, const Weight& lambda,
                        const std::vector<int>& levi_nodes) {
    require(lambda.size() == static_cast<std::size_t>(datum.rank()),
            "weight rank mismatch");
    require(datum.is_dominant(lambda), "highest weight must be dominant");
    Weight out;
    out.reserve(levi_nodes.size());
    int prev = 0;
    for (int node : levi_nodes) {
        require(node >= 1 && node <= datum.rank(), "levi node out of range");
        require(node > prev, "levi nodes must be ascending and distinct");
        prev = node;
        out.push_back(lambda[static_cast<std::size_t>(node - 1)]);
    }
    return out;
}

Int levi_orbit_size(const RootDatum& datum, const std::vector<int>& levi_nodes,
                    const Weight& levi_weight) {
    require(levi_weight.size() == levi_nodes.size(),
            "levi weight rank mismatch");
    std::vector<int> sub0;       // 0-based kept nodes
    std::vector<int> zeros;      // positions within levi_nodes where the weight vanishes
    int prev = 0;
    for (std::size_t k = 0; k < levi_nodes.size(); ++k) {
        int node = levi_nodes[k];
        require(node >= 1 && node <= datum.rank(), "levi node out of range");
        require(node > prev, "levi nodes must be ascending and distinct");
        prev = node;
        require(levi_weight[k] >= 0, "levi weight must be levi-dominant");
        sub0.push_back(node - 1);
        if (levi_weight[k] == 0) zeros.push_back(node - 1);
    }
    auto subcartan = [&](const std::vector<int>& nodes) {
        std::vector<std::vector<long>> sub(nodes.size(), std::vector<long>(nodes.size()));
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = 0; j < nodes.size(); ++j)
                sub[i][j] = datum.cartan()[static_cast<std::size_t>(nodes[i])]
                                          [static_cast<std::size_t>(nodes[j])];
        return sub;
    };
    return exact_div(weyl_order_of_cartan(subcartan(sub0)),
                     weyl_order_of_cartan(subcartan(zeros)), "levi orbit size");
}

Int report_total(const LeviLevelReport& report) {
    require(report.datum != nullptr, "empty report");
    Int total = 0;
    for (const auto& level : report.levels)
        for (const auto& [key, mult] : level)
            total += mult * levi_orbit_size(*report.datum, report.levi_nodes, key);
    return total;
}

std::vector<CandidateFactor> candidate_factor_report(const LeviLevelReport& report,
                                                     std::size_t d) {
    require(report.datum != nullptr, "empty report");
    require(d < report.levels.size(), "level out of range");
    const RootDatum& datum = *report.datum;
    const auto& table = report.levels[d];
    const auto& ambient = report.ambient[d];

    std::vector<CandidateFactor> out;
    for (auto it = table.rbegin(); it != table.rend(); ++it) {
        CandidateFactor c;
        c.levi_weight = it->first;
        c.multiplicity = it->second;
        c.higher_load = 0;
        const Weight& rep = ambient.at(it->first);
        for (const auto& [other_key, other_rep] : ambient) {
            if (other_key == it->first) continue;
            Weight diff = datum.sub(other_rep, rep);
            if (!datum.in_root_lattice(diff)) continue;
            bool higher = true;
            for (long r : datum.root_coords(diff))
                if (r < 0) higher = false;
            if (higher) c.higher_load += table.at(other_key);
        }
        c.min_heads = c.multiplicity - c.higher_load;
        if (c.min_heads < 0) c.min_heads = 0;
        c.multiple = c.multiplicity >= 2;
        out.push_back(std::move(c));
    }
    return out;
}

std::map<long, Int> level_factor_census(const LeviLevelReport& report, std::size_t d) {
    require(report.datum != nullptr, "empty report");
    require(d < report.levels.size(), "level out of range");
    require(report.levi_nodes.size() == 1, "factor census needs a rank-1 levi");

    // Full character of the level over the Levi line.
    std::map<long, Int> rem;
    for (const auto& [key, mult] : report.levels[d]) {
        rem[key[0]] += mult;
        if (key[0] != 0) rem[-key[0]] += mult;
    }
    auto consume = [&rem](long w, const Int& count) {
        auto it = rem.find(w);
        check_internal(it != rem.end() && it->second >= count,
                       "level character peeling went negative");
        it->second -= count;
        if (it->second == 0) rem.erase(it);
    };

    std::map<long, Int> census;
    while (!rem.empty()) {
        long top = rem.rbegin()->first;
        check_internal(top >= 0, "level character peeling lost symmetry");
        Int count = rem.rbegin()->second;
        census[top] += count;
        if (report.p == 0) {
            for (long w = -top; w <= top; w += 2) consume(w, count);
        } else {
            for (const auto& [w, m] : a1_irreducible_character(top, report.p))
                consume(w, count * m);
        }
    }
    return census;
}

Weight g2_weight_transport(const Weight& w) {
    require(w.size() == 2, "transport is specific to rank 2");
    return Weight{3 * w[1], w[0]};
}

RootVec g2_root_transport(const RootVec& rc) {
    require(rc.size() == 2, "transport is specific to rank 2");
    return RootVec{3 * rc[1], rc[0]};
}

std::string format_level_report(const LeviLevelReport& report) {
    require(report.datum != nullptr, "empty report");
    std::string out = "weight " + format_weight(report.lambda) + ", node " +
                      std::to_string(report.removed_node) + " removed, levi nodes";
    for (int node : report.levi_nodes) out += " " + std::to_string(node);
    if (report.p > 0) out += ", p = " + std::to_string(report.p);
    if (report.p3_warning) out += " (warning: level correspondence unproven here)";
    out += "\n";
    for (std::size_t d = 0; d < report.levels.size(); ++d) {
        out += "level " + std::to_string(d) + ":";
        bool first = true;
        for (auto it = report.levels[d].rbegin(); it != report.levels[d].rend(); ++it) {
            out += (first ? " " : ", ") + format_weight(it->first) + ": " +
                   it->second.get_str();
            first = false;
        }
        if (report.levels[d].empty()) out += " -";
        out += "\n";
    }
    return out;
}

} // namespace chevjor
