// Parabolic level decompositions: slice the character of a highest-weight
// module by the coefficient of one simple root, group each slice under the
// Weyl group of the remaining nodes, and report the slices as tables of
// Levi-dominant weights. Levels model the filtration of the module by
// powers of the unipotent radical of the corresponding parabolic; the
// level tables are what arguments about composition factors of the Levi
// action consume.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "chevjor/characters.hpp"
#include "chevjor/root_system.hpp"

namespace chevjor {

// Level decomposition of one character. Nodes are 1-based Bourbaki
// indices; levi_nodes is the ascending complement of removed_node. Level
// d holds the weights mu with coefficient d of alpha_removed in
// lambda - mu, keyed by the Levi-dominant representative projected to the
// Levi's fundamental-weight coordinates (the coordinates at levi_nodes,
// in order). ambient keeps the full ambient representative of each key
// for downstream dominance checks. p records the coefficient field of
// the source table (0 for characteristic zero); p3_warning flags p = 3
// tables whose highest weight has support outside node 1, where the
// level-versus-radical correspondence needs a hypothesis that only
// node-1 weights satisfy.
struct LeviLevelReport {
    const RootDatum* datum = nullptr;
    Weight lambda;
    int removed_node = 0;
    std::vector<int> levi_nodes;
    std::vector<std::map<Weight, Int>> levels;
    std::vector<std::map<Weight, Weight>> ambient;
    WeightMultTable source_table;
    long p = 0;
    bool p3_warning = false;
};

// Decompose a character table by levels of one removed node. The table
// must be the character of a highest-weight module: every weight must lie
// under the highest weight by a non-negative root combination.
LeviLevelReport level_decomposition(const WeightMultTable& source, int removed_node,
                                    long p = 0);

// Restriction of a dominant weight to the Levi torus: its coordinates at
// the kept nodes (1-based, ascending).
Weight smith_top_factor(const RootDatum& datum, const Weight& lambda,
                        const std::vector<int>& levi_nodes);

// Orbit size of a Levi-dominant weight under the Levi Weyl group, by the
// stabilizer-order formula on the sub-diagram.
Int levi_orbit_size(const RootDatum& datum, const std::vector<int>& levi_nodes,
                    const Weight& levi_weight);

// Total dimension accounted by a report: sum of multiplicity times Levi
// orbit size over all levels. Equals the source character's dimension;
// level_decomposition checks that internally.
Int report_total(const LeviLevelReport& report);

// One Levi-dominant weight at a level, with the census data consumed by
// composition-factor arguments: its multiplicity, the total multiplicity
// of strictly higher Levi weights at the same level (higher by a
// non-negative Levi root combination; each factor headed higher consumes
// at most one copy of this weight, so multiplicity minus that load is a
// valid lower bound on the number of factors this weight must head), and
// a flag for multiplicity at least 2.
struct CandidateFactor {
    Weight levi_weight;
    Int multiplicity;
    Int higher_load;
    Int min_heads;
    bool multiple = false;
};

// Census of level d, highest Levi weight first.
std::vector<CandidateFactor> candidate_factor_report(const LeviLevelReport& report,
                                                     std::size_t d);

// Exact composition factor census of one level of a rank-1 Levi: the
// level's character peeled greedily by irreducible rank-1 characters in
// characteristic report.p (by characteristic-zero characters when p = 0).
// Returns highest weight -> factor count.
std::map<long, Int> level_factor_census(const LeviLevelReport& report, std::size_t d);

// Lattice map realizing the exceptional symmetry between the two node
// roles of G_2: alpha_1 -> alpha_2 and alpha_2 -> 3 alpha_1, so on
// fundamental-weight coordinates (a, b) -> (3b, a). Applying it twice
// scales by 3. Level reports transport along it with the removed node
// swapped; see the tests for the exact law.
Weight g2_weight_transport(const Weight& w);
RootVec g2_root_transport(const RootVec& rc);

// Deterministic text rendering: one line per level, highest key first.
std::string format_level_report(const LeviLevelReport& report);

} // namespace chevjor
