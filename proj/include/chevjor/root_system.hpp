// Root systems of the simple types A..G up to rank 8, with the weight
// combinatorics the rest of the library runs on: Weyl orbits, dominant
// representatives, stabilizer orders, and the invariant bilinear form.
//
// Conventions, fixed once and used everywhere:
//   * Bourbaki node numbering. For G_2 this makes alpha_1 the short simple
//     root, so the 7-dimensional module has highest weight omega_1.
//   * cartan[i][j] = <alpha_j, alpha_i^vee>. Columns of the Cartan matrix
//     are the fundamental-weight coordinates of the simple roots.
//   * Weights are integer vectors in fundamental-weight coordinates; roots
//     are integer vectors in simple-root coordinates.
//   * d[i] = (alpha_i, alpha_i)/2, normalized so short roots have d = 1.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chevjor/numeric.hpp"

namespace chevjor {

using Weight = std::vector<long>;   // fundamental-weight coordinates
using RootVec = std::vector<long>;  // simple-root coordinates

class RootDatum {
public:
    // lie_type in 'A'..'G'. Valid ranks: A >= 1, B and C >= 2, D >= 4,
    // E in {6,7,8}, F = 4, G = 2; rank <= 8 throughout.
    static RootDatum build(char lie_type, int rank);
    // Arbitrary valid Cartan matrix with given half-lengths d; used for Levi
    // subsystems whose node order need not match any Bourbaki table.
    static RootDatum from_cartan(const std::vector<std::vector<long>>& cartan,
                                 const std::vector<long>& d, std::string name);

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<long>>& cartan() const { return cartan_; }
    const std::vector<long>& half_lengths() const { return d_; }

    // Positive roots in simple-root coordinates, ascending by (height, lex).
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    // Half squared length of each positive root, parallel to positive_roots.
    const std::vector<long>& positive_root_lengths() const { return positive_d_; }
    std::size_t num_positive() const { return positive_.size(); }
    bool is_long_root(std::size_t idx) const { return positive_d_[idx] > 1; }
    // Index of a positive root given in simple-root coordinates; -1 if absent.
    long root_index(const RootVec& rc) const;

    Weight weight_of_root(const RootVec& rc) const;
    // Simple-root coordinates of a weight-lattice element, when it lies in
    // the root lattice; precondition error otherwise.
    RootVec root_coords(const Weight& w) const;
    bool in_root_lattice(const Weight& w) const;

    Weight reflect(int i, const Weight& w) const;                // s_i
    Weight add(const Weight& a, const Weight& b) const;
    Weight sub(const Weight& a, const Weight& b) const;
    bool is_dominant(const Weight& w) const;
    Weight dominant_representative(const Weight& w) const;
    std::set<Weight> weyl_orbit(const Weight& w) const;

    Int weyl_order() const { return weyl_order_; }
    // Order of Stab_W(w) for dominant w: the Weyl order of the subdiagram on
    // the nodes where w vanishes. Orbit size is weyl_order()/this.
    Int weight_stabilizer_order(const Weight& w) const;
    Int orbit_size(const Weight& w) const;

    // Invariant form, short roots of squared length 2.
    Rat form(const Weight& a, const Weight& b) const;
    // <w, alpha^vee> for a root alpha given in simple-root coordinates.
    Int pair_coroot(const Weight& w, const RootVec& alpha) const;

    Weight rho() const; // all-ones weight
    Weight zero() const { return Weight(rank_, 0); }
    Weight fundamental(int i) const;

    long height(const RootVec& rc) const;

private:
    RootDatum() = default;
    void finish(); // closure, lengths, form, Weyl order

    std::string name_;
    int rank_ = 0;
    std::vector<std::vector<long>> cartan_;
    std::vector<long> d_;
    std::vector<RootVec> positive_;
    std::vector<long> positive_d_;
    std::map<RootVec, std::size_t> root_lookup_;
    std::vector<std::vector<Rat>> cartan_inv_;
    std::vector<std::vector<Rat>> form_;
    Int weyl_order_;
};

// Weyl group order of an abstract valid Cartan matrix, by splitting into
// connected components and classifying each diagram shape.
Int weyl_order_of_cartan(const std::vector<std::vector<long>>& cartan);

std::string format_weight(const Weight& w);
Weight parse_weight(const std::string& text, int rank);

} // namespace chevjor
