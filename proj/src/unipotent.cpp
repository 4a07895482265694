#include "chevjor/unipotent.hpp"

#include <map>

#include "chevjor/errors.hpp"

namespace chevjor {

UnipotentRepresentative g2_class_representative(const std::string& label, long p) {
    require(is_prime(p), "p must be prime");
    UnipotentRepresentative rep;
    rep.label = label;
    rep.p = p;
    if (label == "regular") {
        rep.word = {{{-1, 0}, 1}, {{0, -1}, 1}};
    } else if (label == "G2a1") {
        require(p == 2, "class G2a1 is defined only at p = 2");
        rep.word = {{{0, 1}, 1}, {{3, 1}, 1}};
    } else if (label == "A1_3") {
        require(p == 3, "class A1_3 is defined only at p = 3");
        rep.word = {{{2, 1}, 1}, {{3, 2}, 1}};
    } else {
        require(false, "unknown class label '" + label + "'");
    }
    return rep;
}

FpMat unipotent_matrix(const UnipotentRepresentative& rep, const ModularModule& mod) {
    require(mod.datum != nullptr, "module carries no root datum");
    require(mod.p == rep.p, "representative and module live over different primes");
    FpMat u = FpMat::identity(mod.p, mod.dim);
    for (const auto& [beta, t] : rep.word)
        u = u.mul(root_element(mod, beta, ((t % mod.p) + mod.p) % mod.p));
    return u;
}

JordanType jordan_on_rep(const UnipotentRepresentative& rep, const ModularModule& mod) {
    return jordan_type(unipotent_matrix(rep, mod));
}

long matrix_order(const FpMat& m) {
    require(m.rows() == m.cols(), "order needs a square matrix");
    long p = m.p();
    FpMat id = FpMat::identity(p, m.rows());
    long order = 1;
    FpMat w = m;
    // A unipotent n x n matrix satisfies m^(p^j) = Id once p^j >= n, so the
    // loop is bounded; anything that survives past n is not unipotent.
    while (!(w == id)) {
        require(order <= static_cast<long>(m.rows()), "matrix is not unipotent");
        w = w.pow(p);
        order *= p;
    }
    return order;
}

namespace {

// Skip reason for an inadmissible (label, p) pair, or "" when admissible.
std::string admissibility(const std::string& label, long p) {
    if (label == "G2a1" && p != 2) return "needs-p=2";
    if (label == "A1_3" && p != 3) return "needs-p=3";
    return "";
}

} // namespace

std::vector<Mth1Row> mth1_scan(const std::vector<long>& primes,
                               const std::vector<Weight>& weights,
                               const std::vector<std::string>& labels,
                               std::size_t cap) {
    RootDatum datum = RootDatum::build('G', 2);
    for (long p : primes) require(is_prime(p), "scan primes must be prime");
    for (const std::string& label : labels)
        require(label == "regular" || label == "G2a1" || label == "A1_3",
                "scan labels must be stock labels");
    for (const Weight& w : weights)
        require(datum.is_dominant(w), "scan weights must be dominant");

    // One characteristic-0 construction per weight, shared across primes.
    std::map<Weight, IntegralRep> built;
    for (const Weight& w : weights)
        if (weyl_dimension(datum, w) <= Int(static_cast<long>(cap)))
            built.emplace(w, construct_weyl_module(datum, w, cap));

    std::vector<Mth1Row> rows;
    for (long p : primes)
        for (const Weight& w : weights) {
            auto it = built.find(w);
            ModularModule head;
            if (it != built.end()) head = irreducible_head_mod_p(it->second, p);
            for (const std::string& label : labels) {
                Mth1Row row;
                row.p = p;
                row.lambda = w;
                row.label = label;
                if (it == built.end()) {
                    row.skip_reason = "over-cap";
                } else if (std::string bad = admissibility(label, p); !bad.empty()) {
                    row.skip_reason = bad;
                } else {
                    row.dim = static_cast<long>(head.dim);
                    row.jordan = jordan_on_rep(g2_class_representative(label, p), head);
                    long big = 0;
                    for (long b : row.jordan.blocks) big += (b > 1) ? 1 : 0;
                    row.single_block = (big == 1);
                    row.predicted = (label == "regular" && row.dim >= 2 && row.dim <= 7);
                    row.agree = (row.single_block == row.predicted);
                }
                rows.push_back(std::move(row));
            }
        }
    return rows;
}

std::string format_mth1_row(const Mth1Row& row) {
    std::string out = "p=" + std::to_string(row.p) +
                      " weight=" + format_weight(row.lambda) +
                      (row.skip_reason.empty()
                           ? " dim=" + std::to_string(row.dim)
                           : "") +
                      " class=" + row.label;
    if (!row.skip_reason.empty()) return out + " skip=" + row.skip_reason;
    out += " jordan=" + format_jordan(row.jordan);
    out += " single=" + std::string(row.single_block ? "1" : "0");
    out += " predicted=" + std::string(row.predicted ? "1" : "0");
    out += " agree=" + std::string(row.agree ? "1" : "0");
    return out;
}

} // namespace chevjor
