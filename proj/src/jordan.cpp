#include "chevjor/jordan.hpp"

#include <algorithm>
#include <functional>

#include "chevjor/errors.hpp"

namespace chevjor {

JordanType make_jordan(std::vector<long> blocks) {
    long total = 0;
    for (long b : blocks) {
        require(b >= 1, "Jordan block sizes must be positive");
        total += b;
    }
    std::sort(blocks.begin(), blocks.end(), std::greater<long>());
    return {std::move(blocks), total};
}

std::string format_jordan(const JordanType& t) {
    if (t.blocks.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(t.blocks[i]);
    }
    return out;
}

JordanType jordan_type(const FpMat& u) {
    require(u.rows() == u.cols(), "Jordan form needs a square matrix");
    std::size_t n = u.rows();
    if (n == 0) return {{}, 0};

    // n = u - Id; walk its powers until the rank hits zero.
    FpMat nil = u.add(FpMat::identity(u.p(), n).scale(u.p() - 1));
    std::vector<std::size_t> r{n};
    FpMat pw = nil;
    while (pw.rank() > 0) {
        r.push_back(pw.rank());
        require(r.size() <= n, "matrix is not unipotent: u - Id is not nilpotent");
        pw = pw.mul(nil);
    }
    r.push_back(0);

    std::vector<long> blocks;
    for (std::size_t k = 1; k < r.size(); ++k) {
        std::size_t ge_k = r[k - 1] - r[k];
        std::size_t ge_k1 = k < r.size() - 1 ? r[k] - r[k + 1] : 0;
        for (std::size_t c = ge_k1; c < ge_k; ++c) blocks.push_back(static_cast<long>(k));
    }
    JordanType t = make_jordan(std::move(blocks));
    check_internal(t.total == static_cast<long>(n), "Jordan blocks do not fill the space");
    return t;
}

JordanType tensor_jordan(long m, long n, long p) {
    require(m >= 1 && n >= 1, "tensor factors need positive dimension");
    require(is_prime(p), "tensor_jordan needs a prime field");
    auto single = [&](long d) {
        FpMat j = FpMat::identity(p, static_cast<std::size_t>(d));
        for (long i = 0; i + 1 < d; ++i)
            j.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1) = 1;
        return j;
    };
    return jordan_type(kron(single(m), single(n)));
}

bool single_nontrivial_block(const JordanType& t) {
    std::size_t big = 0;
    for (long b : t.blocks)
        if (b > 1) ++big;
    return big <= 1;
}

long unipotent_order(const JordanType& t, long p) {
    require(is_prime(p), "unipotent order needs a prime");
    long top = t.blocks.empty() ? 1 : t.blocks.front();
    long q = 1;
    while (q < top) q *= p;
    return q;
}

Int dimension_bound(const BoundInputs& b) {
    require(is_prime(b.p), "dimension bound needs a prime");
    require(b.k >= 0, "dimension bound needs k >= 0");
    require(b.l == 2 || b.l == 4 || b.l == 6 || b.l == 7 || b.l == 8,
            "dimension bound is stated for exceptional ranks 2, 4, 6, 7, 8");
    if (b.f4_p2_flag) return int_pow(2, b.k + 3);
    return Int(b.p - 1) * int_pow(b.p, b.k) * Int(b.l + 3);
}

} // namespace chevjor
