#include "chevjor/sl2.hpp"

#include <algorithm>
#include <map>

#include "chevjor/errors.hpp"
#include "chevjor/weyl_module.hpp"

namespace chevjor {

namespace {

long digit_at(const std::vector<long>& d, std::size_t i) {
    return i < d.size() ? d[i] : 0;
}

// One ordering of the digit pattern: some position k at or above the
// valuation bound where x loses p - y_k - 2, the next digit moves by one,
// and everything else matches.
bool digit_pattern(long x, long y, long p) {
    std::vector<long> dx = digits_of(x, p).digits;
    std::vector<long> dy = digits_of(y, p).digits;
    std::size_t len = std::max(dx.size(), dy.size()) + 2;
    for (std::size_t k = static_cast<std::size_t>(valuation(x + 1, p)); k < len; ++k) {
        if (digit_at(dx, k) != p - digit_at(dy, k) - 2) continue;
        long delta = digit_at(dx, k + 1) - digit_at(dy, k + 1);
        if (delta != 1 && delta != -1) continue;
        bool rest = true;
        for (std::size_t i = 0; i < len + 1 && rest; ++i)
            if (i != k && i != k + 1 && digit_at(dx, i) != digit_at(dy, i)) rest = false;
        if (rest) return true;
    }
    return false;
}

} // namespace

const RootDatum& a1_datum() {
    static const RootDatum datum = RootDatum::build('A', 1);
    return datum;
}

DigitVector digits_of(long a, long p) {
    require(a >= 0, "digits need a non-negative integer");
    require(is_prime(p), "digits need a prime base");
    DigitVector out{p, {}};
    for (long v = a; v > 0; v /= p) out.digits.push_back(v % p);
    return out;
}

long digit_value(const DigitVector& d) {
    long value = 0;
    long scale = 1;
    for (long digit : d.digits) {
        value += digit * scale;
        scale *= d.p;
    }
    return value;
}

long valuation(long n, long p) {
    require(n >= 1, "valuation needs a positive integer");
    require(is_prime(p), "valuation needs a prime");
    long r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    return r;
}

ModularModule sl2_module(long a, long p, SL2Kind kind, std::size_t dimension_cap) {
    require(a >= 0, "highest weight must be non-negative");
    require(is_prime(p), "characteristic must be prime");
    const RootDatum& a1 = a1_datum();
    if (kind == SL2Kind::weyl)
        return reduce_mod_p(construct_weyl_module(a1, {a}, dimension_cap), p);

    // Twisted tensor product over the digits; zero digits contribute a
    // trivial factor and are skipped.
    std::vector<long> digits = digits_of(a, p).digits;
    long dim = 1;
    for (long d : digits) dim *= d + 1;
    if (static_cast<std::size_t>(dim) > dimension_cap)
        throw cap_error("module dimension " + std::to_string(dim) + " exceeds the cap " +
                        std::to_string(dimension_cap));

    std::vector<ModularModule> factors;
    std::vector<int> twists;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        factors.push_back(irreducible_head_mod_p(construct_weyl_module(a1, {digits[i]}, dimension_cap), p));
        twists.push_back(static_cast<int>(i));
    }
    if (factors.empty()) {
        factors.push_back(irreducible_head_mod_p(construct_weyl_module(a1, {0}, dimension_cap), p));
        twists.push_back(0);
    }
    return steinberg_product(factors, twists);
}

bool ext_digit_test(long a, long b, long p) {
    require(a >= 0 && b >= 0, "weights must be non-negative");
    require(is_prime(p), "characteristic must be prime");
    require(a != b, "equal factors are outside the digit test");
    return digit_pattern(a, b, p) || digit_pattern(b, a, p);
}

std::vector<long> factor_dims(const CompositionData& c) {
    std::vector<long> dims;
    dims.reserve(c.factor_weights.size());
    for (long w : c.factor_weights) {
        long dim = 1;
        for (long d : digits_of(w, c.p).digits) dim *= d + 1;
        dims.push_back(dim);
    }
    return dims;
}

std::map<long, long> a1_irreducible_character(long a, long p) {
    std::map<long, long> table{{0, 1}};
    std::vector<long> digits = digits_of(a, p).digits;
    long scale = 1;
    for (long d : digits) {
        if (d > 0) {
            std::map<long, long> next;
            for (const auto& [w, m] : table)
                for (long c = -d; c <= d; c += 2) next[w + scale * c] += m;
            table = std::move(next);
        }
        scale *= p;
    }
    return table;
}

Bb1Case bb1_classify(const CompositionData& c) {
    require(is_prime(c.p), "characteristic must be prime");
    require(c.trivial_dim >= 0, "trivial part cannot have negative dimension");
    std::vector<long> nontrivial;
    for (long w : c.factor_weights) {
        require(w >= 0, "factor weights must be non-negative");
        if (w > 0) nontrivial.push_back(w);
    }
    if (nontrivial.size() <= 1) return Bb1Case::case_a;
    if (nontrivial.size() != 2 || c.p <= 2) return Bb1Case::impossible;

    long total = 0;
    for (long dim : factor_dims(c)) total += dim;
    long hi = std::max(nontrivial[0], nontrivial[1]);
    long lo = std::min(nontrivial[0], nontrivial[1]);
    if (total < c.p + 1 || total > c.p + 2) return Bb1Case::impossible;
    if (hi < c.p) return Bb1Case::impossible;
    if (hi == lo || !ext_digit_test(hi, lo, c.p)) return Bb1Case::impossible;
    return Bb1Case::case_b;
}

ShapeReport restriction_shape_check(const JordanType& t, long p) {
    require(is_prime(p), "shape test needs a prime");
    ShapeReport rep;
    long middles = 0;
    long trivials = 0;
    bool oversize = false;
    for (long b : t.blocks) {
        if (b == p) ++rep.m;
        else if (b == 1) ++trivials;
        else if (b < p) { ++middles; rep.d = b; }
        else oversize = true;
    }
    rep.shape_ok = !oversize && middles <= 1;
    if (middles == 0) rep.d = trivials > 0 ? 1 : 0;
    rep.single_ok = rep.shape_ok && rep.m <= 1 && (rep.m == 0 || rep.d <= 1);
    return rep;
}

std::vector<long> a1_composition_factors(long a, long p) {
    require(a >= 0, "highest weight must be non-negative");
    require(is_prime(p), "characteristic must be prime");
    // Weyl character: weights a, a-2, ..., -a, each once.
    std::map<long, long> rem;
    for (long w = -a; w <= a; w += 2) rem[w] = 1;
    std::vector<long> factors;
    while (!rem.empty()) {
        long top = rem.rbegin()->first;
        check_internal(top >= 0, "character peeling lost symmetry");
        factors.push_back(top);
        for (const auto& [w, m] : a1_irreducible_character(top, p)) {
            auto it = rem.find(w);
            check_internal(it != rem.end() && it->second >= m,
                           "character peeling went negative");
            it->second -= m;
            if (it->second == 0) rem.erase(it);
        }
    }
    return factors;
}

std::vector<SL2ScanRow> sl2_scan(long p, long amax, SL2Kind kind,
                                 std::size_t dimension_cap) {
    require(amax >= 0, "scan bound must be non-negative");
    std::vector<SL2ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(amax) + 1);
    for (long a = 0; a <= amax; ++a) {
        SL2ScanRow row;
        row.p = p;
        row.a = a;
        row.kind = kind;
        ModularModule mod = sl2_module(a, p, kind, dimension_cap);
        row.dim = mod.dim;
        row.jordan = jordan_type(root_element(mod, {1}, 1));
        row.shape_ok = restriction_shape_check(row.jordan, p).shape_ok;
        row.factors = kind == SL2Kind::weyl ? a1_composition_factors(a, p)
                                            : std::vector<long>{a};
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace chevjor
