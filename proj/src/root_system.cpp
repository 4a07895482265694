#include "chevjor/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chevjor {

namespace {

// Chain/fork layouts per Bourbaki, encoded as edge lists plus half-lengths.
struct Layout {
    std::vector<std::pair<int, int>> edges;
    std::vector<long> d;
};

Layout layout_for(char t, int n) {
    Layout L;
    L.d.assign(n, 1);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) L.edges.push_back({i, i + 1});
    };
    switch (t) {
        case 'A':
            require(n >= 1 && n <= 8, "type A needs rank 1..8");
            chain(n);
            break;
        case 'B':
            require(n >= 2 && n <= 8, "type B needs rank 2..8");
            chain(n);
            for (int i = 0; i < n - 1; ++i) L.d[i] = 2;
            break;
        case 'C':
            require(n >= 2 && n <= 8, "type C needs rank 2..8");
            chain(n);
            L.d[n - 1] = 2;
            break;
        case 'D':
            require(n >= 4 && n <= 8, "type D needs rank 4..8");
            chain(n - 1);
            L.edges.push_back({n - 3, n - 1});
            break;
        case 'E':
            require(n >= 6 && n <= 8, "type E needs rank 6..8");
            L.edges.push_back({0, 2});
            L.edges.push_back({1, 3});
            for (int i = 2; i + 1 < n; ++i) L.edges.push_back({i, i + 1});
            break;
        case 'F':
            require(n == 4, "type F needs rank 4");
            chain(4);
            L.d[0] = L.d[1] = 2;
            break;
        case 'G':
            require(n == 2, "type G needs rank 2");
            chain(2);
            L.d[1] = 3;
            break;
        default:
            throw precondition_error(std::string("unknown Lie type '") + t + "'");
    }
    return L;
}

std::vector<std::vector<Rat>> invert_rational(const std::vector<std::vector<long>>& m) {
    std::size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        check_internal(piv < n, "Cartan matrix not invertible");
        std::swap(a[piv], a[c]);
        Rat inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

Int factorial_int(long n) { return factorial(n); }

} // namespace

Int weyl_order_of_cartan(const std::vector<std::vector<long>>& cartan) {
    int n = static_cast<int>(cartan.size());
    if (n == 0) return 1;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    std::vector<std::vector<long>> edge_mult(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && cartan[i][j] != 0) {
                adj[i].push_back(j);
                edge_mult[i][j] = cartan[i][j] * cartan[j][i];
            }
    Int order = 1;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        // Collect this connected component.
        std::vector<int> nodes{s};
        comp[s] = s;
        for (std::size_t q = 0; q < nodes.size(); ++q)
            for (int t : adj[nodes[q]])
                if (comp[t] < 0) {
                    comp[t] = s;
                    nodes.push_back(t);
                }
        int m = static_cast<int>(nodes.size());
        long edges = 0, doubles = 0, triples = 0;
        int max_deg = 0;
        int branch = -1;
        std::pair<int, int> dbl{-1, -1};
        for (int a : nodes) {
            int deg = static_cast<int>(adj[a].size());
            max_deg = std::max(max_deg, deg);
            if (deg >= 3) branch = a;
            for (int b : adj[a]) {
                if (a < b) {
                    ++edges;
                    if (edge_mult[a][b] == 2) {
                        ++doubles;
                        dbl = {a, b};
                    }
                    if (edge_mult[a][b] == 3) ++triples;
                }
            }
        }
        check_internal(edges == m - 1, "diagram component contains a cycle");
        if (triples > 0) {
            check_internal(m == 2 && triples == 1, "triple edge only valid in G_2");
            order *= 12;
            continue;
        }
        if (doubles > 0) {
            check_internal(doubles == 1 && max_deg <= 2, "invalid multi-laced diagram");
            auto deg_of = [&](int v) { return static_cast<int>(adj[v].size()); };
            bool at_end = deg_of(dbl.first) == 1 || deg_of(dbl.second) == 1;
            if (m == 2 || at_end) {
                order *= Int(1) << m;           // 2^m
                order *= factorial_int(m);      // B_m / C_m
            } else {
                check_internal(m == 4, "interior double edge requires F_4");
                order *= 1152;
            }
            continue;
        }
        if (max_deg <= 2) {
            order *= factorial_int(m + 1); // A_m
            continue;
        }
        check_internal(max_deg == 3, "diagram node of degree > 3");
        // Arm lengths from the unique branch node.
        std::vector<long> arms;
        for (int t0 : adj[branch]) {
            long len = 1;
            int prev = branch, cur = t0;
            while (static_cast<int>(adj[cur].size()) == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            check_internal(adj[cur].size() == 1, "diagram has two branch nodes");
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        check_internal(arms.size() == 3, "branch node degree mismatch");
        if (arms[0] == 1 && arms[1] == 1) {
            order *= Int(1) << (m - 1);
            order *= factorial_int(m); // D_m
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) {
            order *= 51840; // E_6
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) {
            order *= 2903040; // E_7
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) {
            order *= 696729600; // E_8
        } else {
            throw internal_error("diagram is not of finite type");
        }
    }
    return order;
}

RootDatum RootDatum::build(char lie_type, int rank) {
    Layout L = layout_for(lie_type, rank);
    std::vector<std::vector<long>> cartan(rank, std::vector<long>(rank, 0));
    for (int i = 0; i < rank; ++i) cartan[i][i] = 2;
    for (auto [a, b] : L.edges) {
        long m = std::max(L.d[a], L.d[b]);
        cartan[a][b] = -m / L.d[a];
        cartan[b][a] = -m / L.d[b];
    }
    std::ostringstream nm;
    nm << lie_type << rank;
    RootDatum dat;
    dat.name_ = nm.str();
    dat.rank_ = rank;
    dat.cartan_ = std::move(cartan);
    dat.d_ = std::move(L.d);
    dat.finish();
    return dat;
}

RootDatum RootDatum::from_cartan(const std::vector<std::vector<long>>& cartan,
                                 const std::vector<long>& d, std::string name) {
    int n = static_cast<int>(cartan.size());
    require(n >= 0 && d.size() == cartan.size(), "from_cartan: size mismatch");
    for (int i = 0; i < n; ++i) {
        require(static_cast<int>(cartan[i].size()) == n, "from_cartan: matrix not square");
        require(cartan[i][i] == 2, "from_cartan: diagonal must be 2");
        for (int j = 0; j < n; ++j)
            if (i != j) {
                require(cartan[i][j] <= 0, "from_cartan: positive off-diagonal entry");
                require((cartan[i][j] == 0) == (cartan[j][i] == 0),
                        "from_cartan: asymmetric adjacency");
                require(d[i] * cartan[i][j] == d[j] * cartan[j][i],
                        "from_cartan: lengths do not symmetrize the matrix");
            }
    }
    RootDatum dat;
    dat.name_ = std::move(name);
    dat.rank_ = n;
    dat.cartan_ = cartan;
    dat.d_ = d;
    dat.finish();
    return dat;
}

void RootDatum::finish() {
    // Positive-root closure along root strings, one height at a time.
    std::set<RootVec> seen;
    std::vector<RootVec> frontier;
    for (int i = 0; i < rank_; ++i) {
        RootVec e(rank_, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const RootVec& g : frontier) {
            for (int i = 0; i < rank_; ++i) {
                long pairing = 0;
                for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * g[j];
                long down = 0;
                RootVec walk = g;
                while (true) {
                    walk[i] -= 1;
                    bool nonneg = std::all_of(walk.begin(), walk.end(),
                                              [](long c) { return c >= 0; });
                    if (!nonneg || !seen.count(walk)) break;
                    ++down;
                }
                if (down - pairing >= 1) {
                    RootVec up = g;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    positive_.assign(seen.begin(), seen.end());
    std::stable_sort(positive_.begin(), positive_.end(),
                     [this](const RootVec& a, const RootVec& b) {
                         long ha = std::accumulate(a.begin(), a.end(), 0L);
                         long hb = std::accumulate(b.begin(), b.end(), 0L);
                         return ha != hb ? ha < hb : a < b;
                     });
    for (std::size_t k = 0; k < positive_.size(); ++k) root_lookup_[positive_[k]] = k;

    for (const RootVec& g : positive_) {
        long twice = 0; // (g, g) with short simple roots of square 2
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) twice += g[i] * g[j] * d_[i] * cartan_[i][j];
        check_internal(twice % 2 == 0 && twice > 0, "root of non-positive length");
        positive_d_.push_back(twice / 2);
    }

    cartan_inv_ = invert_rational(cartan_);
    form_.assign(rank_, std::vector<Rat>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) form_[i][j] = Rat(d_[i]) * cartan_inv_[i][j];
    weyl_order_ = weyl_order_of_cartan(cartan_);
}

long RootDatum::root_index(const RootVec& rc) const {
    auto it = root_lookup_.find(rc);
    return it == root_lookup_.end() ? -1 : static_cast<long>(it->second);
}

Weight RootDatum::weight_of_root(const RootVec& rc) const {
    require(static_cast<int>(rc.size()) == rank_, "root coordinate length mismatch");
    Weight w(rank_, 0);
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) w[j] += cartan_[j][i] * rc[i];
    return w;
}

RootVec RootDatum::root_coords(const Weight& w) const {
    require(static_cast<int>(w.size()) == rank_, "weight length mismatch");
    RootVec rc(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
        Rat c = 0;
        for (int j = 0; j < rank_; ++j) c += cartan_inv_[i][j] * Rat(w[j]);
        // c is the alpha_i coordinate; row i of the inverse against column
        // vector w. Columns of cartan are roots, so inverse rows give coords.
        require(c.get_den() == 1, "weight is not in the root lattice");
        rc[i] = to_long(Int(c.get_num()));
    }
    return rc;
}

bool RootDatum::in_root_lattice(const Weight& w) const {
    for (int i = 0; i < rank_; ++i) {
        Rat c = 0;
        for (int j = 0; j < rank_; ++j) c += cartan_inv_[i][j] * Rat(w[j]);
        if (c.get_den() != 1) return false;
    }
    return true;
}

Weight RootDatum::reflect(int i, const Weight& w) const {
    require(i >= 0 && i < rank_, "reflection index out of range");
    Weight out = w;
    long c = w[i];
    for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[j][i];
    return out;
}

Weight RootDatum::add(const Weight& a, const Weight& b) const {
    Weight out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = a[i] + b[i];
    return out;
}

Weight RootDatum::sub(const Weight& a, const Weight& b) const {
    Weight out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = a[i] - b[i];
    return out;
}

bool RootDatum::is_dominant(const Weight& w) const {
    return std::all_of(w.begin(), w.end(), [](long c) { return c >= 0; });
}

Weight RootDatum::dominant_representative(const Weight& w) const {
    Weight cur = w;
    while (true) {
        int neg = -1;
        for (int i = 0; i < rank_; ++i)
            if (cur[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return cur;
        cur = reflect(neg, cur);
    }
}

std::set<Weight> RootDatum::weyl_orbit(const Weight& w) const {
    std::set<Weight> orbit{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& x : frontier)
            for (int i = 0; i < rank_; ++i) {
                Weight y = reflect(i, x);
                if (orbit.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return orbit;
}

Int RootDatum::weight_stabilizer_order(const Weight& w) const {
    require(is_dominant(w), "stabilizer order requires a dominant weight");
    std::vector<int> zero_nodes;
    for (int i = 0; i < rank_; ++i)
        if (w[i] == 0) zero_nodes.push_back(i);
    std::vector<std::vector<long>> sub(zero_nodes.size(),
                                       std::vector<long>(zero_nodes.size()));
    for (std::size_t a = 0; a < zero_nodes.size(); ++a)
        for (std::size_t b = 0; b < zero_nodes.size(); ++b)
            sub[a][b] = cartan_[zero_nodes[a]][zero_nodes[b]];
    return weyl_order_of_cartan(sub);
}

Int RootDatum::orbit_size(const Weight& w) const {
    Weight dom = dominant_representative(w);
    return exact_div(weyl_order_, weight_stabilizer_order(dom), "orbit size");
}

Rat RootDatum::form(const Weight& a, const Weight& b) const {
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (b[j] != 0) s += Rat(a[i]) * form_[i][j] * Rat(b[j]);
    }
    return s;
}

Int RootDatum::pair_coroot(const Weight& w, const RootVec& alpha) const {
    long idx = root_index(alpha);
    require(idx >= 0, "pair_coroot: not a positive root");
    Int num = 0;
    for (int j = 0; j < rank_; ++j) num += Int(alpha[j]) * d_[j] * w[j];
    return exact_div(num, Int(positive_d_[idx]), "coroot pairing");
}

Weight RootDatum::rho() const { return Weight(rank_, 1); }

Weight RootDatum::fundamental(int i) const {
    require(i >= 0 && i < rank_, "fundamental weight index out of range");
    Weight w(rank_, 0);
    w[i] = 1;
    return w;
}

long RootDatum::height(const RootVec& rc) const {
    return std::accumulate(rc.begin(), rc.end(), 0L);
}

std::string format_weight(const Weight& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

Weight parse_weight(const std::string& text, int rank) {
    Weight w;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(piece, &used);
            require(used == piece.size(), "weight coordinate '" + piece + "' is not an integer");
            w.push_back(v);
        } catch (const std::invalid_argument&) {
            throw precondition_error("weight coordinate '" + piece + "' is not an integer");
        } catch (const std::out_of_range&) {
            throw precondition_error("weight coordinate '" + piece + "' is out of range");
        }
    }
    require(static_cast<int>(w.size()) == rank,
            "expected " + std::to_string(rank) + " weight coordinates");
    return w;
}

} // namespace chevjor
