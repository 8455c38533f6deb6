#include "caslab/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace caslab {

DynkinSpec parse_type(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Dynkin type '" + s + "'");
    char series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad Dynkin type '" + s + "'");
    long rank = std::stol(s.substr(1));
    if (rank < 1 || rank > 64) throw std::invalid_argument("bad rank in Dynkin type '" + s + "'");
    DynkinSpec spec{series, static_cast<int>(rank)};
    bool ok = false;
    switch (series) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 3; break;
        case 'E': ok = rank == 6 || rank == 7 || rank == 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: ok = false;
    }
    if (!ok) throw std::invalid_argument("rank out of bounds for series in '" + s + "'");
    return spec;
}

std::string type_name(const DynkinSpec& spec) {
    return std::string(1, spec.series) + std::to_string(spec.rank);
}

BigUint weyl_order(const DynkinSpec& spec) {
    auto fact = [](int n) {
        BigUint f = BigUint::one();
        for (int i = 2; i <= n; ++i) f.mul_small(static_cast<uint64_t>(i));
        return f;
    };
    int n = spec.rank;
    BigUint w;
    switch (spec.series) {
        case 'A': w = fact(n + 1); break;
        case 'B':
        case 'C': {
            w = fact(n);
            for (int i = 0; i < n; ++i) w.mul_small(2);
            break;
        }
        case 'D': {
            w = fact(n);
            for (int i = 0; i < n - 1; ++i) w.mul_small(2);
            break;
        }
        case 'E':
            w = BigUint(n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull);
            break;
        case 'F': w = BigUint(1152); break;
        case 'G': w = BigUint(12); break;
        default: throw std::invalid_argument("bad series");
    }
    return w;
}

namespace {

int classical_pos_count(const DynkinSpec& spec) {
    int n = spec.rank;
    switch (spec.series) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return -1;
}

// Scaled squared half-lengths of the simple roots (long roots have d = scale).
void simple_lengths(const DynkinSpec& spec, std::vector<long long>& d, long long& scale) {
    int n = spec.rank;
    switch (spec.series) {
        case 'A':
        case 'D':
        case 'E':
            scale = 1;
            d.assign(n, 1);
            break;
        case 'B':
            scale = 2;
            d.assign(n, 2);
            d[n - 1] = 1;
            break;
        case 'C':
            scale = 2;
            d.assign(n, 1);
            d[n - 1] = 2;
            break;
        case 'F':
            scale = 2;
            d = {2, 2, 1, 1};
            break;
        case 'G':
            scale = 3;
            d = {1, 3};
            break;
    }
}

std::vector<std::pair<int, int>> dynkin_edges(const DynkinSpec& spec) {
    int n = spec.rank;
    std::vector<std::pair<int, int>> e;
    switch (spec.series) {
        case 'A':
        case 'B':
        case 'C':
        case 'F':
        case 'G':
            for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
            break;
        case 'D':
            for (int i = 0; i + 1 < n - 1; ++i) e.push_back({i, i + 1});
            e.push_back({n - 3, n - 1});
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-..., node 2 hangs off node 4.
            e.push_back({0, 2});
            for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1});
            e.push_back({1, 3});
            break;
    }
    return e;
}

} // namespace

int RootSystem::find_root(const IntVec& v) const {
    bool pos = false, neg = false;
    for (int c : v) {
        if (c > 0) pos = true;
        if (c < 0) neg = true;
    }
    if (pos && neg) return 0;
    if (!pos && !neg) return 0;
    if (pos) {
        auto it = index.find(v);
        return it == index.end() ? 0 : it->second + 1;
    }
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    auto it = index.find(w);
    return it == index.end() ? 0 : -(it->second + 1);
}

long long RootSystem::inner(const IntVec& a, const IntVec& b) const {
    long long s = 0;
    for (int i = 0; i < rank; ++i) {
        if (!a[i]) continue;
        long long row = 0;
        for (int j = 0; j < rank; ++j)
            if (b[j]) row += gram[i][j] * b[j];
        s += row * a[i];
    }
    return s;
}

int RootSystem::pair_coroot(const IntVec& x, int alpha_idx) const {
    long long num = 2 * inner(x, roots[alpha_idx]);
    long long q = qnorm[alpha_idx];
    if (num % q != 0) throw std::logic_error("non-integral coroot pairing");
    return static_cast<int>(num / q);
}

int RootSystem::pair_simple_coroot(const IntVec& x, int i) const {
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += static_cast<long long>(x[j]) * cartan[i][j];
    return static_cast<int>(s);
}

long long RootSystem::pair_coroot_vec(const IntVec& gamma, const IntVec& e) const {
    long long s = 0;
    for (int i = 0; i < rank; ++i)
        if (e[i]) s += static_cast<long long>(e[i]) * pair_simple_coroot(gamma, i);
    return s;
}

std::shared_ptr<const RootSystem> build_root_system(const DynkinSpec& spec) {
    auto rs = std::make_shared<RootSystem>();
    rs->spec = spec;
    int n = rs->rank = spec.rank;

    std::vector<long long> d;
    simple_lengths(spec, d, rs->scale);
    rs->gram.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) rs->gram[i][i] = 2 * d[i];
    for (auto [i, j] : dynkin_edges(spec)) {
        long long g = -std::max(d[i], d[j]);
        rs->gram[i][j] = rs->gram[j][i] = g;
    }
    rs->cartan.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long num = 2 * rs->gram[i][j];
            if (num % rs->gram[i][i] != 0) throw std::logic_error("non-integral Cartan entry");
            rs->cartan[i][j] = static_cast<int>(num / rs->gram[i][i]);
        }

    // Closure from the simple roots: alpha + b_i is a root iff the b_i-string
    // through alpha has q = p - (alpha, b_i^vee) > 0.
    std::map<IntVec, int> seen; // root -> height
    std::vector<IntVec> frontier;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        seen.emplace(e, 1);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& a : frontier) {
            for (int i = 0; i < n; ++i) {
                bool is_simple_i = true;
                for (int j = 0; j < n && is_simple_i; ++j)
                    if (a[j] != (j == i ? 1 : 0)) is_simple_i = false;
                if (is_simple_i) continue;
                int c = 0;
                for (int j = 0; j < n; ++j) c += rs->cartan[i][j] * a[j];
                int p = 0;
                IntVec down = a;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.count(down)) break;
                    ++p;
                }
                if (p - c > 0) {
                    IntVec up = a;
                    up[i] += 1;
                    if (!seen.count(up)) {
                        int h = std::accumulate(up.begin(), up.end(), 0);
                        seen.emplace(up, h);
                        next.push_back(up);
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    rs->roots.assign(seen.size(), {});
    size_t k = 0;
    for (auto& [v, h] : seen) rs->roots[k++] = v;
    std::sort(rs->roots.begin(), rs->roots.end(), [](const IntVec& a, const IntVec& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    rs->n_pos = static_cast<int>(rs->roots.size());
    if (rs->n_pos != classical_pos_count(spec))
        throw std::logic_error("positive-root count mismatch for " + type_name(spec));

    for (int idx = 0; idx < rs->n_pos; ++idx) {
        rs->index.emplace(rs->roots[idx], idx);
        rs->height.push_back(std::accumulate(rs->roots[idx].begin(), rs->roots[idx].end(), 0));
        rs->qnorm.push_back(rs->inner(rs->roots[idx], rs->roots[idx]));
    }
    rs->max_qnorm = *std::max_element(rs->qnorm.begin(), rs->qnorm.end());
    if (rs->max_qnorm != 2 * rs->scale)
        throw std::logic_error("long-root normalization broken");

    for (int idx = 0; idx < rs->n_pos; ++idx) {
        IntVec cv(n, 0);
        for (int i = 0; i < n; ++i) {
            long long num = static_cast<long long>(rs->roots[idx][i]) * rs->gram[i][i];
            if (num % rs->qnorm[idx] != 0) throw std::logic_error("non-integral coroot");
            cv[i] = static_cast<int>(num / rs->qnorm[idx]);
        }
        rs->coroot.push_back(std::move(cv));
    }

    // Highest root: the unique maximal element of the root order.
    {
        int hi = -1;
        for (int idx = 0; idx < rs->n_pos; ++idx) {
            bool top = true;
            for (int j = 0; j < rs->n_pos && top; ++j) {
                if (j == idx) continue;
                bool ge = true;
                for (int i = 0; i < n; ++i)
                    if (rs->roots[j][i] < rs->roots[idx][i]) { ge = false; break; }
                if (ge) top = false;
            }
            if (top) {
                if (hi >= 0) throw std::logic_error("highest root not unique");
                hi = idx;
            }
        }
        rs->highest = hi;
    }

    // Tables of the simple reflections acting on the positive roots.
    rs->simple_act.assign(n, std::vector<int16_t>(rs->n_pos, 0));
    for (int i = 0; i < n; ++i) {
        for (int idx = 0; idx < rs->n_pos; ++idx) {
            IntVec v = rs->roots[idx];
            int c = rs->pair_simple_coroot(v, i);
            v[i] -= c;
            int code = rs->find_root(v);
            if (code == 0) throw std::logic_error("reflection left the root system");
            rs->simple_act[i][idx] = static_cast<int16_t>(code);
        }
    }
    return rs;
}

uint32_t support_mask(const RootSystem& rs, int root_idx) {
    uint32_t m = 0;
    for (int i = 0; i < rs.rank; ++i)
        if (rs.roots[root_idx][i] > 0) m |= (1u << i);
    return m;
}

uint32_t orthogonal_simple_set(const RootSystem& rs, int root_idx) {
    uint32_t m = 0;
    IntVec e(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i) {
        e[i] = 1;
        if (rs.inner(rs.roots[root_idx], e) == 0) m |= (1u << i);
        e[i] = 0;
    }
    return m;
}

bool is_strongly_orthogonal(const RootSystem& rs, int a_idx, int b_idx) {
    if (a_idx == b_idx) return false; // difference is 0
    IntVec sum(rs.rank), dif(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        sum[i] = rs.roots[a_idx][i] + rs.roots[b_idx][i];
        dif[i] = rs.roots[a_idx][i] - rs.roots[b_idx][i];
    }
    return rs.find_root(sum) == 0 && rs.find_root(dif) == 0;
}

bool totally_disjoint(const RootSystem& rs, const std::vector<int>& s, const std::vector<int>& t) {
    for (int a : s)
        for (int b : t)
            if (!is_strongly_orthogonal(rs, a, b)) return false;
    return true;
}

std::vector<int> roots_supported_in(const RootSystem& rs, uint32_t mask) {
    std::vector<int> out;
    for (int idx = 0; idx < rs.n_pos; ++idx)
        if ((support_mask(rs, idx) & ~mask) == 0) out.push_back(idx);
    return out;
}

bool is_locally_high(const RootSystem& rs, int root_idx) {
    uint32_t s = support_mask(rs, root_idx);
    for (int idx : roots_supported_in(rs, s)) {
        bool ge = true;
        for (int i = 0; i < rs.rank; ++i)
            if (rs.roots[root_idx][i] < rs.roots[idx][i]) { ge = false; break; }
        if (!ge) return false;
    }
    return true;
}

bool is_long(const RootSystem& rs, int root_idx) {
    // Ambient systems are irreducible, so one maximum per system.
    return rs.qnorm[root_idx] == rs.max_qnorm;
}

std::vector<uint32_t> connected_components_of_subset(const RootSystem& rs, uint32_t mask) {
    std::vector<uint32_t> comps;
    uint32_t left = mask;
    while (left) {
        int start = __builtin_ctz(left);
        uint32_t comp = 0;
        std::vector<int> stack{start};
        comp |= (1u << start);
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < rs.rank; ++j)
                if ((mask >> j & 1) && !(comp >> j & 1) && rs.adjacent(i, j)) {
                    comp |= (1u << j);
                    stack.push_back(j);
                }
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

std::string root_str(const RootSystem& rs, int root_idx) {
    std::string s;
    for (int i = 0; i < rs.rank; ++i) {
        if (i) s += ',';
        s += std::to_string(rs.roots[root_idx][i]);
    }
    return s;
}

std::string sroot_str(const RootSystem& rs, int code) {
    std::string s;
    int idx = sroot_index(code);
    int sg = sroot_sign(code);
    for (int i = 0; i < rs.rank; ++i) {
        if (i) s += ',';
        s += std::to_string(sg * rs.roots[idx][i]);
    }
    return s;
}

std::string simple_set_str(uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

} // namespace caslab
