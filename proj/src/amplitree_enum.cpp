#include "plab/amplitree_enum.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "plab/orientation.hpp"
#include "plab/plane_tree.hpp"

namespace plab {

namespace {

// Planted subtrees over an interval of consecutive leaves. The per-subtree
// statistic is q = (#leaves) - m * (black degree excess); every edge cut must
// satisfy q in [1, m], and the complementary side is then automatically in
// range. Children are weighted by their black excess, plus one per child when
// the parent is black (absorbing the parent's degree contribution).
struct Counter {
    int m;
    std::map<std::tuple<int, int, int>, unsigned long long> memo_n;  // (len, color, q)
    std::map<std::tuple<int, int, int>, unsigned long long> memo_t;  // (len, color, weighted)

    // weighted excess of a child option of length l with statistic q
    int child_weight(int l, int q, int inc) const { return (l - q) / m + inc; }

    // subtrees with internal root of `color`, >= 2 children, statistic q
    unsigned long long subtree(int len, int color, int q) {
        if (len < 2 || q < 1 || q > m) return 0;
        int dm = len - q;
        if (dm < 0 || dm % m != 0) return 0;
        auto key = std::make_tuple(len, color, q);
        auto it = memo_n.find(key);
        if (it != memo_n.end()) return it->second;
        int inc = (color == 0) ? 1 : 0;
        int target = dm / m + inc;  // sum of child weights
        unsigned long long r = 0;
        // first child covers l1 < len leaves, the tail at least one more child
        for (int l1 = 1; l1 < len; ++l1) {
            if (l1 == 1) {
                if (target - inc >= 0) r += tail(len - 1, color, target - inc);
            } else {
                for (int q1 = 1; q1 <= m; ++q1) {
                    if ((l1 - q1) % m != 0 || l1 - q1 < 0) continue;
                    unsigned long long c = subtree(l1, 1 - color, q1);
                    if (!c) continue;
                    int w = child_weight(l1, q1, inc);
                    if (target - w >= 0) r += c * tail(len - l1, color, target - w);
                }
            }
        }
        memo_n[key] = r;
        return r;
    }

    // sequences of >= 1 children covering j leaves with weights summing to w
    unsigned long long tail(int j, int color, int w) {
        if (j <= 0 || w < 0) return 0;
        auto key = std::make_tuple(j, color, w);
        auto it = memo_t.find(key);
        if (it != memo_t.end()) return it->second;
        int inc = (color == 0) ? 1 : 0;
        unsigned long long r = 0;
        // leaf child
        if (w - inc >= 0) {
            if (j == 1) r += (w - inc == 0) ? 1 : 0;
            else r += tail(j - 1, color, w - inc);
        }
        for (int l = 2; l <= j; ++l) {
            for (int q = 1; q <= m; ++q) {
                if ((l - q) % m != 0 || l - q < 0) continue;
                unsigned long long c = subtree(l, 1 - color, q);
                if (!c) continue;
                int cw = child_weight(l, q, inc);
                if (w - cw < 0) continue;
                if (l == j) r += (w - cw == 0) ? c : 0;
                else r += c * tail(j - l, color, w - cw);
            }
        }
        memo_t[key] = r;
        return r;
    }
};

struct Node {
    int color = -1;  // -1 leaf, 0 black, 1 white
    std::vector<Node> kids;
};

// Structure generator mirroring the counter; when `balanced` is false the
// per-subtree statistic is unconstrained and only the total excess matters.
struct Generator {
    int m;
    bool balanced;

    // subtrees of `color` over len leaves; pairs (black excess, node)
    std::vector<std::pair<int, Node>> subtrees(int len, int color) {
        std::vector<std::pair<int, Node>> out;
        if (len < 2) return out;
        int inc = (color == 0) ? 1 : 0;
        for (int l1 = 1; l1 < len; ++l1) {
            for (auto& [d1, first] : child_options(l1, color)) {
                for (auto& [dt, rest] : tails(len - l1, color)) {
                    Node nd;
                    nd.color = color;
                    nd.kids.push_back(first);
                    for (auto& k : rest) nd.kids.push_back(k);
                    int excess = d1 + dt + inc * (static_cast<int>(nd.kids.size()) - 1);
                    if (balanced) {
                        int q = len - m * excess;
                        if (q < 1 || q > m) continue;
                    }
                    out.push_back({excess, nd});
                }
            }
        }
        return out;
    }

    std::vector<std::pair<int, Node>> child_options(int l, int parent_color) {
        std::vector<std::pair<int, Node>> out;
        if (l == 1) {
            out.push_back({0, Node{}});
            return out;
        }
        return subtrees(l, 1 - parent_color);
    }

    // sequences of >= 1 children over j leaves: (sum of child excesses, kids)
    std::vector<std::pair<int, std::vector<Node>>> tails(int j, int parent_color) {
        std::vector<std::pair<int, std::vector<Node>>> out;
        if (j <= 0) return out;
        for (int l = 1; l <= j; ++l) {
            for (auto& [d, first] : child_options(l, parent_color)) {
                if (l == j) {
                    out.push_back({d, {first}});
                } else {
                    for (auto& [dt, rest] : tails(j - l, parent_color)) {
                        std::vector<Node> kids;
                        kids.push_back(first);
                        for (auto& k : rest) kids.push_back(k);
                        out.push_back({d + dt, kids});
                    }
                }
            }
        }
        return out;
    }
};

PlabicGraph build_tree(const Node& root, int n) {
    PlabicGraph g(n);
    for (int pos = 1; pos <= n; ++pos) g.add_boundary(pos);
    int next_pos = 2;
    std::function<int(const Node&)> rec = [&](const Node& nd) -> int {
        int v = g.add_internal(nd.color == 0 ? 'b' : 'w');
        for (const Node& kid : nd.kids) {
            if (kid.color == -1) {
                int leaf = g.boundary_vertex(next_pos++);
                g.add_edge(v, leaf);
            } else {
                int c = rec(kid);
                // connect afterwards, then rotate the child so its parent
                // edge comes first
                int e = g.add_edge(v, c);
                auto rot = g.vert(c).rot;
                rot.pop_back();
                rot.insert(rot.begin(), e);
                g.set_rotation(c, rot);
            }
        }
        return v;
    };
    int r = rec(root);
    int e = g.add_edge(r, g.boundary_vertex(1));
    auto rot = g.vert(r).rot;
    rot.pop_back();
    rot.insert(rot.begin(), e);
    g.set_rotation(r, rot);
    return g;
}

}  // namespace

unsigned long long count_amplitrees(int k, int m, int cap_n) {
    if (k < 1 || m < 1) throw std::invalid_argument("count_amplitrees: k, m >= 1");
    long long n = static_cast<long long>(k) * m + 1;
    if (n > cap_n) throw CapExceeded("count_amplitrees: n exceeds cap");
    if (n == 2) return 1;  // the single edge between the two boundary vertices
    Counter c{m, {}, {}};
    return c.subtree(static_cast<int>(n) - 1, 0, m) + c.subtree(static_cast<int>(n) - 1, 1, m);
}

std::vector<PlabicGraph> generate_amplitrees(int k, int m, size_t limit) {
    int n = k * m + 1;
    std::vector<PlabicGraph> out;
    if (n == 2) {
        PlabicGraph g(2);
        int a = g.add_boundary(1), b = g.add_boundary(2);
        g.add_edge(a, b);
        out.push_back(g);
        return out;
    }
    Generator gen{m, true};
    for (int color : {0, 1}) {
        for (auto& [dt, nd] : gen.subtrees(n - 1, color)) {
            if (dt != k - 1) continue;
            out.push_back(build_tree(nd, n));
            if (out.size() >= limit) return out;
        }
    }
    return out;
}

std::vector<PlabicGraph> generate_type_trees_unbalanced(int k, int m, size_t limit) {
    int n = k * m + 1;
    std::vector<PlabicGraph> out;
    if (n == 2) return out;
    Generator gen{m, false};
    for (int color : {0, 1}) {
        for (auto& [dt, nd] : gen.subtrees(n - 1, color)) {
            if (dt != k - 1) continue;
            PlabicGraph g = build_tree(nd, n);
            if (!balance_scan(g, m).balanced) {
                out.push_back(g);
                if (out.size() >= limit) return out;
            }
        }
    }
    return out;
}

namespace {
unsigned long long binom(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    unsigned long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}
}  // namespace

unsigned long long k2_gf_coefficient(int j) {
    // (1+x)/(1-x)^4
    if (j < 0) return 0;
    return binom(j + 3, 3) + (j >= 1 ? binom(j + 2, 3) : 0);
}

unsigned long long k3_gf_coefficient(int j) {
    // (1 + 28x + 56x^2 + 14x^3)/(1-x)^7
    if (j < 0) return 0;
    const long long num[4] = {1, 28, 56, 14};
    unsigned long long r = 0;
    for (int t = 0; t <= 3 && t <= j; ++t) r += static_cast<unsigned long long>(num[t]) * binom(j - t + 6, 6);
    return r;
}

bool k2_closed_form_check(int max_m) {
    for (int m = 1; m <= max_m; ++m) {
        unsigned long long lhs = count_amplitrees(2, m);
        unsigned long long rhs = static_cast<unsigned long long>(m) * (m + 1) * (2 * m + 1) / 6;
        if (lhs != rhs) return false;
    }
    return true;
}

bool k2_recurrence_check(int max_m) {
    std::vector<unsigned long long> f(max_m + 1, 0);
    for (int m = 1; m <= max_m; ++m) f[m] = count_amplitrees(2, m);
    for (int m = 6; m <= max_m; ++m) {
        long long pred = 5LL * f[m - 1] - 10LL * f[m - 2] + 10LL * f[m - 3] - 5LL * f[m - 4] + f[m - 5];
        if (pred != static_cast<long long>(f[m])) return false;
    }
    return true;
}

bool k2_gf_check(int max_m) {
    for (int m = 1; m <= max_m; ++m)
        if (count_amplitrees(2, m) != k2_gf_coefficient(m - 1)) return false;
    return true;
}

bool k3_gf_check(int max_m) {
    for (int m = 1; m <= max_m; ++m)
        if (count_amplitrees(3, m) != k3_gf_coefficient(m - 1)) return false;
    return true;
}

bool k2_gf_naive_convention_check(int max_m) {
    for (int m = 1; m <= max_m; ++m)
        if (count_amplitrees(2, m) != k2_gf_coefficient(m)) return false;
    return true;
}

}  // namespace plab
