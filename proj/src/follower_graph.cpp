#include "lexent/follower_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lexent/beta_alpha_maps.hpp"

namespace lexent {

namespace {

bool is_prefix_of(const Word& w, const EPString& x) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != x.at(static_cast<long>(i))) return false;
    return true;
}

// Membership in the block set of the parsing: a nonempty prefix of x, or a
// first letter different from x_0 followed by a (possibly empty) prefix of x.
bool in_block_set(const Word& w, const EPString& x) {
    if (w.empty()) return false;
    if (is_prefix_of(w, x)) return true;
    if (w[0] == x.at(0)) return false;
    return is_prefix_of(drop_first(w), x);
}

Parsing parse_against(const Word& w, const EPString& x) {
    Parsing out;
    size_t pos = 0;
    while (pos < w.size()) {
        size_t best = 0;
        for (size_t len = 1; pos + len <= w.size(); ++len) {
            Word cand(w.begin() + pos, w.begin() + pos + len);
            if (in_block_set(cand, x)) best = len;
        }
        if (best == 0) throw Error("parsing failed: no admissible block");
        out.factors.emplace_back(w.begin() + pos, w.begin() + pos + best);
        pos += best;
    }
    return out;
}

}  // namespace

Word longest_prefix_suffix(const Word& w, const EPString& x) {
    for (size_t len = w.size(); len > 0; --len) {
        Word suf(w.end() - len, w.end());
        if (is_prefix_of(suf, x)) return suf;
    }
    return {};
}

Parsing u_parsing(const Word& w, const EPString& u) { return parse_against(w, u); }
Parsing v_parsing(const Word& w, const EPString& v) { return parse_against(w, v); }

FollowerGraph build_graph(const EPString& u, const EPString& v, GraphMode mode, int K) {
    ConditionReport cr = check_conditions(u, v);
    if (!cr.weak_ok) throw ConditionViolation("bounding pair is not admissible: " + cr.violation);

    FollowerGraph g;
    g.mode = mode;
    g.truncation_level = K;
    g.alphabet = u.alphabet();

    std::map<std::string, int> index;
    auto vertex_key = [&](int p, int q) {
        if (mode == GraphMode::truncate) return std::to_string(p) + "," + std::to_string(q);
        return u.shift(p).key() + "#" + v.shift(q).key();
    };
    auto intern = [&](int p, int q) {
        std::string key = vertex_key(p, q);
        auto [it, fresh] = index.emplace(key, static_cast<int>(g.vertices.size()));
        if (fresh) {
            g.vertices.push_back({p, q, it->second});
            g.edges.emplace_back();
            if (mode == GraphMode::collapse) g.keys.emplace_back(u.shift(p), v.shift(q));
        }
        return it->second;
    };

    g.root = intern(0, 0);
    std::queue<int> todo;
    todo.push(g.root);
    std::set<int> expanded;
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop();
        if (!expanded.insert(i).second) continue;
        int p = g.vertices[i].p, q = g.vertices[i].q;
        Symbol up = u.at(p), vq = v.at(q);
        if (up > vq)
            throw ConditionViolation("vertex [" + std::to_string(p) + "," + std::to_string(q) +
                                     "] violates the ordering of the bounding tails");
        auto add_edge = [&](Symbol lab, int tp, int tq) {
            if (mode == GraphMode::truncate && std::max(tp, tq) > K) return;
            int t = intern(tp, tq);
            g.edges[i].emplace_back(lab, t);
            todo.push(t);
        };
        if (up == vq) {
            add_edge(up, p + 1, q + 1);
        } else {
            add_edge(up, p + 1, 0);
            add_edge(vq, 0, q + 1);
            for (Symbol j = up + 1; j < vq; ++j) add_edge(j, 0, 0);
        }
    }
    return g;
}

bool FollowerGraph::right_resolving() const {
    for (const auto& out : edges) {
        std::set<Symbol> labels;
        for (const auto& [lab, to] : out)
            if (!labels.insert(lab).second) return false;
    }
    return true;
}

std::string FollowerGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph follower {\n  rankdir=LR;\n";
    for (size_t i = 0; i < vertices.size(); ++i) {
        os << "  n" << i << " [label=\"[" << vertices[i].p << "," << vertices[i].q << "]\\nc"
           << vertices[i].class_id << "\"";
        if (static_cast<int>(i) == root) os << " shape=doublecircle";
        os << "];\n";
    }
    for (size_t i = 0; i < edges.size(); ++i)
        for (const auto& [lab, to] : edges[i])
            os << "  n" << i << " -> n" << to << " [label=\"" << lab << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string FollowerGraph::to_json() const {
    nlohmann::json j;
    j["root"] = root;
    j["alphabet"] = alphabet;
    j["mode"] = mode == GraphMode::collapse ? "collapse" : "truncate";
    if (mode == GraphMode::truncate) j["K"] = truncation_level;
    j["vertices"] = nlohmann::json::array();
    for (const auto& vtx : vertices)
        j["vertices"].push_back({{"id", vtx.class_id}, {"p", vtx.p}, {"q", vtx.q}});
    j["edges"] = nlohmann::json::array();
    for (size_t i = 0; i < edges.size(); ++i)
        for (const auto& [lab, to] : edges[i])
            j["edges"].push_back({{"from", static_cast<int>(i)}, {"label", lab}, {"to", to}});
    return j.dump(2);
}

namespace {

// Spectral radius of a nonnegative integer matrix, via strongly connected
// components and power iteration on A+I with two-sided quotient bounds.
Real spectral_radius(const std::vector<std::vector<long>>& adj, double tol) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return Real(0);

    // Tarjan's strongly connected components.
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> onstack(n, false);
    std::vector<int> stack;
    int counter = 0, ncomp = 0;
    std::vector<std::vector<int>> comps;
    struct Frame {
        int v;
        int next;
    };
    for (int s = 0; s < n; ++s) {
        if (idx[s] >= 0) continue;
        std::vector<Frame> call{{s, 0}};
        idx[s] = low[s] = counter++;
        stack.push_back(s);
        onstack[s] = true;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            bool descended = false;
            while (next < n) {
                int w = next++;
                if (adj[v][w] == 0) continue;
                if (idx[w] < 0) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = true;
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (onstack[w]) low[v] = std::min(low[v], idx[w]);
            }
            if (descended) continue;
            if (low[v] == idx[v]) {
                comps.emplace_back();
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onstack[w] = false;
                    comp[w] = ncomp;
                    comps.back().push_back(w);
                } while (w != v);
                ++ncomp;
            }
            int finished = v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[finished]);
        }
    }

    Real best(0);
    for (const auto& members : comps) {
        bool has_cycle = members.size() > 1;
        if (!has_cycle)
            has_cycle = adj[members[0]][members[0]] > 0;
        if (!has_cycle) continue;
        int m = static_cast<int>(members.size());
        // Power iteration on B = A_scc + I (primitive since the component is
        // strongly connected): min_i (Bx)_i/x_i <= rho(B) <= max_i (Bx)_i/x_i.
        std::vector<Real> x(m, Real(1)), y(m);
        Real lo(0), hi(0);
        for (int iter = 0; iter < 1000000; ++iter) {
            for (int i = 0; i < m; ++i) {
                Real acc = x[i];  // the +I term
                for (int j = 0; j < m; ++j)
                    if (adj[members[i]][members[j]] != 0)
                        acc += adj[members[i]][members[j]] * x[j];
                y[i] = acc;
            }
            lo = y[0] / x[0];
            hi = lo;
            Real norm = y[0];
            for (int i = 1; i < m; ++i) {
                Real r = y[i] / x[i];
                lo = (std::min)(lo, r);
                hi = (std::max)(hi, r);
                norm = (std::max)(norm, y[i]);
            }
            for (int i = 0; i < m; ++i) x[i] = y[i] / norm;
            if (hi - lo < tol) break;
        }
        Real rho = (lo + hi) / 2 - 1;
        best = (std::max)(best, rho);
    }
    return best;
}

std::vector<std::vector<long>> adjacency(const FollowerGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (const auto& [lab, to] : g.edges[i]) adj[i][to] += 1;
    return adj;
}

}  // namespace

Real graph_entropy(const FollowerGraph& g, double tol) {
    // Tighten the eigenvalue bracket enough for the log2 target accuracy.
    Real rho = spectral_radius(adjacency(g), tol / 4);
    if (rho <= 1) return Real(0);
    return log2r(rho);
}

Real two_cycle_entropy(int p, int q, double tol) {
    if (p < 1 || q < 1) throw BadParams("cycle lengths must be positive");
    auto f = [&](const Real& l) {
        return 1 / boost::multiprecision::pow(l, p) + 1 / boost::multiprecision::pow(l, q) - 1;
    };
    Real lo(1), hi(2);  // f(1) = 1 > 0 >= f(2)
    while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        if (f(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return log2r((lo + hi) / 2);
}

BigInt word_count(const FollowerGraph& g, int n) {
    std::vector<BigInt> cur(g.vertices.size(), 0), next(g.vertices.size());
    cur[static_cast<size_t>(g.root)] = 1;
    for (int step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), BigInt(0));
        for (size_t i = 0; i < g.edges.size(); ++i)
            for (const auto& [lab, to] : g.edges[i]) next[static_cast<size_t>(to)] += cur[i];
        cur.swap(next);
    }
    BigInt total = 0;
    for (const BigInt& c : cur) total += c;
    return total;
}

Real star_difference_entropy(const EPString& u, const EPString& v, double tol) {
    StarStrings st = star_strings(u, v);
    if (!st.u_changed || !st.v_changed)
        throw BadParams("star construction does not apply to both bounding strings");
    FollowerGraph g = build_graph(u, v, GraphMode::collapse);
    FollowerGraph gs = build_graph(st.u_star, st.v_star, GraphMode::collapse);

    // A vertex of the star graph is "old" when some admissible word of the
    // original pair reaches it; those vertices mirror the original graph. The
    // remainder is the strongly connected two-cycle attachment.
    std::vector<bool> old(gs.vertices.size(), false);
    std::set<std::pair<int, int>> visited;
    std::queue<std::pair<int, int>> todo;
    todo.emplace(gs.root, g.root);
    visited.insert({gs.root, g.root});
    while (!todo.empty()) {
        auto [i, j] = todo.front();
        todo.pop();
        old[static_cast<size_t>(i)] = true;
        for (const auto& [lab, ti] : gs.edges[static_cast<size_t>(i)]) {
            for (const auto& [lab2, tj] : g.edges[static_cast<size_t>(j)]) {
                if (lab2 != lab) continue;
                if (visited.insert({ti, tj}).second) todo.emplace(ti, tj);
            }
        }
    }
    std::vector<int> fresh;
    for (size_t i = 0; i < gs.vertices.size(); ++i)
        if (!old[i]) fresh.push_back(static_cast<int>(i));
    int m = static_cast<int>(fresh.size());
    std::vector<std::vector<long>> adj(m, std::vector<long>(m, 0));
    std::map<int, int> pos;
    for (int i = 0; i < m; ++i) pos[fresh[static_cast<size_t>(i)]] = i;
    for (int i = 0; i < m; ++i)
        for (const auto& [lab, to] : gs.edges[static_cast<size_t>(fresh[static_cast<size_t>(i)])])
            if (auto it = pos.find(to); it != pos.end()) adj[static_cast<size_t>(i)][static_cast<size_t>(it->second)] += 1;
    Real rho = spectral_radius(adj, tol / 4);
    if (rho <= 1) return Real(0);
    return log2r(rho);
}

}  // namespace lexent
