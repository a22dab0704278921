#include "certify_util.hpp"

#include <algorithm>
#include <functional>

#include "cyclewright/handles.hpp"

namespace cw::detail {

SearchBudget fallback_budget() {
    SearchBudget b = SearchBudget::from_env();
    b.time_limit = std::chrono::minutes(10);
    return b;
}

Certificate fallback(const Digraph& d, const OrientedCycleSpec& spec, const std::string& theorem, const Params& params,
                     int bound, const std::string& why) {
    auto r = find_subdivision(d, spec, fallback_budget());
    if (r.found()) return Certificate::make_witness(theorem, params, bound, *r.witness, "fallback:" + why);
    if (r.absent())
        return Certificate::make_diagnostic(theorem, params, bound,
                                            {theorem, "no " + spec.name() + " subdivision although the bound is exceeded (" + why + ")", d});
    throw BudgetExceeded("fallback subdivision search exhausted its budget (" + why + ")");
}

std::optional<Certificate> accept(const Digraph& d, const std::optional<SubdivisionWitness>& w,
                                  const std::string& theorem, const Params& params, int bound,
                                  const std::string& route) {
    if (!w || !verify_subdivision(d, *w)) return std::nullopt;
    return Certificate::make_witness(theorem, params, bound, *w, route);
}

Certificate coloring_cert(const std::string& theorem, const Params& params, int bound, Coloring c,
                          const std::string& route) {
    c.palette_size = 0;
    for (int x : c.color) c.palette_size = std::max(c.palette_size, x + 1);
    return Certificate::make_coloring(theorem, params, bound, std::move(c), route);
}

std::vector<int> cycle_segment(const std::vector<int>& cycle, int u, int v) {
    const std::size_t m = cycle.size();
    auto it = std::find(cycle.begin(), cycle.end(), u);
    if (it == cycle.end()) return {};
    std::size_t i = static_cast<std::size_t>(it - cycle.begin());
    std::vector<int> seg{u};
    for (std::size_t step = 1; step <= m && seg.back() != v; ++step) seg.push_back(cycle[(i + step) % m]);
    if (seg.back() != v) return {};
    return seg;
}

std::vector<int> positions(const std::vector<int>& cycle, int n) {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);
    return pos;
}

std::pair<std::vector<int>, std::vector<int>> two_dipaths(const SubdivisionWitness& w) {
    std::vector<int> a = w.paths[0], b = w.paths[1];
    if (w.spec.blocks[0].dir == Dir::Forward) {
        std::reverse(b.begin(), b.end());
        return {a, b};
    }
    std::reverse(a.begin(), a.end());
    return {b, a};
}

std::vector<int> dipath_at_least(const Digraph& d, int s, int t, int min_len, const std::vector<char>& blocked) {
    const int n = d.order();
    std::vector<char> used(n, 0);
    std::vector<int> path{s};
    used[s] = 1;
    long long nodes = 0;
    std::function<bool(int)> dfs = [&](int v) -> bool {
        if (++nodes > 5'000'000) return false;
        for (int w : d.out(v)) {
            if (w == t) {
                if (static_cast<int>(path.size()) >= min_len) {
                    path.push_back(t);
                    return true;
                }
                continue;
            }
            if (used[w] || (!blocked.empty() && blocked[w])) continue;
            used[w] = 1;
            path.push_back(w);
            if (dfs(w)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    if (s == t) return {};
    if (dfs(s)) return path;
    return {};
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.back() != b.front()) throw Error("concat: paths do not meet");
    a.insert(a.end(), b.begin() + 1, b.end());
    return a;
}

}  // namespace cw::detail

namespace cw {

std::optional<SubdivisionWitness> two_path_witness(int k, int l, const std::vector<int>& p, const std::vector<int>& q) {
    if (p.size() < 2 || q.size() < 2 || p.front() != q.front() || p.back() != q.back()) return std::nullopt;
    int lp = static_cast<int>(p.size()) - 1, lq = static_cast<int>(q.size()) - 1;
    const std::vector<int>* a = nullptr;
    const std::vector<int>* b = nullptr;
    if (lp >= k && lq >= l) {
        a = &p;
        b = &q;
    } else if (lq >= k && lp >= l) {
        a = &q;
        b = &p;
    } else {
        return std::nullopt;
    }
    SubdivisionWitness w{OrientedCycleSpec::two_blocks(k, l), {p.front(), p.back()}, {*a, *b}};
    std::reverse(w.paths[1].begin(), w.paths[1].end());
    return w;
}

}  // namespace cw

namespace cw::detail {

std::vector<int> tree_path_or_empty(const Leveling& L, int a, int x) {
    if (a < 0 || x < 0 || !L.is_ancestor(a, x)) return {};
    return L.tree_path(a, x);
}

std::vector<int> chain(std::initializer_list<std::vector<int>> pieces) {
    std::vector<int> out;
    for (const auto& p : pieces) {
        if (p.empty()) return {};
        if (out.empty()) {
            out = p;
            continue;
        }
        if (out.back() != p.front()) return {};
        out.insert(out.end(), p.begin() + 1, p.end());
    }
    return out;
}

std::vector<int> slice(const std::vector<int>& p, std::size_t i, std::size_t j) {
    if (i > j || j >= p.size()) return {};
    return std::vector<int>(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
}

std::vector<int> reversed(std::vector<int> p) {
    std::reverse(p.begin(), p.end());
    return p;
}

std::optional<SubdivisionWitness> hat_c4_witness(const std::vector<int>& a_s1, const std::vector<int>& b_s1,
                                                 const std::vector<int>& b_s2, const std::vector<int>& a_s2) {
    for (const auto* p : {&a_s1, &b_s1, &b_s2, &a_s2})
        if (p->size() < 2) return std::nullopt;
    if (a_s1.front() != a_s2.front() || b_s1.front() != b_s2.front() || a_s1.back() != b_s1.back() ||
        a_s2.back() != b_s2.back())
        return std::nullopt;
    return SubdivisionWitness{OrientedCycleSpec::hat_c4(),
                              {a_s1.front(), a_s1.back(), b_s1.front(), b_s2.back()},
                              {a_s1, reversed(b_s1), b_s2, reversed(a_s2)}};
}

std::vector<std::vector<int>> level_sets(const Leveling& L) {
    std::vector<std::vector<int>> sets(L.height() + 1);
    for (std::size_t v = 0; v < L.level.size(); ++v)
        if (L.level[v] >= 0) sets[L.level[v]].push_back(static_cast<int>(v));
    return sets;
}

}  // namespace cw::detail

namespace cw::detail {

SubdivisionWitness substitute_arc(const SubdivisionWitness& w, int a, int b, const std::vector<int>& path) {
    SubdivisionWitness out = w;
    for (std::size_t i = 0; i < w.paths.size(); ++i) {
        const auto& p = w.paths[i];
        const bool fwd = w.spec.blocks[i].dir == Dir::Forward;
        std::vector<int> q;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j > 0) {
                int x = p[j - 1], y = p[j];
                if (fwd && x == a && y == b) {
                    q.insert(q.end(), path.begin() + 1, path.end() - 1);
                } else if (!fwd && x == b && y == a) {
                    q.insert(q.end(), path.rbegin() + 1, path.rend() - 1);
                }
            }
            q.push_back(p[j]);
        }
        out.paths[i] = std::move(q);
    }
    return out;
}

SubdivisionWitness respec(SubdivisionWitness w, const OrientedCycleSpec& spec) {
    w.spec = spec;
    return w;
}

}  // namespace cw::detail
