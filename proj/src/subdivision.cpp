#include <bit>
#include <functional>
#include <unordered_set>

#include "cyclewright/oracles.hpp"

namespace cw {

namespace {

using Mask = std::uint64_t;

struct StateHash {
    std::size_t operator()(const std::pair<Mask, std::uint64_t>& s) const {
        return std::hash<Mask>()(s.first * 0x9E3779B97F4A7C15ULL ^ s.second);
    }
};

// Failure memo: future feasibility only depends on (block, vertex, clipped
// length, used set) once the first branch vertex is fixed.
class FailureMemo {
public:
    bool contains(Mask used, std::uint64_t rest) const { return set_.count({used, rest}) != 0; }
    void add(Mask used, std::uint64_t rest) {
        if (set_.size() < kCap) set_.insert({used, rest});
    }
    void clear() { set_.clear(); }

private:
    static constexpr std::size_t kCap = 4'000'000;
    std::unordered_set<std::pair<Mask, std::uint64_t>, StateHash> set_;
};

class SubdivisionSearch {
public:
    SubdivisionSearch(const Digraph& d, const OrientedCycleSpec& spec, BudgetMeter& meter)
        : d_(d), spec_(spec), meter_(meter), n_(d.order()), m_(static_cast<int>(spec.blocks.size())) {
        out_.assign(n_, 0);
        in_.assign(n_, 0);
        for (auto [u, v] : d.arcs()) {
            out_[u] |= Mask{1} << v;
            in_[v] |= Mask{1} << u;
        }
        suffix_.assign(m_ + 1, 0);
        for (int i = m_ - 1; i >= 0; --i) suffix_[i] = suffix_[i + 1] + spec.blocks[i].length;
    }

    std::optional<SubdivisionWitness> run() {
        for (int b0 = 0; b0 < n_; ++b0) {
            b0_ = b0;
            memo_.clear();
            branch_ = {b0};
            paths_ = {{b0}};
            if (dfs(0, b0, 0, Mask{1} << b0)) {
                SubdivisionWitness w{spec_, branch_, paths_};
                return w;
            }
            if (meter_.exhausted()) return std::nullopt;
        }
        return std::nullopt;
    }

private:
    Mask step_mask(int v, Dir dir) const { return dir == Dir::Forward ? out_[v] : in_[v]; }

    Mask reach(int from, Mask allowed, int mode) const {
        // mode 0: underlying, 1: along out-arcs, 2: along in-arcs.
        Mask seen = Mask{1} << from, frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) {
                int x = std::countr_zero(f);
                if (mode != 2) next |= out_[x];
                if (mode != 1) next |= in_[x];
            }
            next &= allowed & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool feasible(int i, int w, int len, Mask used) const {
        const int need_arcs = std::max(0, spec_.blocks[i].length - len) + suffix_[i + 1];
        Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        Mask free = all & ~used;
        if (need_arcs - 1 > std::popcount(free)) return false;
        Mask target = Mask{1} << b0_;
        int mode = 0;
        if (i == m_ - 1) mode = spec_.blocks[i].dir == Dir::Forward ? 1 : 2;
        return (reach(w, free | target, mode) & target) != 0;
    }

    std::uint64_t key(int i, int v, int len) const {
        return (static_cast<std::uint64_t>(i) << 40) | (static_cast<std::uint64_t>(v) << 20) |
               static_cast<std::uint64_t>(std::min(len, spec_.blocks[i].length));
    }

    bool dfs(int i, int v, int len, Mask used) {
        if (!meter_.tick()) return false;
        const Block& blk = spec_.blocks[i];
        const bool last = i == m_ - 1;
        std::uint64_t k = key(i, v, len);
        if (memo_.contains(used, k)) return false;
        if (!last && len >= blk.length) {
            branch_.push_back(v);
            paths_.push_back({v});
            if (dfs(i + 1, v, 0, used)) return true;
            branch_.pop_back();
            paths_.pop_back();
            if (meter_.exhausted()) return false;
        }
        Mask nb = step_mask(v, blk.dir);
        if (last && len + 1 >= blk.length && (nb >> b0_ & 1) &&
            !(m_ == 2 && len == 0 && paths_[0].size() == 2)) {  // would reuse the arc of block 0
            paths_.back().push_back(b0_);
            return true;
        }
        for (Mask f = nb & ~used; f; f &= f - 1) {
            int w = std::countr_zero(f);
            Mask nu = used | (Mask{1} << w);
            if (!feasible(i, w, len + 1, nu)) continue;
            paths_.back().push_back(w);
            if (dfs(i, w, len + 1, nu)) return true;
            paths_.back().pop_back();
            if (meter_.exhausted()) return false;
        }
        memo_.add(used, k);
        return false;
    }

    const Digraph& d_;
    const OrientedCycleSpec& spec_;
    BudgetMeter& meter_;
    int n_, m_;
    int b0_ = 0;
    std::vector<Mask> out_, in_;
    std::vector<int> suffix_;
    std::vector<int> branch_;
    std::vector<std::vector<int>> paths_;
    FailureMemo memo_;
};

}  // namespace

SubdivisionResult find_subdivision(const Digraph& d, const OrientedCycleSpec& spec, const SearchBudget& budget) {
    spec.validate();
    if (d.order() > 64) throw PreconditionError("find_subdivision supports at most 64 vertices");
    BudgetMeter meter(budget);
    SubdivisionResult r;
    if (d.order() < spec.order()) {
        r.status = SearchStatus::Absent;
        return r;
    }
    SubdivisionSearch search(d, spec, meter);
    r.witness = search.run();
    r.nodes = meter.nodes();
    if (r.witness)
        r.status = SearchStatus::Found;
    else
        r.status = meter.exhausted() ? SearchStatus::Indeterminate : SearchStatus::Absent;
    return r;
}

PathResult find_two_block_path(const Digraph& d, int sign, int k, int l, const SearchBudget& budget) {
    if (k < 1 || l < 0) throw PreconditionError("two-block path needs k >= 1 and l >= 0");
    if (d.order() > 64) throw PreconditionError("find_two_block_path supports at most 64 vertices");
    const int n = d.order();
    const int total = k + l;
    PathResult r;
    if (n < total + 1) {
        r.status = SearchStatus::Absent;
        return r;
    }
    std::vector<Mask> out(n, 0), in(n, 0);
    for (auto [u, v] : d.arcs()) {
        out[u] |= Mask{1} << v;
        in[v] |= Mask{1} << u;
    }
    BudgetMeter meter(budget);
    FailureMemo memo;
    std::vector<int> path;
    std::function<bool(int, int, Mask)> dfs = [&](int v, int step, Mask used) -> bool {
        if (!meter.tick()) return false;
        if (step == total) return true;
        if (memo.contains(used, static_cast<std::uint64_t>(v) << 8 | step)) return false;
        bool fwd = (step < k) == (sign > 0);
        Mask nb = (fwd ? out[v] : in[v]) & ~used;
        for (; nb; nb &= nb - 1) {
            int w = std::countr_zero(nb);
            path.push_back(w);
            if (dfs(w, step + 1, used | (Mask{1} << w))) return true;
            path.pop_back();
            if (meter.exhausted()) return false;
        }
        memo.add(used, static_cast<std::uint64_t>(v) << 8 | step);
        return false;
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        if (dfs(s, 0, Mask{1} << s)) {
            r.status = SearchStatus::Found;
            r.path = path;
            return r;
        }
        if (meter.exhausted()) return r;
    }
    r.status = SearchStatus::Absent;
    return r;
}

}  // namespace cw
