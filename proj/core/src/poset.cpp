#include "gstwalk/poset.hpp"

#include <algorithm>
#include <functional>

#include "gstwalk/error.hpp"

namespace gstwalk {

VertexSet MaximalPairMap::forward(const VertexSet& s) const {
    VertexSet image(static_cast<int>(singleton_images.size()));
    for (int a : s.members()) image = image.union_with(singleton_images[a]);
    return image;
}

MaximalPairMap maximal_pairs(const Spectrum& spec, double t, double zero_tol) {
    const Eigen::MatrixXcd u = transition(spec, t);
    const int n = spec.n();
    MaximalPairMap map;
    map.time = t;
    map.zero_tol = zero_tol;
    map.singleton_images.reserve(n);
    for (int a = 0; a < n; ++a) {
        VertexSet single(n);
        single.set(a);
        map.singleton_images.push_back(forward_set(u, single, zero_tol));
    }
    return map;
}

bool is_maximal_pair(const MaximalPairMap& map, const VertexSet& s, const VertexSet& t) {
    if (map.forward(s) != t) return false;
    const int n = static_cast<int>(map.singleton_images.size());
    for (int a = 0; a < n; ++a) {
        if (s.test(a)) continue;
        if (map.singleton_images[a].subset_of(t)) return false;  // S u {a} still works
    }
    return true;
}

std::vector<std::pair<VertexSet, VertexSet>> st_poset(const Spectrum& spec, double t,
                                                      double zero_tol) {
    const int n = spec.n();
    if (n > 5)
        throw Error("st_poset enumerates 4^n pairs and is capped at n = 5; "
                    "use maximal_pairs for larger graphs");
    const MaximalPairMap map = maximal_pairs(spec, t, zero_tol);

    auto from_mask = [n](unsigned mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) s.set(v);
        return s;
    };

    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    const unsigned full = 1u << n;
    for (unsigned sm = 0; sm < full; ++sm) {
        const VertexSet s = from_mask(sm);
        const VertexSet image = map.forward(s);
        for (unsigned tm = 0; tm < full; ++tm) {
            const VertexSet tt = from_mask(tm);
            if (image.subset_of(tt)) pairs.emplace_back(s, tt);
        }
    }
    return pairs;
}

namespace {

// Tarjan SCC on the singleton-image relation a -> b iff b in F({a},t).
struct Condensation {
    std::vector<int> comp;            // vertex -> component id
    std::vector<VertexSet> comp_set;  // component id -> member set
    std::vector<std::vector<int>> succ;  // component DAG edges
};

Condensation condense(const std::vector<VertexSet>& images) {
    const int n = static_cast<int>(images.size());
    Condensation c;
    c.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    int next_index = 0;

    std::function<void(int)> strongconnect = [&](int v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : images[v].members()) {
            if (index[w] < 0) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            VertexSet members(n);
            int cid = static_cast<int>(c.comp_set.size());
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                c.comp[w] = cid;
                members.set(w);
                if (w == v) break;
            }
            c.comp_set.push_back(members);
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) strongconnect(v);

    c.succ.assign(c.comp_set.size(), {});
    for (int v = 0; v < n; ++v)
        for (int w : images[v].members())
            if (c.comp[v] != c.comp[w]) c.succ[c.comp[v]].push_back(c.comp[w]);
    for (auto& s : c.succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return c;
}

} // namespace

std::vector<VertexSet> periodic_sets(const Spectrum& spec, double t, int n_cap,
                                     double zero_tol) {
    const int n = spec.n();
    if (n > n_cap)
        throw Error("periodic_sets capped at n = " + std::to_string(n_cap) +
                    " (raise the cap to enumerate larger graphs)");
    const MaximalPairMap map = maximal_pairs(spec, t, zero_tol);
    const Condensation c = condense(map.singleton_images);
    const int k = static_cast<int>(c.comp_set.size());

    // F(S) subset of S together with |F(S)| >= |S| forces F(S) = S, so the
    // periodic sets are exactly the out-closed unions of components.
    std::vector<std::uint64_t> reach(k, 0);
    // components are produced by Tarjan in reverse topological order, so
    // successors of i have smaller ids and reach[] fills in one pass.
    for (int i = 0; i < k; ++i) {
        reach[i] = std::uint64_t{1} << i;
        for (int j : c.succ[i]) reach[i] |= reach[j];
    }

    std::vector<VertexSet> result;
    std::vector<std::uint64_t> closed_masks{0};
    // Grow the family of out-closed component sets one component at a time.
    for (int i = 0; i < k; ++i) {
        const std::size_t base = closed_masks.size();
        for (std::size_t j = 0; j < base; ++j) {
            std::uint64_t with = closed_masks[j] | reach[i];
            closed_masks.push_back(with);
        }
        std::sort(closed_masks.begin(), closed_masks.end());
        closed_masks.erase(std::unique(closed_masks.begin(), closed_masks.end()),
                           closed_masks.end());
    }
    result.reserve(closed_masks.size());
    for (auto cm : closed_masks) {
        VertexSet s(n);
        for (int i = 0; i < k; ++i)
            if (cm >> i & 1) s = s.union_with(c.comp_set[i]);
        result.push_back(s);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

TopologyAtTime topology_at(const Spectrum& spec, double t, int n_cap, double zero_tol) {
    const int n = spec.n();
    if (n > n_cap)
        throw Error("topology_at capped at n = " + std::to_string(n_cap) +
                    " (2^n subsets are enumerated)");
    const MaximalPairMap map = maximal_pairs(spec, t, zero_tol);

    TopologyAtTime topo;
    topo.time = t;
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.set(v);
        const VertexSet image = map.forward(s);
        // Cl_t(S) = {a | F({a},t) subset of F(S,t)}
        VertexSet cl(n);
        for (int a = 0; a < n; ++a)
            if (map.singleton_images[a].subset_of(image)) cl.set(a);
        if (cl == s) topo.closed_sets.push_back(s);
    }
    topo.open_sets.reserve(topo.closed_sets.size());
    for (const auto& s : topo.closed_sets) topo.open_sets.push_back(s.complement());
    std::sort(topo.open_sets.begin(), topo.open_sets.end());
    return topo;
}

bool verify_topology_axioms(const TopologyAtTime& topo) {
    if (topo.closed_sets.empty()) return false;
    const int n = topo.closed_sets.front().universe();
    const VertexSet empty(n);
    const VertexSet all = VertexSet::full(n);

    auto contains = [&](const VertexSet& s) {
        return std::binary_search(topo.closed_sets.begin(), topo.closed_sets.end(), s);
    };
    if (!contains(empty) || !contains(all)) return false;

    for (std::size_t i = 0; i < topo.closed_sets.size(); ++i)
        for (std::size_t j = i + 1; j < topo.closed_sets.size(); ++j) {
            if (!contains(topo.closed_sets[i].intersect_with(topo.closed_sets[j]))) return false;
            if (!contains(topo.closed_sets[i].union_with(topo.closed_sets[j]))) return false;
        }
    return true;
}

std::vector<VertexSet> closed_vs_bijective_report(const Spectrum& spec, double t,
                                                  int n_cap, double zero_tol) {
    const TopologyAtTime topo = topology_at(spec, t, n_cap, zero_tol);
    const MaximalPairMap map = maximal_pairs(spec, t, zero_tol);
    std::vector<VertexSet> exceptional;
    for (const auto& s : topo.closed_sets)
        if (map.forward(s).count() > s.count()) exceptional.push_back(s);
    return exceptional;
}

} // namespace gstwalk
