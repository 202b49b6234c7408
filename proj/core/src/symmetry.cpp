#include "gstwalk/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gstwalk/error.hpp"

namespace gstwalk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw Error("permutation image array is not a bijection on 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    return Permutation(im);
}

Permutation Permutation::compose(const Permutation& then) const {
    if (n() != then.n()) throw Error("permutation size mismatch");
    std::vector<int> im(images_.size());
    for (int i = 0; i < n(); ++i) im[i] = then.images_[images_[i]];
    return Permutation(im);
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < n(); ++i) im[images_[i]] = i;
    return Permutation(im);
}

VertexSet Permutation::apply(const VertexSet& s) const {
    VertexSet out(s.universe());
    for (int v : s.members()) out.set(images_[v]);
    return out;
}

bool is_automorphism(const Graph& x, const Permutation& p) {
    if (p.n() != x.n()) throw Error("permutation size does not match graph order");
    for (int a = 0; a < x.n(); ++a)
        for (int b = a + 1; b < x.n(); ++b)
            if (x.adjacent(a, b) != x.adjacent(p.apply(a), p.apply(b))) return false;
    return true;
}

PermGroup group_closure(const std::vector<Permutation>& gens, std::size_t cap) {
    if (cap < 1) throw Error("group cap must be >= 1");
    if (gens.empty()) throw Error("group_closure needs at least one generator");
    const int n = gens.front().n();
    for (const auto& g : gens)
        if (g.n() != n) throw Error("generator size mismatch");

    std::set<Permutation> elements{Permutation::identity(n)};
    std::deque<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        Permutation cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            Permutation next = cur.compose(g);
            if (elements.insert(next).second) {
                if (elements.size() > cap)
                    throw Error("group closure exceeded cap of " + std::to_string(cap) +
                                " elements (partial count " + std::to_string(elements.size()) +
                                ")");
                frontier.push_back(std::move(next));
            }
        }
    }
    PermGroup group;
    group.generators = gens;
    group.elements.assign(elements.begin(), elements.end());
    return group;
}

std::vector<VertexSet> orbit_of_set(const VertexSet& s, const PermGroup& g) {
    std::set<VertexSet> orbit;
    for (const auto& p : g.elements) orbit.insert(p.apply(s));
    return {orbit.begin(), orbit.end()};
}

PermGroup setwise_stabilizer(const VertexSet& s, const PermGroup& g) {
    PermGroup stab;
    for (const auto& p : g.elements)
        if (p.apply(s) == s) stab.elements.push_back(p);
    stab.generators = stab.elements;  // filter of a materialized group
    return stab;
}

std::vector<Permutation> known_automorphism_generators(const GeneratorSpec& spec) {
    std::vector<Permutation> gens;
    auto add = [&](std::vector<int> im) { gens.emplace_back(std::move(im)); };

    switch (spec.family) {
        case Family::hypercube: {
            const int d = static_cast<int>(spec.params.at(0));
            const int n = 1 << d;
            // flip of coordinate 0
            std::vector<int> flip(n);
            for (int v = 0; v < n; ++v) flip[v] = v ^ 1;
            add(flip);
            if (d >= 2) {
                // swap coordinates 0,1 and rotate all coordinates
                std::vector<int> swap01(n), rot(n);
                for (int v = 0; v < n; ++v) {
                    int s = v & ~3;
                    s |= ((v & 1) << 1) | ((v >> 1) & 1);
                    swap01[v] = s;
                    rot[v] = ((v << 1) | (v >> (d - 1))) & (n - 1);
                }
                add(swap01);
                add(rot);
            }
            break;
        }
        case Family::cycle: {
            const int n = static_cast<int>(spec.params.at(0));
            std::vector<int> rot(n), refl(n);
            for (int v = 0; v < n; ++v) {
                rot[v] = (v + 1) % n;
                refl[v] = (n - v) % n;
            }
            add(rot);
            add(refl);
            break;
        }
        case Family::path: {
            const int n = static_cast<int>(spec.params.at(0));
            std::vector<int> rev(n);
            for (int v = 0; v < n; ++v) rev[v] = n - 1 - v;
            add(rev);
            break;
        }
        case Family::complete: {
            const int n = static_cast<int>(spec.params.at(0));
            if (n >= 2) {
                std::vector<int> swap01(n), cyc(n);
                for (int v = 0; v < n; ++v) {
                    swap01[v] = v;
                    cyc[v] = (v + 1) % n;
                }
                std::swap(swap01[0], swap01[1]);
                add(swap01);
                add(cyc);
            }
            break;
        }
        case Family::complete_bipartite: {
            const int a = static_cast<int>(spec.params.at(0));
            const int b = static_cast<int>(spec.params.at(1));
            const int n = a + b;
            auto transpose = [&](int i, int j) {
                std::vector<int> im(n);
                for (int v = 0; v < n; ++v) im[v] = v;
                std::swap(im[i], im[j]);
                add(im);
            };
            if (a >= 2) transpose(0, 1);
            if (b >= 2) transpose(a, a + 1);
            if (a == b) {
                std::vector<int> swap_parts(n);
                for (int v = 0; v < a; ++v) {
                    swap_parts[v] = a + v;
                    swap_parts[a + v] = v;
                }
                add(swap_parts);
            }
            break;
        }
        case Family::double_star: {
            const int k = static_cast<int>(spec.params.at(0));
            const int n = 2 * k + 2;
            // mirror: swap centers and the two leaf blocks
            std::vector<int> mirror(n);
            mirror[0] = 1;
            mirror[1] = 0;
            for (int j = 0; j < k; ++j) {
                mirror[2 + j] = 2 + k + j;
                mirror[2 + k + j] = 2 + j;
            }
            add(mirror);
            if (k >= 2) {
                std::vector<int> leafswap(n);
                for (int v = 0; v < n; ++v) leafswap[v] = v;
                std::swap(leafswap[2], leafswap[3]);
                add(leafswap);
            }
            break;
        }
        case Family::mckay: {
            // mirror through the middle of the theta graph
            add({6, 7, 5, 4, 3, 2, 0, 1});
            // swap the two outer paths
            add({1, 0, 2, 3, 4, 5, 7, 6});
            break;
        }
        case Family::petersen: {
            // induced action of (1 2) and (1 2 3 4 5) on 2-subsets
            std::vector<std::pair<int, int>> subsets;
            for (int a = 1; a <= 5; ++a)
                for (int b = a + 1; b <= 5; ++b) subsets.emplace_back(a, b);
            auto induced = [&](auto&& point_map) {
                std::vector<int> im(10);
                for (int i = 0; i < 10; ++i) {
                    int a = point_map(subsets[i].first), b = point_map(subsets[i].second);
                    if (a > b) std::swap(a, b);
                    for (int j = 0; j < 10; ++j)
                        if (subsets[j] == std::make_pair(a, b)) im[i] = j;
                }
                add(im);
            };
            induced([](int v) { return v == 1 ? 2 : v == 2 ? 1 : v; });
            induced([](int v) { return v % 5 + 1; });
            break;
        }
        case Family::paley: {
            const long q = spec.params.at(0);
            std::vector<int> shift(q);
            for (long v = 0; v < q; ++v) shift[v] = static_cast<int>((v + 1) % q);
            add(shift);
            // multiplication by a quadratic residue generator (g^2 for a
            // primitive root g) permutes edges
            long g = 2;
            for (; g < q; ++g) {
                std::set<long> powers;
                long x = 1;
                for (long e = 0; e < q - 1; ++e) {
                    powers.insert(x);
                    x = (x * g) % q;
                }
                if (static_cast<long>(powers.size()) == q - 1) break;
            }
            const long g2 = (g * g) % q;
            std::vector<int> mul(q);
            for (long v = 0; v < q; ++v) mul[v] = static_cast<int>((v * g2) % q);
            add(mul);
            break;
        }
        default:
            break;  // composite / edge_list: caller supplies generators
    }
    return gens;
}

SymmetryReport gst_symmetry_check(const Spectrum& spec, const Graph& x,
                                  const VertexSet& s, const VertexSet& t, double time,
                                  const PermGroup& g, double zero_tol) {
    for (const auto& gen : g.generators)
        if (!is_automorphism(x, gen))
            throw Error("gst_symmetry_check: a group generator is not an automorphism");
    const GSTReport base = has_gst(spec, s, t, time, zero_tol);
    if (!base.holds) throw Error("gst_symmetry_check requires (S,T)-GST to hold");

    SymmetryReport rep;
    auto clause = [&](const std::string& name, bool holds, double detail) {
        rep.clauses.push_back({name, holds, detail});
    };

    // (a) every image pair transfers
    bool all_images = true;
    double worst = 0.0;
    for (const auto& p : g.elements) {
        const GSTReport r = has_gst(spec, p.apply(s), p.apply(t), time, zero_tol);
        worst = std::max(worst, r.residual);
        all_images = all_images && r.holds;
    }
    clause("(S^s,T^s)-GST for all s in H", all_images, worst);

    const PermGroup stab_s = setwise_stabilizer(s, g);

    // (b) intersecting T over the stabilizer of S still receives S
    VertexSet t_core = t;
    for (const auto& p : stab_s.elements) t_core = t_core.intersect_with(p.apply(t));
    const GSTReport core = has_gst(spec, s, t_core, time, zero_tol);
    clause("(S, intersection T^s)-GST", core.holds, core.residual);

    // (c) equal stabilizers in the bijective case
    if (s.count() == t.count()) {
        const PermGroup stab_t = setwise_stabilizer(t, g);
        clause("Stab(S) = Stab(T)", stab_s.elements == stab_t.elements,
               static_cast<double>(stab_s.order()));
    }

    // stabilizer containments and orbit inequalities for F and I
    const VertexSet fwd = forward_set(spec, s, time, zero_tol);
    const VertexSet inv = inverse_set(spec, s, time, zero_tol);
    auto contained = [&](const VertexSet& set) {
        for (const auto& p : stab_s.elements)
            if (p.apply(set) != set) return false;
        return true;
    };
    clause("Stab(S) <= Stab(F(S,t))", contained(fwd), 0.0);
    clause("Stab(S) <= Stab(I(S,t))", contained(inv), 0.0);
    clause("|O(S)| >= |O(F(S,t))|",
           orbit_of_set(s, g).size() >= orbit_of_set(fwd, g).size(), 0.0);
    clause("|O(S)| >= |O(I(S,t))|",
           orbit_of_set(s, g).size() >= orbit_of_set(inv, g).size(), 0.0);

    rep.all_hold = true;
    for (const auto& c : rep.clauses) rep.all_hold = rep.all_hold && c.holds;
    return rep;
}

} // namespace gstwalk
