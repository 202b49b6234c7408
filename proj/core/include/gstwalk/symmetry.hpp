#pragma once

#include <string>
#include <vector>

#include "gstwalk/generators.hpp"
#include "gstwalk/gst.hpp"

namespace gstwalk {

/// Bijection on 0..n-1 stored as its image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int apply(int v) const { return images_[v]; }
    const std::vector<int>& images() const { return images_; }

    Permutation compose(const Permutation& then) const;  // this followed by `then`
    Permutation inverse() const;
    VertexSet apply(const VertexSet& s) const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

struct PermGroup {
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // materialized, sorted, contains identity

    std::size_t order() const { return elements.size(); }
};

/// True iff a~b <=> p(a)~p(b) over all pairs. Throws on size mismatch.
bool is_automorphism(const Graph& x, const Permutation& p);

/// Breadth-first closure of the generators under composition; throws once
/// the group would exceed cap elements.
PermGroup group_closure(const std::vector<Permutation>& gens, std::size_t cap = 100000);

std::vector<VertexSet> orbit_of_set(const VertexSet& s, const PermGroup& g);
PermGroup setwise_stabilizer(const VertexSet& s, const PermGroup& g);

/// Generators of a (sub)group of Aut for the named families where they are
/// classical; empty for composite/edge-list specs (caller supplies them).
std::vector<Permutation> known_automorphism_generators(const GeneratorSpec& spec);

struct SymmetryClause {
    std::string name;
    bool holds = false;
    double detail = 0.0;  // worst residual where applicable
};

struct SymmetryReport {
    std::vector<SymmetryClause> clauses;
    bool all_hold = false;
};

/// With (S,T)-GST at t and H <= Aut(X): verifies (S^s,T^s)-GST for every
/// s in H, (S, intersection of T^s)-GST, Stab(S) = Stab(T) when |S| = |T|,
/// Stab(S) <= Stab(F(S,t)) and <= Stab(I(S,t)), and the orbit-size
/// inequalities. Throws if a generator fails is_automorphism or the GST
/// precondition fails.
SymmetryReport gst_symmetry_check(const Spectrum& spec, const Graph& x,
                                  const VertexSet& s, const VertexSet& t, double time,
                                  const PermGroup& g,
                                  double zero_tol = kDefaultZeroTol);

} // namespace gstwalk
