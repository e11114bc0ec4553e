#include <parsub/decide.hh>
#include <parsub/errors.hh>

#include <algorithm>

using namespace parsub;

using std::optional;
using std::pair;
using std::vector;

namespace
{
    auto pairs_mod_two(unsigned k) -> unsigned
    {
        return (std::uint64_t(k) * (k - 1) / 2) % 2;
    }

    auto closed_neighbourhood(const Graph & g, Vertex v) -> VertexSet
    {
        auto result = g.neighbourhood(v);
        result.insert(v);
        return result;
    }

    /// First vertex whose (closed, if `closed`) neighbourhood differs from
    /// what the partition demands, paired with a vertex in the difference.
    auto partition_violation(const Graph & g, const VertexSet & side, bool two_cliques) -> optional<pair<Vertex, Vertex> >
    {
        auto other = side.complement();
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            bool in_side = side.contains(v);
            // two cliques: N[v] is v's own side; bipartite: N(v) is the other side
            const VertexSet & expected = two_cliques ? (in_side ? side : other) : (in_side ? other : side);
            auto actual = two_cliques ? closed_neighbourhood(g, v) : g.neighbourhood(v);
            if (actual == expected)
                continue;
            for (Vertex w = 0 ; w < g.size() ; ++w)
                if (actual.contains(w) != expected.contains(w))
                    return pair{ v, w };
        }
        return std::nullopt;
    }

    auto two_clique_side(const Graph & g) -> VertexSet
    {
        return closed_neighbourhood(g, 0);
    }

    auto bipartite_side(const Graph & g) -> VertexSet
    {
        auto side = g.neighbourhood(0).complement();
        return side;
    }

    auto first_k_of(const VertexSet & s, unsigned k, const vector<Vertex> & must_include) -> VertexSet
    {
        VertexSet result(s.universe());
        for (auto v : must_include)
            result.insert(v);
        for (auto v : s.members()) {
            if (result.size() >= k)
                break;
            result.insert(v);
        }
        return result;
    }

    auto verified(const Graph & g, VertexSet witness, unsigned k, ParityTarget t) -> VertexSet
    {
        if (witness.size() != k || ! matches(t, induced_edge_count(g, witness)))
            throw ConsistencyError("constructed witness " + to_string(witness) + " does not induce a " + to_string(t) + " subgraph");
        return witness;
    }

    /**
     * A k-subset of parity t for graphs where the structural rules have
     * already answered YES. Finds a homogeneous k-set; if it does not already
     * have parity t, a parity flip is built in whichever of g or its
     * complement the set is a clique of.
     */
    auto construct_witness(const Graph & g, unsigned k, ParityTarget t) -> VertexSet
    {
        auto homogeneous = find_homogeneous_set(g, k);
        if (! homogeneous)
            throw ConsistencyError("no homogeneous " + std::to_string(k) + "-set found above the Ramsey threshold");

        auto & [set, is_clique_set] = *homogeneous;
        unsigned edges = is_clique_set ? colour_pair_width(k) : 0;
        if (matches(t, edges))
            return verified(g, set, k, t);

        if (is_clique_set) {
            auto flip = opposite_parity_near_clique(g, extend_to_maximal_clique(g, set), k);
            if (flip)
                return verified(g, *flip, k, t);
        }
        else {
            // e_G(U) = C(k,2) - e_complement(U)
            auto comp = complement(g);
            auto flip = opposite_parity_near_clique(comp, extend_to_maximal_clique(comp, set), k);
            if (flip)
                return verified(g, *flip, k, t);
        }
        throw ConsistencyError("structural rules answered YES but no witness could be constructed");
    }

    auto exhaustive(const Graph & g, unsigned k, ParityTarget t, const DecideOptions & options) -> Decision
    {
        auto hit = find_parity_subset(g, k, t, options.enumeration);
        Decision d{ hit.has_value(), std::nullopt, DecisionRule::Exhaustive };
        if (hit && options.want_witness)
            d.witness = std::move(hit);
        return d;
    }

    auto yes(const Graph & g, unsigned k, ParityTarget t, DecisionRule rule, const DecideOptions & options) -> Decision
    {
        Decision d{ true, std::nullopt, rule };
        if (options.want_witness)
            d.witness = construct_witness(g, k, t);
        return d;
    }

    auto no(DecisionRule rule) -> Decision
    {
        return Decision{ false, std::nullopt, rule };
    }

    auto below_threshold(const Graph & g, unsigned k) -> bool
    {
        auto threshold = exhaustive_threshold(k);
        return ! threshold || g.size() < *threshold;
    }
}

auto parsub::is_clique(const Graph & g) -> bool
{
    return g.edge_count() == std::uint64_t(g.size()) * (g.size() - (g.size() > 0)) / 2;
}

auto parsub::is_independent(const Graph & g) -> bool
{
    return g.edge_count() == 0;
}

auto parsub::is_two_clique_union(const Graph & g) -> bool
{
    return g.size() == 0 || ! partition_violation(g, two_clique_side(g), true);
}

auto parsub::is_complete_bipartite(const Graph & g) -> bool
{
    return g.size() == 0 || ! partition_violation(g, bipartite_side(g), false);
}

auto parsub::classify(const Graph & g) -> StructureClass
{
    if (g.size() == 0)
        throw std::invalid_argument("cannot classify the empty graph");

    if (is_clique(g))
        return structure::Clique{};
    if (is_independent(g))
        return structure::IndependentSet{};

    auto two_side = two_clique_side(g);
    auto two_violation = partition_violation(g, two_side, true);
    if (! two_violation)
        return structure::TwoCliqueUnion{ std::move(two_side) };

    auto bip_side = bipartite_side(g);
    auto bip_violation = partition_violation(g, bip_side, false);
    if (! bip_violation)
        return structure::CompleteBipartite{ std::move(bip_side) };

    return structure::Other{ *two_violation, *bip_violation };
}

auto parsub::class_name(const StructureClass & c) -> std::string
{
    switch (c.index()) {
        case 0: return "clique";
        case 1: return "independent-set";
        case 2: return "two-clique-union";
        case 3: return "complete-bipartite";
        default: return "other";
    }
}

FlipPreconditionError::FlipPreconditionError(Reason reason, const std::string & message) :
    std::invalid_argument(message),
    _reason(reason)
{
}

auto parsub::find_parity_flip(const Graph & g, const VertexSet & h, Vertex v) -> VertexSet
{
    using Reason = FlipPreconditionError::Reason;
    unsigned k = h.size();
    if (k < 3)
        throw FlipPreconditionError(Reason::CliqueTooSmall, "the clique must have at least 3 vertices");
    if (induced_edge_count(g, h) != colour_pair_width(k))
        throw FlipPreconditionError(Reason::NotAClique, to_string(h) + " does not induce a clique");
    if (v >= g.size() || h.contains(v))
        throw FlipPreconditionError(Reason::VertexInClique, "vertex " + std::to_string(v) + " must lie outside the clique");

    auto members = h.members();
    optional<Vertex> neighbour, non_neighbour;
    unsigned r = 0;
    for (auto x : members) {
        if (g.adjacent(v, x)) {
            if (! neighbour)
                neighbour = x;
        }
        else {
            ++r;
            if (! non_neighbour)
                non_neighbour = x;
        }
    }

    if (r == 0)
        throw FlipPreconditionError(Reason::VertexFullyAdjacent, "vertex " + std::to_string(v) + " is adjacent to every clique vertex");

    auto swap_out = [&] (Vertex out) {
        auto result = h;
        result.erase(out);
        result.insert(v);
        return result;
    };

    if (r == k) {
        if (k % 2 == 1)
            throw FlipPreconditionError(Reason::VertexIsolatedWithOddK,
                    "vertex " + std::to_string(v) + " has no neighbour in the clique and k is odd");
        // C(k-1, 2) = C(k, 2) - (k - 1), and k - 1 is odd
        return swap_out(members.front());
    }

    // dropping a non-neighbour loses r - 1 edges, dropping a neighbour loses r
    return (r - 1) % 2 == 1 ? swap_out(*non_neighbour) : swap_out(*neighbour);
}

namespace
{
    auto binomial_or_max(unsigned n, unsigned k) -> std::uint64_t
    {
        auto b = binomial_u64(n, k);
        return b ? *b : std::numeric_limits<std::uint64_t>::max();
    }
}

auto parsub::find_homogeneous_set(const Graph & g, unsigned k) -> optional<pair<VertexSet, bool> >
{
    if (k == 0)
        return pair{ VertexSet(g.size()), true };
    if (k > g.size())
        return std::nullopt;

    VertexSet clique_part(g.size()), independent_part(g.size());
    vector<Vertex> candidates(g.size());
    for (Vertex v = 0 ; v < g.size() ; ++v)
        candidates[v] = v;

    // s more clique vertices or t more independent vertices wanted; a
    // candidate pool of size C(s+t-2, s-1) always suffices
    unsigned s = k, t = k;
    while (s > 0 && t > 0) {
        if (candidates.empty())
            return std::nullopt;
        if (s == 1) {
            clique_part.insert(candidates.front());
            --s;
            break;
        }
        if (t == 1) {
            independent_part.insert(candidates.front());
            --t;
            break;
        }

        Vertex v = candidates.front();
        vector<Vertex> in, out;
        for (unsigned i = 1 ; i < candidates.size() ; ++i)
            (g.adjacent(v, candidates[i]) ? in : out).push_back(candidates[i]);

        auto need_in = binomial_or_max(s + t - 3, s - 2), need_out = binomial_or_max(s + t - 3, s - 1);
        bool go_in;
        if (in.size() >= need_in)
            go_in = true;
        else if (out.size() >= need_out)
            go_in = false;
        else
            go_in = double(in.size()) / double(need_in) >= double(out.size()) / double(need_out);

        if (go_in) {
            clique_part.insert(v);
            --s;
            candidates = std::move(in);
        }
        else {
            independent_part.insert(v);
            --t;
            candidates = std::move(out);
        }
    }

    if (s == 0)
        return pair{ std::move(clique_part), true };
    return pair{ std::move(independent_part), false };
}

auto parsub::extend_to_maximal_clique(const Graph & g, const VertexSet & clique) -> VertexSet
{
    auto result = clique;
    auto members = clique.members();
    for (Vertex v = 0 ; v < g.size() ; ++v) {
        if (result.contains(v))
            continue;
        bool all = true;
        for (auto m : members)
            if (! g.adjacent(v, m)) {
                all = false;
                break;
            }
        if (all) {
            result.insert(v);
            members.push_back(v);
        }
    }
    return result;
}

auto parsub::opposite_parity_near_clique(const Graph & g, const VertexSet & clique, unsigned k) -> optional<VertexSet>
{
    if (k < 2 || clique.size() < k)
        return std::nullopt;

    auto maximal = extend_to_maximal_clique(g, clique);
    if (maximal.size() == g.size())
        return std::nullopt;

    auto outside = maximal.complement().members();
    auto non_neighbour_in_clique = [&] (Vertex v) {
        for (auto m : maximal.members())
            if (! g.adjacent(v, m))
                return m;
        throw ConsistencyError("clique is not maximal");
    };

    if (k == 2) {
        Vertex v = outside.front();
        return VertexSet(g.size(), { v, non_neighbour_in_clique(v) });
    }

    if (k % 2 == 0) {
        Vertex v = outside.front();
        auto h = first_k_of(maximal, k, { non_neighbour_in_clique(v) });
        return find_parity_flip(g, h, v);
    }

    for (auto v : outside)
        for (auto w : maximal.members())
            if (g.adjacent(v, w)) {
                auto h = first_k_of(maximal, k, { non_neighbour_in_clique(v), w });
                return find_parity_flip(g, h, v);
            }

    // every outside vertex misses the clique entirely; a non-adjacent outside
    // pair plus k-2 clique vertices gives C(k,2) - (2k-3) edges
    for (unsigned i = 0 ; i < outside.size() ; ++i)
        for (unsigned j = i + 1 ; j < outside.size() ; ++j)
            if (! g.adjacent(outside[i], outside[j])) {
                auto result = first_k_of(maximal, k - 2, {});
                result.insert(outside[i]);
                result.insert(outside[j]);
                return result;
            }

    return std::nullopt;
}

auto parsub::exhaustive_threshold(unsigned k) -> optional<std::uint64_t>
{
    if (2 * k >= 64)
        return std::nullopt;
    return std::uint64_t(1) << (2 * k);
}

auto parsub::to_string(DecisionRule r) -> std::string
{
    switch (r) {
        case DecisionRule::KExceedsN: return "k-exceeds-n";
        case DecisionRule::KIsOne: return "k-is-one";
        case DecisionRule::StructuralFastPath: return "structural-fast-path";
        case DecisionRule::Exhaustive: return "exhaustive-search";
        case DecisionRule::RamseyParity: return "ramsey-homogeneous-set";
        case DecisionRule::CliqueNo: return "clique";
        case DecisionRule::KTwoModFour: return "k-2-mod-4";
        case DecisionRule::TwoCliquesNo: return "two-cliques";
        case DecisionRule::IndependentNo: return "independent-set";
        case DecisionRule::BipartiteNo: return "complete-bipartite";
        case DecisionRule::Remaining: return "remaining";
    }
    return "?";
}

auto parsub::decide_even(const Graph & g, unsigned k, const DecideOptions & options) -> Decision
{
    constexpr auto target = ParityTarget::Even;
    if (k == 0)
        throw std::invalid_argument("k must be at least 1");
    if (k > g.size())
        return no(DecisionRule::KExceedsN);
    if (k == 1) {
        Decision d{ true, std::nullopt, DecisionRule::KIsOne };
        if (options.want_witness)
            d.witness = VertexSet(g.size(), { 0 });
        return d;
    }

    if (below_threshold(g, k)) {
        // sufficient conditions for NO, valid for every n >= k: a clique has
        // C(k,2) edges on every k-set, and two cliques with k odd give
        // C(k,2) - i(k-i) with i(k-i) even
        if (pairs_mod_two(k) == 1 && (is_clique(g) || (k % 4 == 3 && is_two_clique_union(g))))
            return no(DecisionRule::StructuralFastPath);
        return exhaustive(g, k, target, options);
    }

    if (k % 4 == 0 || k % 4 == 1)
        return yes(g, k, target, DecisionRule::RamseyParity, options);
    if (is_clique(g))
        return no(DecisionRule::CliqueNo);
    if (k % 4 == 2)
        return yes(g, k, target, DecisionRule::KTwoModFour, options);
    if (is_two_clique_union(g))
        return no(DecisionRule::TwoCliquesNo);
    return yes(g, k, target, DecisionRule::Remaining, options);
}

auto parsub::decide_odd(const Graph & g, unsigned k, const DecideOptions & options) -> Decision
{
    constexpr auto target = ParityTarget::Odd;
    if (k == 0)
        throw std::invalid_argument("k must be at least 1");
    if (k > g.size())
        return no(DecisionRule::KExceedsN);
    if (k == 1)
        return no(DecisionRule::KIsOne);

    if (below_threshold(g, k)) {
        bool structural_no = is_independent(g)
            || (k % 2 == 1 && is_complete_bipartite(g))
            || (pairs_mod_two(k) == 0 && is_clique(g))
            || (k % 4 == 1 && is_two_clique_union(g));
        if (structural_no)
            return no(DecisionRule::StructuralFastPath);
        return exhaustive(g, k, target, options);
    }

    if (is_independent(g))
        return no(DecisionRule::IndependentNo);
    if (k % 2 == 1 && is_complete_bipartite(g))
        return no(DecisionRule::BipartiteNo);
    if ((k % 4 == 0 || k % 4 == 1) && is_clique(g))
        return no(DecisionRule::CliqueNo);
    if (k % 4 == 1 && is_two_clique_union(g))
        return no(DecisionRule::TwoCliquesNo);
    return yes(g, k, target, DecisionRule::Remaining, options);
}

auto parsub::decide(const Graph & g, unsigned k, ParityTarget t, const DecideOptions & options) -> Decision
{
    return t == ParityTarget::Even ? decide_even(g, k, options) : decide_odd(g, k, options);
}
