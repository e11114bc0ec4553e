#include <parsub/graph.hh>
#include <parsub/errors.hh>

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace parsub;

using std::string;
using std::string_view;
using std::vector;

VertexSet::VertexSet(unsigned universe) :
    _universe(universe),
    _words(words_for(universe), 0)
{
}

VertexSet::VertexSet(unsigned universe, std::initializer_list<Vertex> members) :
    VertexSet(universe)
{
    for (auto v : members)
        insert(v);
}

auto VertexSet::from_members(unsigned universe, std::span<const Vertex> members) -> VertexSet
{
    VertexSet result(universe);
    for (auto v : members)
        result.insert(v);
    return result;
}

auto VertexSet::insert(Vertex v) -> void
{
    if (v >= _universe)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(_universe));
    auto & w = _words[v / 64];
    std::uint64_t bit = std::uint64_t(1) << (v % 64);
    if (! (w & bit)) {
        w |= bit;
        ++_size;
    }
}

auto VertexSet::erase(Vertex v) -> void
{
    if (v >= _universe)
        return;
    auto & w = _words[v / 64];
    std::uint64_t bit = std::uint64_t(1) << (v % 64);
    if (w & bit) {
        w &= ~bit;
        --_size;
    }
}

auto VertexSet::members() const -> vector<Vertex>
{
    vector<Vertex> result;
    result.reserve(_size);
    for (unsigned i = 0 ; i < _words.size() ; ++i) {
        auto w = _words[i];
        while (w) {
            result.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return result;
}

auto VertexSet::first() const -> Vertex
{
    for (unsigned i = 0 ; i < _words.size() ; ++i)
        if (_words[i])
            return i * 64 + std::countr_zero(_words[i]);
    return _universe;
}

auto VertexSet::intersection_size(const VertexSet & other) const -> unsigned
{
    unsigned result = 0;
    auto n = std::min(_words.size(), other._words.size());
    for (std::size_t i = 0 ; i < n ; ++i)
        result += std::popcount(_words[i] & other._words[i]);
    return result;
}

auto VertexSet::complement() const -> VertexSet
{
    VertexSet result(_universe);
    for (Vertex v = 0 ; v < _universe ; ++v)
        if (! contains(v))
            result.insert(v);
    return result;
}

auto parsub::to_string(const VertexSet & s) -> string
{
    string result = "{";
    bool first = true;
    for (auto v : s.members()) {
        if (! first)
            result += ",";
        first = false;
        result += std::to_string(v);
    }
    return result + "}";
}

Graph::Graph(unsigned size) :
    _size(size),
    _words_per_row(words_for(size)),
    _adjacency(std::size_t(size) * _words_per_row, 0)
{
}

auto Graph::flip(Vertex u, Vertex v) -> void
{
    _adjacency[std::size_t(u) * _words_per_row + v / 64] ^= std::uint64_t(1) << (v % 64);
    _adjacency[std::size_t(v) * _words_per_row + u / 64] ^= std::uint64_t(1) << (u % 64);
}

auto Graph::degree(Vertex v) const -> unsigned
{
    unsigned result = 0;
    for (auto w : row(v))
        result += std::popcount(w);
    return result;
}

auto Graph::neighbourhood(Vertex v) const -> VertexSet
{
    VertexSet result(_size);
    for (Vertex w = 0 ; w < _size ; ++w)
        if (adjacent(v, w))
            result.insert(w);
    return result;
}

auto Graph::add_edge(Vertex u, Vertex v) -> void
{
    if (u >= _size || v >= _size)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    if (! adjacent(u, v)) {
        flip(u, v);
        ++_edges;
    }
}

auto Graph::remove_edge(Vertex u, Vertex v) -> void
{
    if (u >= _size || v >= _size || u == v)
        return;
    if (adjacent(u, v)) {
        flip(u, v);
        --_edges;
    }
}

auto Graph::toggle_edge(Vertex u, Vertex v) -> void
{
    if (adjacent(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

auto Graph::edges() const -> vector<std::pair<Vertex, Vertex> >
{
    vector<std::pair<Vertex, Vertex> > result;
    result.reserve(_edges);
    for (Vertex u = 0 ; u < _size ; ++u)
        for (Vertex v = u + 1 ; v < _size ; ++v)
            if (adjacent(u, v))
                result.emplace_back(u, v);
    return result;
}

auto parsub::complement(const Graph & g) -> Graph
{
    Graph result(g.size());
    for (Vertex u = 0 ; u < g.size() ; ++u)
        for (Vertex v = u + 1 ; v < g.size() ; ++v)
            if (! g.adjacent(u, v))
                result.add_edge(u, v);
    return result;
}

auto parsub::induced_edge_count(const Graph & g, const VertexSet & u) -> unsigned
{
    auto mask = u.words();
    unsigned twice = 0;
    for (auto v : u.members()) {
        auto r = g.row(v);
        for (unsigned i = 0 ; i < r.size() ; ++i)
            twice += std::popcount(r[i] & mask[i]);
    }
    return twice / 2;
}

auto parsub::induced_subgraph(const Graph & g, std::span<const Vertex> u) -> Graph
{
    Graph result(u.size());
    for (unsigned i = 0 ; i < u.size() ; ++i)
        for (unsigned j = i + 1 ; j < u.size() ; ++j)
            if (g.adjacent(u[i], u[j]))
                result.add_edge(i, j);
    return result;
}

Colouring::Colouring(unsigned k, vector<unsigned> colour_of) :
    _colours(k),
    _colour_of(std::move(colour_of))
{
    if (0 == k)
        throw std::invalid_argument("a colouring needs at least one colour");
    for (auto c : _colour_of)
        if (c < 1 || c > k)
            throw std::invalid_argument("colour " + std::to_string(c) + " outside [1, " + std::to_string(k) + "]");
}

auto Colouring::classes() const -> vector<vector<Vertex> >
{
    vector<vector<Vertex> > result(_colours);
    for (Vertex v = 0 ; v < _colour_of.size() ; ++v)
        result[_colour_of[v] - 1].push_back(v);
    return result;
}

auto parsub::to_string(ParityTarget t) -> string
{
    return t == ParityTarget::Even ? "even" : "odd";
}

auto parsub::parse_parity(string_view s) -> ParityTarget
{
    if (s == "even")
        return ParityTarget::Even;
    if (s == "odd")
        return ParityTarget::Odd;
    throw std::invalid_argument("parity must be 'even' or 'odd', not '" + string(s) + "'");
}

namespace
{
    auto split_lines(string_view text) -> vector<string_view>
    {
        vector<string_view> lines;
        while (! text.empty()) {
            auto nl = text.find('\n');
            if (nl == string_view::npos) {
                lines.push_back(text);
                break;
            }
            lines.push_back(text.substr(0, nl));
            text.remove_prefix(nl + 1);
        }
        // tolerate trailing blank lines, nothing else
        while (! lines.empty() && lines.back().empty())
            lines.pop_back();
        return lines;
    }

    auto parse_number(string_view token, unsigned line, const char * what) -> unsigned long long
    {
        unsigned long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw InputError(string("malformed ") + what + " '" + string(token) + "'", line);
        return value;
    }

    auto parse_pair(string_view line_text, unsigned line, const char * what) -> std::pair<unsigned long long, unsigned long long>
    {
        auto space = line_text.find(' ');
        if (space == string_view::npos)
            throw InputError(string("expected two integers separated by a space in ") + what, line);
        return { parse_number(line_text.substr(0, space), line, what),
                 parse_number(line_text.substr(space + 1), line, what) };
    }

    auto slurp(const string & filename) -> string
    {
        std::ifstream in(filename, std::ios::binary);
        if (! in)
            throw InputError("cannot open '" + filename + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
}

auto parsub::parse_graph(string_view text) -> Graph
{
    auto lines = split_lines(text);
    if (lines.empty())
        throw InputError("empty graph document", 1);

    auto [n, m] = parse_pair(lines[0], 1, "header");
    if (n > (1ull << 24))
        throw InputError("vertex count too large", 1);
    if (lines.size() - 1 != m)
        throw InputError("header declares " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) + " edge lines follow",
                lines.size() - 1 < m ? unsigned(lines.size() + 1) : unsigned(m + 2));

    Graph g(n);
    for (unsigned i = 1 ; i < lines.size() ; ++i) {
        auto [u, v] = parse_pair(lines[i], i + 1, "edge");
        if (u >= n || v >= n)
            throw InputError("vertex out of range [0, " + std::to_string(n) + ")", i + 1);
        if (u == v)
            throw InputError("loop at vertex " + std::to_string(u), i + 1);
        if (g.adjacent(u, v))
            throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), i + 1);
        g.add_edge(u, v);
    }
    return g;
}

auto parsub::read_graph_file(const string & filename) -> Graph
{
    return parse_graph(slurp(filename));
}

auto parsub::write_graph(std::ostream & out, const Graph & g) -> void
{
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto parsub::parse_colouring(string_view text, unsigned k, unsigned n) -> Colouring
{
    if (0 == k)
        throw InputError("colour count must be at least 1");
    auto lines = split_lines(text);
    if (lines.size() != n)
        throw InputError("expected " + std::to_string(n) + " colour lines, found " + std::to_string(lines.size()));

    vector<unsigned> colours;
    colours.reserve(n);
    for (unsigned i = 0 ; i < lines.size() ; ++i) {
        auto c = parse_number(lines[i], i + 1, "colour");
        if (c < 1 || c > k)
            throw InputError("colour " + std::to_string(c) + " outside [1, " + std::to_string(k) + "]", i + 1);
        colours.push_back(c);
    }
    return Colouring(k, std::move(colours));
}

auto parsub::read_colouring_file(const string & filename, unsigned k, unsigned n) -> Colouring
{
    return parse_colouring(slurp(filename), k, n);
}

namespace
{
    template <typename... Ts_>
    struct Overloaded : Ts_... { using Ts_::operator()...; };
    template <typename... Ts_>
    Overloaded(Ts_...) -> Overloaded<Ts_...>;
}

auto parsub::generate(const GraphSpec & spec) -> Graph
{
    using namespace generators;
    return std::visit(Overloaded{
            [] (const Clique & s) {
                Graph g(s.n);
                for (Vertex u = 0 ; u < s.n ; ++u)
                    for (Vertex v = u + 1 ; v < s.n ; ++v)
                        g.add_edge(u, v);
                return g;
            },
            [] (const Independent & s) {
                return Graph(s.n);
            },
            [] (const TwoCliques & s) {
                Graph g(s.a + s.b);
                for (Vertex u = 0 ; u < s.a + s.b ; ++u)
                    for (Vertex v = u + 1 ; v < s.a + s.b ; ++v)
                        if ((u < s.a) == (v < s.a))
                            g.add_edge(u, v);
                return g;
            },
            [] (const CompleteBipartite & s) {
                Graph g(s.a + s.b);
                for (Vertex u = 0 ; u < s.a ; ++u)
                    for (Vertex v = s.a ; v < s.a + s.b ; ++v)
                        g.add_edge(u, v);
                return g;
            },
            [] (const Gnp & s) {
                if (! (s.p >= 0.0 && s.p <= 1.0))
                    throw std::invalid_argument("edge probability must lie in [0, 1]");
                Graph g(s.n);
                // top 53 bits of mt19937_64 as a uniform double; the engine's
                // output sequence is fixed by the standard, so this is portable
                std::mt19937_64 rng(s.seed);
                for (Vertex u = 0 ; u < s.n ; ++u)
                    for (Vertex v = u + 1 ; v < s.n ; ++v) {
                        double x = double(rng() >> 11) * 0x1.0p-53;
                        if (x < s.p)
                            g.add_edge(u, v);
                    }
                return g;
            },
            [] (const Cycle & s) {
                Graph g(s.n);
                if (s.n >= 3)
                    for (Vertex v = 0 ; v < s.n ; ++v)
                        g.add_edge(v, (v + 1) % s.n);
                return g;
            },
            [] (const Path & s) {
                Graph g(s.n);
                for (Vertex v = 0 ; v + 1 < s.n ; ++v)
                    g.add_edge(v, v + 1);
                return g;
            }
        }, spec);
}
