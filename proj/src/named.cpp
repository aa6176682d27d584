#include "hlab/named.hpp"

#include "hlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace hlab {

auto complete_graph(int k) -> RUniformGraph
{
    return RUniformGraph::complete(k, 2);
}

auto cycle_graph(int k) -> RUniformGraph
{
    if (k < 3)
        throw ParameterError("cycle needs at least 3 vertices");
    RUniformGraph g(k, 2);
    for (int i = 0; i < k; ++i) {
        Subset e{i, (i + 1) % k};
        std::sort(e.begin(), e.end());
        g.set_edge(e);
    }
    return g;
}

auto path_graph(int k) -> RUniformGraph
{
    if (k < 1)
        throw ParameterError("path needs at least 1 vertex");
    RUniformGraph g(k, 2);
    for (int i = 0; i + 1 < k; ++i)
        g.set_edge(Subset{i, i + 1});
    return g;
}

auto empty_graph(int k) -> RUniformGraph
{
    return RUniformGraph(k, 2);
}

auto named_graph(std::string_view name) -> RUniformGraph
{
    if (name.size() < 2 || !std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("unknown graph name '" + std::string(name) + "'");
    const int k = std::stoi(std::string(name.substr(1)));
    switch (name[0]) {
    case 'K':
        return complete_graph(k);
    case 'C':
        return cycle_graph(k);
    case 'P':
        return path_graph(k);
    case 'E':
        return empty_graph(k);
    default:
        throw ParseError("unknown graph name '" + std::string(name) + "'");
    }
}

} // namespace hlab
