#include "hlab/codec.hpp"

#include "hlab/errors.hpp"

#include <algorithm>

namespace hlab {

namespace {

auto trim(std::string_view s) -> std::string_view
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
        s.remove_prefix(1);
    return s;
}

auto parse_json(std::string_view text) -> nlohmann::json
{
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

} // namespace

auto to_graph6(const RUniformGraph& g) -> std::string
{
    if (g.uniformity() != 2)
        throw ParameterError("graph6 encodes 2-graphs only");
    const int n = g.order();
    if (n > 62)
        throw ParameterError("graph6 short form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    const std::uint64_t bits = g.slots();
    for (std::uint64_t start = 0; start < bits; start += 6) {
        int chunk = 0;
        for (std::uint64_t b = start; b < start + 6; ++b) {
            chunk <<= 1;
            if (b < bits && g.has_edge(b))
                chunk |= 1;
        }
        out.push_back(static_cast<char>(63 + chunk));
    }
    return out;
}

auto from_graph6(std::string_view text) -> RUniformGraph
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty graph6 string", 0);
    const int size_byte = static_cast<unsigned char>(text[0]);
    if (size_byte == 126)
        throw ParseError("graph6 long size form (n > 62) is not supported", 0);
    if (size_byte < 63 || size_byte > 125)
        throw ParseError("invalid graph6 size byte", 0);
    const int n = size_byte - 63;
    RUniformGraph g(n, 2);
    const std::uint64_t bits = g.slots();
    const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match n=" + std::to_string(n),
                         std::min(text.size(), expected));
    for (std::size_t i = 1; i < text.size(); ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 data byte", i);
        const int chunk = c - 63;
        for (int b = 0; b < 6; ++b) {
            const std::uint64_t pos = (i - 1) * 6 + static_cast<std::uint64_t>(b);
            const bool set = (chunk >> (5 - b)) & 1;
            if (pos >= bits) {
                if (set)
                    throw ParseError("nonzero graph6 padding bits", i);
                continue;
            }
            if (set)
                g.set_edge(pos);
        }
    }
    return g;
}

auto graph_to_json(const RUniformGraph& g) -> nlohmann::json
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges())
        edges.push_back(e);
    return nlohmann::json{{"n", g.order()}, {"r", g.uniformity()}, {"edges", std::move(edges)}};
}

auto graph_from_json(const nlohmann::json& j) -> RUniformGraph
{
    if (!j.is_object())
        throw ParseError("graph JSON must be an object");
    for (const char* key : {"n", "r", "edges"})
        if (!j.contains(key))
            throw ParseError(std::string("graph JSON is missing \"") + key + "\"");
    if (!j["n"].is_number_integer() || !j["r"].is_number_integer() || !j["edges"].is_array())
        throw ParseError("graph JSON has fields of the wrong type");
    const int n = j["n"].get<int>();
    const int r = j["r"].get<int>();
    if (n < 0 || r < 1)
        throw ParseError("graph JSON needs n >= 0 and r >= 1");
    RUniformGraph g(n, r);
    for (const auto& e : j["edges"]) {
        if (!e.is_array())
            throw ParseError("edge must be an array of vertices");
        Subset s;
        for (const auto& v : e) {
            if (!v.is_number_integer())
                throw ParseError("edge vertex must be an integer");
            s.push_back(v.get<int>());
        }
        std::sort(s.begin(), s.end());
        try {
            g.set_edge(s);
        } catch (const Error& err) {
            throw ParseError(std::string("invalid edge: ") + err.what());
        }
    }
    return g;
}

auto to_json_text(const RUniformGraph& g) -> std::string
{
    return graph_to_json(g).dump();
}

auto from_json_text(std::string_view text) -> RUniformGraph
{
    return graph_from_json(parse_json(text));
}

auto parse_graph(std::string_view text) -> RUniformGraph
{
    const auto t = trim(text);
    if (!t.empty() && t.front() == '{')
        return from_json_text(t);
    return from_graph6(t);
}

auto parse_graph_list(std::string_view text) -> std::vector<RUniformGraph>
{
    const auto t = trim(text);
    std::vector<RUniformGraph> out;
    if (t.empty())
        return out;
    if (t.front() == '{') {
        out.push_back(from_json_text(t));
        return out;
    }
    if (t.front() == '[') {
        const auto j = parse_json(t);
        for (const auto& item : j) {
            if (item.is_string())
                out.push_back(from_graph6(item.get<std::string>()));
            else
                out.push_back(graph_from_json(item));
        }
        return out;
    }
    std::size_t line_start = 0;
    while (line_start < t.size()) {
        auto line_end = t.find('\n', line_start);
        if (line_end == std::string_view::npos)
            line_end = t.size();
        const auto line = trim(t.substr(line_start, line_end - line_start));
        if (!line.empty()) {
            try {
                out.push_back(from_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(e.detail(), line_start + e.offset().value_or(0));
            }
        }
        line_start = line_end + 1;
    }
    return out;
}

} // namespace hlab
