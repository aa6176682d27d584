#include "hlab/predicate.hpp"

#include "hlab/codec.hpp"
#include "hlab/errors.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace hlab {

auto EdgePredicate::forb(ForbiddenFamily fam) -> EdgePredicate
{
    EdgePredicate p;
    p.kind_ = Kind::Forb;
    p.family_ = std::make_shared<const ForbiddenFamily>(std::move(fam));
    return p;
}

auto EdgePredicate::contains(ForbiddenFamily fam) -> EdgePredicate
{
    EdgePredicate p = forb(std::move(fam));
    p.kind_ = Kind::Contains;
    return p;
}

auto EdgePredicate::contains_on(ForbiddenFamily fam, Subset vertices) -> EdgePredicate
{
    EdgePredicate p = forb(std::move(fam));
    p.kind_ = Kind::ContainsOn;
    p.vertices_ = std::move(vertices);
    return p;
}

auto EdgePredicate::min_edges(std::uint64_t k) -> EdgePredicate
{
    EdgePredicate p;
    p.kind_ = Kind::MinEdges;
    p.threshold_ = k;
    return p;
}

auto EdgePredicate::max_edges(std::uint64_t k) -> EdgePredicate
{
    EdgePredicate p;
    p.kind_ = Kind::MaxEdges;
    p.threshold_ = k;
    return p;
}

auto EdgePredicate::explicit_set(std::vector<RUniformGraph> graphs) -> EdgePredicate
{
    EdgePredicate p;
    p.kind_ = Kind::Explicit;
    p.graphs_ = std::move(graphs);
    return p;
}

auto EdgePredicate::intersection(std::vector<EdgePredicate> children) -> EdgePredicate
{
    EdgePredicate p;
    p.kind_ = Kind::Intersection;
    p.children_ = std::move(children);
    return p;
}

auto EdgePredicate::complement(EdgePredicate inner) -> EdgePredicate
{
    EdgePredicate p;
    p.kind_ = Kind::Complement;
    p.children_.push_back(std::move(inner));
    return p;
}

auto EdgePredicate::implied_uniformity() const -> int
{
    switch (kind_) {
    case Kind::Forb:
    case Kind::Contains:
    case Kind::ContainsOn:
        return family_->uniformity();
    case Kind::Explicit:
        return graphs_.empty() ? 0 : graphs_.front().uniformity();
    case Kind::Intersection:
    case Kind::Complement:
        for (const auto& c : children_)
            if (const int r = c.implied_uniformity(); r != 0)
                return r;
        return 0;
    default:
        return 0;
    }
}

auto family_to_json(const ForbiddenFamily& fam) -> nlohmann::json
{
    auto out = nlohmann::json::array();
    for (const auto& g : fam.members())
        out.push_back(graph_to_json(g));
    return out;
}

auto family_from_json(const nlohmann::json& j) -> ForbiddenFamily
{
    std::vector<RUniformGraph> graphs;
    if (j.is_object()) {
        graphs.push_back(graph_from_json(j));
    } else if (j.is_array()) {
        for (const auto& item : j)
            graphs.push_back(item.is_string() ? from_graph6(item.get<std::string>()) : graph_from_json(item));
    } else if (j.is_string()) {
        graphs = parse_graph_list(j.get<std::string>());
    } else {
        throw ParseError("family must be a graph, an array of graphs or graph6 text");
    }
    return normalize_family(std::move(graphs));
}

auto predicate_to_json(const EdgePredicate& pred) -> nlohmann::json
{
    using Kind = EdgePredicate::Kind;
    switch (pred.kind()) {
    case Kind::Forb:
        return {{"kind", "forb"}, {"family", family_to_json(pred.family())}};
    case Kind::Contains:
        return {{"kind", "contains"}, {"family", family_to_json(pred.family())}};
    case Kind::ContainsOn:
        return {{"kind", "contains_on"}, {"family", family_to_json(pred.family())}, {"vertices", pred.vertices()}};
    case Kind::MinEdges:
        return {{"kind", "min_edges"}, {"k", pred.threshold()}};
    case Kind::MaxEdges:
        return {{"kind", "max_edges"}, {"k", pred.threshold()}};
    case Kind::Explicit: {
        auto graphs = nlohmann::json::array();
        for (const auto& g : pred.graphs())
            graphs.push_back(graph_to_json(g));
        return {{"kind", "explicit"}, {"graphs", std::move(graphs)}};
    }
    case Kind::Intersection: {
        auto of = nlohmann::json::array();
        for (const auto& c : pred.children())
            of.push_back(predicate_to_json(c));
        return {{"kind", "intersection"}, {"of", std::move(of)}};
    }
    case Kind::Complement:
        return {{"kind", "complement"}, {"of", predicate_to_json(pred.children().front())}};
    }
    return {};
}

auto predicate_from_json(const nlohmann::json& j) -> EdgePredicate
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("predicate must be an object with a string \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key))
            throw ParseError("predicate '" + kind + "' is missing \"" + key + "\"");
        return j[key];
    };
    auto count_field = [&](const char* key) -> std::uint64_t {
        const auto& v = need(key);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw ParseError("predicate field \"" + std::string(key) + "\" must be a nonnegative integer");
        return v.get<std::uint64_t>();
    };
    if (kind == "forb")
        return EdgePredicate::forb(family_from_json(need("family")));
    if (kind == "contains")
        return EdgePredicate::contains(family_from_json(need("family")));
    if (kind == "contains_on")
        return EdgePredicate::contains_on(family_from_json(need("family")), need("vertices").get<Subset>());
    if (kind == "min_edges")
        return EdgePredicate::min_edges(count_field("k"));
    if (kind == "max_edges")
        return EdgePredicate::max_edges(count_field("k"));
    if (kind == "true")
        return EdgePredicate::always_true();
    if (kind == "explicit") {
        std::vector<RUniformGraph> graphs;
        for (const auto& g : need("graphs"))
            graphs.push_back(g.is_string() ? from_graph6(g.get<std::string>()) : graph_from_json(g));
        return EdgePredicate::explicit_set(std::move(graphs));
    }
    if (kind == "intersection") {
        std::vector<EdgePredicate> children;
        for (const auto& c : need("of"))
            children.push_back(predicate_from_json(c));
        return EdgePredicate::intersection(std::move(children));
    }
    if (kind == "complement")
        return EdgePredicate::complement(predicate_from_json(need("of")));
    throw ParseError("unknown predicate kind '" + kind + "'");
}

struct CompiledPredicate::Node {
    EdgePredicate::Kind kind{};
    std::uint64_t threshold = 0;
    std::unique_ptr<FamilyMatcher> matcher;
    std::unordered_set<std::uint64_t> single_word;
    std::set<std::vector<std::uint64_t>> multi_word;
    std::vector<Node> children;

    auto eval(std::span<const std::uint64_t> mask, std::uint64_t edges) const -> bool
    {
        using Kind = EdgePredicate::Kind;
        switch (kind) {
        case Kind::Forb:
            return !matcher->contains(mask);
        case Kind::Contains:
        case Kind::ContainsOn:
            return matcher->contains(mask);
        case Kind::MinEdges:
            return edges >= threshold;
        case Kind::MaxEdges:
            return edges <= threshold;
        case Kind::Explicit:
            if (mask.size() <= 1)
                return single_word.count(mask.empty() ? 0 : mask[0]) != 0;
            return multi_word.count(std::vector<std::uint64_t>(mask.begin(), mask.end())) != 0;
        case Kind::Intersection:
            return std::all_of(children.begin(), children.end(),
                               [&](const Node& c) { return c.eval(mask, edges); });
        case Kind::Complement:
            return !children.front().eval(mask, edges);
        }
        return false;
    }
};

namespace {

auto compile_node(const EdgePredicate& pred, int n, int r) -> CompiledPredicate::Node;

} // namespace

CompiledPredicate::CompiledPredicate(const EdgePredicate& pred, int n, int r) : n_(n), r_(r)
{
    if (const int pr = pred.implied_uniformity(); pr != 0 && pr != r)
        throw ParameterError("predicate uniformity " + std::to_string(pr) + " differs from r=" + std::to_string(r));
    root_ = std::make_unique<Node>(compile_node(pred, n, r));
}

CompiledPredicate::~CompiledPredicate() = default;
CompiledPredicate::CompiledPredicate(CompiledPredicate&&) noexcept = default;
auto CompiledPredicate::operator=(CompiledPredicate&&) noexcept -> CompiledPredicate& = default;

auto CompiledPredicate::operator()(std::span<const std::uint64_t> mask, std::uint64_t edges) const -> bool
{
    return root_->eval(mask, edges);
}

auto CompiledPredicate::operator()(const RUniformGraph& g) const -> bool
{
    if (g.order() != n_ || g.uniformity() != r_)
        throw ParameterError("graph shape differs from the compiled predicate");
    return root_->eval(g.words(), g.edge_count());
}

namespace {

auto compile_node(const EdgePredicate& pred, int n, int r) -> CompiledPredicate::Node
{
    using Kind = EdgePredicate::Kind;
    CompiledPredicate::Node node;
    node.kind = pred.kind();
    switch (pred.kind()) {
    case Kind::Forb:
    case Kind::Contains:
        if (pred.family().uniformity() != r)
            throw ParameterError("family uniformity differs from r");
        node.matcher = std::make_unique<FamilyMatcher>(pred.family(), n);
        break;
    case Kind::ContainsOn: {
        if (pred.family().uniformity() != r)
            throw ParameterError("family uniformity differs from r");
        auto vertices = pred.vertices();
        std::sort(vertices.begin(), vertices.end());
        if (vertices.empty())
            throw ParameterError("contains_on needs a nonempty vertex subset");
        node.matcher = std::make_unique<FamilyMatcher>(pred.family(), n, std::move(vertices));
        break;
    }
    case Kind::MinEdges:
    case Kind::MaxEdges:
        node.threshold = pred.threshold();
        break;
    case Kind::Explicit:
        for (const auto& g : pred.graphs()) {
            if (g.order() != n || g.uniformity() != r)
                throw ParameterError("explicit graph has shape (" + std::to_string(g.order()) + "," +
                                     std::to_string(g.uniformity()) + "), expected (" + std::to_string(n) + "," +
                                     std::to_string(r) + ")");
            const auto w = g.words();
            if (w.size() <= 1)
                node.single_word.insert(w.empty() ? 0 : w[0]);
            else
                node.multi_word.emplace(w.begin(), w.end());
        }
        break;
    case Kind::Intersection:
    case Kind::Complement:
        if (pred.kind() == Kind::Complement && pred.children().size() != 1)
            throw ParameterError("complement needs exactly one child");
        for (const auto& c : pred.children())
            node.children.push_back(compile_node(c, n, r));
        break;
    }
    return node;
}

} // namespace

} // namespace hlab
