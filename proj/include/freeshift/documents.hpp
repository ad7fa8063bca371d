#pragma once

#include "freeshift/actions.hpp"
#include "freeshift/measured.hpp"
#include "freeshift/patterns.hpp"
#include "freeshift/rauzy.hpp"
#include "freeshift/selectors.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace freeshift {

using Json = nlohmann::ordered_json;

/// A well-formed JSON value that does not have the expected shape. The location
/// is a JSON pointer such as "/edges/3/label".
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string location, const std::string& message);
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

/// rank, vertices, edges {source, range, label, bar} and optional mu / m.
struct GraphDocument {
    RawGraph raw;
    std::optional<std::vector<Rational>> mu;
    std::optional<std::vector<Rational>> m;

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument parse_graph_document(const Json& j);
Json graph_json(const RawGraph& raw);
Json graph_json(const MeasuredRauzyGraph& g);
/// Requires both weight tables; throws DocumentError otherwise, InvalidGraph on a bad graph.
MeasuredRauzyGraph measured_graph(const GraphDocument& doc);

struct SelectorDocument {
    EdgeSelector selector;
    std::optional<Cycle> cycle;

    friend bool operator==(const SelectorDocument&, const SelectorDocument&) = default;
};
Json selector_json(const EdgeSelector& t, const std::optional<Cycle>& cycle = std::nullopt);
SelectorDocument parse_selector_document(const Json& j);

Json sft_json(const Sft& x);
Sft parse_sft_document(const Json& j);

Json action_json(const FiniteAction& act);
FiniteAction parse_action_document(const Json& j);

struct WindowDocument {
    int rank = 1;
    Alphabet alphabet;
    WindowConfig config;
};
/// Values keyed by word, in domain order.
Json window_json(int rank, const Alphabet& alphabet, const WindowConfig& c);
WindowDocument parse_window_document(const Json& j);

/// Word → symbol-name object.
Json pattern_json(const Pattern& p, const Alphabet& alphabet);
Pattern parse_pattern(const Json& j, const Alphabet& alphabet, const std::string& location = "");

/// Positive edges only; the bar of each edge is implied.
std::string graph_dot(const RauzyGraph& g);
std::string action_dot(const FiniteAction& act);

} // namespace freeshift
