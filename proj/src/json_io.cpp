#include "agile/json_io.hpp"

#include <fstream>

#include "agile/graph6.hpp"

namespace agile {

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON edge is not a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

json vertex_set_to_json(const VertexSet& s) {
    return json(s.ids());
}

VertexSet vertex_set_from_json(const json& j) {
    return VertexSet(j.get<std::vector<int>>());
}

json minor_model_to_json(const MinorModel& model) {
    json branch = json::object();
    for (const auto& [p, set] : model.branch) branch[std::to_string(p)] = set.ids();
    json j;
    j["branch"] = std::move(branch);
    return j;
}

MinorModel minor_model_from_json(const json& j, Graph pattern) {
    MinorModel model;
    model.pattern = std::move(pattern);
    for (const auto& [key, val] : j.at("branch").items())
        model.branch[std::stoi(key)] = VertexSet(val.get<std::vector<int>>());
    return model;
}

namespace {

std::string sniff_format(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json") return "json";
    return "graph6";
}

}  // namespace

Graph read_graph_file(const std::string& path, std::string format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (format.empty()) format = sniff_format(path);
    if (format == "json") {
        json j;
        in >> j;
        return graph_from_json(j);
    }
    if (format == "graph6") {
        std::string line;
        std::getline(in, line);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return parse_graph6(line);
    }
    throw std::invalid_argument("unknown graph format: " + format);
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (format == "json")
        out << graph_to_json(g).dump(2) << "\n";
    else if (format == "graph6")
        out << serialize_graph6(g) << "\n";
    else
        throw std::invalid_argument("unknown graph format: " + format);
}

}  // namespace agile
