#include "lpcut/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lpcut {

namespace {

constexpr const char* format_tag = "lpcut-problem";
constexpr int format_version = 1;

using json = nlohmann::ordered_json;

double parse_cost(const json& j, const char* what) {
    if (!j.is_number())
        throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("problem file is not valid JSON: ") + ex.what());
    }

    try {
        if (!doc.is_object())
            throw ParseError("problem file must be a JSON object");
        if (doc.value("format", "") != format_tag)
            throw ParseError("missing or unrecognized format tag (expected \"" +
                             std::string(format_tag) + "\")");
        if (!doc.contains("version") || !doc["version"].is_number_integer() ||
            doc["version"].get<int>() != format_version)
            throw ParseError("unsupported problem file version (expected " +
                             std::to_string(format_version) + ")");

        ProblemFile problem;
        if (!doc.contains("vertex_count") || !doc["vertex_count"].is_number_integer())
            throw ParseError("vertex_count must be an integer");
        problem.energy.topology.vertex_count = doc["vertex_count"].get<int>();

        const json& unaries = doc.at("unaries");
        if (!unaries.is_array())
            throw ParseError("unaries must be an array of [cost0, cost1] pairs");
        for (const json& u : unaries) {
            if (!u.is_array() || u.size() != 2)
                throw ParseError("each unary must be a [cost0, cost1] pair");
            problem.energy.unaries.push_back(
                {parse_cost(u[0], "unary cost"), parse_cost(u[1], "unary cost")});
        }

        const json& edges = doc.at("edges");
        if (!edges.is_array())
            throw ParseError("edges must be an array of [i, j, [a,b,c,d]] entries");
        for (const json& entry : edges) {
            if (!entry.is_array() || entry.size() != 3 ||
                !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
                !entry[2].is_array() || entry[2].size() != 4)
                throw ParseError("each edge must be [i, j, [a, b, c, d]]");
            problem.energy.topology.edges.emplace_back(entry[0].get<int>(),
                                                       entry[1].get<int>());
            const json& table = entry[2];
            problem.energy.pairwise.push_back({parse_cost(table[0], "pairwise cost"),
                                               parse_cost(table[1], "pairwise cost"),
                                               parse_cost(table[2], "pairwise cost"),
                                               parse_cost(table[3], "pairwise cost")});
        }

        if (doc.contains("grid")) {
            const json& grid = doc["grid"];
            if (!grid.is_object() || !grid.contains("width") || !grid.contains("height") ||
                !grid["width"].is_number_integer() || !grid["height"].is_number_integer())
                throw ParseError("grid metadata must be {\"width\": w, \"height\": h}");
            GridShape shape{grid["width"].get<int>(), grid["height"].get<int>()};
            if (shape.width < 1 || shape.height < 1 ||
                shape.width * shape.height != problem.energy.topology.vertex_count)
                throw ParseError("grid metadata does not match vertex_count");
            problem.grid = shape;
        }

        try {
            validate(problem.energy);
        } catch (const InputError& ex) {
            throw ParseError(std::string("problem failed validation: ") + ex.what());
        }
        return problem;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("malformed problem file: ") + ex.what());
    }
}

std::string serialize_problem(const ProblemFile& problem) {
    validate(problem.energy);
    json doc;
    doc["format"] = format_tag;
    doc["version"] = format_version;
    doc["vertex_count"] = problem.energy.topology.vertex_count;
    if (problem.grid)
        doc["grid"] = {{"width", problem.grid->width}, {"height", problem.grid->height}};

    json unaries = json::array();
    for (const auto& u : problem.energy.unaries)
        unaries.push_back({u.cost0, u.cost1});
    doc["unaries"] = std::move(unaries);

    json edges = json::array();
    for (std::size_t k = 0; k < problem.energy.topology.edges.size(); ++k) {
        const auto& [i, j] = problem.energy.topology.edges[k];
        const auto& t = problem.energy.pairwise[k];
        edges.push_back({i, j, {t.cost00, t.cost01, t.cost10, t.cost11}});
    }
    doc["edges"] = std::move(edges);

    return doc.dump(2) + "\n";
}

ProblemFile read_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open problem file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

void write_problem_file(const ProblemFile& problem, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open output file: " + path.string());
    out << serialize_problem(problem);
    if (!out)
        throw ParseError("failed writing problem file: " + path.string());
}

} // namespace lpcut
