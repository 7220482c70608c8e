// JSON input parsing for point sets and polygons, shared by the CLI and the
// verification harness.
//
// Point sets:  {"p": 7, "h": 1, "m": 2, "points": [[x, y], ...]}
// Polygons:    {"vertices": [[x, y], ...]}
// A point-set file may omit p/h (supplied on the command line instead), and
// a polygon may be given as the hull of a "points" list.

#ifndef TORIC_IO_HPP
#define TORIC_IO_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "toric/code.hpp"
#include "toric/lattice.hpp"

namespace toric {

struct InputSpec {
    int p = 0, h = 0;  // 0 = unspecified
    int m = 2;
    std::vector<Exponent> points;     // empty if only vertices given
    PointSet vertices;                // empty if only points given

    bool has_field() const { return p > 0 && h > 0; }

    PointSet plane_points() const {
        PointSet s;
        for (const Exponent& e : points) {
            if (e.size() != 2) throw std::invalid_argument("plane points need m = 2");
            s.push_back({e[0], e[1]});
        }
        return s;
    }

    Polygon polygon() const {
        if (!vertices.empty()) return convex_hull(vertices);
        if (!points.empty()) return convex_hull(plane_points());
        throw std::invalid_argument("input has neither vertices nor points");
    }
};

inline InputSpec parse_input(const nlohmann::json& j) {
    InputSpec in;
    if (!j.is_object()) throw std::invalid_argument("input must be a JSON object");
    if (j.contains("p")) in.p = j.at("p").get<int>();
    if (j.contains("h")) in.h = j.at("h").get<int>();
    if (j.contains("m")) in.m = j.at("m").get<int>();
    auto read_pairs = [&](const nlohmann::json& arr, int arity) {
        std::vector<Exponent> out;
        if (!arr.is_array()) throw std::invalid_argument("coordinate list must be an array");
        for (const auto& item : arr) {
            if (!item.is_array() || (arity > 0 && static_cast<int>(item.size()) != arity))
                throw std::invalid_argument("each point must be an array of coordinates");
            Exponent e;
            for (const auto& c : item) e.push_back(c.get<long>());
            out.push_back(std::move(e));
        }
        return out;
    };
    if (j.contains("points")) in.points = read_pairs(j.at("points"), in.m);
    if (j.contains("vertices")) {
        for (const Exponent& e : read_pairs(j.at("vertices"), 2))
            in.vertices.push_back({e[0], e[1]});
    }
    if (in.points.empty() && in.vertices.empty())
        throw std::invalid_argument("input needs a \"points\" or \"vertices\" list");
    return in;
}

inline InputSpec load_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_input(j);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("schema violation: ") + e.what());
    }
}

}  // namespace toric

#endif  // TORIC_IO_HPP
