#include "hexaf/json_io.hpp"

#include <fstream>

namespace hexaf {

using nlohmann::json;

std::vector<Cell> cells_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cells"))
        throw ValidationError("expected an object with a \"cells\" array");
    const json& arr = j.at("cells");
    if (!arr.is_array()) throw ValidationError("\"cells\" must be an array");
    std::vector<Cell> cells;
    for (const json& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ValidationError("each cell must be a [q, r] integer pair");
        cells.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return cells;
}

json cells_to_json(const std::vector<Cell>& cells) {
    json arr = json::array();
    for (Cell c : cells) arr.push_back({c.q, c.r});
    return json{{"cells", arr}};
}

HexSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return HexSystem::build(cells_from_json(j));
}

void save_system_file(const HexSystem& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << cells_to_json(h.cells).dump() << "\n";
}

}  // namespace hexaf
