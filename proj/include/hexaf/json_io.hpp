#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hexaf/hexsystem.hpp"

namespace hexaf {

// On-disk system format: {"cells": [[q,r], ...]}. Order-insensitive;
// duplicates are rejected.
std::vector<Cell> cells_from_json(const nlohmann::json& j);
nlohmann::json cells_to_json(const std::vector<Cell>& cells);

HexSystem load_system_file(const std::string& path);
void save_system_file(const HexSystem& h, const std::string& path);

}  // namespace hexaf
