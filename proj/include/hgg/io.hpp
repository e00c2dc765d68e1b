#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hgg/category.hpp"
#include "hgg/field.hpp"
#include "hgg/group.hpp"
#include "hgg/hypergroup.hpp"

namespace hgg {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteGroup& g);
Json to_json(const HypergroupOverGroup& hg);
Json to_json(const AxiomReport& report);
Json to_json(const FiniteField& f);
// {"f0": [...], "f1": [...]}
Json morphism_to_json(const std::vector<Elem>& f0, const std::vector<Elem>& f1);

// Loaders throw ParseError on missing keys or wrong types and the owning
// module's validation errors otherwise.
FiniteGroup group_from_json(const Json& j);
HypergroupOverGroup hypergroup_from_json(const Json& j);
std::pair<std::vector<Elem>, std::vector<Elem>> morphism_from_json(const Json& j);

// Compact single-line dump followed by a newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);
Json load_json_file(const std::filesystem::path& path);
void save_text_file(const std::filesystem::path& path, const std::string& text);
std::string load_text_file(const std::filesystem::path& path);

}  // namespace hgg
