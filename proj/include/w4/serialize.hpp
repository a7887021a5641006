#ifndef W4_SERIALIZE_HPP
#define W4_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "w4/campaigns.hpp"
#include "w4/cuts.hpp"
#include "w4/edgesum.hpp"
#include "w4/immersion.hpp"
#include "w4/structure.hpp"

namespace w4 {

nlohmann::json to_json(const ImmersionModel& model);
ImmersionModel model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DecompositionNode& node);
DecompositionTree tree_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DecompositionForest& forest);
DecompositionForest forest_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InvarianceReport& rep);
nlohmann::json to_json(const StructureReport& rep);
nlohmann::json to_json(const CompositionSample& sample);

/// "order side_size" / edge-index list / side vertex list, one cut per block.
std::string cut_to_text(const EdgeCut& cut);
std::string separator_to_text(const ImportantSeparator& sep);

} // namespace w4

#endif
