#pragma once

#include "edgecone/deformation.hpp"

#include <json.hpp>

#include <string>

namespace edgecone {

using Json = nlohmann::ordered_json;

Json info_report(const EdgeConePair& e);
Json faces_report(const EdgeConePair& e, int dim);
Json pairs_report(const EdgeConePair& e);
Json t1_report(const Skeleton& s, std::span<const Integer> degree);
Json crosscut_report(const Crosscut& q);
Json rigidity_report(const EdgeConePair& e, const RigidityVerdict& v);
Json oracle_check_report(const EdgeConePair& e, int limit);
std::string export_cone(const EdgeConePair& e);

std::string crosscut_dot(const Crosscut& q);
std::string crosscut_svg(const Crosscut& q);

// aligned plain text for any report
std::string render_table(const Json& report);

constexpr int kDefaultOracleLimit = 10;

} // namespace edgecone
