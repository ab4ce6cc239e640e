#pragma once

#include <json.hpp>

#include <string>

#include "pfd/constructions.hpp"
#include "pfd/decomposition.hpp"
#include "pfd/engine.hpp"
#include "pfd/verifier.hpp"

namespace pfd {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::string fnv1a_hex(const std::string& data);

nlohmann::json to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Report& r);

/// The decompose output contract: classes, red, certificate, iterations.
nlohmann::json decompose_result_json(const DecomposeResult& res);

nlohmann::json sidecar_json(const ExampleColouring& ex, const nlohmann::json& params,
                            const Rational& predicted, const ConstructionValidity& validity);

struct ManifestInfo {
  std::string command;
  std::vector<std::string> parameters;
  std::string input_hash;
  std::string outcome;
  long long iterations = 0;
  long long wall_ms = 0;
};

/// One JSON line on stderr per CLI run.
void emit_manifest(const ManifestInfo& info);

}  // namespace pfd
