// Copyright 2026 The scg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON forms of every report, with a fixed key order. Vertices print as
// labels (`b_1`, `v_0_3`, `apex`).

#include <string>
#include <vector>

#include "json.hpp"
#include "scg/embedding.hpp"
#include "scg/finite_oracle.hpp"
#include "scg/ray_builder.hpp"
#include "scg/structure.hpp"
#include "scg/zoo.hpp"

namespace scg {

using Json = nlohmann::ordered_json;

Json labels_json(const std::vector<VertexId>& vs);
Json to_json(const VerificationReport& r);
Json to_json(const FoundationReport& r);
Json to_json(const TorsionReport& r);
Json to_json(const CheckReport& r);
Json to_json(const CoveringReport& r);
Json to_json(const CensusProfile& p);
Json to_json(const CensusComparison& r);
Json to_json(const EvidenceVerdict& r);
Json to_json(const ProbeReport& r);
Json to_json(const RayPrefix& r);
Json to_json(const ZooValidation& r);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);
/// `key  value` lines; nested values print as compact JSON.
std::string to_table(const Json& j);

}  // namespace scg
