// Copyright 2026 The GID Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#pragma once

// Stage orchestration. Every stage reads its inputs from files (panel
// sources and upstream outputs), so any stage can be re-run in isolation.
// Stage results are recorded in <output_dir>/manifest.json.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gid/config.hpp"

namespace gid {

struct StageRecord {
  std::string stage;
  std::string status;      // "complete" or "skipped"
  std::string input_hash;  // empty when skipped
  std::vector<std::pair<std::string, std::size_t>> outputs;  // file, data rows
  bool cached = false;     // outputs reused from an earlier run
};

// Runs a single stage, ignoring its toggle. Throws gid::Error whose message
// starts with "stage <name>:" on failure; partial outputs are removed.
StageRecord RunStage(const RunConfig& config, std::string_view stage);

// Runs every stage in dependency order, honouring the toggles.
std::vector<StageRecord> RunPipeline(const RunConfig& config);

// Hash of the effective configuration as recorded in the manifest.
std::string ConfigHash(const RunConfig& config);

}  // namespace gid
