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

#include <filesystem>
#include <string>

namespace gid {

// Summary of every table and figure analog in a run directory: source file,
// data rows and status ("ok" or "skipped"). Fails when the directory is
// missing or holds no outputs.
std::string BuildReport(const std::filesystem::path& output_dir);

}  // namespace gid
