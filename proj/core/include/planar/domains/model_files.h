// Copyright 2026 The Planar Control Authors
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

#ifndef PLANAR_DOMAINS_MODEL_FILES_H_
#define PLANAR_DOMAINS_MODEL_FILES_H_

#include <string_view>
#include <utility>
#include <vector>

namespace planar::internal {

// (file name, contents) of every model under models/, compiled into the
// library so that domains load without touching the filesystem.
const std::vector<std::pair<std::string_view, std::string_view>>&
EmbeddedModelFiles();

}  // namespace planar::internal

#endif  // PLANAR_DOMAINS_MODEL_FILES_H_
