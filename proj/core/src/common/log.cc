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

#include "planar/common/log.h"

#include <iostream>
#include <mutex>
#include <utility>

namespace planar {
namespace {

std::mutex& HandlerMutex() {
  static std::mutex mutex;
  return mutex;
}

WarningHandler& Handler() {
  static WarningHandler handler;
  return handler;
}

}  // namespace

WarningHandler SetWarningHandler(WarningHandler handler) {
  std::lock_guard<std::mutex> lock(HandlerMutex());
  return std::exchange(Handler(), std::move(handler));
}

void Warn(std::string_view message) {
  WarningHandler handler;
  {
    std::lock_guard<std::mutex> lock(HandlerMutex());
    handler = Handler();
  }
  if (handler) {
    handler(message);
  } else {
    std::cerr << "planar warning: " << message << '\n';
  }
}

}  // namespace planar
