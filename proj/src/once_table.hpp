/* Copyright 2026 The qtsym Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Write-once-per-key cache: each key is built exactly once (a failed build is
// retried by the next caller) and lookups of distinct keys never block on
// each other's builds.
#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace qtsym::detail {

template <class Key, class Value>
class OnceTable {
 public:
  template <class Build>
  const Value& get(const Key& key, Build&& build) {
    Slot* slot;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto& p = slots_[key];
      if (!p) p = std::make_unique<Slot>();
      slot = p.get();
    }
    std::call_once(slot->once, [&] { slot->value = std::make_unique<Value>(build()); });
    return *slot->value;
  }

 private:
  struct Slot {
    std::once_flag once;
    std::unique_ptr<Value> value;
  };
  std::mutex mutex_;
  std::map<Key, std::unique_ptr<Slot>> slots_;
};

}  // namespace qtsym::detail
