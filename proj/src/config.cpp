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
#include "qtsym/config.hpp"

#include <atomic>

#include "qtsym/errors.hpp"

namespace qtsym {

namespace {
std::atomic<int> g_degree_guard{kDefaultDegreeGuard};
}

int degree_guard() noexcept { return g_degree_guard.load(std::memory_order_relaxed); }

void set_degree_guard(int guard) {
  if (guard < 0) throw PreconditionError("degree guard must be non-negative");
  g_degree_guard.store(guard, std::memory_order_relaxed);
}

void check_degree(int degree) {
  int guard = degree_guard();
  if (degree > guard) throw DegreeGuardExceeded(degree, guard);
}

}  // namespace qtsym
