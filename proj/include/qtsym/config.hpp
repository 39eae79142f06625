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
#pragma once

namespace qtsym {

inline constexpr int kDefaultDegreeGuard = 12;

/// Largest degree accepted by degree-sensitive operations. Process-wide and
/// safe to read concurrently.
int degree_guard() noexcept;
void set_degree_guard(int guard);

/// Throws DegreeGuardExceeded when degree > degree_guard().
void check_degree(int degree);

/// Restores the previous guard on scope exit.
class ScopedDegreeGuard {
 public:
  explicit ScopedDegreeGuard(int guard) : previous_(degree_guard()) { set_degree_guard(guard); }
  ~ScopedDegreeGuard() { set_degree_guard(previous_); }
  ScopedDegreeGuard(const ScopedDegreeGuard&) = delete;
  ScopedDegreeGuard& operator=(const ScopedDegreeGuard&) = delete;

 private:
  int previous_;
};

}  // namespace qtsym
