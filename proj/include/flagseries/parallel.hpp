/*
   Copyright 2026 The flagseries Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLAGSERIES_PARALLEL_HPP
#define FLAGSERIES_PARALLEL_HPP

#include <exception>
#include <vector>

#include "flagseries/combinatorics.hpp"

namespace flagseries {

/// out[i] = fn(i) for i in [0, count). Results come back in index order for
/// either execution mode. The first exception thrown by any worker is
/// rethrown on the calling thread once the loop has finished.
template <class Fn>
auto parallel_map(long count, Execution exec, Fn&& fn) -> std::vector<decltype(fn(0L))> {
  std::vector<decltype(fn(0L))> out(static_cast<std::size_t>(count > 0 ? count : 0));
  if (exec == Execution::serial) {
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(i);
    } catch (...) {
#pragma omp critical(flagseries_parallel_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace flagseries

#endif  // FLAGSERIES_PARALLEL_HPP
