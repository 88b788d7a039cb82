#pragma once

#include <cstddef>
#include <functional>

namespace deckwork {

// Fork-join over indices [0, count): calls task(i) exactly once per index on
// up to `jobs` threads. Tasks must only write state owned by their index.
// The first exception thrown by any task is rethrown after the join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

}  // namespace deckwork
