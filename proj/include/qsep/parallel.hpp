#ifndef QSEP_PARALLEL_HPP
#define QSEP_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qsep {

// Splits [0, count) into `workers` contiguous chunks and calls
// body(chunk_index, begin, end) for each, one thread per chunk. Returns the
// number of chunks used. Exceptions from a worker are rethrown on the caller.
template <typename Body>
std::size_t parallel_chunks(std::size_t count, std::size_t workers, Body&& body) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return 1;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t const begin = count * w / workers;
      std::size_t const end   = count * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          body(w, begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto const& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return workers;
}

}  // namespace qsep

#endif  // QSEP_PARALLEL_HPP
