#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace minquot {

// Splits [0, count) into at most `workers` contiguous chunks and runs
// body(begin, end) on each, one thread per chunk. Chunks are fixed by
// count and worker count alone, so any per-chunk results merged in chunk
// order are identical for every worker count. The first exception thrown
// by any chunk (lowest chunk index) is rethrown after all threads join.
template <class Body>
void parallel_chunks(std::size_t count, int workers, Body&& body) {
  if (workers < 1) workers = 1;
  const std::size_t w =
      std::min<std::size_t>(static_cast<std::size_t>(workers),
                            count == 0 ? 1 : count);
  if (w <= 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  std::vector<std::exception_ptr> errors(w);
  const std::size_t base = count / w, extra = count % w;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < w; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    threads.emplace_back([&body, &errors, begin, len, c] {
      try {
        body(begin, begin + len, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
    begin += len;
  }
  for (auto& t : threads) t.join();
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);
}

// Filter over [0, count): keeps indices where pred(i) is true, in index
// order, independent of worker count.
template <class Pred>
std::vector<std::uint32_t> parallel_filter_indices(std::size_t count,
                                                   int workers, Pred&& pred) {
  if (workers < 1) workers = 1;
  const std::size_t w =
      std::min<std::size_t>(static_cast<std::size_t>(workers),
                            count == 0 ? 1 : count);
  std::vector<std::vector<std::uint32_t>> parts(w);
  parallel_chunks(count, static_cast<int>(w),
                  [&](std::size_t begin, std::size_t end, std::size_t chunk) {
                    auto& local = parts[chunk];
                    for (std::size_t i = begin; i < end; ++i)
                      if (pred(i)) local.push_back(static_cast<std::uint32_t>(i));
                  });
  std::vector<std::uint32_t> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace minquot
