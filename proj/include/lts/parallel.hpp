#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lts {

// Runs body(0..count-1) and returns the results in index order. The parallel
// version uses OpenMP; the serial version is the reference it is tested
// against. body must be safe to call concurrently.
template <class R>
std::vector<R> run_indexed_serial(std::size_t count, const std::function<R(std::size_t)>& body) {
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(body(i));
  return out;
}

template <class R>
std::vector<R> run_indexed(std::size_t count, const std::function<R(std::size_t)>& body) {
  std::vector<R> out(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = body(static_cast<std::size_t>(i));
  return out;
}

int worker_threads();

}  // namespace lts
