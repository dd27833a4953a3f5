#include "piforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace piforge {

namespace {

unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::atomic<unsigned> g_workers{default_workers()};

}  // namespace

unsigned worker_count() { return g_workers.load(); }

void set_worker_count(unsigned workers) { g_workers.store(std::max(1u, workers)); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned workers) {
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

CertifiedReal chunked_sum(unsigned long first, unsigned long last,
                          const std::function<CertifiedReal(unsigned long)>& term,
                          const PrecisionContext& ctx) {
  CertifiedReal total(ctx);
  if (last < first) return total;
  const unsigned long count = last - first + 1;
  const std::size_t chunks = (count + kSumChunk - 1) / kSumChunk;
  std::vector<CertifiedReal> partials(chunks, CertifiedReal(ctx));
  parallel_for(chunks, [&](std::size_t c) {
    const unsigned long begin = first + c * kSumChunk;
    const unsigned long end = std::min(last, begin + kSumChunk - 1);
    CertifiedReal acc(ctx);
    for (unsigned long n = begin; n <= end; ++n) acc += term(n);
    partials[c] = std::move(acc);
  });
  for (const auto& p : partials) total += p;
  return total;
}

}  // namespace piforge
