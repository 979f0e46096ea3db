#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace cfhp {

/* Worker count from CFHP_JOBS (0 there means all hardware threads); 1 when
 * unset or unparsable. */
int default_jobs();

/*
 * Split [0, count) into at most `jobs` contiguous chunks and run
 * work(begin, end) -> R on each.  Results come back in chunk order, so any
 * reduction over them is independent of the worker count.  jobs <= 0 reads
 * the default.
 */
template <class R, class F>
std::vector<R> map_chunks(long long count, int jobs, F work) {
  if (jobs <= 0) jobs = default_jobs();
  long long chunks = std::max(1LL, std::min<long long>(jobs, count));
  std::vector<R> results(static_cast<std::size_t>(chunks));
  if (chunks == 1) {
    results[0] = work(0LL, count);
    return results;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(chunks));
  for (long long c = 0; c < chunks; ++c) {
    long long begin = count * c / chunks;
    long long end = count * (c + 1) / chunks;
    threads.emplace_back(
        [&results, c, begin, end, &work] { results[c] = work(begin, end); });
  }
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace cfhp
