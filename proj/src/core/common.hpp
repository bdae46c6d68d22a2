// Copyright (c) 2026 The cutbddc authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUTBDDC_COMMON_HPP
#define CUTBDDC_COMMON_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

namespace cutbddc {

using Vec3 = Eigen::Vector3d;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Single error type for the whole library; the C boundary maps `code`
// onto cutbddc_status values.
enum class ErrorCode {
  InvalidArgument,
  Config,
  Io,
  Singular,
  Degenerate,
  NotConverged,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Global worker count for parallel loops (set from config / CLI --threads).
int thread_count();
void set_thread_count(int n);

// Static-partition parallel map over [0, n). Work items must write to
// disjoint slots; reductions stay with the caller so results do not depend
// on the thread count.
template <typename F>
void parallel_for(std::int64_t n, F&& body) {
  const int nt = thread_count();
  if (nt <= 1 || n < 2) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::int64_t>(nt, n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t]() {
      const std::int64_t lo = n * t / workers;
      const std::int64_t hi = n * (t + 1) / workers;
      try {
        for (std::int64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::scoped_lock lk(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace cutbddc

#endif
