#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <vector>

namespace zerodim {

/// Cooperative per-thread time budget. Long loops call check_deadline(),
/// which throws TimeoutError once the innermost active budget has expired.
class ScopedDeadline {
public:
    explicit ScopedDeadline(std::chrono::duration<double> budget);
    ~ScopedDeadline();

    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::optional<std::chrono::steady_clock::time_point> previous_;
};

/// Deadline and cancellation flags of the calling thread.
struct ExecutionContext {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::vector<const std::atomic<bool>*> stop_flags;
};

ExecutionContext current_context();

/// Installs `context` plus one more stop flag for the current scope. Used to
/// carry the caller's budget into worker threads.
class ScopedContext {
public:
    ScopedContext(const ExecutionContext& context, const std::atomic<bool>* stop);
    ~ScopedContext();

    ScopedContext(const ScopedContext&) = delete;
    ScopedContext& operator=(const ScopedContext&) = delete;

private:
    ExecutionContext previous_;
};

/// Throws TimeoutError when the budget is spent and Cancelled when a stop
/// flag of the current thread is raised.
void check_deadline();

}  // namespace zerodim
