#include "zerodim/deadline.hpp"

#include "zerodim/errors.hpp"

namespace zerodim {
namespace {

thread_local ExecutionContext active;

}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::duration<double> budget) : previous_(active.deadline) {
    auto when = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
    if (!active.deadline || when < *active.deadline) active.deadline = when;
}

ScopedDeadline::~ScopedDeadline() { active.deadline = previous_; }

ExecutionContext current_context() { return active; }

ScopedContext::ScopedContext(const ExecutionContext& context, const std::atomic<bool>* stop) : previous_(active) {
    active = context;
    if (stop) active.stop_flags.push_back(stop);
}

ScopedContext::~ScopedContext() { active = previous_; }

void check_deadline() {
    for (const auto* flag : active.stop_flags)
        if (flag->load(std::memory_order_relaxed)) throw Cancelled();
    if (!active.deadline) return;
    if (std::chrono::steady_clock::now() >= *active.deadline) throw TimeoutError("time budget exhausted");
}

}  // namespace zerodim
