#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zerodim/term_order.hpp"

namespace zerodim {

/// Variable names plus the term order of a polynomial ring. Rings are
/// immutable and shared between polynomials through RingPtr.
struct Ring {
    std::vector<std::string> names;
    TermOrder order;

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::string name(std::size_t i) const;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Ring whose order must cover exactly the indices 0..names.size()-1.
RingPtr make_ring(std::vector<std::string> names, TermOrder order);

/// Single-block ring; variable priority follows the name order.
RingPtr make_ring(std::vector<std::string> names, BaseOrder kind);

/// Nameless grevlex ring holding constants that were built without a ring.
const RingPtr& anonymous_ring();

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Ring with `front` prepended as a dominating block ordered by `kind`.
/// Old variable i becomes front.size() + i.
RingPtr prepend_variables(const RingPtr& ring, const std::vector<std::string>& front, BaseOrder kind);

/// Ring with `back` appended as a block dominated by every old variable.
RingPtr append_variables(const RingPtr& ring, const std::vector<std::string>& back, BaseOrder kind);

/// Identifier that cannot collide with user names ([A-Za-z][A-Za-z0-9_]*).
std::string internal_name(const std::string& stem);

}  // namespace zerodim
