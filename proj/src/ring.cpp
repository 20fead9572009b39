#include "zerodim/ring.hpp"

#include <algorithm>
#include <numeric>

#include "zerodim/errors.hpp"

namespace zerodim {

std::optional<std::size_t> Ring::index_of(const std::string& n) const {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

std::string Ring::name(std::size_t i) const {
    if (i < names.size()) return names[i];
    return "v" + std::to_string(i);
}

RingPtr make_ring(std::vector<std::string> names, TermOrder order) {
    if (names.size() > kMaxVariables)
        throw PreconditionError("ring has " + std::to_string(names.size()) + " variables; at most " +
                                std::to_string(kMaxVariables) + " are supported");
    std::vector<bool> covered(names.size(), false);
    for (const auto& b : order.blocks())
        for (std::size_t v : b.variables) {
            if (v >= names.size()) throw PreconditionError("term order refers to a variable outside the ring");
            covered[v] = true;
        }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        throw PreconditionError("term order does not cover every ring variable");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw PreconditionError("duplicate variable name '" + names[i] + "'");
    return std::make_shared<const Ring>(Ring{std::move(names), std::move(order)});
}

RingPtr make_ring(std::vector<std::string> names, BaseOrder kind) {
    std::vector<std::size_t> idx(names.size());
    std::iota(idx.begin(), idx.end(), 0);
    return make_ring(std::move(names), TermOrder::make(kind, std::move(idx)));
}

const RingPtr& anonymous_ring() {
    static const RingPtr ring = [] {
        std::vector<std::size_t> idx(kMaxVariables);
        std::iota(idx.begin(), idx.end(), 0);
        return std::make_shared<const Ring>(Ring{{}, TermOrder::grevlex(idx)});
    }();
    return ring;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a->names == b->names && a->order == b->order;
}

RingPtr prepend_variables(const RingPtr& ring, const std::vector<std::string>& front, BaseOrder kind) {
    std::vector<std::string> names = front;
    names.insert(names.end(), ring->names.begin(), ring->names.end());
    std::vector<std::size_t> idx(front.size());
    std::iota(idx.begin(), idx.end(), 0);
    TermOrder order = ring->order.shifted(front.size());
    if (!front.empty()) order = TermOrder::block(TermOrder::make(kind, idx), order);
    return make_ring(std::move(names), std::move(order));
}

RingPtr append_variables(const RingPtr& ring, const std::vector<std::string>& back, BaseOrder kind) {
    std::vector<std::string> names = ring->names;
    names.insert(names.end(), back.begin(), back.end());
    std::vector<std::size_t> idx(back.size());
    std::iota(idx.begin(), idx.end(), ring->size());
    TermOrder order = ring->order;
    if (!back.empty()) order = TermOrder::block(order, TermOrder::make(kind, idx));
    return make_ring(std::move(names), std::move(order));
}

std::string internal_name(const std::string& stem) { return "_" + stem; }

}  // namespace zerodim
