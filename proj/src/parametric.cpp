#include "zerodim/parametric.hpp"

#include <numeric>

namespace zerodim {
namespace {

// Order blocks restricted to [lo, hi), reindexed from zero.
TermOrder restrict_order(const TermOrder& order, std::size_t lo, std::size_t hi) {
    std::vector<OrderBlock> blocks;
    for (const auto& b : order.blocks()) {
        OrderBlock r{b.kind, {}};
        for (std::size_t v : b.variables)
            if (v >= lo && v < hi) r.variables.push_back(v - lo);
        if (!r.variables.empty()) blocks.push_back(std::move(r));
    }
    return TermOrder(std::move(blocks));
}

}  // namespace

std::vector<int> ParamSplit::to_param() const {
    std::vector<int> to(ring->size(), -1);
    for (std::size_t i = main_count(); i < ring->size(); ++i) to[i] = static_cast<int>(i - main_count());
    return to;
}

std::vector<int> ParamSplit::from_param() const { return shift_map(param_count, static_cast<int>(main_count())); }

std::vector<int> ParamSplit::to_main() const {
    std::vector<int> to(ring->size(), -1);
    for (std::size_t i = 0; i < main_count(); ++i) to[i] = static_cast<int>(i);
    return to;
}

ParamSplit make_split(const RingPtr& ring, std::size_t param_count) {
    if (param_count > ring->size()) throw PreconditionError("more parameters than ring variables");
    std::size_t m = ring->size() - param_count;
    // every block must hold only main variables or only parameters, and
    // parameter blocks must come last
    bool in_params = false;
    for (const auto& b : ring->order.blocks()) {
        bool any_param = false, any_main = false;
        for (std::size_t v : b.variables) (v >= m ? any_param : any_main) = true;
        if (any_param && any_main) throw PreconditionError("term order mixes parameters and main variables in a block");
        if (any_param) in_params = true;
        if (any_main && in_params) throw PreconditionError("term order must rank main variables above parameters");
    }
    ParamSplit s;
    s.ring = ring;
    s.param_count = param_count;
    std::vector<std::string> pn(ring->names.begin() + static_cast<std::ptrdiff_t>(m), ring->names.end());
    std::vector<std::string> mn(ring->names.begin(), ring->names.begin() + static_cast<std::ptrdiff_t>(m));
    s.param_ring = make_ring(std::move(pn), restrict_order(ring->order, m, ring->size()));
    s.main_ring = make_ring(std::move(mn), restrict_order(ring->order, 0, m));
    return s;
}

RingPtr parametric_ring(const std::vector<std::string>& main, const TermOrder& main_order,
                        const std::vector<std::string>& params) {
    std::vector<std::string> names = main;
    names.insert(names.end(), params.begin(), params.end());
    TermOrder order = main_order;
    std::vector<std::size_t> idx(params.size());
    std::iota(idx.begin(), idx.end(), main.size());
    if (!params.empty()) order = TermOrder::block(main_order, TermOrder::grevlex(std::move(idx)));
    return make_ring(std::move(names), std::move(order));
}

}  // namespace zerodim
