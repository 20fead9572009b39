#include "zerodim/term_order.hpp"

#include <algorithm>

#include "zerodim/errors.hpp"

namespace zerodim {

std::string to_string(BaseOrder kind) {
    switch (kind) {
        case BaseOrder::lex: return "lex";
        case BaseOrder::grlex: return "grlex";
        case BaseOrder::grevlex: return "grevlex";
    }
    return "?";
}

BaseOrder parse_base_order(const std::string& name) {
    if (name == "lex") return BaseOrder::lex;
    if (name == "grlex") return BaseOrder::grlex;
    if (name == "grevlex") return BaseOrder::grevlex;
    throw PreconditionError("unknown term order '" + name + "'");
}

TermOrder::TermOrder(std::vector<OrderBlock> blocks) : blocks_(std::move(blocks)) {
    std::vector<bool> seen(kMaxVariables, false);
    for (const auto& b : blocks_)
        for (std::size_t v : b.variables) {
            if (v >= kMaxVariables) throw PreconditionError("term order variable index out of range");
            if (seen[v]) throw PreconditionError("variable appears twice in a term order");
            seen[v] = true;
        }
}

TermOrder TermOrder::make(BaseOrder kind, std::vector<std::size_t> variables) {
    return TermOrder({OrderBlock{kind, std::move(variables)}});
}

TermOrder TermOrder::lex(std::vector<std::size_t> variables) { return make(BaseOrder::lex, std::move(variables)); }
TermOrder TermOrder::grlex(std::vector<std::size_t> variables) { return make(BaseOrder::grlex, std::move(variables)); }
TermOrder TermOrder::grevlex(std::vector<std::size_t> variables) {
    return make(BaseOrder::grevlex, std::move(variables));
}

TermOrder TermOrder::block(const TermOrder& first, const TermOrder& second) {
    std::vector<OrderBlock> blocks = first.blocks_;
    blocks.insert(blocks.end(), second.blocks_.begin(), second.blocks_.end());
    return TermOrder(std::move(blocks));
}

TermOrder TermOrder::shifted(std::size_t offset) const {
    std::vector<OrderBlock> blocks = blocks_;
    for (auto& b : blocks)
        for (auto& v : b.variables) v += offset;
    return TermOrder(std::move(blocks));
}

std::size_t TermOrder::variable_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.variables.size();
    return n;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
        const auto& vars = blk.variables;
        if (blk.kind != BaseOrder::lex) {
            unsigned da = 0, db = 0;
            for (std::size_t v : vars) {
                da += a[v];
                db += b[v];
            }
            if (da != db) return da > db ? 1 : -1;
        }
        if (blk.kind == BaseOrder::grevlex) {
            for (std::size_t k = vars.size(); k-- > 0;) {
                auto ea = a[vars[k]], eb = b[vars[k]];
                if (ea != eb) return ea < eb ? 1 : -1;
            }
        } else {
            for (std::size_t v : vars) {
                auto ea = a[v], eb = b[v];
                if (ea != eb) return ea > eb ? 1 : -1;
            }
        }
    }
    return 0;
}

}  // namespace zerodim
