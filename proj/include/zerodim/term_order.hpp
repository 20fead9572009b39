#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zerodim/monomial.hpp"

namespace zerodim {

enum class BaseOrder { lex, grlex, grevlex };

std::string to_string(BaseOrder kind);
BaseOrder parse_base_order(const std::string& name);

/// One block of a block order: a variable priority list and the order
/// used inside it.
struct OrderBlock {
    BaseOrder kind = BaseOrder::grevlex;
    std::vector<std::size_t> variables;

    friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// Term order on power products, built as a sequence of blocks compared
/// one after another. A single block gives lex, grlex or grevlex; two or
/// more give elimination orders such as x0 >> x or x >> t.
class TermOrder {
public:
    TermOrder() = default;
    explicit TermOrder(std::vector<OrderBlock> blocks);

    static TermOrder lex(std::vector<std::size_t> variables);
    static TermOrder grlex(std::vector<std::size_t> variables);
    static TermOrder grevlex(std::vector<std::size_t> variables);
    static TermOrder make(BaseOrder kind, std::vector<std::size_t> variables);

    /// Block order: every variable of `first` dominates every variable of
    /// `second`; ties in the first block are broken by `second`.
    static TermOrder block(const TermOrder& first, const TermOrder& second);

    /// Negative, zero or positive as a is smaller, equal or greater than b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    const std::vector<OrderBlock>& blocks() const { return blocks_; }

    /// Same order with every variable index shifted by `offset`.
    TermOrder shifted(std::size_t offset) const;

    std::size_t variable_count() const;

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    std::vector<OrderBlock> blocks_;
};

}  // namespace zerodim
