#include "antimagic/closed_form.hpp"

#include "antimagic/errors.hpp"

#include <string>

namespace antimagic {

namespace {

// sum_{i=0}^{terms-1} 2^(l-i): edges contributed by the `terms` lowest levels.
std::uint64_t lower_level_edges(std::uint32_t l, std::uint32_t terms) {
    std::uint64_t s = 0;
    for (std::uint32_t i = 0; i < terms; ++i) s += std::uint64_t{1} << (l - i);
    return s;
}

void check_address(const TreeAddress& addr) {
    if (!addr.valid()) {
        throw InvalidArgument("invalid tree address (l=" + std::to_string(addr.l) + ", k=" +
                              std::to_string(addr.k) + ", n=" + std::to_string(addr.n) + ")");
    }
}

} // namespace

std::uint64_t num_vertices(std::uint32_t l) {
    if (l >= 63) throw OverflowError("vertex count of level " + std::to_string(l) + " overflows 64 bits");
    return (std::uint64_t{1} << (l + 1)) - 1;
}

std::uint64_t num_edges(std::uint32_t l) {
    if (l >= 63) throw OverflowError("edge count of level " + std::to_string(l) + " overflows 64 bits");
    return (std::uint64_t{1} << (l + 1)) - 2;
}

IncidentEdges incident_edge_indices(const TreeAddress& addr) {
    check_address(addr);
    if (addr.k == 0) throw InvalidArgument("leaves have a single incident edge");
    if (addr.k == addr.l) {
        const std::uint64_t e = num_edges(addr.l);
        return IncidentEdges{e - 1, e, std::nullopt};
    }
    const std::uint64_t below = lower_level_edges(addr.l, addr.k - 1);
    return IncidentEdges{2 * addr.n - 1 + below, 2 * addr.n + below,
                         lower_level_edges(addr.l, addr.k) + addr.n};
}

TreeFormulaContext::TreeFormulaContext(std::uint32_t level, std::shared_ptr<const PrimeTable> primes)
    : level_(level), primes_(std::move(primes)) {
    if (!primes_ || primes_->count() < num_edges(level)) {
        throw InvalidArgument("level " + std::to_string(level) + " needs " + std::to_string(num_edges(level)) +
                              " primes");
    }
}

TreeFormulaContext::TreeFormulaContext(std::uint32_t level)
    : TreeFormulaContext(level, std::make_shared<const PrimeTable>(first_m_primes(num_edges(level)))) {}

std::uint64_t root_value(const TreeFormulaContext& ctx) {
    if (ctx.level() == 0) return 0;
    const std::uint64_t e = num_edges(ctx.level());
    return ctx.prime(e - 1) + ctx.prime(e);
}

std::uint64_t second_to_last_value(const TreeFormulaContext& ctx, std::uint64_t n) {
    const std::uint32_t l = ctx.level();
    check_address({l, 1, n});
    if (l < 2) throw InvalidArgument("second-to-last level needs l >= 2");
    return ctx.prime(2 * n - 1) + ctx.prime(2 * n) + ctx.prime((std::uint64_t{1} << l) + n);
}

std::uint64_t node_value(const TreeFormulaContext& ctx, const TreeAddress& addr) {
    check_address(addr);
    if (addr.l != ctx.level()) {
        throw InvalidArgument("address level " + std::to_string(addr.l) + " does not match context level " +
                              std::to_string(ctx.level()));
    }
    if (addr.l == 0) return 0;
    if (addr.k == 0) return ctx.prime(addr.n);
    if (addr.k == addr.l) return root_value(ctx);
    const IncidentEdges idx = incident_edge_indices(addr);
    return ctx.prime(idx.left) + ctx.prime(idx.right) + ctx.prime(*idx.parent);
}

} // namespace antimagic
