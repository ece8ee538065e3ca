#include "atl/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace atl {

Basis::Basis(ModuleSpec spec, int n_sites, std::vector<LinkState> states)
    : spec_(spec), n_(n_sites), states_(std::move(states)) {
    index_.reserve(states_.size() * 2);
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
        auto [it, fresh] = index_.emplace(states_[i].word(), i);
        if (!fresh) throw std::invalid_argument("Basis: duplicate canonical state");
    }
}

int Basis::index_of(const LinkState& s) const {
    auto it = index_.find(s.word());
    return it == index_.end() ? -1 : it->second;
}

std::pair<int, int> Basis::sector_range(int j) const {
    int first = -1, count = 0;
    for (int i = 0; i < size(); ++i) {
        if (states_[i].sector_j() == j) {
            if (first < 0) first = i;
            ++count;
        }
    }
    return {first, count};
}

namespace {

std::vector<LinkState> quotient_zero_states(int n) {
    std::vector<LinkState> out;
    for (const auto& s : enumerate_sector(n, 0))
        if (!s.crosses_boundary()) out.push_back(s);
    return out;
}

std::vector<LinkState> appendix_states() {
    const char* names[] = {"(12)(34)", "(23)(14)", "(2)(3)(41)", "(3)(4)(12)",
                           "(1)(4)(23)", "(1)(2)(34)", "(1)(2)(3)(4)"};
    std::vector<LinkState> out;
    for (const char* t : names) out.push_back(LinkState::parse(4, t));
    return out;
}

}  // namespace

BasisPtr build_basis(const ModuleSpec& spec, int n_sites) {
    if (n_sites <= 0 || n_sites % 2 != 0)
        throw std::invalid_argument("build_basis: N must be positive and even");
    if (spec.j < 0 || spec.j > n_sites / 2)
        throw std::invalid_argument("build_basis: sector index out of range");

    if (spec.order == BasisOrder::Appendix) {
        if (!(spec.kind == ModuleKind::GluedQuotient && spec.j == 2 && n_sites == 4))
            throw std::invalid_argument(
                "build_basis: appendix ordering is defined for glued-quotient:2 at N = 4");
        return std::make_shared<Basis>(spec, n_sites, appendix_states());
    }

    std::vector<LinkState> states;
    switch (spec.kind) {
        case ModuleKind::Standard:
            states = enumerate_sector(n_sites, spec.j);
            break;
        case ModuleKind::QuotientZero:
            states = quotient_zero_states(n_sites);
            break;
        case ModuleKind::Glued:
        case ModuleKind::GluedQuotient:
            for (int j = spec.j; j >= 1; --j) {
                auto sect = enumerate_sector(n_sites, j);
                states.insert(states.end(), sect.begin(), sect.end());
            }
            {
                auto zero = spec.kind == ModuleKind::GluedQuotient ? quotient_zero_states(n_sites)
                                                                   : enumerate_sector(n_sites, 0);
                states.insert(states.end(), zero.begin(), zero.end());
            }
            break;
    }

    // dimension check against the closed-form counts
    long long expect = 0;
    switch (spec.kind) {
        case ModuleKind::Standard:
            expect = dim_standard(n_sites, spec.j);
            break;
        case ModuleKind::QuotientZero:
            expect = dim_quotient_zero(n_sites);
            break;
        case ModuleKind::Glued:
            for (int j = 0; j <= spec.j; ++j) expect += dim_standard(n_sites, j);
            break;
        case ModuleKind::GluedQuotient:
            expect = dim_quotient_zero(n_sites);
            for (int j = 1; j <= spec.j; ++j) expect += dim_standard(n_sites, j);
            break;
    }
    if (static_cast<long long>(states.size()) != expect)
        throw std::logic_error("build_basis: dimension mismatch against closed form");

    return std::make_shared<Basis>(spec, n_sites, states);
}

}  // namespace atl
