#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "atl/linkstate.hpp"
#include "atl/params.hpp"

namespace atl {

// Ordered basis of a module. Immutable once built; share freely.
class Basis {
public:
    Basis(ModuleSpec spec, int n_sites, std::vector<LinkState> states);

    const ModuleSpec& spec() const { return spec_; }
    int n_sites() const { return n_; }
    int size() const { return static_cast<int>(states_.size()); }
    const LinkState& state(int i) const { return states_[i]; }
    const std::vector<LinkState>& states() const { return states_; }

    // position of a canonical state, or -1 if not a member
    int index_of(const LinkState& s) const;

    // first index and count of the 2j-through-line block (empty if absent)
    std::pair<int, int> sector_range(int j) const;

private:
    ModuleSpec spec_;
    int n_;
    std::vector<LinkState> states_;
    std::unordered_map<std::uint32_t, int> index_;
};

using BasisPtr = std::shared_ptr<const Basis>;

// Assemble the ordered basis of `spec` on N sites. Sector blocks are ordered
// by descending j; BasisOrder::Appendix reproduces the published 7-state
// ordering of the N = 4 glued-quotient module for entry-exact comparisons.
BasisPtr build_basis(const ModuleSpec& spec, int n_sites);

}  // namespace atl
