#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace atl {

// A link state on N annulus sites: a planar collection of oriented arcs plus
// through-lines (singletons). An arc (i,j) departs site i and runs rightward
// (periodically) to site j; it wraps the seam between sites N and 1 iff i > j.
// Sites are 1-based in the pairing notation and 0-based internally.
class LinkState {
public:
    static constexpr int kMaxSites = 32;
    static constexpr int kFree = -1;  // through-line marker

    LinkState() = default;

    // Decode from the canonical site word: bit (n_sites-1-i) of `word` is 1
    // iff 0-based site i closes an arc. Openers/through-lines carry bit 0.
    static LinkState from_word(int n_sites, std::uint32_t word);

    // Build from explicit 1-based ordered arc list; remaining sites are
    // through-lines. Throws std::invalid_argument on malformed input.
    static LinkState from_arcs(int n_sites, const std::vector<std::pair<int, int>>& arcs);

    // Parse pairing notation, e.g. "(12)(34)", "(2)(3)(41)", "(1,12)(2,11)".
    static LinkState parse(int n_sites, const std::string& text);

    int n_sites() const { return n_; }
    // number of through-line pairs j (through-line count is 2j)
    int sector_j() const { return (throughs_ + 0) / 2; }
    int through_count() const { return throughs_; }
    std::uint32_t word() const { return word_; }

    bool is_through(int site0) const { return partner_[site0] == kFree; }
    int partner(int site0) const { return partner_[site0]; }
    // true iff 0-based site opens its arc (the arc is drawn departing here)
    bool opens(int site0) const { return opens_[site0]; }

    // ordered arcs (i, j), 0-based, sorted by opening site
    std::vector<std::pair<int, int>> arcs() const;
    std::vector<int> through_sites() const;

    bool crosses_boundary() const;

    // Redraw the pairing without crossing the seam (zero-through-line states
    // only); forgets orientation and re-opens every arc at its smaller site.
    LinkState psi_rewire() const;

    // full invariant check: planarity, nesting, no through-line under an arc
    bool valid() const;

    std::string to_string() const;

    bool operator==(const LinkState& o) const { return n_ == o.n_ && word_ == o.word_; }
    bool operator<(const LinkState& o) const { return word_ < o.word_; }

private:
    int n_ = 0;
    int throughs_ = 0;
    std::uint32_t word_ = 0;
    std::array<std::int8_t, kMaxSites> partner_{};
    std::array<bool, kMaxSites> opens_{};

    void finalize();  // recompute word/throughs from partner_/opens_
};

// rightward distance from 0-based site i to j: number of steps in (0, N)
inline int fwd_steps(int n_sites, int i, int j) {
    int d = (j - i) % n_sites;
    if (d <= 0) d += n_sites;
    return d;
}

// All planar link states on N sites with exactly 2j through-lines, in
// canonical (word-ascending) order. Count is C(N, N/2 + j).
std::vector<LinkState> enumerate_sector(int n_sites, int j);

// Binomial-formula dimensions; cross-checked against enumeration in tests.
long long dim_standard(int n_sites, int j);
long long dim_quotient_zero(int n_sites);

}  // namespace atl
