#include "atl/linkstate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace atl {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    if (k > n - k) k = n - k;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

void LinkState::finalize() {
    word_ = 0;
    throughs_ = 0;
    for (int i = 0; i < n_; ++i) {
        bool closer = partner_[i] != kFree && !opens_[i];
        word_ = (word_ << 1) | (closer ? 1u : 0u);
        if (partner_[i] == kFree) ++throughs_;
    }
}

LinkState LinkState::from_word(int n_sites, std::uint32_t word) {
    require(n_sites > 0 && n_sites % 2 == 0 && n_sites <= kMaxSites,
            "n_sites must be even and within the supported range");
    LinkState s;
    s.n_ = n_sites;
    s.partner_.fill(kFree);
    s.opens_.fill(false);

    auto is_closer = [&](int i) { return (word >> (n_sites - 1 - i)) & 1u; };

    // match closers against the nearest preceding unmatched opener
    std::vector<int> stack;
    std::vector<int> loose_closers;
    for (int i = 0; i < n_sites; ++i) {
        if (!is_closer(i)) {
            stack.push_back(i);
        } else if (!stack.empty()) {
            int open = stack.back();
            stack.pop_back();
            s.partner_[open] = static_cast<std::int8_t>(i);
            s.partner_[i] = static_cast<std::int8_t>(open);
            s.opens_[open] = true;
        } else {
            loose_closers.push_back(i);
        }
    }
    // remaining closers wrap the seam: pair them with the latest openers,
    // innermost first; whatever openers survive are through-lines
    for (int t = 0; t < static_cast<int>(loose_closers.size()); ++t) {
        require(!stack.empty(), "unbalanced site word");
        int open = stack.back();
        stack.pop_back();
        int close = loose_closers[t];
        s.partner_[open] = static_cast<std::int8_t>(close);
        s.partner_[close] = static_cast<std::int8_t>(open);
        s.opens_[open] = true;
    }
    s.finalize();
    return s;
}

LinkState LinkState::from_arcs(int n_sites, const std::vector<std::pair<int, int>>& arcs) {
    require(n_sites > 0 && n_sites % 2 == 0 && n_sites <= kMaxSites,
            "n_sites must be even and within the supported range");
    LinkState s;
    s.n_ = n_sites;
    s.partner_.fill(kFree);
    s.opens_.fill(false);
    for (auto [i, j] : arcs) {
        require(i >= 1 && i <= n_sites && j >= 1 && j <= n_sites && i != j, "arc site out of range");
        int a = i - 1, b = j - 1;
        require(s.partner_[a] == kFree && s.partner_[b] == kFree, "site used twice");
        s.partner_[a] = static_cast<std::int8_t>(b);
        s.partner_[b] = static_cast<std::int8_t>(a);
        s.opens_[a] = true;
    }
    s.finalize();
    require(s.valid(), "arcs do not form a planar annular link state");
    return s;
}

LinkState LinkState::parse(int n_sites, const std::string& text) {
    std::vector<std::pair<int, int>> arcs;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        require(text[pos] == '(', "expected '('");
        ++pos;
        std::vector<int> sites;
        std::string digits;
        while (pos < text.size() && text[pos] != ')') {
            char c = text[pos++];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits += c;
            } else if (c == ',') {
                require(!digits.empty(), "bad pairing token");
                sites.push_back(std::stoi(digits));
                digits.clear();
            } else {
                require(false, "bad character in pairing token");
            }
        }
        require(pos < text.size(), "unterminated pairing token");
        ++pos;  // ')'
        if (!digits.empty()) {
            if (sites.empty() && n_sites < 10 && digits.size() > 1) {
                for (char c : digits) sites.push_back(c - '0');
            } else {
                sites.push_back(std::stoi(digits));
            }
        }
        require(sites.size() == 1 || sites.size() == 2, "pairing token must hold one or two sites");
        if (sites.size() == 2) arcs.emplace_back(sites[0], sites[1]);
        skip_ws();
    }
    return from_arcs(n_sites, arcs);
}

std::vector<std::pair<int, int>> LinkState::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        if (opens_[i]) out.emplace_back(i, partner_[i]);
    return out;
}

std::vector<int> LinkState::through_sites() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (partner_[i] == kFree) out.push_back(i);
    return out;
}

bool LinkState::crosses_boundary() const {
    for (int i = 0; i < n_; ++i)
        if (opens_[i] && partner_[i] < i) return true;
    return false;
}

LinkState LinkState::psi_rewire() const {
    if (throughs_ != 0)
        throw std::invalid_argument("psi_rewire acts only on zero-through-line states");
    LinkState s = *this;
    for (int i = 0; i < n_; ++i) {
        s.opens_[i] = s.partner_[i] != kFree && s.partner_[i] > i;
    }
    s.finalize();
    return s;
}

bool LinkState::valid() const {
    if (n_ <= 0 || n_ % 2 != 0) return false;
    for (int i = 0; i < n_; ++i) {
        int p = partner_[i];
        if (p == kFree) continue;
        if (p < 0 || p >= n_ || p == i || partner_[p] != i) return false;
        if (opens_[i] == opens_[p]) return false;
    }
    // every arc interval (open..close rightward) must contain neither a
    // through-line nor a partially overlapping arc
    auto covered = [&](int open, int site) {
        int span = fwd_steps(n_, open, partner_[open]);
        int off = fwd_steps(n_, open, site);
        return off < span;
    };
    for (int i = 0; i < n_; ++i) {
        if (!opens_[i]) continue;
        for (int k = 0; k < n_; ++k) {
            if (k == i || k == partner_[i]) continue;
            if (partner_[k] == kFree) {
                if (covered(i, k)) return false;
            } else if (covered(i, k) != covered(i, partner_[k])) {
                return false;
            }
        }
    }
    return true;
}

std::string LinkState::to_string() const {
    std::string out;
    bool wide = n_ >= 10;
    for (int i = 0; i < n_; ++i) {
        if (partner_[i] == kFree) {
            out += "(" + std::to_string(i + 1) + ")";
        } else if (opens_[i] || partner_[i] > i) {
            // print each arc once, keyed at its smaller site, oriented
            int a = std::min<int>(i, partner_[i]);
            int b = std::max<int>(i, partner_[i]);
            if (a != i) continue;
            int from = opens_[a] ? a : b;
            int to = partner_[from];
            out += "(" + std::to_string(from + 1) + (wide ? "," : "") + std::to_string(to + 1) + ")";
        }
    }
    return out;
}

std::vector<LinkState> enumerate_sector(int n_sites, int j) {
    if (n_sites <= 0 || n_sites % 2 != 0 || n_sites > LinkState::kMaxSites)
        throw std::invalid_argument("enumerate_sector: N must be even and within range");
    if (j < 0 || j > n_sites / 2)
        throw std::invalid_argument("enumerate_sector: need 0 <= j <= N/2");
    int closers = n_sites / 2 - j;
    std::vector<LinkState> out;
    out.reserve(static_cast<std::size_t>(dim_standard(n_sites, j)));
    // ascending enumeration of all words with `closers` bits set
    if (closers == 0) {
        out.push_back(LinkState::from_word(n_sites, 0));
        return out;
    }
    std::uint64_t word = (1ull << closers) - 1;
    std::uint64_t limit = 1ull << n_sites;
    while (word < limit) {
        out.push_back(LinkState::from_word(n_sites, static_cast<std::uint32_t>(word)));
        std::uint64_t c = word & (~word + 1);
        std::uint64_t r = word + c;
        word = (((r ^ word) >> 2) / c) | r;
    }
    return out;
}

long long dim_standard(int n_sites, int j) {
    if (n_sites <= 0 || n_sites % 2 != 0) throw std::invalid_argument("dim_standard: N must be even");
    if (j < 0 || j > n_sites / 2) throw std::invalid_argument("dim_standard: need 0 <= j <= N/2");
    return binom(n_sites, n_sites / 2 + j);
}

long long dim_quotient_zero(int n_sites) {
    if (n_sites <= 0 || n_sites % 2 != 0)
        throw std::invalid_argument("dim_quotient_zero: N must be even");
    return binom(n_sites, n_sites / 2) - binom(n_sites, n_sites / 2 + 1);
}

}  // namespace atl
