#pragma once

// Numerical semigroups: cofinite additive submonoids of the naturals, given by
// generators with gcd 1. Membership is tabulated once up to a bound that
// provably covers the Frobenius number; everything past the table is a member.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hilbmon/errors.hpp"

namespace hilbmon {

class NumericalSemigroup {
  public:
    // Builds from any generating set (need not be minimal). Duplicates are
    // dropped; gcd must be 1.
    explicit NumericalSemigroup(std::vector<int> generators) {
        if (generators.empty()) throw EmptyGenerators();
        for (int g : generators)
            if (g <= 0) throw std::invalid_argument("generators must be positive");
        std::sort(generators.begin(), generators.end());
        generators.erase(std::unique(generators.begin(), generators.end()),
                         generators.end());
        int d = 0;
        for (int g : generators) d = std::gcd(d, g);
        if (d != 1) throw NotCoprime(d);

        const int mult = generators.front();
        const int top = generators.back();
        // Covers the Frobenius number plus a run of `mult` members: for coprime
        // generators the largest gap is below (mult-1)*(top-1).
        const int bound = top * mult + top;
        std::vector<char> mem(static_cast<std::size_t>(bound) + 1, 0);
        mem[0] = 1;
        for (int x = 1; x <= bound; ++x)
            for (int g : generators) {
                if (g > x) break;
                if (mem[x - g]) {
                    mem[x] = 1;
                    break;
                }
            }

        // A run of `mult` consecutive members marks the conductor: past it every
        // value splits as (value in run) + (multiple of mult).
        int run = 0, run_start = -1;
        for (int x = 0; x <= bound; ++x) {
            run = mem[x] ? run + 1 : 0;
            if (run == mult) {
                run_start = x - mult + 1;
                break;
            }
        }
        if (run_start < 0)
            throw std::logic_error("membership table bound failed to cover the conductor");
        frobenius_ = -1;
        for (int x = run_start - 1; x >= 0; --x)
            if (!mem[x]) {
                frobenius_ = x;
                break;
            }
        member_.assign(mem.begin(), mem.begin() + frobenius_ + 2);
        derive_from_membership();
    }

    // Builds from a gap set (the complement must be closed under addition).
    static NumericalSemigroup from_gaps(std::vector<int> gaps) {
        std::sort(gaps.begin(), gaps.end());
        gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
        if (!gaps.empty() && gaps.front() <= 0)
            throw std::invalid_argument("gaps must be positive");
        NumericalSemigroup s;
        s.frobenius_ = gaps.empty() ? -1 : gaps.back();
        s.member_.assign(static_cast<std::size_t>(s.frobenius_) + 2, 1);
        for (int g : gaps) s.member_[g] = 0;
        for (int x = 1; x <= s.frobenius_; ++x) {
            if (!s.member_[x]) continue;
            for (int y = x; x + y <= s.frobenius_; ++y)
                if (s.member_[y] && !s.member_[x + y])
                    throw std::invalid_argument(
                        "complement of the gap set is not closed under addition");
        }
        s.derive_from_membership();
        return s;
    }

    const std::vector<int>& minimal_generators() const { return min_gens_; }
    int multiplicity() const { return min_gens_.front(); }
    int embedding_dimension() const { return static_cast<int>(min_gens_.size()); }
    int frobenius() const { return frobenius_; }
    int conductor() const { return frobenius_ + 1; }
    int genus() const { return genus_; }

    bool contains(long long x) const {
        if (x < 0) return false;
        if (x > frobenius_) return true;
        return member_[static_cast<std::size_t>(x)] != 0;
    }

    std::vector<int> gaps() const {
        std::vector<int> out;
        for (int x = 1; x <= frobenius_; ++x)
            if (!member_[x]) out.push_back(x);
        return out;
    }

    // Least member of each residue class mod m, indexed (hence sorted) by residue.
    std::vector<int> apery_set(int m) const {
        if (m <= 0 || !contains(m)) throw NotAMember(m);
        std::vector<int> out(static_cast<std::size_t>(m));
        for (int res = 0; res < m; ++res) {
            int x = res;
            while (!contains(x)) x += m;
            out[res] = x;
        }
        return out;
    }

    // Exactly one of x, frobenius - x is a member, for every integer x. The
    // whole line is decided by the window [0, frobenius].
    bool is_symmetric() const {
        if (frobenius_ == -1) return true;
        for (int x = 0; x <= frobenius_; ++x)
            if (contains(x) == contains(frobenius_ - x)) return false;
        return true;
    }

    // x + y - z stays in S for members x >= y >= z. Triples with x beyond
    // frobenius + multiplicity + 1 land past the Frobenius number automatically.
    bool is_arf() const {
        const int window = frobenius_ + multiplicity() + 1;
        std::vector<int> mem;
        for (int x = 0; x <= window; ++x)
            if (contains(x)) mem.push_back(x);
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                for (std::size_t k = 0; k <= j; ++k)
                    if (!contains(static_cast<long long>(mem[i]) + mem[j] - mem[k]))
                        return false;
        return true;
    }

    bool has_minimal_multiplicity() const {
        return multiplicity() == embedding_dimension();
    }

    bool operator==(const NumericalSemigroup& o) const {
        return min_gens_ == o.min_gens_;
    }

  private:
    NumericalSemigroup() = default;

    void derive_from_membership() {
        genus_ = 0;
        for (int x = 1; x <= frobenius_; ++x)
            if (!member_[x]) ++genus_;
        int mult = 1;
        while (!contains(mult)) ++mult;
        // Minimal generators are the members that do not split as a sum of two
        // nonzero members; all of them lie in {mult} U (mult, frobenius + mult].
        min_gens_ = {mult};
        for (int x = mult + 1; x <= frobenius_ + mult; ++x) {
            if (!contains(x)) continue;
            bool splits = false;
            for (int y = mult; y <= x - mult; ++y)
                if (contains(y) && contains(x - y)) {
                    splits = true;
                    break;
                }
            if (!splits) min_gens_.push_back(x);
        }
    }

    std::vector<int> min_gens_;
    int frobenius_ = -1;
    int genus_ = 0;
    std::vector<char> member_;  // membership on [0, frobenius + 1]
};

// Drops every generator that is a sum of two nonzero members of the semigroup
// generated by the whole list. Idempotent; the survivors regenerate the same
// semigroup.
inline std::vector<int> reduce_generators(const std::vector<int>& generators) {
    return NumericalSemigroup(generators).minimal_generators();
}

}  // namespace hilbmon
