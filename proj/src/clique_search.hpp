#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cliquecol/graph.hpp"

namespace cliquecol::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Vertex set over at most 64 local vertices, with the slice of the
// dynamic_bitset interface the clique search needs.
struct Word {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::uint64_t bits = 0;

    static Word full(std::size_t n) { return {n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1}; }

    bool none() const { return bits == 0; }
    std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }
    std::size_t find_first() const { return bits == 0 ? npos : static_cast<std::size_t>(std::countr_zero(bits)); }
    std::size_t find_next(std::size_t i) const
    {
        if (i >= 63) {
            return npos;
        }
        const std::uint64_t rest = bits & (~std::uint64_t{0} << (i + 1));
        return rest == 0 ? npos : static_cast<std::size_t>(std::countr_zero(rest));
    }
    void set(std::size_t i) { bits |= std::uint64_t{1} << i; }
    void reset(std::size_t i) { bits &= ~(std::uint64_t{1} << i); }

    friend Word operator&(Word a, Word b) { return {a.bits & b.bits}; }
    friend Word operator-(Word a, Word b) { return {a.bits & ~b.bits}; }
};

// Dense adjacency rows for the subgraph induced by `vertices` (sorted).
// Row i describes local vertex i, i.e. vertices[i].
std::vector<Bits> local_adjacency(const Graph& g, std::span<const Vertex> vertices);
std::vector<Word> local_adjacency_words(const Graph& g, std::span<const Vertex> vertices);

// Bron-Kerbosch with Tomita pivoting over dense local rows. Calls
// visit(const std::vector<std::size_t>&) once per maximal clique (any size,
// unsorted local indices).
template <class Set, class Visit>
class MaximalCliqueSearch {
public:
    MaximalCliqueSearch(const std::vector<Set>& rows, Visit& visit) : rows_(rows), visit_(visit) {}

    void run()
    {
        const std::size_t n = rows_.size();
        if (n == 0) {
            return;
        }
        Set candidates = full(n);
        Set excluded = empty(n);
        expand(candidates, excluded);
    }

private:
    static Set full(std::size_t n)
    {
        if constexpr (std::is_same_v<Set, Word>) {
            return Word::full(n);
        } else {
            Set s(n);
            s.set();
            return s;
        }
    }

    static Set empty(std::size_t n)
    {
        if constexpr (std::is_same_v<Set, Word>) {
            (void)n;
            return Word{};
        } else {
            return Set(n);
        }
    }

    void expand(Set& candidates, Set& excluded)
    {
        if (candidates.none()) {
            if (excluded.none()) {
                visit_(clique_);
            }
            return;
        }

        // pivot maximises |candidates ∩ N(pivot)|
        std::size_t pivot = Set::npos;
        std::size_t best = 0;
        for (const Set* pool : {&candidates, &excluded}) {
            for (auto u = pool->find_first(); u != Set::npos; u = pool->find_next(u)) {
                const std::size_t hits = (candidates & rows_[u]).count();
                if (pivot == Set::npos || hits > best) {
                    pivot = u;
                    best = hits;
                }
            }
        }

        Set branch = candidates - rows_[pivot];
        for (auto v = branch.find_first(); v != Set::npos; v = branch.find_next(v)) {
            Set next_candidates = candidates & rows_[v];
            Set next_excluded = excluded & rows_[v];
            clique_.push_back(v);
            expand(next_candidates, next_excluded);
            clique_.pop_back();
            candidates.reset(v);
            excluded.set(v);
        }
    }

    const std::vector<Set>& rows_;
    Visit& visit_;
    std::vector<std::size_t> clique_;
};

template <class Set, class Visit>
void for_each_maximal_clique(const std::vector<Set>& rows, Visit&& visit)
{
    MaximalCliqueSearch<Set, std::remove_reference_t<Visit>> search(rows, visit);
    search.run();
}

// Picks the single-word representation when the vertex set allows it.
template <class Visit>
void for_each_maximal_clique_in(const Graph& g, std::span<const Vertex> vertices, Visit&& visit)
{
    if (vertices.size() <= 64) {
        for_each_maximal_clique(local_adjacency_words(g, vertices), visit);
    } else {
        for_each_maximal_clique(local_adjacency(g, vertices), visit);
    }
}

}  // namespace cliquecol::detail
